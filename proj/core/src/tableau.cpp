#include "schurcone/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace schurcone {

namespace {

// Backtracking filler shared by SSYT enumeration, Kostka counts and LR
// coefficients. Cells are visited in reading order (each row right to
// left), so the reading word grows one letter at a time and the lattice
// constraint can be checked incrementally. role_prev[v] is the letter
// whose running count must stay strictly above v's when v is placed
// (0 when v opens its block); empty role_prev disables lattice checks.
class TableauFiller {
public:
    TableauFiller(const std::vector<int>& shape, std::vector<int> remaining,
                  std::vector<int> role_prev)
        : shape_(shape),
          remaining_(std::move(remaining)),
          role_prev_(std::move(role_prev)),
          letters_(static_cast<int>(remaining_.size()) - 1),
          count_(remaining_.size(), 0) {
        rows_.resize(shape_.size());
        for (size_t r = 0; r < shape_.size(); ++r)
            rows_[r].assign(static_cast<size_t>(shape_[r]), 0);
        col_height_.assign(shape_.empty() ? 0 : static_cast<size_t>(shape_[0]), 0);
        for (int len : shape_)
            for (int c = 0; c < len; ++c) col_height_[static_cast<size_t>(c)] += 1;
    }

    long long run(std::vector<Tableau>* sink, const Partition& shape_partition) {
        sink_ = sink;
        shape_partition_ = &shape_partition;
        count_found_ = 0;
        fill_cell(0, shape_.empty() ? -1 : shape_[0] - 1);
        return count_found_;
    }

private:
    void fill_cell(int r, int c) {
        if (r == static_cast<int>(shape_.size())) {
            ++count_found_;
            if (sink_) sink_->push_back(Tableau(*shape_partition_, rows_));
            return;
        }
        if (c < 0) {
            const int nr = r + 1;
            fill_cell(nr, nr == static_cast<int>(shape_.size()) ? -1 : shape_[static_cast<size_t>(nr)] - 1);
            return;
        }
        int lo = r > 0 ? rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1 : 1;
        int hi = c + 1 < shape_[static_cast<size_t>(r)]
                     ? rows_[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]
                     : letters_;
        // Cells below this one in the column need strictly larger letters.
        hi = std::min(hi, letters_ - (col_height_[static_cast<size_t>(c)] - r - 1));
        for (int v = lo; v <= hi; ++v) {
            if (remaining_[static_cast<size_t>(v)] == 0) continue;
            if (!role_prev_.empty()) {
                const int prev = role_prev_[static_cast<size_t>(v)];
                if (prev != 0 && count_[static_cast<size_t>(v)] >= count_[static_cast<size_t>(prev)])
                    continue;
            }
            rows_[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            remaining_[static_cast<size_t>(v)] -= 1;
            count_[static_cast<size_t>(v)] += 1;
            fill_cell(r, c - 1);
            count_[static_cast<size_t>(v)] -= 1;
            remaining_[static_cast<size_t>(v)] += 1;
        }
        rows_[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }

    const std::vector<int>& shape_;
    std::vector<int> remaining_;  // index 0 unused
    std::vector<int> role_prev_;  // index 0 unused; empty = no lattice check
    int letters_;
    std::vector<int> count_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> col_height_;
    std::vector<Tableau>* sink_ = nullptr;
    const Partition* shape_partition_ = nullptr;
    long long count_found_ = 0;
};

void check_permutation(const std::vector<int>& pi, int n) {
    if (static_cast<int>(pi.size()) != n)
        throw std::domain_error("permutation has wrong length");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int x : pi) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x)])
            throw std::domain_error("not a permutation of {1..N}");
        seen[static_cast<size_t>(x)] = 1;
    }
}

struct LrKey {
    std::vector<std::vector<int>> factors;
    std::vector<int> shape;
    auto operator<=>(const LrKey&) const = default;
};

}  // namespace

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != static_cast<size_t>(shape_.length()))
        throw std::invalid_argument("tableau row count does not match shape");
    for (int r = 0; r < shape_.length(); ++r) {
        const auto& row = rows_[static_cast<size_t>(r)];
        if (static_cast<int>(row.size()) != shape_[r])
            throw std::invalid_argument("tableau row length does not match shape");
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            if (row[static_cast<size_t>(c)] < 1)
                throw std::invalid_argument("tableau entries must be positive");
            if (c > 0 && row[static_cast<size_t>(c - 1)] > row[static_cast<size_t>(c)])
                throw std::invalid_argument("tableau rows must weakly increase");
            if (r > 0 && c < shape_[r - 1] &&
                rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >= row[static_cast<size_t>(c)])
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

Composition Tableau::content() const {
    int max_value = 0;
    for (const auto& row : rows_)
        for (int v : row) max_value = std::max(max_value, v);
    std::vector<int> counts(static_cast<size_t>(max_value), 0);
    for (const auto& row : rows_)
        for (int v : row) counts[static_cast<size_t>(v - 1)] += 1;
    return Composition(std::move(counts));
}

std::string Tableau::to_string() const {
    std::string out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += '/';
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

std::vector<int> word(const Tableau& t) {
    std::vector<int> w;
    for (const auto& row : t.rows())
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

std::vector<int> subword(const std::vector<int>& w, const std::set<int>& alpha) {
    std::vector<int> out;
    for (int x : w)
        if (alpha.count(x)) out.push_back(x);
    return out;
}

std::vector<int> subword(const Tableau& t, const std::set<int>& alpha) {
    return subword(word(t), alpha);
}

bool is_lattice(const std::vector<int>& w) {
    int max_letter = 0;
    for (int x : w) max_letter = std::max(max_letter, x);
    std::vector<int> count(static_cast<size_t>(max_letter) + 2, 0);
    for (int x : w) {
        count[static_cast<size_t>(x)] += 1;
        if (x > 1 && count[static_cast<size_t>(x)] > count[static_cast<size_t>(x - 1)]) return false;
    }
    return true;
}

BlockAssignment blocks_from_permutation(const std::vector<int>& pi, const std::vector<int>& sizes) {
    const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    check_permutation(pi, n);
    BlockAssignment out;
    size_t pos = 0;
    for (int sz : sizes) {
        if (sz < 0) throw std::domain_error("block sizes must be non-negative");
        out.blocks.emplace_back(pi.begin() + static_cast<long>(pos),
                                pi.begin() + static_cast<long>(pos) + sz);
        pos += static_cast<size_t>(sz);
    }
    return out;
}

Composition permute_content(const std::vector<int>& pi, const Composition& tau) {
    check_permutation(pi, tau.size());
    std::vector<int> out(static_cast<size_t>(tau.size()), 0);
    for (int i = 0; i < tau.size(); ++i)
        out[static_cast<size_t>(pi[static_cast<size_t>(i)] - 1)] = tau[i];
    return Composition(std::move(out));
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Composition& content) {
    std::vector<Tableau> out;
    if (shape.weight() != content.sum()) return out;
    if (shape.weight() == 0) {
        out.push_back(Tableau(shape, {}));
        return out;
    }
    std::vector<int> remaining(static_cast<size_t>(content.size()) + 1, 0);
    for (int i = 0; i < content.size(); ++i) remaining[static_cast<size_t>(i + 1)] = content[i];
    TableauFiller filler(shape.parts(), std::move(remaining), {});
    filler.run(&out, shape);
    return out;
}

long long kostka(const Partition& shape, const Composition& content) {
    if (shape.weight() != content.sum()) return 0;
    if (shape.weight() == 0) return 1;
    std::vector<int> sorted = content.entries();
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();

    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    static std::mutex memo_mutex;
    const auto key = std::make_pair(shape.parts(), sorted);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::vector<int> remaining(sorted.size() + 1, 0);
    for (size_t i = 0; i < sorted.size(); ++i) remaining[i + 1] = sorted[i];
    TableauFiller filler(shape.parts(), std::move(remaining), {});
    const long long result = filler.run(nullptr, shape);

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, result);
    return result;
}

namespace {

long long lr_count(const std::vector<Partition>& factors, const Partition& lam,
                   const std::vector<int>& pi) {
    int total_parts = 0;
    int total_weight = 0;
    for (const Partition& f : factors) {
        total_parts += f.length();
        total_weight += f.weight();
    }
    if (total_weight != lam.weight()) return 0;
    if (total_parts == 0) return lam.empty() ? 1 : 0;

    // Letter v carries content tau[i] and lattice-follows the previous
    // letter of its factor, where v = pi[i] over the concatenated parts.
    std::vector<int> tau;
    std::vector<int> factor_of;
    for (size_t fi = 0; fi < factors.size(); ++fi)
        for (int part : factors[fi].parts()) {
            tau.push_back(part);
            factor_of.push_back(static_cast<int>(fi));
        }

    std::vector<int> perm = pi;
    if (perm.empty()) {
        perm.resize(static_cast<size_t>(total_parts));
        std::iota(perm.begin(), perm.end(), 1);
    } else {
        check_permutation(perm, total_parts);
    }

    std::vector<int> remaining(static_cast<size_t>(total_parts) + 1, 0);
    std::vector<int> role_prev(static_cast<size_t>(total_parts) + 1, 0);
    for (int i = 0; i < total_parts; ++i) {
        const int letter = perm[static_cast<size_t>(i)];
        remaining[static_cast<size_t>(letter)] = tau[static_cast<size_t>(i)];
        if (i > 0 && factor_of[static_cast<size_t>(i)] == factor_of[static_cast<size_t>(i - 1)])
            role_prev[static_cast<size_t>(letter)] = perm[static_cast<size_t>(i - 1)];
    }

    TableauFiller filler(lam.parts(), std::move(remaining), std::move(role_prev));
    return filler.run(nullptr, lam);
}

}  // namespace

long long lr_coefficient(const std::vector<Partition>& factors, const Partition& lam,
                         const std::vector<int>& pi) {
    if (!pi.empty()) return lr_count(factors, lam, pi);

    LrKey key;
    key.shape = lam.parts();
    for (const Partition& f : factors)
        if (!f.empty()) key.factors.push_back(f.parts());
    std::sort(key.factors.begin(), key.factors.end(),
              [](const auto& a, const auto& b) { return b < a; });

    static std::map<LrKey, long long> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::vector<Partition> sorted_factors;
    sorted_factors.reserve(key.factors.size());
    for (const auto& parts : key.factors) sorted_factors.push_back(Partition(parts));
    const long long result = lr_count(sorted_factors, lam, {});

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, result);
    return result;
}

}  // namespace schurcone
