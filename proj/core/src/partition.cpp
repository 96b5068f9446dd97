#include "schurcone/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace schurcone {

namespace {

// Shared integer-list scanner for the comma grammars. Columns are
// 1-based byte offsets into the original text.
std::vector<int> parse_int_list(std::string_view text, bool allow_zero) {
    std::vector<int> out;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    size_t pos = 0;
    const size_t n = text.size();
    while (true) {
        while (pos < n && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        size_t start = pos;
        if (pos >= n || text[pos] < '0' || text[pos] > '9')
            throw ParseError("expected digit", static_cast<int>(pos) + 1);
        long value = 0;
        while (pos < n && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > std::numeric_limits<int>::max())
                throw ParseError("value out of range", static_cast<int>(start) + 1);
            ++pos;
        }
        if (value == 0 && !allow_zero)
            throw ParseError("parts must be positive", static_cast<int>(start) + 1);
        out.push_back(static_cast<int>(value));
        while (pos < n && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos == n) break;
        if (text[pos] != ',')
            throw ParseError("expected ','", static_cast<int>(pos) + 1);
        ++pos;
        if (pos == n) throw ParseError("trailing ','", static_cast<int>(pos));
    }
    return out;
}

std::string render_int_list(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

bool Partition::has_distinct_parts() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] == parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const { return render_int_list(parts_); }

Partition Partition::parse(std::string_view text) {
    return from_unsorted(parse_int_list(text, /*allow_zero=*/false));
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("composition entries must be non-negative");
}

int Composition::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string Composition::to_string() const { return render_int_list(entries_); }

Composition Composition::parse(std::string_view text) {
    return Composition(parse_int_list(text, /*allow_zero=*/true));
}

bool desc_lex_before(const Partition& a, const Partition& b) {
    return b.parts() < a.parts();
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::domain_error("dominance is only defined within one P_N");
    long acc_lam = 0, acc_mu = 0;
    const int m = std::max(lam.length(), mu.length());
    for (int i = 0; i < m; ++i) {
        acc_lam += i < lam.length() ? lam[i] : 0;
        acc_mu += i < mu.length() ? mu[i] : 0;
        if (acc_lam < acc_mu) return false;
    }
    return true;
}

std::vector<Partition> dominance_interval(const Partition& lam, const Partition& rho) {
    if (lam.weight() != rho.weight())
        throw std::domain_error("dominance is only defined within one P_N");
    std::vector<Partition> out;
    for (const Partition& mu : partitions_of(lam.weight()))
        if (dominates(mu, lam) && dominates(rho, mu)) out.push_back(mu);
    return out;
}

Partition lambda_plus(const Partition& lam) {
    if (lam.length() < 2)
        throw std::domain_error("lambda_plus requires at least two parts");
    std::vector<int> p = lam.parts();
    p.front() += 1;
    p.back() -= 1;
    if (p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

Partition lambda_plusplus(const Partition& lam) {
    const int m = lam.length();
    if (m < 2)
        throw std::domain_error("lambda_plusplus requires at least two parts");
    std::vector<int> p = lam.parts();
    const int k = m / 2;
    for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] += 1;
    for (int i = m - k; i < m; ++i) p[static_cast<size_t>(i)] -= 1;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

Partition lambda_dagger(const Partition& lam) {
    const int m = lam.length();
    if (m < 2)
        throw std::domain_error("lambda_dagger requires at least two parts");
    if (lam[m - 2] <= lam[m - 1])
        throw std::domain_error("lambda_dagger requires lam[m-2] > lam[m-1]");
    std::vector<int> p = lam.parts();
    if (m % 2 == 0) {
        const int k = m / 2;
        for (int i = 0; i < k - 1; ++i) p[static_cast<size_t>(i)] += 1;
        for (int i = k; i < m - 1; ++i) p[static_cast<size_t>(i)] -= 1;
    } else {
        const int k = (m - 1) / 2;
        for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] += 1;
        for (int i = k; i < m - 1; ++i) p[static_cast<size_t>(i)] -= 1;
    }
    return Partition(std::move(p));
}

Partition up(const Partition& mu) {
    std::vector<int> p = mu.parts();
    for (int& x : p) x += 1;
    p.push_back(1);
    return Partition(std::move(p));
}

Partition down(const Partition& mu) {
    std::vector<int> p;
    p.reserve(static_cast<size_t>(mu.length()));
    for (int x : mu.parts())
        if (x > 1) p.push_back(x - 1);
    return Partition(std::move(p));
}

bool is_down_invertible(const Partition& mu) {
    const int m = mu.length();
    if (m == 0 || mu[m - 1] != 1) return false;
    return m == 1 || mu[m - 2] > 1;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> stack;
    // First part largest first yields descending lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(Partition(stack));
            return;
        }
        if (static_cast<int>(stack.size()) >= max_parts) return;
        for (int next = std::min(cap, remaining); next >= 1; --next) {
            stack.push_back(next);
            rec(remaining - next, next);
            stack.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace schurcone
