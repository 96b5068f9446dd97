#include "schurcone/nested.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace schurcone {

FactorSet::FactorSet(std::vector<Partition> factors) : factors_(std::move(factors)) {
    for (const Partition& f : factors_) {
        if (f.empty()) throw std::invalid_argument("factor sets may not contain the empty partition");
        weight_ += f.weight();
    }
    std::sort(factors_.begin(), factors_.end(), desc_lex_before);
}

int FactorSet::max_parts() const {
    int m = 0;
    for (const Partition& f : factors_) m = std::max(m, f.length());
    return m;
}

bool FactorSet::contains(const Partition& factor) const {
    return std::find(factors_.begin(), factors_.end(), factor) != factors_.end();
}

FactorSet FactorSet::without(const Partition& factor) const {
    std::vector<Partition> rest = factors_;
    auto it = std::find(rest.begin(), rest.end(), factor);
    if (it == rest.end()) throw std::invalid_argument("factor not present: " + factor.to_string());
    rest.erase(it);
    return FactorSet(std::move(rest));
}

FactorSet FactorSet::with(const Partition& factor) const {
    std::vector<Partition> all = factors_;
    all.push_back(factor);
    return FactorSet(std::move(all));
}

std::string FactorSet::to_string() const {
    std::string out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ';';
        out += factors_[i].to_string();
    }
    return out;
}

FactorSet FactorSet::parse(std::string_view text) {
    std::vector<Partition> factors;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return FactorSet();
    size_t begin = 0;
    while (true) {
        size_t end = text.find(';', begin);
        std::string_view piece = text.substr(begin, end == std::string_view::npos ? end : end - begin);
        try {
            Partition factor = Partition::parse(piece);
            if (factor.empty())
                throw ParseError("empty factor", static_cast<int>(begin) + 1);
            factors.push_back(std::move(factor));
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad factor: ") + e.what(),
                             static_cast<int>(begin) + e.column());
        }
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return FactorSet(std::move(factors));
}

Partition phi(const FactorSet& A) {
    std::vector<int> parts;
    for (const Partition& f : A.factors())
        parts.insert(parts.end(), f.parts().begin(), f.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

namespace {

bool cond1_ordered(const Partition& lam, const Partition& mu) {
    return lam[0] > mu[0] && mu[0] >= lam[1] && lam[1] > mu[1];
}

bool cond2_ordered(const Partition& lam, const Partition& mu) {
    // lam two-part with distinct parts, mu one-part.
    return lam[0] > lam[1] && lam[0] >= mu[0] && mu[0] >= lam[1];
}

}  // namespace

PairCondition pair_condition(const Partition& a, const Partition& b) {
    const int la = a.length(), lb = b.length();
    if (la == 2 && lb == 2) {
        if (cond1_ordered(a, b) || cond1_ordered(b, a)) return PairCondition::Cond1;
        return PairCondition::None;
    }
    if (la == 2 && lb == 1) return cond2_ordered(a, b) ? PairCondition::Cond2 : PairCondition::None;
    if (la == 1 && lb == 2) return cond2_ordered(b, a) ? PairCondition::Cond2 : PairCondition::None;
    if (la == 1 && lb == 1) return PairCondition::Cond3;
    return PairCondition::None;
}

bool is_nested(const FactorSet& A) {
    return !find_violating_pair(A).has_value();
}

std::optional<std::pair<Partition, Partition>> find_violating_pair(const FactorSet& A) {
    if (A.max_parts() > 2)
        throw std::domain_error("nestedness is defined only for factors with at most two parts");
    const auto& fs = A.factors();
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j)
            if (pair_condition(fs[i], fs[j]) != PairCondition::None)
                return std::make_pair(fs[i], fs[j]);
    return std::nullopt;
}

std::vector<FactorSet> enumerate_sp(int N, int k) {
    std::vector<FactorSet> out;
    if (N < 0 || k < 1) return out;

    // Candidate factors, canonically largest first; multisets are built
    // as weakly decreasing factor sequences.
    std::vector<Partition> candidates;
    for (int w = 1; w <= N; ++w)
        for (const Partition& p : partitions_of(w, k)) candidates.push_back(p);
    std::sort(candidates.begin(), candidates.end(), desc_lex_before);

    std::vector<Partition> stack;
    std::function<void(int, size_t)> rec = [&](int remaining, size_t from) {
        if (remaining == 0) {
            out.push_back(FactorSet(stack));
            return;
        }
        for (size_t i = from; i < candidates.size(); ++i) {
            if (candidates[i].weight() > remaining) continue;
            stack.push_back(candidates[i]);
            rec(remaining - candidates[i].weight(), i);
            stack.pop_back();
        }
    };
    rec(N, 0);
    return out;
}

std::vector<FactorSet> enumerate_ssp(int N) {
    std::vector<FactorSet> out;
    for (FactorSet& A : enumerate_sp(N, 2))
        if (is_nested(A)) out.push_back(std::move(A));
    return out;
}

std::vector<FactorSet> enumerate_ssp_lambda(const Partition& lam) {
    // Pair up the parts of lam: the largest remaining part either stands
    // alone or takes any smaller-or-equal remaining part as second part.
    std::set<FactorSet> seen;
    std::vector<int> parts = lam.parts();
    std::vector<Partition> stack;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
        if (rest.empty()) {
            FactorSet A(stack);
            if (is_nested(A)) seen.insert(std::move(A));
            return;
        }
        const int head = rest.front();
        std::vector<int> next(rest.begin() + 1, rest.end());
        stack.push_back(Partition({head}));
        rec(next);
        stack.pop_back();
        int last_second = -1;
        for (size_t i = 0; i < next.size(); ++i) {
            if (next[i] == last_second) continue;  // identical choice
            last_second = next[i];
            std::vector<int> rest2 = next;
            rest2.erase(rest2.begin() + static_cast<long>(i));
            stack.push_back(Partition({head, next[i]}));
            rec(rest2);
            stack.pop_back();
        }
    };
    rec(parts);
    return std::vector<FactorSet>(seen.begin(), seen.end());
}

std::string PlanePartition2Row::to_string() const {
    std::string out;
    for (size_t i = 0; i < row1.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(row1[i]);
    }
    out += '/';
    for (size_t i = 0; i < row2.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(row2[i]);
    }
    return out;
}

PlanePartition2Row psi(const FactorSet& A) {
    if (!is_nested(A)) throw std::domain_error("psi requires a nested factor set");
    PlanePartition2Row pp;
    for (const Partition& f : A.factors()) {
        pp.row1.push_back(f[0]);
        pp.row2.push_back(f.length() > 1 ? f[1] : 0);
    }
    std::sort(pp.row1.begin(), pp.row1.end(), std::greater<int>());
    std::sort(pp.row2.begin(), pp.row2.end(), std::greater<int>());
    return pp;
}

FactorSet up_set(const FactorSet& A) {
    int one_part = 0;
    for (const Partition& f : A.factors())
        if (f.length() == 1) ++one_part;
    if (one_part != 1)
        throw std::domain_error("up_set requires exactly one one-part factor");
    std::vector<Partition> out;
    for (const Partition& f : A.factors()) {
        std::vector<int> parts = f.parts();
        for (int& p : parts) p += 1;
        if (f.length() == 1) parts.push_back(1);
        out.push_back(Partition(std::move(parts)));
    }
    return FactorSet(std::move(out));
}

FactorSet down_set(const FactorSet& A) {
    std::vector<Partition> out;
    for (const Partition& f : A.factors()) {
        std::vector<int> parts;
        for (int p : f.parts())
            if (p > 1) parts.push_back(p - 1);
        if (!parts.empty()) out.push_back(Partition(std::move(parts)));
    }
    return FactorSet(std::move(out));
}

bool agree_within(const FactorSet& A, const FactorSet& B, const Partition& rho) {
    if (rho.length() != 2) throw std::domain_error("agree_within requires a two-part rho");
    auto inside = [&rho](const FactorSet& S) {
        std::vector<Partition> collected;
        for (const Partition& f : S.factors())
            if (f.length() == 2 && rho[0] > f[0] && f[0] > f[1] && f[1] > rho[1])
                collected.push_back(f);
        return collected;
    };
    return inside(A) == inside(B);
}

std::vector<Partition> inside_out_order(const FactorSet& A) {
    if (!phi(A).has_distinct_parts())
        throw std::domain_error("inside_out_order requires distinct parts");
    std::vector<Partition> twos;
    for (const Partition& f : A.factors())
        if (f.length() == 2) twos.push_back(f);
    // A factor strictly inside rho has smaller span, so span order
    // refines containment. Ties broken by first part for determinism.
    std::sort(twos.begin(), twos.end(), [](const Partition& a, const Partition& b) {
        const int sa = a[0] - a[1], sb = b[0] - b[1];
        if (sa != sb) return sa < sb;
        return a[0] < b[0];
    });
    return twos;
}

}  // namespace schurcone
