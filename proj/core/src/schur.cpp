#include "schurcone/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "schurcone/tableau.hpp"

namespace schurcone {

SchurVector SchurVector::unit(const Partition& lam) {
    SchurVector v(lam.weight());
    v.terms_.emplace(lam, Rational(1));
    return v;
}

Rational SchurVector::coefficient(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SchurVector::add_term(const Partition& lam, const Rational& c) {
    if (lam.weight() != degree_)
        throw std::domain_error("term degree does not match vector degree");
    auto [it, inserted] = terms_.emplace(lam, c);
    if (!inserted) it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void SchurVector::set_coefficient(const Partition& lam, const Rational& c) {
    if (lam.weight() != degree_)
        throw std::domain_error("term degree does not match vector degree");
    if (c == 0)
        terms_.erase(lam);
    else
        terms_[lam] = c;
}

SchurVector& SchurVector::operator+=(const SchurVector& other) {
    if (degree_ != other.degree_) throw std::domain_error("degree mismatch");
    for (const auto& [lam, c] : other.terms_) add_term(lam, c);
    return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& other) {
    if (degree_ != other.degree_) throw std::domain_error("degree mismatch");
    for (const auto& [lam, c] : other.terms_) add_term(lam, -c);
    return *this;
}

SchurVector& SchurVector::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

std::string render_terms(const std::string& basis, int degree,
                         const std::map<Partition, Rational, PartitionDescLex>& terms) {
    if (terms.empty()) return "0 (degree " + std::to_string(degree) + ")";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += basis + "(" + key.to_string() + ")";
    }
    return out;
}

}  // namespace

std::string SchurVector::to_string() const { return render_terms("s", degree_, terms_); }

Integer HPolynomial::coefficient(const Partition& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? Integer(0) : it->second;
}

void HPolynomial::add_term(const Partition& rho, const Integer& c) {
    if (rho.weight() != degree_)
        throw std::domain_error("term degree does not match polynomial degree");
    auto [it, inserted] = terms_.emplace(rho, c);
    if (!inserted) it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::string HPolynomial::to_string() const {
    std::map<Partition, Rational, PartitionDescLex> as_rational;
    for (const auto& [rho, c] : terms_) as_rational.emplace(rho, Rational(c));
    return render_terms("h", degree_, as_rational);
}

HPolynomial jacobi_trudi(const Partition& lam, int n) {
    if (n < lam.length())
        throw std::domain_error("jacobi_trudi requires n >= length(lam)");
    HPolynomial out(lam.weight());
    if (n == 0) {
        out.add_term(Partition(), 1);
        return out;
    }
    // Expand the determinant row by row, skipping h_{<0} entries; h_0
    // contributes no part. Sign tracked by transposition parity.
    std::vector<int> entry_base(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        entry_base[static_cast<size_t>(i)] = (i < lam.length() ? lam[i] : 0) - i;
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int row, int sign) {
        if (row == n) {
            out.add_term(Partition::from_unsorted(parts), sign);
            return;
        }
        for (int col = 0; col < n; ++col) {
            if (used[static_cast<size_t>(col)]) continue;
            const int sub = entry_base[static_cast<size_t>(row)] + col;
            if (sub < 0) continue;
            // Parity of the permutation built so far: count used columns
            // greater than this one (inversions added by this choice).
            int inversions = 0;
            for (int c2 = col + 1; c2 < n; ++c2)
                if (used[static_cast<size_t>(c2)]) ++inversions;
            used[static_cast<size_t>(col)] = true;
            if (sub > 0) parts.push_back(sub);
            rec(row + 1, inversions % 2 ? -sign : sign);
            if (sub > 0) parts.pop_back();
            used[static_cast<size_t>(col)] = false;
        }
    };
    rec(0, 1);
    return out;
}

HPolynomial jacobi_trudi(const Partition& lam) { return jacobi_trudi(lam, lam.length()); }

SchurVector h_to_schur(const HPolynomial& p) {
    SchurVector out(p.degree());
    const std::vector<Partition> shapes = partitions_of(p.degree());
    for (const auto& [rho, c] : p.terms()) {
        const Composition content(rho.parts());
        for (const Partition& lam : shapes) {
            const long long k = kostka(lam, content);
            if (k != 0) out.add_term(lam, Rational(c) * k);
        }
    }
    return out;
}

SchurVector schur_product(const FactorSet& A) {
    static std::map<FactorSet, SchurVector> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(A);
        if (it != memo.end()) return it->second;
    }
    SchurVector out(A.weight());
    for (const Partition& lam : partitions_of(A.weight())) {
        const long long c = lr_coefficient(A.factors(), lam);
        if (c != 0) out.add_term(lam, Rational(c));
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(A, out);
    return out;
}

Rational inner_product(const SchurVector& f, const SchurVector& g) {
    if (f.degree() != g.degree())
        throw std::domain_error("inner product requires equal degrees");
    const SchurVector& small = f.terms().size() <= g.terms().size() ? f : g;
    const SchurVector& large = f.terms().size() <= g.terms().size() ? g : f;
    Rational acc(0);
    for (const auto& [lam, c] : small.terms()) acc += c * large.coefficient(lam);
    return acc;
}

Rational inner_with_product(const SchurVector& f, const FactorSet& A) {
    if (f.degree() != A.weight())
        throw std::domain_error("inner product requires equal degrees");
    Rational acc(0);
    for (const auto& [lam, c] : f.terms()) {
        const long long lr = lr_coefficient(A.factors(), lam);
        if (lr != 0) acc += c * lr;
    }
    return acc;
}

const char* to_string(SyzygyCase c) {
    switch (c) {
        case SyzygyCase::Cond1: return "1";
        case SyzygyCase::Cond2a: return "2a";
        case SyzygyCase::Cond2b: return "2b";
        case SyzygyCase::Cond3: return "3";
    }
    return "?";
}

namespace {

FactorSet make_factors(const std::vector<std::vector<int>>& raw) {
    std::vector<Partition> factors;
    for (const auto& parts : raw) {
        Partition p = Partition::from_unsorted(parts);
        if (!p.empty()) factors.push_back(std::move(p));
    }
    return FactorSet(std::move(factors));
}

}  // namespace

SyzygyDecomposition syzygy_decompose(const Partition& lam_in, const Partition& mu_in) {
    const PairCondition cond = pair_condition(lam_in, mu_in);
    if (cond == PairCondition::None)
        throw std::domain_error("no syzygy applies: the pair is nested");

    Partition lam = lam_in, mu = mu_in;
    SyzygyDecomposition out;
    switch (cond) {
        case PairCondition::Cond1: {
            if (!(lam.length() == 2 && mu.length() == 2 && lam[0] > mu[0] && mu[0] >= lam[1] &&
                  lam[1] > mu[1]))
                std::swap(lam, mu);
            out.which = SyzygyCase::Cond1;
            out.left = make_factors({{lam[0], mu[1]}, {mu[0], lam[1]}});
            out.right = make_factors({{lam[0], mu[0] + 1}, {lam[1] - 1, mu[1]}});
            break;
        }
        case PairCondition::Cond2: {
            if (lam.length() != 2) std::swap(lam, mu);
            if (lam[0] > mu[0]) {
                out.which = SyzygyCase::Cond2a;
                out.left = make_factors({{lam[0]}, {mu[0], lam[1]}});
                out.right = make_factors({{lam[1] - 1}, {lam[0], mu[0] + 1}});
            } else {
                out.which = SyzygyCase::Cond2b;
                out.left = make_factors({{lam[1]}, {lam[0], mu[0]}});
                out.right = make_factors({{lam[0] + 1}, {mu[0] - 1, lam[1]}});
            }
            break;
        }
        case PairCondition::Cond3: {
            if (lam[0] < mu[0]) std::swap(lam, mu);
            out.which = SyzygyCase::Cond3;
            out.left = make_factors({{lam[0], mu[0]}});
            out.right = make_factors({{lam[0] + 1}, {mu[0] - 1}});
            break;
        }
        default:
            throw std::logic_error("unreachable syzygy case");
    }
    return out;
}

}  // namespace schurcone
