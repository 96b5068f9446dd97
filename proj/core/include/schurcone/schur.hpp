#ifndef SCHURCONE_SCHUR_HPP
#define SCHURCONE_SCHUR_HPP

#include <map>
#include <string>

#include "schurcone/nested.hpp"
#include "schurcone/numeric.hpp"
#include "schurcone/partition.hpp"

namespace schurcone {

/// Sparse exact vector in Lambda^N over the Schur basis. Keys are
/// partitions of the fixed degree; zero coefficients are never stored.
class SchurVector {
public:
    using TermMap = std::map<Partition, Rational, PartitionDescLex>;

    explicit SchurVector(int degree = 0) : degree_(degree) {}
    static SchurVector unit(const Partition& lam);

    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& lam) const;
    void add_term(const Partition& lam, const Rational& c);
    void set_coefficient(const Partition& lam, const Rational& c);

    SchurVector& operator+=(const SchurVector& other);
    SchurVector& operator-=(const SchurVector& other);
    SchurVector& operator*=(const Rational& c);
    friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
    friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
    friend SchurVector operator*(const Rational& c, SchurVector v) { return v *= c; }
    friend bool operator==(const SchurVector&, const SchurVector&) = default;

    std::string to_string() const;  // "s(2,2,1,1) + s(2,2,2) - s(3,2,1)"

private:
    int degree_;
    TermMap terms_;
};

/// Sparse integer combination of h_rho products; the key rho stands for
/// h_{rho_1} h_{rho_2} ...
class HPolynomial {
public:
    using TermMap = std::map<Partition, Integer, PartitionDescLex>;

    explicit HPolynomial(int degree = 0) : degree_(degree) {}

    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Partition& rho) const;
    void add_term(const Partition& rho, const Integer& c);

    friend bool operator==(const HPolynomial&, const HPolynomial&) = default;

    std::string to_string() const;  // "h(3,2) - h(4,1)"

private:
    int degree_;
    TermMap terms_;
};

/// Signed h-expansion of the n x n Jacobi-Trudi determinant
/// det(h_{lam_i - i + j}). Requires n >= length(lam); the result does
/// not depend on n.
HPolynomial jacobi_trudi(const Partition& lam, int n);
HPolynomial jacobi_trudi(const Partition& lam);

/// Linear extension of h_rho -> sum_lam K_{lam,rho} s_lam.
SchurVector h_to_schur(const HPolynomial& p);

/// Schur expansion of the product s_A via the multi-factor
/// Littlewood-Richardson rule. The empty set yields the degree-0 unit.
SchurVector schur_product(const FactorSet& A);

/// Sum of coefficient products; the Schur basis is orthonormal.
/// Degrees must agree.
Rational inner_product(const SchurVector& f, const SchurVector& g);

/// <f, s_A> computed term by term without expanding the full product.
Rational inner_with_product(const SchurVector& f, const FactorSet& A);

/// The two-term replacement identity for a pair violating a nestedness
/// condition: s_lam s_mu = s_left + s_right as exact Schur vectors.
enum class SyzygyCase { Cond1, Cond2a, Cond2b, Cond3 };
const char* to_string(SyzygyCase c);

struct SyzygyDecomposition {
    SyzygyCase which;
    FactorSet left, right;
};

/// Requires {lam, mu} to violate a nestedness condition; zero parts and
/// empty factors in the outputs are dropped.
SyzygyDecomposition syzygy_decompose(const Partition& lam, const Partition& mu);

}  // namespace schurcone

#endif  // SCHURCONE_SCHUR_HPP
