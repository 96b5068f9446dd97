#ifndef SCHURCONE_NESTED_HPP
#define SCHURCONE_NESTED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurcone/partition.hpp"

namespace schurcone {

/// Multiset of partition factors representing the product s_A. Factors
/// are kept in canonical order: descending lexicographic, duplicates
/// adjacent.
class FactorSet {
public:
    FactorSet() = default;
    explicit FactorSet(std::vector<Partition> factors);

    const std::vector<Partition>& factors() const { return factors_; }
    int size() const { return static_cast<int>(factors_.size()); }
    bool empty() const { return factors_.empty(); }
    int weight() const { return weight_; }
    /// Longest factor length; 0 for the empty set.
    int max_parts() const;
    bool contains(const Partition& factor) const;
    /// Copy with one occurrence of factor removed; throws if absent.
    FactorSet without(const Partition& factor) const;
    FactorSet with(const Partition& factor) const;

    friend auto operator<=>(const FactorSet&, const FactorSet&) = default;

    /// Text grammar: factors joined by ';', "5,1;4,2;4,2;3,2".
    std::string to_string() const;
    static FactorSet parse(std::string_view text);

private:
    std::vector<Partition> factors_;
    int weight_ = 0;
};

/// The partition formed by all parts of all factors.
Partition phi(const FactorSet& A);

/// Which pairing condition an unordered pair of factors satisfies, if
/// any. Condition 1: two-part lam, mu with lam1 > mu1 >= lam2 > mu2.
/// Condition 2: two-part lam with lam1 > lam2, one-part mu, with
/// lam1 >= mu1 >= lam2. Condition 3: two one-part factors.
enum class PairCondition { None, Cond1, Cond2, Cond3 };
PairCondition pair_condition(const Partition& a, const Partition& b);

/// True when no factor pair (including two copies of the same factor)
/// satisfies a pairing condition. Defined only when every factor has at
/// most two parts.
bool is_nested(const FactorSet& A);

/// First pair violating nestedness, in canonical scan order.
std::optional<std::pair<Partition, Partition>> find_violating_pair(const FactorSet& A);

/// All factor multisets of total weight N with factors of at most k
/// parts, in canonical order.
std::vector<FactorSet> enumerate_sp(int N, int k);
/// The nested members of enumerate_sp(N, 2).
std::vector<FactorSet> enumerate_ssp(int N);
/// All nested A with phi(A) == lam (factors of at most two parts).
/// Never empty.
std::vector<FactorSet> enumerate_ssp_lambda(const Partition& lam);

/// Two weakly decreasing rows of equal length with weakly decreasing
/// columns; row 2 may end in a single 0 (the image of a one-part
/// factor).
struct PlanePartition2Row {
    std::vector<int> row1, row2;
    friend bool operator==(const PlanePartition2Row&, const PlanePartition2Row&) = default;
    std::string to_string() const;  // "5,4,4,2/3,2,2,1"
};

/// First parts sorted into row 1, second parts into row 2. Requires a
/// nested A.
PlanePartition2Row psi(const FactorSet& A);

/// Adds 1 to every part and a new part 1 to the unique one-part factor.
/// Requires exactly one one-part factor.
FactorSet up_set(const FactorSet& A);
/// Subtracts 1 from every part, dropping vanished parts and factors.
FactorSet down_set(const FactorSet& A);

/// Every two-part mu strictly inside rho (rho1 > mu1 > mu2 > rho2) lies
/// in A iff it lies in B.
bool agree_within(const FactorSet& A, const FactorSet& B, const Partition& rho);

/// A's two-part factors ordered so that factors nested inside rho
/// appear before rho. Requires phi(A) with distinct parts.
std::vector<Partition> inside_out_order(const FactorSet& A);

}  // namespace schurcone

#endif  // SCHURCONE_NESTED_HPP
