#ifndef SCHURCONE_PARTITION_HPP
#define SCHURCONE_PARTITION_HPP

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schurcone {

/// Error raised by the text grammars (partitions, factor sets,
/// compositions, permutations). Carries the 1-based column of the
/// offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int column)
        : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

/// A partition: weakly decreasing sequence of positive integers. The
/// empty partition (weight 0) is valid. Values are immutable after
/// construction.
class Partition {
public:
    Partition() = default;
    /// Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    /// Sorts descending and drops zeros. Negative parts are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    bool has_distinct_parts() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// Text grammar: comma-separated positive integers, "4,3,3,2,2,2,1".
    /// The empty partition renders as "".
    std::string to_string() const;
    /// Accepts parts in any order and canonicalizes.
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Content vector: non-negative entries in any order, trailing zeros
/// permitted.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);

    int sum() const;
    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    friend auto operator<=>(const Composition&, const Composition&) = default;

    std::string to_string() const;
    static Composition parse(std::string_view text);

private:
    std::vector<int> entries_;
};

/// Canonical display/enumeration order: descending lexicographic,
/// largest first. A linear extension of dominance on each P_N.
bool desc_lex_before(const Partition& a, const Partition& b);

struct PartitionDescLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return desc_lex_before(a, b);
    }
};

/// lam dominates mu: every prefix sum of lam >= that of mu.
/// Both must be partitions of the same weight.
bool dominates(const Partition& lam, const Partition& mu);

/// All mu with lam <= mu <= rho in dominance, descending lexicographic.
/// Empty when rho does not dominate lam.
std::vector<Partition> dominance_interval(const Partition& lam, const Partition& rho);

/// First part +1, last part -1, zeros dropped. Requires >= 2 parts.
Partition lambda_plus(const Partition& lam);

/// Adds 1 to the first half of the parts and subtracts 1 from the last
/// half; with an odd number of parts the middle part is unchanged.
/// Requires >= 2 parts.
Partition lambda_plusplus(const Partition& lam);

/// The dagger variant: the last part is unchanged in both parity cases.
/// Requires >= 2 parts and lam[m-2] > lam[m-1].
Partition lambda_dagger(const Partition& lam);

/// (mu_1+1, ..., mu_m+1, 1): a partition of N+m+1.
Partition up(const Partition& mu);
/// (mu_1-1, ..., mu_m-1) with zeros dropped: a partition of N-m.
Partition down(const Partition& mu);
/// True when up(down(mu)) == mu, i.e. mu ends in a single 1.
bool is_down_invertible(const Partition& mu);

/// All partitions of n with at most max_parts parts, descending
/// lexicographic. partitions_of(0) is {()}.
std::vector<Partition> partitions_of(int n, int max_parts = std::numeric_limits<int>::max());

}  // namespace schurcone

#endif  // SCHURCONE_PARTITION_HPP
