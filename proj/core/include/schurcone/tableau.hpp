#ifndef SCHURCONE_TABLEAU_HPP
#define SCHURCONE_TABLEAU_HPP

#include <set>
#include <string>
#include <vector>

#include "schurcone/partition.hpp"

namespace schurcone {

/// Semistandard filling of a shape: rows weakly increase left to right,
/// columns strictly increase top to bottom.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int row, int col) const { return rows_[static_cast<size_t>(row)][static_cast<size_t>(col)]; }

    /// Entry i counts the occurrences of value i+1.
    Composition content() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

    std::string to_string() const;  // rows joined by '/', "1,1/2"

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Reading word: right to left across row 1, then row 2, and so on.
std::vector<int> word(const Tableau& t);

/// Subword restricted to the letters in alpha, order preserved.
std::vector<int> subword(const Tableau& t, const std::set<int>& alpha);
std::vector<int> subword(const std::vector<int>& w, const std::set<int>& alpha);

/// Every prefix contains at least as many i's as (i+1)'s.
bool is_lattice(const std::vector<int>& w);

/// Blocks of tableau letters, one per product factor. Letters are
/// listed in the order the permutation assigns them, which is also the
/// order their lattice roles are read.
struct BlockAssignment {
    std::vector<std::vector<int>> blocks;
};

/// Cuts pi into consecutive runs of the given sizes. pi must be a
/// permutation of {1..sum(sizes)}.
BlockAssignment blocks_from_permutation(const std::vector<int>& pi, const std::vector<int>& sizes);

/// pi applied to tau by index relocation: result[pi[i]] = tau[i].
Composition permute_content(const std::vector<int>& pi, const Composition& tau);

/// All semistandard tableaux of the given shape and (exact) content.
/// Deterministic: depth-first, smaller letters tried first, cells
/// visited in reading order.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Composition& content);

/// |enumerate_ssyt(shape, content)|. Memoized on (shape, sorted content);
/// the count does not depend on the content order.
long long kostka(const Partition& shape, const Composition& content);

/// Multi-factor Littlewood-Richardson coefficient: semistandard
/// tableaux of shape lam whose per-factor block subwords are lattice
/// (roles read in block order). The optional permutation reassigns
/// letters to factors; the count is unchanged whenever pi keeps each
/// block a contiguous increasing letter range (any reordering of whole
/// factors). Mismatched total weight yields 0.
long long lr_coefficient(const std::vector<Partition>& factors, const Partition& lam,
                         const std::vector<int>& pi = {});

}  // namespace schurcone

#endif  // SCHURCONE_TABLEAU_HPP
