#ifndef SCHURCONE_TESTS_ORACLES_HPP
#define SCHURCONE_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library's
// backtracking filler: they generate every multiset permutation of the
// content, lay it into the shape row-major, and filter.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "schurcone/nested.hpp"
#include "schurcone/partition.hpp"
#include "schurcone/schur.hpp"

namespace schurcone::testing {

long long brute_ssyt_count(const Partition& shape, const Composition& content);

long long brute_lr_count(const std::vector<Partition>& factors, const Partition& lam);

/// Product computed factor by factor with two-factor coefficients only.
SchurVector pairwise_product(const FactorSet& A);

/// All two-row plane partitions of shape (m, m) whose entries are the
/// parts of lam (row 2 padded with a trailing 0 for odd lam), as
/// canonical strings "r1/r2".
std::set<std::string> brute_plane_partitions(const Partition& lam, int columns);

}  // namespace schurcone::testing

#endif  // SCHURCONE_TESTS_ORACLES_HPP
