#ifndef SCHURCONE_SIMPLEX_HPP
#define SCHURCONE_SIMPLEX_HPP

#include <vector>

#include "schurcone/numeric.hpp"

namespace schurcone {

/// Outcome of an exact conic membership test. Exactly one side is
/// populated: a non-negative combination reproducing the target, or a
/// functional y with y.col <= 0 for every column and y.target > 0.
struct ConicResult {
    bool in_cone = false;
    std::vector<Rational> coefficients;
    std::vector<Rational> functional;
};

/// Decides target in cone(columns) by exact phase-1 simplex with
/// Bland's rule. Every column must have the same size as target. Both
/// outcomes are re-verified internally before returning.
ConicResult conic_membership(const std::vector<std::vector<Rational>>& columns,
                             const std::vector<Rational>& target);

}  // namespace schurcone

#endif  // SCHURCONE_SIMPLEX_HPP
