#pragma once

#include <cstddef>
#include <vector>

#include "blotto/rational.hpp"

namespace blotto {

/// Result of rewriting a convex combination on a smaller support. `indices`
/// point into the original point list, ascending; `weights` are positive and
/// sum to 1.
template <typename Scalar>
struct CaratheodoryResult {
  std::vector<std::size_t> indices;
  std::vector<Scalar> weights;
};

/// Rewrites sum_i w_i p_i as a convex combination of at most d+1 of the
/// points, d being their common dimension. Repeatedly finds an affine
/// dependency among the active points (coefficients summing to zero), steps
/// along it by the largest multiple keeping all weights nonnegative, and
/// drops the weight that hits zero; ties go to the smallest index.
///
/// The rational overload is exact; the double overload reconstructs the
/// combination to ~1e-9. Throws std::invalid_argument on empty input,
/// mismatched dimensions, negative weights, or weights not summing to 1.
CaratheodoryResult<Rational> caratheodory_reduce(const std::vector<std::vector<Rational>>& points,
                                                 const std::vector<Rational>& weights);
CaratheodoryResult<double> caratheodory_reduce(const std::vector<std::vector<double>>& points,
                                               const std::vector<double>& weights);

}  // namespace blotto
