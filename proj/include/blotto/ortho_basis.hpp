#pragma once

#include <vector>

#include "blotto/polynomial.hpp"

namespace blotto {

/// Symmetric domain [-nu, nu]. nu = 0 is allowed only for the degenerate
/// n = 0 player, whose strategy space is the single point 0.
struct Interval {
  Rational nu;
};

/// Exact value of the integral of x^(A+B) over [-nu, nu]:
/// 2*nu^(A+B+1)/(A+B+1) when A+B is even, 0 when odd.
Rational monomial_inner_product(int A, int B, const Rational& nu);

/// Exact value of the integral of p*q over [-nu, nu], by bilinear expansion
/// over monomial_inner_product.
Rational inner_product(const Polynomial& p, const Polynomial& q, const Rational& nu);

/// Orthogonal polynomial family on [-nu, nu], kept in monic form with exact
/// squared norms; square roots only enter through the float-normalized view.
struct OrthoBasis {
  Interval interval;
  std::vector<Polynomial> monic;  // monic[i] has degree exactly i
  std::vector<Rational> sq_norms;

  int max_degree() const { return static_cast<int>(monic.size()) - 1; }

  /// Coefficients of monic[i]/sqrt(sq_norms[i]), length i+1.
  std::vector<double> normalized_coeffs(int i) const;
  double eval_normalized(int i, double t) const;
};

/// Monic Gram-Schmidt over {1, x, ..., x^max_degree} on [-nu, nu].
/// Throws std::invalid_argument if nu <= 0 or max_degree < 0.
OrthoBasis gram_schmidt_basis(int max_degree, const Interval& interval);

}  // namespace blotto
