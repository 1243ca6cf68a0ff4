#pragma once

#include <optional>
#include <vector>

#include "blotto/rational.hpp"

namespace blotto {

/// Dense univariate polynomial over exact rationals, coefficients in
/// ascending degree. Normalized form never has a trailing zero, so the
/// zero polynomial is the empty coefficient list and its degree is
/// std::nullopt.
struct Polynomial {
  std::vector<Rational> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) { normalize(); }

  static Polynomial zero() { return Polynomial{}; }
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = Rational(1));

  bool is_zero() const { return coeffs.empty(); }
  std::optional<int> degree() const {
    if (coeffs.empty()) return std::nullopt;
    return static_cast<int>(coeffs.size()) - 1;
  }
  // 0 beyond the stored coefficients.
  const Rational& coeff(std::size_t k) const;

  void normalize();

  bool operator==(const Polynomial& other) const { return coeffs == other.coeffs; }
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& p);
Polynomial operator-(const Polynomial& p);

/// p(alpha*z + beta), expanded exactly.
Polynomial compose_affine(const Polynomial& p, const Rational& alpha, const Rational& beta);

Polynomial derivative(const Polynomial& p);

// Horner evaluation; exact for rational arguments.
Rational eval_poly(const Polynomial& p, const Rational& t);
double eval_poly(const Polynomial& p, double t);

Rational binomial(int n, int k);

}  // namespace blotto
