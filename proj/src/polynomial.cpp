#include "blotto/polynomial.hpp"

#include <stdexcept>

namespace blotto {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (c != 0) p.coeffs.push_back(c);
  return p;
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  Polynomial p;
  if (c != 0) {
    p.coeffs.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.coeffs.back() = c;
  }
  return p;
}

const Rational& Polynomial::coeff(std::size_t k) const {
  return k < coeffs.size() ? coeffs[k] : kZero;
}

void Polynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = a.coeff(i) + b.coeff(i);
  out.normalize();
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& p) {
  Polynomial out = p;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  Polynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  out.normalize();
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return Polynomial::zero();
  Polynomial out = p;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational out(1);
  for (int i = 0; i < k; ++i) out = out * Rational(n - i) / Rational(i + 1);
  return out;
}

Polynomial compose_affine(const Polynomial& p, const Rational& alpha, const Rational& beta) {
  // Horner on the affine argument: result = (((p_d)*(az+b) + p_{d-1})*(az+b) + ...)
  Polynomial arg;
  arg.coeffs = {beta, alpha};
  arg.normalize();
  Polynomial out;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    out = out * arg + Polynomial::constant(p.coeffs[i]);
  }
  return out;
}

Polynomial derivative(const Polynomial& p) {
  Polynomial out;
  if (p.coeffs.size() <= 1) return out;
  out.coeffs.resize(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) out.coeffs[i - 1] = Rational(static_cast<int>(i)) * p.coeffs[i];
  out.normalize();
  return out;
}

Rational eval_poly(const Polynomial& p, const Rational& t) {
  Rational acc(0);
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * t + p.coeffs[i];
  return acc;
}

double eval_poly(const Polynomial& p, double t) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * t + to_double(p.coeffs[i]);
  return acc;
}

}  // namespace blotto
