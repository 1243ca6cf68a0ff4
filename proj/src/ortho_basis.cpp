#include "blotto/ortho_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace blotto {

Rational monomial_inner_product(int A, int B, const Rational& nu) {
  if (A < 0 || B < 0) throw std::invalid_argument("negative monomial exponent");
  int s = A + B;
  if (s % 2 == 1) return Rational(0);
  Rational power(1);
  for (int i = 0; i < s + 1; ++i) power *= nu;
  return Rational(2) * power / Rational(s + 1);
}

Rational inner_product(const Polynomial& p, const Polynomial& q, const Rational& nu) {
  Rational acc(0);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
      if (q.coeffs[j] == 0) continue;
      // integral of x^(i+j) vanishes on odd total degree
      if ((i + j) % 2 == 1) continue;
      acc += p.coeffs[i] * q.coeffs[j] *
             monomial_inner_product(static_cast<int>(i), static_cast<int>(j), nu);
    }
  }
  return acc;
}

std::vector<double> OrthoBasis::normalized_coeffs(int i) const {
  const double scale = 1.0 / std::sqrt(to_double(sq_norms.at(i)));
  std::vector<double> out(static_cast<std::size_t>(i) + 1, 0.0);
  for (std::size_t k = 0; k < monic[i].coeffs.size(); ++k)
    out[k] = to_double(monic[i].coeffs[k]) * scale;
  return out;
}

double OrthoBasis::eval_normalized(int i, double t) const {
  return eval_poly(monic.at(i), t) / std::sqrt(to_double(sq_norms.at(i)));
}

OrthoBasis gram_schmidt_basis(int max_degree, const Interval& interval) {
  if (max_degree < 0) throw std::invalid_argument("negative basis degree");
  if (interval.nu <= 0) throw std::invalid_argument("basis interval needs nu > 0");

  OrthoBasis basis;
  basis.interval = interval;
  basis.monic.reserve(static_cast<std::size_t>(max_degree) + 1);
  basis.sq_norms.reserve(static_cast<std::size_t>(max_degree) + 1);

  for (int k = 0; k <= max_degree; ++k) {
    Polynomial v = Polynomial::monomial(k);
    for (int j = 0; j < k; ++j) {
      Rational proj = inner_product(v, basis.monic[j], interval.nu);
      if (proj == 0) continue;
      v = v - (proj / basis.sq_norms[j]) * basis.monic[j];
    }
    Rational norm = inner_product(v, v, interval.nu);
    // x^k is independent of lower powers, so v != 0 and its norm is positive.
    basis.monic.push_back(std::move(v));
    basis.sq_norms.push_back(std::move(norm));
  }
  return basis;
}

}  // namespace blotto
