#include "blotto/game.hpp"

#include <cmath>
#include <stdexcept>

namespace blotto {

void GameSpec::validate() const {
  if (n < 0) throw std::invalid_argument("Player 2 resources n must be >= 0");
  if (a < 0) throw std::invalid_argument("Player 1 advantage a must be >= 0");
  if (r.is_zero()) throw std::invalid_argument("outcome polynomial r must be nonzero");
}

ShiftedKernel shift_payoff(const GameSpec& game) {
  Rational half_a = game.a / 2;
  Polynomial P = compose_affine(game.r, Rational(1), half_a) +
                 compose_affine(game.r, Rational(-1), half_a);
  ShiftedKernel kernel;
  kernel.M = P.degree();
  kernel.P = std::move(P);
  return kernel;
}

Rational payoff(const GameSpec& game, const Rational& x, const Rational& y) {
  if (x < -game.nu1() || x > game.nu1())
    throw std::invalid_argument("x outside [-nu1, nu1]");
  if (y < -game.nu2() || y > game.nu2())
    throw std::invalid_argument("y outside [-nu2, nu2]");
  return eval_poly(shift_payoff(game).P, x - y);
}

double payoff(const GameSpec& game, double x, double y) {
  const double nu1 = to_double(game.nu1()), nu2 = to_double(game.nu2());
  const double slack = 1e-12 * (1.0 + nu1 + nu2);
  if (x < -nu1 - slack || x > nu1 + slack) throw std::invalid_argument("x outside [-nu1, nu1]");
  if (y < -nu2 - slack || y > nu2 + slack) throw std::invalid_argument("y outside [-nu2, nu2]");
  return eval_poly(shift_payoff(game).P, x - y);
}

std::vector<std::vector<Rational>> bivariate_kernel(const Polynomial& P) {
  const int M = P.degree().value_or(0);
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(M) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(M) + 1, Rational(0)));
  // (x - y)^m = sum_p C(m,p) x^p (-y)^(m-p)
  for (int m = 0; m <= M; ++m) {
    const Rational& pm = P.coeff(static_cast<std::size_t>(m));
    if (pm == 0) continue;
    for (int p = 0; p <= m; ++p) {
      Rational term = pm * binomial(m, p);
      if ((m - p) % 2 == 1) term = -term;
      c[static_cast<std::size_t>(p)][static_cast<std::size_t>(m - p)] += term;
    }
  }
  return c;
}

std::vector<std::vector<double>> ReducedMatrix::normalized_view() const {
  std::vector<std::vector<double>> out(entries.size(), std::vector<double>(entries.size(), 0.0));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double si = std::sqrt(to_double(basis1.sq_norms[i]));
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (entries[i][j] == 0) continue;
      const double sj = std::sqrt(to_double(basis2.sq_norms[j]));
      out[i][j] = to_double(entries[i][j]) / (si * sj);
    }
  }
  return out;
}

ReducedMatrix reduced_matrix(const GameSpec& game) {
  return reduced_matrix(game, shift_payoff(game).M.value_or(0));
}

ReducedMatrix reduced_matrix(const GameSpec& game, int basis_degree) {
  game.validate();
  if (game.n == 0) throw std::invalid_argument("reduced matrix needs n > 0");
  ShiftedKernel kernel = shift_payoff(game);
  const int M = kernel.M.value_or(0);
  if (basis_degree < M) throw std::invalid_argument("basis_degree below kernel degree");

  ReducedMatrix out;
  out.basis1 = gram_schmidt_basis(basis_degree, Interval{game.nu1()});
  out.basis2 = gram_schmidt_basis(basis_degree, Interval{game.nu2()});
  const std::size_t dim = static_cast<std::size_t>(basis_degree) + 1;
  out.entries.assign(dim, std::vector<Rational>(dim, Rational(0)));

  auto c = bivariate_kernel(kernel.P);
  // entry(i,j) = sum_pq c_pq <x^p, monic1_i> <y^q, monic2_j>
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Rational acc(0);
      for (std::size_t p = 0; p < c.size(); ++p) {
        for (std::size_t q = 0; q < c[p].size(); ++q) {
          if (c[p][q] == 0) continue;
          Rational ip1 = inner_product(Polynomial::monomial(static_cast<int>(p)),
                                       out.basis1.monic[i], game.nu1());
          if (ip1 == 0) continue;
          Rational ip2 = inner_product(Polynomial::monomial(static_cast<int>(q)),
                                       out.basis2.monic[j], game.nu2());
          if (ip2 == 0) continue;
          acc += c[p][q] * ip1 * ip2;
        }
      }
      out.entries[i][j] = std::move(acc);
    }
  }
  return out;
}

double expected_payoff_reduced(const std::vector<double>& fvec, const ReducedMatrix& matrix,
                               const std::vector<double>& gvec) {
  const std::size_t dim = matrix.entries.size();
  if (fvec.size() != dim || gvec.size() != dim)
    throw std::invalid_argument("coordinate vector length must match matrix dimension");
  auto view = matrix.normalized_view();
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) acc += fvec[i] * view[i][j] * gvec[j];
  return acc;
}

}  // namespace blotto
