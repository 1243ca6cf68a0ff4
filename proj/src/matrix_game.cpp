#include "blotto/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blotto {

std::vector<std::vector<double>> DiscreteGameMatrix::payoffs_double() const {
  std::vector<std::vector<double>> out(payoffs.size());
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    out[i].resize(payoffs[i].size());
    for (std::size_t j = 0; j < payoffs[i].size(); ++j) out[i][j] = to_double(payoffs[i][j]);
  }
  return out;
}

DiscreteGameMatrix build_grid_game(const GameSpec& game, int L) {
  game.validate();
  if (L < 1) throw std::invalid_argument("grid parameter L must be >= 1");
  Polynomial P = shift_payoff(game).P;

  auto grid = [L](const Rational& nu) {
    std::vector<Rational> points;
    if (nu == 0) {
      points.push_back(Rational(0));
      return points;
    }
    for (int k = 0; k <= L; ++k) points.push_back(-nu + Rational(2 * k) * nu / Rational(L));
    return points;
  };

  DiscreteGameMatrix out;
  out.row_locations = grid(game.nu1());
  out.col_locations = grid(game.nu2());
  out.payoffs.assign(out.row_locations.size(),
                     std::vector<Rational>(out.col_locations.size(), Rational(0)));
  for (std::size_t i = 0; i < out.row_locations.size(); ++i)
    for (std::size_t j = 0; j < out.col_locations.size(); ++j)
      out.payoffs[i][j] = eval_poly(P, out.row_locations[i] - out.col_locations[j]);
  return out;
}

namespace {

// Positive-shift LP transformation: with A' = A + shift entrywise positive,
// maximize sum(w) s.t. A'w <= 1, w >= 0; then q = w * value',
// p = (dual values) * value', value = value' - shift. `eps` is the pivoting
// tolerance (exactly zero in the rational instantiation).
template <typename Scalar>
struct SimplexOutcome {
  std::vector<Scalar> p, q;
  Scalar value;
  int iterations;
};

template <typename Scalar>
SimplexOutcome<Scalar> game_simplex(const std::vector<std::vector<Scalar>>& A, const Scalar& eps) {
  if (A.empty() || A.front().empty()) throw std::invalid_argument("empty payoff matrix");
  const std::size_t m = A.size(), n = A.front().size();
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("ragged payoff matrix");

  Scalar lo = A[0][0];
  for (const auto& row : A)
    for (const Scalar& v : row)
      if (v < lo) lo = v;
  Scalar shift(1);
  if (lo < Scalar(0)) shift = shift - lo;

  // tableau: rows 0..m-1 constraints, row m objective; columns 0..n-1 the
  // w variables, n..n+m-1 slacks, last column rhs
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Scalar>> T(m + 1, std::vector<Scalar>(cols, Scalar(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j] + shift;
    T[i][n + i] = Scalar(1);
    T[i][cols - 1] = Scalar(1);
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = Scalar(-1);

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  const long long max_iter = 10LL * static_cast<long long>(m + n) * static_cast<long long>(m + n);
  long long iter = 0;
  while (true) {
    // Bland's rule: entering variable = lowest index with negative reduced cost
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (T[m][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == SIZE_MAX) break;  // optimal

    std::size_t leave = SIZE_MAX;
    Scalar best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= eps) continue;
      Scalar ratio = T[i][cols - 1] / T[i][enter];
      if (leave == SIZE_MAX || ratio < best_ratio - eps ||
          (ratio <= best_ratio + eps && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == SIZE_MAX) throw std::runtime_error("matrix game LP unbounded");

    Scalar piv = T[leave][enter];
    for (std::size_t c = 0; c < cols; ++c) T[leave][c] /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      Scalar f = T[r][enter];
      if (f == Scalar(0)) continue;
      for (std::size_t c = 0; c < cols; ++c) T[r][c] -= f * T[leave][c];
    }
    basis[leave] = enter;

    if (++iter > max_iter) throw std::runtime_error("matrix game LP iteration budget exceeded");
  }

  const Scalar objective = T[m][cols - 1];  // sum of w = 1 / value'
  if (!(objective > Scalar(0))) throw std::runtime_error("matrix game LP failed to make progress");
  const Scalar shifted_value = Scalar(1) / objective;

  SimplexOutcome<Scalar> sol;
  sol.iterations = static_cast<int>(iter);
  sol.q.assign(n, Scalar(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.q[basis[i]] = T[i][cols - 1] * shifted_value;
  sol.p.assign(m, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) sol.p[i] = T[m][n + i] * shifted_value;
  sol.value = shifted_value - shift;
  return sol;
}

}  // namespace

MatrixGameSolution solve_matrix_game(const DiscreteGameMatrix& matrix, double tol) {
  return solve_matrix_game(matrix.payoffs_double(), tol);
}

MatrixGameSolution solve_matrix_game(const std::vector<std::vector<double>>& A, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  SimplexOutcome<double> raw = game_simplex<double>(A, 1e-12);

  auto clean = [](std::vector<double>& v) {
    double total = 0.0;
    for (double& x : v) {
      if (x < 0.0) x = 0.0;
      total += x;
    }
    if (total > 0)
      for (double& x : v) x /= total;
  };
  MatrixGameSolution sol;
  sol.p = std::move(raw.p);
  sol.q = std::move(raw.q);
  clean(sol.p);
  clean(sol.q);
  sol.value = raw.value;
  sol.iterations = raw.iterations;
  return sol;
}

MatrixGameSolutionExact solve_matrix_game_exact(const DiscreteGameMatrix& matrix) {
  return solve_matrix_game_exact(matrix.payoffs);
}

MatrixGameSolutionExact solve_matrix_game_exact(const std::vector<std::vector<Rational>>& A) {
  SimplexOutcome<Rational> raw = game_simplex<Rational>(A, Rational(0));
  MatrixGameSolutionExact sol;
  sol.p = std::move(raw.p);
  sol.q = std::move(raw.q);
  sol.value = std::move(raw.value);
  sol.iterations = raw.iterations;
  return sol;
}

}  // namespace blotto
