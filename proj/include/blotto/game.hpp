#pragma once

#include <optional>
#include <vector>

#include "blotto/ortho_basis.hpp"
#include "blotto/polynomial.hpp"

namespace blotto {

/// Two-battlefield continuous Blotto instance: Player 2 holds n resources,
/// Player 1 holds n + a, and each battlefield pays r(difference).
struct GameSpec {
  Rational n;
  Rational a;
  Polynomial r;

  Rational nu1() const { return (n + a) / 2; }  // Player 1 half-width
  Rational nu2() const { return n / 2; }        // Player 2 half-width

  /// Throws std::invalid_argument on n < 0, a < 0, or empty outcome polynomial.
  void validate() const;
};

/// The even kernel P(z) = r(z + a/2) + r(-z + a/2); Player 1's payoff at
/// shifted allocations (x, y) is P(x - y). M is P's degree, nullopt when
/// P == 0.
struct ShiftedKernel {
  Polynomial P;
  std::optional<int> M;
};

ShiftedKernel shift_payoff(const GameSpec& game);

/// P(x - y) with range checks on the shifted coordinates.
Rational payoff(const GameSpec& game, const Rational& x, const Rational& y);
double payoff(const GameSpec& game, double x, double y);

/// Coefficient grid c[p][q] of P(x - y) expanded as sum of c_pq x^p y^q.
std::vector<std::vector<Rational>> bivariate_kernel(const Polynomial& P);

/// Matrix of the payoff operator E in the per-player bases: exact entries in
/// the monic bases, plus the orthonormal float view used for payoffs.
struct ReducedMatrix {
  std::vector<std::vector<Rational>> entries;  // (dim x dim), monic bases
  OrthoBasis basis1;
  OrthoBasis basis2;

  int dim() const { return static_cast<int>(entries.size()); }
  std::vector<std::vector<double>> normalized_view() const;
};

/// Entry (i, j) is the exact double integral of P(x-y) monic1[i](x) monic2[j](y)
/// over the two intervals. Requires basis_degree >= M and n > 0.
ReducedMatrix reduced_matrix(const GameSpec& game, int basis_degree);
/// Same with basis_degree = M, the kernel degree.
ReducedMatrix reduced_matrix(const GameSpec& game);

/// fvec^T * normalized_view * gvec for coordinate vectors in the orthonormal
/// bases. Throws on dimension mismatch.
double expected_payoff_reduced(const std::vector<double>& fvec, const ReducedMatrix& matrix,
                               const std::vector<double>& gvec);

}  // namespace blotto
