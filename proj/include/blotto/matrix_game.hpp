#pragma once

#include <vector>

#include "blotto/game.hpp"

namespace blotto {

/// Finite restriction of the continuous game to evenly spaced grids:
/// payoffs[i][j] = P(row_locations[i] - col_locations[j]), exact.
struct DiscreteGameMatrix {
  std::vector<Rational> row_locations;  // Player 1 grid, ascending
  std::vector<Rational> col_locations;  // Player 2 grid, ascending
  std::vector<std::vector<Rational>> payoffs;

  std::vector<std::vector<double>> payoffs_double() const;
};

/// Grids {-nu + k*(2*nu/L)} for k = 0..L on each player's interval; a single
/// point 0 for Player 2 when n = 0.
DiscreteGameMatrix build_grid_game(const GameSpec& game, int L);

struct MatrixGameSolution {
  std::vector<double> p;  // row player mixed strategy
  std::vector<double> q;  // column player mixed strategy
  double value = 0.0;
  int iterations = 0;
};

struct MatrixGameSolutionExact {
  std::vector<Rational> p;
  std::vector<Rational> q;
  Rational value;
  int iterations = 0;
};

/// Minimax value and optimal mixed strategies of the zero-sum matrix game
/// (row player maximizes). Dense simplex on the positive-shift
/// transformation, Bland's rule, iteration cap 10*(rows+cols)^2; throws
/// std::runtime_error if the cap is hit.
MatrixGameSolution solve_matrix_game(const std::vector<std::vector<double>>& A, double tol = 1e-9);
MatrixGameSolution solve_matrix_game(const DiscreteGameMatrix& matrix, double tol = 1e-9);

/// Debug-mode variant of the same simplex over exact rationals: slower, but
/// the returned strategies and value are exact optima of the matrix game.
MatrixGameSolutionExact solve_matrix_game_exact(const std::vector<std::vector<Rational>>& A);
MatrixGameSolutionExact solve_matrix_game_exact(const DiscreteGameMatrix& matrix);

}  // namespace blotto
