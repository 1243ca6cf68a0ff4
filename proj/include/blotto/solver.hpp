#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "blotto/matrix_game.hpp"
#include "blotto/strategy.hpp"

namespace blotto {

struct EquilibriumReport {
  DiscreteStrategy strategy1;
  DiscreteStrategy strategy2;
  double value = 0.0;
  double gap1 = 0.0;  // Player 1's best pure deviation improvement
  double gap2 = 0.0;  // Player 2's best pure deviation improvement
  std::string method;  // lp-grid | symmetric-grid | user-supplied
  std::optional<int> L;
  std::pair<int, int> support_sizes{0, 0};
};

struct BestResponse {
  double gap1 = 0.0;
  double gap2 = 0.0;
  double value = 0.0;
  double best_x = 0.0;  // maximizer of Player 1's deviation payoff
  double best_y = 0.0;  // minimizer over Player 2's deviations
};

/// Certifies a strategy pair: value = exact payoff; gap1/gap2 = the most
/// either player gains by any pure deviation on the continuous interval.
/// The one-dimensional polynomial optimizations take candidates from the
/// interval endpoints, a sign-change scan of the derivative over
/// `scan_points` cells, and bisection refinement of each bracketed root to
/// 1e-12.
BestResponse best_response_gap(const GameSpec& game, const DiscreteStrategy& s1,
                               const DiscreteStrategy& s2, int scan_points = 1024);

/// Grid LP pipeline: discretize both intervals at resolution L, solve the
/// matrix game, convert to discrete strategies (weights below 1e-12 dropped,
/// renormalized), symmetrize, apply Caratheodory support reduction,
/// recertify exactly. `exact_lp` switches the LP to the rational-arithmetic
/// simplex (debug mode: slower, exact grid optimum).
EquilibriumReport solve_lp_pipeline(const GameSpec& game, int L = 16, double tol = 1e-9,
                                    bool exact_lp = false);

struct SymmetricGridOptions {
  int K = 0;  // max symmetrized components; 0 = floor(M/2) + 2
  long long candidate_cap = 10'000'000;
  int scan_points = 1024;
};

/// Symmetrized grid brute-force: enumerates Player 1 mixtures of at most K
/// symmetrized grid atoms with weights in multiples of 1/L, picks the
/// max-min against Player 2's symmetrized grid atoms, runs the mirrored
/// pass for Player 2, then certifies the pair. Throws std::runtime_error
/// when the enumeration exceeds the candidate cap.
EquilibriumReport solve_symmetric_grid(const GameSpec& game, int L,
                                       SymmetricGridOptions options = {});

struct McResult {
  double estimate = 0.0;
  double stderr_of_mean = 0.0;
};

/// Monte Carlo estimate of the expected payoff: samples atom pairs i.i.d.
/// and averages P(x - y). Deterministic for a fixed seed.
McResult mc_check(const GameSpec& game, const DiscreteStrategy& s1, const DiscreteStrategy& s2,
                  long long samples, std::uint64_t seed);

}  // namespace blotto
