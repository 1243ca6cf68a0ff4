#include <doctest.h>

#include <cmath>

#include "blotto/solver.hpp"

using namespace blotto;

namespace {

GameSpec cubic_game() {
  return GameSpec{Rational(2), Rational(1),
                  Polynomial({Rational(0), Rational(0), Rational(0), Rational(-1)})};
}

DiscreteStrategy worked_p1() { return DiscreteStrategy::single(Player::one, Rational(0)); }

DiscreteStrategy worked_p2() {
  DiscreteStrategy s;
  s.player = Player::two;
  s.atoms = {Atom{Rational(-1), Rational(1, 2)}, Atom{Rational(1), Rational(1, 2)}};
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("best response gaps for the worked equilibrium") {
  GameSpec game = cubic_game();
  BestResponse br = best_response_gap(game, worked_p1(), worked_p2());
  CHECK(std::fabs(br.value + 3.25) <= 1e-12);
  CHECK(br.gap1 <= 1e-9);
  CHECK(br.gap2 <= 1e-9);
  CHECK(br.gap1 >= -1e-9);
  CHECK(br.gap2 >= -1e-9);
}

TEST_CASE("best response closed form for the center pair") {
  GameSpec game = cubic_game();
  DiscreteStrategy y0 = DiscreteStrategy::single(Player::two, Rational(0));
  BestResponse br = best_response_gap(game, worked_p1(), y0);
  // kernel -3x^2 - 1/4 peaks at x = 0, so Player 1 has no deviation;
  // Player 2 walks to +-n/2 and gains 3a(n/2)^2 = 3
  CHECK(std::fabs(br.gap1) <= 1e-12);
  CHECK(std::fabs(br.gap2 - 3.0) <= 1e-9);

  GameSpec fair{Rational(2), Rational(0),
                Polynomial({Rational(0), Rational(0), Rational(0), Rational(-1)})};
  BestResponse zero = best_response_gap(fair, worked_p1(), worked_p2());
  CHECK(zero.gap1 == 0.0);
  CHECK(zero.gap2 == 0.0);
  CHECK(zero.value == 0.0);
}

TEST_CASE("lp pipeline solves the worked cubic example") {
  GameSpec game = cubic_game();
  EquilibriumReport report = solve_lp_pipeline(game, 16);
  CHECK(report.method == "lp-grid");
  CHECK(report.L == 16);
  CHECK(std::fabs(report.value + 3.25) <= 1e-6);
  CHECK(report.gap1 <= 1e-6);
  CHECK(report.gap2 <= 1e-6);
  CHECK(report.support_sizes.first <= 4);   // M + 2 with M = 2
  CHECK(report.support_sizes.second <= 4);

  // all of Player 1's weight within 1e-6 of the even split
  for (const Atom& atom : report.strategy1.atoms)
    CHECK(std::fabs(to_double(atom.location)) <= 1e-6);
  // Player 2 close to the all-in mixture
  double w_plus = 0, w_minus = 0;
  for (const Atom& atom : report.strategy2.atoms) {
    if (std::fabs(to_double(atom.location) - 1.0) <= 1e-6) w_plus += to_double(atom.weight);
    if (std::fabs(to_double(atom.location) + 1.0) <= 1e-6) w_minus += to_double(atom.weight);
  }
  CHECK(std::fabs(w_plus - 0.5) <= 1e-6);
  CHECK(std::fabs(w_minus - 0.5) <= 1e-6);

  // value stays inside the kernel's range on the strategy rectangle
  Polynomial P = shift_payoff(game).P;
  double z_max = to_double(game.nu1() + game.nu2());
  double lo = 1e300, hi = -1e300;
  for (int k = 0; k <= 1000; ++k) {
    double z = -z_max + 2 * z_max * k / 1000.0;
    double v = eval_poly(P, z);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(report.value >= lo - 1e-9);
  CHECK(report.value <= hi + 1e-9);
}

TEST_CASE("exact-LP mode gives the exact grid optimum") {
  GameSpec game = cubic_game();
  EquilibriumReport report = solve_lp_pipeline(game, 16, 1e-9, true);
  CHECK(report.value == -3.25);
  CHECK(std::fabs(report.gap1) <= 1e-12);
  CHECK(std::fabs(report.gap2) <= 1e-12);
  REQUIRE(report.strategy1.atoms.size() == 1);
  CHECK(report.strategy1.atoms[0].location == Rational(0));
  REQUIRE(report.strategy2.atoms.size() == 2);
  CHECK(report.strategy2.atoms[0].weight == Rational(1, 2));

  EquilibriumReport approx = solve_lp_pipeline(game, 16);
  CHECK(std::fabs(report.value - approx.value) <= 1e-9);
}

TEST_CASE("constant kernel short-circuits") {
  GameSpec linear{Rational(2), Rational(1), Polynomial({Rational(0), Rational(1)})};
  EquilibriumReport report = solve_lp_pipeline(linear, 8);
  CHECK(report.value == 1.0);
  CHECK(report.gap1 == 0.0);
  CHECK(report.gap2 == 0.0);
  CHECK(report.support_sizes == std::pair<int, int>{1, 1});

  EquilibriumReport sym = solve_symmetric_grid(linear, 8);
  CHECK(sym.value == 1.0);
  CHECK(sym.method == "symmetric-grid");
}

TEST_CASE("degenerate n = 0 game optimizes Player 1 directly") {
  GameSpec game{Rational(0), Rational(1),
                Polynomial({Rational(0), Rational(0), Rational(0), Rational(-1)})};
  EquilibriumReport report = solve_lp_pipeline(game, 8);
  REQUIRE(report.strategy2.atoms.size() == 1);
  CHECK(report.strategy2.atoms[0].location == Rational(0));
  // kernel -3x^2 - 1/4 peaks at x = 0
  CHECK(std::fabs(report.value + 0.25) <= 1e-9);
  CHECK(report.gap1 <= 1e-9);
  CHECK(report.gap2 <= 1e-9);
}

TEST_CASE("grid refinement drives gaps down monotonically") {
  GameSpec game = cubic_game();
  double previous = 1e300;
  for (int L : {4, 8, 16, 32}) {
    EquilibriumReport report = solve_lp_pipeline(game, L);
    double total_gap = report.gap1 + report.gap2;
    if (L >= 16) CHECK(total_gap <= 1e-6);
    CHECK(total_gap <= previous + 1e-12);
    previous = total_gap;
  }
}

TEST_CASE("symmetric grid solves the worked example with K = 1") {
  GameSpec game = cubic_game();
  SymmetricGridOptions options;
  options.K = 1;
  EquilibriumReport report = solve_symmetric_grid(game, 8, options);
  CHECK(report.method == "symmetric-grid");
  CHECK(std::fabs(report.value + 3.25) <= 1e-9);
  CHECK(report.gap1 <= 1e-9);
  CHECK(report.gap2 <= 1e-9);
  REQUIRE(report.strategy1.atoms.size() == 1);
  CHECK(report.strategy1.atoms[0].location == Rational(0));
  REQUIRE(report.strategy2.atoms.size() == 2);
  CHECK(report.strategy2.atoms[0].location == Rational(-1));
  CHECK(report.strategy2.atoms[1].location == Rational(1));

  // outputs are symmetric by construction
  CHECK(is_symmetric(report.strategy1));
  CHECK(is_symmetric(report.strategy2));
}

TEST_CASE("symmetric grid caps K at the grid size") {
  GameSpec game = cubic_game();
  SymmetricGridOptions huge;
  huge.K = 1000;
  EquilibriumReport capped = solve_symmetric_grid(game, 4, huge);
  EquilibriumReport plain = solve_symmetric_grid(game, 4);
  CHECK(capped.value == plain.value);

  EquilibriumReport tiny = solve_symmetric_grid(game, 1);
  for (const Atom& atom : tiny.strategy1.atoms) {
    Rational abs_loc = atom.location < 0 ? -atom.location : atom.location;
    CHECK((abs_loc == Rational(0) || abs_loc == game.nu1()));
  }
}

TEST_CASE("symmetric grid respects the candidate cap") {
  GameSpec game = cubic_game();
  SymmetricGridOptions options;
  options.candidate_cap = 3;
  CHECK_THROWS_AS(solve_symmetric_grid(game, 8, options), std::runtime_error);
}

TEST_CASE("lp and symmetric grid agree within their certified gaps") {
  GameSpec game = cubic_game();
  EquilibriumReport lp = solve_lp_pipeline(game, 16);
  EquilibriumReport sym = solve_symmetric_grid(game, 16);
  double budget = 2 * (lp.gap1 + lp.gap2 + sym.gap1 + sym.gap2) + 1e-12;
  CHECK(std::fabs(lp.value - sym.value) <= budget);
}

TEST_CASE("monte carlo check") {
  GameSpec game = cubic_game();

  DiscreteStrategy x0 = worked_p1();
  DiscreteStrategy y0 = DiscreteStrategy::single(Player::two, Rational(0));
  McResult degenerate = mc_check(game, x0, y0, 1000, 7);
  CHECK(degenerate.estimate == to_double(exact_payoff(game, x0, y0)));
  CHECK(degenerate.stderr_of_mean == 0.0);

  // worked pair has constant payoff -13/4 along its support
  McResult worked = mc_check(game, x0, worked_p2(), 100000, 1);
  CHECK(std::fabs(worked.estimate + 3.25) <= 4 * worked.stderr_of_mean + 1e-12);

  GameSpec fair{Rational(2), Rational(0),
                Polynomial({Rational(0), Rational(0), Rational(0), Rational(-1)})};
  McResult zero = mc_check(fair, x0, worked_p2(), 1000, 3);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.stderr_of_mean == 0.0);

  // nondegenerate pair: stderr scales like 1/sqrt(samples)
  DiscreteStrategy spread;
  spread.player = Player::one;
  spread.atoms = {Atom{Rational(0), Rational(1, 2)}, Atom{Rational(3, 2), Rational(1, 2)}};
  spread.canonicalize();
  double exact = to_double(exact_payoff(game, spread, worked_p2()));
  double prev_stderr = 0;
  long long prev_n = 0;
  for (long long n : {1000LL, 10000LL, 100000LL}) {
    McResult mc = mc_check(game, spread, worked_p2(), n, 2024);
    CHECK(mc.stderr_of_mean > 0.0);
    CHECK(std::fabs(mc.estimate - exact) <= 4 * mc.stderr_of_mean);
    if (prev_n > 0) {
      double expected_ratio = std::sqrt(static_cast<double>(n) / prev_n);
      double ratio = prev_stderr / mc.stderr_of_mean;
      CHECK(ratio >= expected_ratio / 2);
      CHECK(ratio <= expected_ratio * 2);
    }
    prev_stderr = mc.stderr_of_mean;
    prev_n = n;
  }

  // determinism for a fixed seed
  McResult again = mc_check(game, spread, worked_p2(), 1000, 2024);
  McResult same = mc_check(game, spread, worked_p2(), 1000, 2024);
  CHECK(again.estimate == same.estimate);
  CHECK(again.stderr_of_mean == same.stderr_of_mean);
}
