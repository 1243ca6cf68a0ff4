#include "blotto/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace blotto {

namespace {

struct Extremum {
  double arg = 0.0;
  double value = 0.0;
};

// Max of phi over [lo, hi]: endpoints, scan grid, and bisection-refined
// roots of phi' bracketed by sign changes on the grid.
Extremum maximize_polynomial(const Polynomial& phi, double lo, double hi, int scan_points) {
  Extremum best{lo, eval_poly(phi, lo)};
  auto consider = [&](double x) {
    double v = eval_poly(phi, x);
    if (v > best.value) best = {x, v};
  };
  consider(hi);
  if (hi <= lo || phi.coeffs.size() <= 1) return best;

  Polynomial dphi = derivative(phi);
  const double h = (hi - lo) / scan_points;
  double prev_x = lo, prev_d = eval_poly(dphi, lo);
  for (int k = 1; k <= scan_points; ++k) {
    double x = (k == scan_points) ? hi : lo + k * h;
    consider(x);
    double d = eval_poly(dphi, x);
    if ((prev_d < 0 && d > 0) || (prev_d > 0 && d < 0)) {
      double left = prev_x, right = x, dl = prev_d;
      for (int it = 0; it < 200 && (right - left) > 1e-12; ++it) {
        double mid = 0.5 * (left + right);
        double dm = eval_poly(dphi, mid);
        if ((dl < 0) == (dm < 0)) {
          left = mid;
          dl = dm;
        } else {
          right = mid;
        }
      }
      consider(0.5 * (left + right));
    }
    prev_x = x;
    prev_d = d;
  }
  return best;
}

Extremum minimize_polynomial(const Polynomial& phi, double lo, double hi, int scan_points) {
  Extremum m = maximize_polynomial(-phi, lo, hi, scan_points);
  return {m.arg, -m.value};
}

// LP weights to an exact strategy: drop below 1e-12, rationalize, renormalize.
DiscreteStrategy strategy_from_weights(Player player, const std::vector<Rational>& locations,
                                       const std::vector<double>& weights) {
  DiscreteStrategy s;
  s.player = player;
  Rational total(0);
  for (std::size_t i = 0; i < locations.size(); ++i) {
    if (weights[i] < 1e-12) continue;
    Rational w = rational_from_double(weights[i]);
    s.atoms.push_back(Atom{locations[i], w});
    total += w;
  }
  if (s.atoms.empty()) throw std::runtime_error("all strategy weights dropped");
  for (Atom& atom : s.atoms) atom.weight /= total;
  s.canonicalize();
  return s;
}

Rational clamp_to_interval(const Rational& t, const Rational& nu) {
  if (t < -nu) return -nu;
  if (t > nu) return nu;
  return t;
}

EquilibriumReport certify(const GameSpec& game, DiscreteStrategy s1, DiscreteStrategy s2,
                          std::string method, std::optional<int> L, int scan_points) {
  BestResponse br = best_response_gap(game, s1, s2, scan_points);
  EquilibriumReport report;
  report.value = br.value;
  report.gap1 = br.gap1;
  report.gap2 = br.gap2;
  report.method = std::move(method);
  report.L = L;
  report.support_sizes = {s1.support_size(), s2.support_size()};
  report.strategy1 = std::move(s1);
  report.strategy2 = std::move(s2);
  return report;
}

// Constant or zero kernel: the value is fixed, every pair is an equilibrium.
std::optional<EquilibriumReport> constant_kernel_shortcut(const ShiftedKernel& kernel,
                                                          const std::string& method,
                                                          std::optional<int> L) {
  if (kernel.M.has_value() && *kernel.M > 0) return std::nullopt;
  EquilibriumReport report;
  report.strategy1 = DiscreteStrategy::single(Player::one, Rational(0));
  report.strategy2 = DiscreteStrategy::single(Player::two, Rational(0));
  report.value = to_double(kernel.P.coeff(0));
  report.gap1 = 0.0;
  report.gap2 = 0.0;
  report.method = method;
  report.L = L;
  report.support_sizes = {1, 1};
  return report;
}

// n = 0: Player 2 owns the single point 0; Player 1 optimizes P directly.
EquilibriumReport degenerate_player2_solve(const GameSpec& game, const ShiftedKernel& kernel,
                                           const std::string& method, std::optional<int> L,
                                           int scan_points) {
  const double nu1 = to_double(game.nu1());
  Extremum best = maximize_polynomial(kernel.P, -nu1, nu1, scan_points);
  Rational loc = clamp_to_interval(rational_from_double(best.arg), game.nu1());
  return certify(game, DiscreteStrategy::single(Player::one, loc),
                 DiscreteStrategy::single(Player::two, Rational(0)), method, L, scan_points);
}

}  // namespace

BestResponse best_response_gap(const GameSpec& game, const DiscreteStrategy& s1,
                               const DiscreteStrategy& s2, int scan_points) {
  game.validate();
  if (scan_points < 2) throw std::invalid_argument("scan_points must be >= 2");
  s1.validate_interval(game.nu1());
  s2.validate_interval(game.nu2());
  Polynomial P = shift_payoff(game).P;

  BestResponse out;
  out.value = to_double(exact_payoff(game, s1, s2));

  // Player 1 deviations: phi(x) = sum_j q_j P(x - y_j)
  Polynomial phi;
  for (const Atom& atom : s2.atoms) phi = phi + atom.weight * compose_affine(P, Rational(1), -atom.location);
  const double nu1 = to_double(game.nu1());
  Extremum mx = maximize_polynomial(phi, -nu1, nu1, scan_points);
  out.best_x = mx.arg;
  out.gap1 = mx.value - out.value;

  // Player 2 deviations: psi(y) = sum_i p_i P(x_i - y), minimized
  Polynomial psi;
  for (const Atom& atom : s1.atoms) psi = psi + atom.weight * compose_affine(P, Rational(-1), atom.location);
  const double nu2 = to_double(game.nu2());
  Extremum mn = minimize_polynomial(psi, -nu2, nu2, scan_points);
  out.best_y = mn.arg;
  out.gap2 = out.value - mn.value;
  return out;
}

EquilibriumReport solve_lp_pipeline(const GameSpec& game, int L, double tol, bool exact_lp) {
  game.validate();
  if (L < 1) throw std::invalid_argument("grid parameter L must be >= 1");
  ShiftedKernel kernel = shift_payoff(game);

  if (auto shortcut = constant_kernel_shortcut(kernel, "lp-grid", L)) return *shortcut;
  if (game.n == 0) return degenerate_player2_solve(game, kernel, "lp-grid", L, 1024);

  DiscreteGameMatrix grid = build_grid_game(game, L);
  DiscreteStrategy s1, s2;
  if (exact_lp) {
    MatrixGameSolutionExact lp = solve_matrix_game_exact(grid);
    auto from_exact = [](Player player, const std::vector<Rational>& locations,
                         const std::vector<Rational>& weights) {
      DiscreteStrategy s;
      s.player = player;
      for (std::size_t i = 0; i < locations.size(); ++i)
        if (weights[i] != 0) s.atoms.push_back(Atom{locations[i], weights[i]});
      s.canonicalize();
      return s;
    };
    s1 = from_exact(Player::one, grid.row_locations, lp.p);
    s2 = from_exact(Player::two, grid.col_locations, lp.q);
  } else {
    MatrixGameSolution lp = solve_matrix_game(grid, tol);
    s1 = strategy_from_weights(Player::one, grid.row_locations, lp.p);
    s2 = strategy_from_weights(Player::two, grid.col_locations, lp.q);
  }

  // P is even and the grids are mirror-symmetric, so the mirrored solution is
  // optimal too; averaging with it stays optimal for the grid game and
  // removes the odd component that a continuous deviation could exploit.
  s1 = symmetrize(s1);
  s2 = symmetrize(s2);

  const int M = *kernel.M;
  OrthoBasis basis1 = gram_schmidt_basis(M, Interval{game.nu1()});
  OrthoBasis basis2 = gram_schmidt_basis(M, Interval{game.nu2()});
  s1 = reduce_support(s1, basis1);
  s2 = reduce_support(s2, basis2);

  return certify(game, std::move(s1), std::move(s2), "lp-grid", L, 1024);
}

EquilibriumReport solve_symmetric_grid(const GameSpec& game, int L, SymmetricGridOptions options) {
  game.validate();
  if (L < 1) throw std::invalid_argument("grid parameter L must be >= 1");
  ShiftedKernel kernel = shift_payoff(game);

  if (auto shortcut = constant_kernel_shortcut(kernel, "symmetric-grid", L)) return *shortcut;
  if (game.n == 0)
    return degenerate_player2_solve(game, kernel, "symmetric-grid", L, options.scan_points);

  const int M = *kernel.M;
  int K = options.K > 0 ? options.K : M / 2 + 2;
  K = std::min({K, L + 1, L});  // at most L atoms can carry weight >= 1/L

  // symmetrized grid atoms: index k <-> location k*nu/L, k = 0..L
  auto locations = [L](const Rational& nu) {
    std::vector<Rational> out;
    for (int k = 0; k <= L; ++k) out.push_back(Rational(k) * nu / Rational(L));
    return out;
  };
  std::vector<Rational> grid1 = locations(game.nu1());
  std::vector<Rational> grid2 = locations(game.nu2());
  const int G = L + 1;

  // payoff between symmetrized atoms: (P(t-u) + P(t+u)) / 2
  std::vector<std::vector<double>> H(G, std::vector<double>(G, 0.0));
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j)
      H[i][j] = to_double((eval_poly(kernel.P, grid1[i] - grid2[j]) +
                           eval_poly(kernel.P, grid1[i] + grid2[j])) /
                          Rational(2));

  // enumeration size: choose k atoms of G, split L weight units into k positive parts
  BigInt candidates = 0;
  for (int k = 1; k <= K; ++k) {
    BigInt ways = 1;
    for (int i = 0; i < k; ++i) ways = ways * BigInt(G - i) / BigInt(i + 1);
    BigInt splits = 1;
    for (int i = 0; i < k - 1; ++i) splits = splits * BigInt(L - 1 - i) / BigInt(i + 1);
    candidates += ways * splits;
  }
  candidates *= 2;  // both passes
  if (candidates > BigInt(options.candidate_cap))
    throw std::runtime_error("symmetric grid enumeration exceeds candidate cap (" +
                             candidates.str() + " mixtures)");

  struct MixtureSearch {
    const std::vector<std::vector<double>>& table;  // own atoms x opponent atoms
    int G, L, K;
    bool maximize_min;  // true for Player 1's pass
    std::vector<double> acc;
    std::vector<std::pair<int, int>> stack;  // (atom index, units)
    std::vector<std::pair<int, int>> best_mixture;
    double best = 0.0;
    bool found = false;

    void leaf() {
      double extreme = acc[0];
      for (int j = 1; j < G; ++j)
        extreme = maximize_min ? std::min(extreme, acc[j]) : std::max(extreme, acc[j]);
      double score = maximize_min ? extreme : -extreme;
      if (!found || score > best) {
        best = score;
        best_mixture = stack;
        found = true;
      }
    }

    void recurse(int index, int units_left, int slots_left) {
      if (units_left == 0) {
        leaf();
        return;
      }
      if (index >= G || slots_left == 0) return;
      recurse(index + 1, units_left, slots_left);
      const std::vector<double> saved = acc;
      const double unit = 1.0 / L;
      for (int u = 1; u <= units_left; ++u) {
        for (int j = 0; j < G; ++j) acc[j] += unit * table[index][j];
        stack.emplace_back(index, u);
        recurse(index + 1, units_left - u, slots_left - 1);
        stack.pop_back();
      }
      acc = saved;
    }
  };

  auto run_pass = [&](const std::vector<std::vector<double>>& table, bool maximize_min) {
    MixtureSearch search{table, G, L, K, maximize_min, std::vector<double>(G, 0.0), {}, {}, 0.0, false};
    search.recurse(0, L, K);
    return search.best_mixture;
  };

  std::vector<std::vector<double>> Ht(G, std::vector<double>(G, 0.0));
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) Ht[j][i] = H[i][j];

  auto expand = [L](Player player, const std::vector<Rational>& grid,
                    const std::vector<std::pair<int, int>>& mixture) {
    DiscreteStrategy s;
    s.player = player;
    for (auto [index, units] : mixture) {
      Rational w = Rational(units) / Rational(L);
      const Rational& t = grid[static_cast<std::size_t>(index)];
      if (t == 0) {
        s.atoms.push_back(Atom{t, w});
      } else {
        s.atoms.push_back(Atom{t, w / 2});
        s.atoms.push_back(Atom{-t, w / 2});
      }
    }
    s.canonicalize();
    return s;
  };

  DiscreteStrategy s1 = expand(Player::one, grid1, run_pass(H, true));
  DiscreteStrategy s2 = expand(Player::two, grid2, run_pass(Ht, false));
  return certify(game, std::move(s1), std::move(s2), "symmetric-grid", L, options.scan_points);
}

McResult mc_check(const GameSpec& game, const DiscreteStrategy& s1, const DiscreteStrategy& s2,
                  long long samples, std::uint64_t seed) {
  game.validate();
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  s1.validate_interval(game.nu1());
  s2.validate_interval(game.nu2());

  Polynomial P = shift_payoff(game).P;
  std::vector<std::vector<double>> table(s1.atoms.size(), std::vector<double>(s2.atoms.size()));
  for (std::size_t i = 0; i < s1.atoms.size(); ++i)
    for (std::size_t j = 0; j < s2.atoms.size(); ++j)
      table[i][j] = to_double(eval_poly(P, s1.atoms[i].location - s2.atoms[j].location));

  auto cumulative = [](const DiscreteStrategy& s) {
    std::vector<double> cum;
    double acc = 0.0;
    for (const Atom& atom : s.atoms) {
      acc += to_double(atom.weight);
      cum.push_back(acc);
    }
    cum.back() = 1.0;
    return cum;
  };
  std::vector<double> cum1 = cumulative(s1), cum2 = cumulative(s2);

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  auto pick = [](const std::vector<double>& cum, double u) {
    return static_cast<std::size_t>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
  };

  // Welford: exact zero variance for constant payoff streams
  double mean = 0.0, m2 = 0.0;
  for (long long k = 1; k <= samples; ++k) {
    double v = table[pick(cum1, uniform())][pick(cum2, uniform())];
    double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }
  McResult out;
  out.estimate = mean;
  out.stderr_of_mean =
      samples > 1 ? std::sqrt(m2 / (static_cast<double>(samples - 1) * static_cast<double>(samples)))
                  : 0.0;
  return out;
}

}  // namespace blotto
