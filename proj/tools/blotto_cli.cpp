#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blotto/io.hpp"

using nlohmann::json;
using namespace blotto;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitCertificationFailure = 3;

struct CommonFlags {
  std::string config_path;
  std::string strategies_path;
  std::string method;
  int L = -1;
  int K = -1;
  double tol = -1;
  double gap_threshold = -1;
  std::int64_t seed = -1;
  std::int64_t samples = -1;
  bool exact_lp = false;
  std::string coords = "shifted";
};

void apply_overrides(GameConfig& config, const CommonFlags& flags) {
  if (!flags.method.empty()) config.solver.method = flags.method;
  if (flags.L >= 0) config.solver.L = flags.L;
  if (flags.K >= 0) config.solver.K = flags.K;
  if (flags.tol >= 0) config.solver.tol = flags.tol;
  if (flags.gap_threshold >= 0) config.solver.gap_threshold = flags.gap_threshold;
  if (flags.seed >= 0) config.solver.seed = static_cast<std::uint64_t>(flags.seed);
  if (flags.samples >= 0) config.solver.samples = flags.samples;
  if (flags.exact_lp) config.solver.exact_lp = true;
  if (config.solver.method != "lp-grid" && config.solver.method != "symmetric-grid")
    throw std::invalid_argument("unknown method: " + config.solver.method);
  if (config.solver.L < 1) throw std::invalid_argument("L must be >= 1");
}

EquilibriumReport run_configured_solver(const GameConfig& config) {
  if (config.solver.method == "symmetric-grid") {
    SymmetricGridOptions options;
    if (config.solver.K) options.K = *config.solver.K;
    return solve_symmetric_grid(config.game, config.solver.L, options);
  }
  return solve_lp_pipeline(config.game, config.solver.L, config.solver.tol,
                           config.solver.exact_lp);
}

int cmd_solve(const CommonFlags& flags) {
  GameConfig config = load_game_config(flags.config_path);
  apply_overrides(config, flags);
  EquilibriumReport report = run_configured_solver(config);
  json doc = result_document(config, report);

  // independent sampling cross-check of the reported value
  McResult mc = mc_check(config.game, report.strategy1, report.strategy2, config.solver.samples,
                         config.solver.seed);
  doc["mc_check"] = json{{"estimate", mc.estimate},
                         {"stderr", mc.stderr_of_mean},
                         {"samples", config.solver.samples},
                         {"seed", config.solver.seed}};
  std::cout << doc.dump(2) << "\n";
  bool pass = report.gap1 <= config.solver.gap_threshold &&
              report.gap2 <= config.solver.gap_threshold;
  std::cerr << "method=" << report.method << " value=" << report.value << " gap1=" << report.gap1
            << " gap2=" << report.gap2 << " supports=" << report.support_sizes.first << ","
            << report.support_sizes.second << (pass ? " (certified)" : " (gaps above threshold)")
            << "\n";
  return pass ? kExitOk : kExitCertificationFailure;
}

int cmd_verify(const CommonFlags& flags) {
  GameConfig config = load_game_config(flags.config_path);
  apply_overrides(config, flags);
  StrategyPair pair = load_strategies(flags.strategies_path, config.game, flags.coords);
  BestResponse br = best_response_gap(config.game, pair.s1, pair.s2);

  EquilibriumReport report;
  report.strategy1 = pair.s1;
  report.strategy2 = pair.s2;
  report.value = br.value;
  report.gap1 = br.gap1;
  report.gap2 = br.gap2;
  report.method = "user-supplied";
  report.support_sizes = {pair.s1.support_size(), pair.s2.support_size()};

  bool pass = br.gap1 <= config.solver.gap_threshold && br.gap2 <= config.solver.gap_threshold;
  json doc = result_document(config, report);
  doc["report"]["pass"] = pass;
  doc["report"]["gap_threshold"] = config.solver.gap_threshold;
  std::cout << doc.dump(2) << "\n";
  std::cerr << "value=" << br.value << " gap1=" << br.gap1 << " gap2=" << br.gap2 << " "
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitCertificationFailure;
}

int cmd_reduce(const CommonFlags& flags) {
  GameConfig config = load_game_config(flags.config_path);
  apply_overrides(config, flags);
  StrategyPair pair = load_strategies(flags.strategies_path, config.game, flags.coords);

  ShiftedKernel kernel = shift_payoff(config.game);
  const int M = kernel.M.value_or(0);

  auto reduce_one = [&](const DiscreteStrategy& s) {
    const Rational nu = interval_halfwidth(config.game, s.player);
    if (nu == 0) return s;
    return reduce_support(s, gram_schmidt_basis(M, Interval{nu}));
  };
  DiscreteStrategy r1 = reduce_one(pair.s1);
  DiscreteStrategy r2 = reduce_one(pair.s2);

  // payoff deviation against seeded random opponents
  std::mt19937_64 rng(config.solver.seed);
  auto random_opponent = [&](Player player) {
    const Rational nu = interval_halfwidth(config.game, player);
    DiscreteStrategy s;
    s.player = player;
    std::uniform_int_distribution<int> atom_count(1, 6), numer(-16, 16), wdist(1, 9);
    int k = atom_count(rng);
    Rational total(0);
    for (int i = 0; i < k; ++i) {
      Rational t = Rational(numer(rng), 16) * nu;
      Rational w(wdist(rng));
      s.atoms.push_back(Atom{t, w});
      total += w;
    }
    for (Atom& atom : s.atoms) atom.weight /= total;
    s.canonicalize();
    return s;
  };

  double max_deviation = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    DiscreteStrategy opp2 = random_opponent(Player::two);
    DiscreteStrategy opp1 = random_opponent(Player::one);
    Rational d1 = exact_payoff(config.game, pair.s1, opp2) - exact_payoff(config.game, r1, opp2);
    Rational d2 = exact_payoff(config.game, opp1, pair.s2) - exact_payoff(config.game, opp1, r2);
    max_deviation = std::max({max_deviation, std::fabs(to_double(d1)), std::fabs(to_double(d2))});
  }

  json doc;
  doc["config"] = game_config_to_json(config);
  doc["support_before"] = json::array({pair.s1.support_size(), pair.s2.support_size()});
  doc["support_after"] = json::array({r1.support_size(), r2.support_size()});
  doc["max_payoff_deviation"] = max_deviation;
  doc["strategy1"] = strategy_to_json(r1, config.game);
  doc["strategy2"] = strategy_to_json(r2, config.game);
  std::cout << doc.dump(2) << "\n";
  std::cerr << "supports " << pair.s1.support_size() << "," << pair.s2.support_size() << " -> "
            << r1.support_size() << "," << r2.support_size()
            << " max deviation=" << max_deviation << "\n";
  return kExitOk;
}

int cmd_basis(const std::string& nu_text, int max_degree) {
  Rational nu = rational_from_string(nu_text);
  json doc = basis_document(nu, max_degree);
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous two-battlefield Blotto equilibrium toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string basis_nu;
  int basis_degree = 4;

  CLI::App* basis = app.add_subcommand("basis", "print the orthonormal basis for an interval");
  basis->add_option("--nu", basis_nu, "interval half-width (rational)")->required();
  basis->add_option("--max-degree", basis_degree, "highest basis degree");

  auto add_common = [&flags](CLI::App* cmd, bool needs_strategies) {
    cmd->add_option("--config", flags.config_path, "game config JSON")->required();
    if (needs_strategies)
      cmd->add_option("--strategies", flags.strategies_path, "strategies JSON")->required();
    cmd->add_option("--method", flags.method, "lp-grid or symmetric-grid");
    cmd->add_option("--L", flags.L, "grid resolution");
    cmd->add_option("--K", flags.K, "symmetric-grid component cap");
    cmd->add_option("--tol", flags.tol, "LP tolerance");
    cmd->add_option("--gap-threshold", flags.gap_threshold, "certification threshold");
    cmd->add_option("--seed", flags.seed, "RNG seed");
    cmd->add_option("--samples", flags.samples, "Monte Carlo samples");
    cmd->add_flag("--exact-lp", flags.exact_lp, "solve the grid LP in exact rational arithmetic");
    cmd->add_option("--coords", flags.coords, "strategy file coordinates: shifted|original")
        ->check(CLI::IsMember({"shifted", "original"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "compute and certify an equilibrium");
  add_common(solve, false);
  CLI::App* verify = app.add_subcommand("verify", "certify a user-supplied strategy pair");
  add_common(verify, true);
  CLI::App* reduce = app.add_subcommand("reduce", "Caratheodory support reduction");
  add_common(reduce, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (basis->parsed()) return cmd_basis(basis_nu, basis_degree);
    if (solve->parsed()) return cmd_solve(flags);
    if (verify->parsed()) return cmd_verify(flags);
    if (reduce->parsed()) return cmd_reduce(flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificationFailure;
  }
  return kExitInputError;
}
