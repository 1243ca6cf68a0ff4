#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "blotto/solver.hpp"

namespace blotto {

struct SolverConfig {
  std::string method = "lp-grid";
  int L = 16;
  double tol = 1e-9;
  bool exact_lp = false;  // rational-arithmetic simplex (debug mode)
  std::optional<int> K;  // symmetric-grid component cap; default floor(M/2)+2
  double gap_threshold = 1e-6;
  std::uint64_t seed = 0;
  long long samples = 100000;
};

struct GameConfig {
  GameSpec game;
  SolverConfig solver;
};

/// Rational from a JSON value: integer (exact), string "p/q" or decimal
/// (exact), or float (the double's exact binary value).
Rational rational_from_json(const nlohmann::json& value);

GameConfig game_config_from_json(const nlohmann::json& doc);
GameConfig load_game_config(const std::string& path);

struct StrategyPair {
  DiscreteStrategy s1;
  DiscreteStrategy s2;
};

/// Strategies file: {"coords": "shifted"|"original", "player1": [{"location","weight"}...],
/// "player2": [...]}. Original-coordinate locations are shifted by the even
/// split before validation. `default_coords` applies when the file carries no
/// flag.
StrategyPair strategies_from_json(const nlohmann::json& doc, const GameSpec& game,
                                  const std::string& default_coords);
StrategyPair load_strategies(const std::string& path, const GameSpec& game,
                             const std::string& default_coords);

nlohmann::json game_config_to_json(const GameConfig& config);

/// Atoms in both coordinate systems, locations and weights as exact "p/q" strings.
nlohmann::json strategy_to_json(const DiscreteStrategy& s, const GameSpec& game);

/// The machine document emitted by `solve` and `verify`: config echo, kernel,
/// normalized reduced matrix (when n > 0), and the equilibrium report.
nlohmann::json result_document(const GameConfig& config, const EquilibriumReport& report);

nlohmann::json basis_document(const Rational& nu, int max_degree);

}  // namespace blotto
