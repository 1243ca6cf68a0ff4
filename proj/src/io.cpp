#include "blotto/io.hpp"

#include <fstream>
#include <stdexcept>

namespace blotto {

using nlohmann::json;

Rational rational_from_json(const json& value) {
  if (value.is_string()) return rational_from_string(value.get<std::string>());
  if (value.is_number_integer()) return Rational(BigInt(value.get<std::int64_t>()));
  if (value.is_number_unsigned()) return Rational(BigInt(value.get<std::uint64_t>()));
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  throw std::invalid_argument("expected a rational (string or number), got " + value.dump());
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return doc;
}

}  // namespace

GameConfig game_config_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  GameConfig config;
  if (!doc.contains("n") || !doc.contains("a") || !doc.contains("r_coeffs"))
    throw std::invalid_argument("config needs fields n, a, r_coeffs");
  config.game.n = rational_from_json(doc.at("n"));
  config.game.a = rational_from_json(doc.at("a"));
  const json& coeffs = doc.at("r_coeffs");
  if (!coeffs.is_array() || coeffs.empty())
    throw std::invalid_argument("r_coeffs must be a non-empty array");
  std::vector<Rational> c;
  for (const json& v : coeffs) c.push_back(rational_from_json(v));
  config.game.r = Polynomial(std::move(c));
  config.game.validate();

  if (doc.contains("solver")) {
    const json& s = doc.at("solver");
    if (!s.is_object()) throw std::invalid_argument("solver block must be an object");
    if (s.contains("method")) config.solver.method = s.at("method").get<std::string>();
    if (s.contains("L")) config.solver.L = s.at("L").get<int>();
    if (s.contains("tol")) config.solver.tol = s.at("tol").get<double>();
    if (s.contains("exact_lp")) config.solver.exact_lp = s.at("exact_lp").get<bool>();
    if (s.contains("K")) config.solver.K = s.at("K").get<int>();
    if (s.contains("gap_threshold")) config.solver.gap_threshold = s.at("gap_threshold").get<double>();
    if (s.contains("seed")) config.solver.seed = s.at("seed").get<std::uint64_t>();
    if (s.contains("samples")) config.solver.samples = s.at("samples").get<long long>();
    if (config.solver.method != "lp-grid" && config.solver.method != "symmetric-grid")
      throw std::invalid_argument("unknown method: " + config.solver.method);
    if (config.solver.L < 1) throw std::invalid_argument("L must be >= 1");
    if (config.solver.tol <= 0) throw std::invalid_argument("tol must be positive");
  }
  return config;
}

GameConfig load_game_config(const std::string& path) {
  return game_config_from_json(read_json_file(path));
}

namespace {

DiscreteStrategy parse_strategy(const json& atoms, Player player, const GameSpec& game,
                                const std::string& coords) {
  if (!atoms.is_array() || atoms.empty())
    throw std::invalid_argument("strategy atom list must be a non-empty array");
  const Rational shift =
      coords == "original" ? interval_halfwidth(game, player) : Rational(0);
  DiscreteStrategy s;
  s.player = player;
  for (const json& entry : atoms) {
    if (!entry.is_object() || !entry.contains("location") || !entry.contains("weight"))
      throw std::invalid_argument("each atom needs location and weight");
    s.atoms.push_back(
        Atom{rational_from_json(entry.at("location")) - shift, rational_from_json(entry.at("weight"))});
  }
  s.canonicalize();
  s.validate_interval(interval_halfwidth(game, player));
  return s;
}

}  // namespace

StrategyPair strategies_from_json(const json& doc, const GameSpec& game,
                                  const std::string& default_coords) {
  if (!doc.is_object()) throw std::invalid_argument("strategies file must be a JSON object");
  std::string coords = default_coords;
  if (doc.contains("coords")) coords = doc.at("coords").get<std::string>();
  if (coords != "shifted" && coords != "original")
    throw std::invalid_argument("coords must be 'shifted' or 'original'");
  if (!doc.contains("player1") || !doc.contains("player2"))
    throw std::invalid_argument("strategies file needs player1 and player2");
  StrategyPair pair;
  pair.s1 = parse_strategy(doc.at("player1"), Player::one, game, coords);
  pair.s2 = parse_strategy(doc.at("player2"), Player::two, game, coords);
  return pair;
}

StrategyPair load_strategies(const std::string& path, const GameSpec& game,
                             const std::string& default_coords) {
  return strategies_from_json(read_json_file(path), game, default_coords);
}

json game_config_to_json(const GameConfig& config) {
  json r = json::array();
  if (config.game.r.is_zero()) r.push_back("0");
  for (const Rational& c : config.game.r.coeffs) r.push_back(rational_to_string(c));
  json solver{{"method", config.solver.method},
              {"L", config.solver.L},
              {"tol", config.solver.tol},
              {"exact_lp", config.solver.exact_lp},
              {"gap_threshold", config.solver.gap_threshold},
              {"seed", config.solver.seed},
              {"samples", config.solver.samples}};
  if (config.solver.K) solver["K"] = *config.solver.K;
  return json{{"n", rational_to_string(config.game.n)},
              {"a", rational_to_string(config.game.a)},
              {"r_coeffs", r},
              {"solver", solver}};
}

json strategy_to_json(const DiscreteStrategy& s, const GameSpec& game) {
  const Rational shift = interval_halfwidth(game, s.player);
  json shifted = json::array(), original = json::array();
  for (const Atom& atom : s.atoms) {
    shifted.push_back(json{{"location", rational_to_string(atom.location)},
                           {"weight", rational_to_string(atom.weight)}});
    original.push_back(json{{"location", rational_to_string(atom.location + shift)},
                            {"weight", rational_to_string(atom.weight)}});
  }
  return json{{"shifted", shifted}, {"original", original}};
}

json result_document(const GameConfig& config, const EquilibriumReport& report) {
  ShiftedKernel kernel = shift_payoff(config.game);
  json kernel_coeffs = json::array();
  for (const Rational& c : kernel.P.coeffs) kernel_coeffs.push_back(rational_to_string(c));

  json doc;
  doc["config"] = game_config_to_json(config);
  doc["kernel"] = json{{"coeffs", kernel_coeffs},
                       {"degree", kernel.M ? json(*kernel.M) : json(nullptr)}};

  if (config.game.n > 0 && kernel.M && *kernel.M >= 0) {
    ReducedMatrix rm = reduced_matrix(config.game, *kernel.M);
    json matrix = json::array();
    for (const auto& row : rm.normalized_view()) matrix.push_back(row);
    doc["reduced_matrix"] = matrix;
  } else {
    doc["reduced_matrix"] = nullptr;
  }

  json rep;
  rep["method"] = report.method;
  rep["L"] = report.L ? json(*report.L) : json(nullptr);
  rep["value"] = report.value;
  rep["gap1"] = report.gap1;
  rep["gap2"] = report.gap2;
  rep["support_sizes"] = json::array({report.support_sizes.first, report.support_sizes.second});
  rep["strategy1"] = strategy_to_json(report.strategy1, config.game);
  rep["strategy2"] = strategy_to_json(report.strategy2, config.game);
  doc["report"] = rep;
  return doc;
}

json basis_document(const Rational& nu, int max_degree) {
  OrthoBasis basis = gram_schmidt_basis(max_degree, Interval{nu});
  json monic = json::array(), norms = json::array(), normalized = json::array();
  for (int i = 0; i <= max_degree; ++i) {
    json row = json::array();
    for (int k = 0; k <= i; ++k)
      row.push_back(rational_to_string(basis.monic[static_cast<std::size_t>(i)].coeff(
          static_cast<std::size_t>(k))));
    monic.push_back(row);
    norms.push_back(rational_to_string(basis.sq_norms[static_cast<std::size_t>(i)]));
    normalized.push_back(basis.normalized_coeffs(i));
  }
  return json{{"nu", rational_to_string(nu)},
              {"max_degree", max_degree},
              {"monic", monic},
              {"sq_norms", norms},
              {"normalized", normalized}};
}

}  // namespace blotto
