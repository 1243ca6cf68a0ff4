#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "blotto/io.hpp"

namespace py = pybind11;
using namespace blotto;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

Rational rational_from_py(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return rational_from_string(value.cast<std::string>());
  if (py::isinstance<py::int_>(value)) return Rational(BigInt(value.cast<long long>()));
  if (py::isinstance<py::float_>(value)) return rational_from_double(value.cast<double>());
  throw std::invalid_argument("expected str, int, or float for a rational value");
}

GameSpec make_game(const py::object& n, const py::object& a, const py::sequence& r_coeffs) {
  GameSpec game;
  game.n = rational_from_py(n);
  game.a = rational_from_py(a);
  std::vector<Rational> c;
  for (const py::handle& item : r_coeffs) c.push_back(rational_from_py(item));
  game.r = Polynomial(std::move(c));
  game.validate();
  return game;
}

DiscreteStrategy strategy_from_py(const py::sequence& atoms, Player player) {
  DiscreteStrategy s;
  s.player = player;
  for (const py::handle& item : atoms) {
    py::sequence pair = py::reinterpret_borrow<py::sequence>(item);
    if (py::len(pair) != 2) throw std::invalid_argument("atoms are (location, weight) pairs");
    s.atoms.push_back(Atom{rational_from_py(pair[0]), rational_from_py(pair[1])});
  }
  s.canonicalize();
  return s;
}

py::object report_to_py(const GameSpec& game, const EquilibriumReport& report) {
  json doc;
  doc["method"] = report.method;
  doc["L"] = report.L ? json(*report.L) : json(nullptr);
  doc["value"] = report.value;
  doc["gap1"] = report.gap1;
  doc["gap2"] = report.gap2;
  doc["support_sizes"] = json::array({report.support_sizes.first, report.support_sizes.second});
  doc["strategy1"] = strategy_to_json(report.strategy1, game);
  doc["strategy2"] = strategy_to_json(report.strategy2, game);
  return json_to_py(doc);
}

py::object py_kernel(const GameSpec& game) {
  ShiftedKernel kernel = shift_payoff(game);
  json coeffs = json::array();
  for (const Rational& c : kernel.P.coeffs) coeffs.push_back(rational_to_string(c));
  return json_to_py(json{{"coeffs", coeffs}, {"degree", kernel.M ? json(*kernel.M) : json(nullptr)}});
}

py::object py_basis(const py::object& nu, int max_degree) {
  return json_to_py(basis_document(rational_from_py(nu), max_degree));
}

py::object py_solve_lp(const GameSpec& game, int L, double tol, bool exact_lp) {
  return report_to_py(game, solve_lp_pipeline(game, L, tol, exact_lp));
}

py::object py_solve_symmetric(const GameSpec& game, int L, int K) {
  SymmetricGridOptions options;
  options.K = K;
  return report_to_py(game, solve_symmetric_grid(game, L, options));
}

py::object py_verify(const GameSpec& game, const py::sequence& atoms1, const py::sequence& atoms2) {
  DiscreteStrategy s1 = strategy_from_py(atoms1, Player::one);
  DiscreteStrategy s2 = strategy_from_py(atoms2, Player::two);
  BestResponse br = best_response_gap(game, s1, s2);
  return json_to_py(json{{"value", br.value},
                         {"gap1", br.gap1},
                         {"gap2", br.gap2},
                         {"best_x", br.best_x},
                         {"best_y", br.best_y}});
}

std::string py_exact_payoff(const GameSpec& game, const py::sequence& atoms1,
                            const py::sequence& atoms2) {
  return rational_to_string(exact_payoff(game, strategy_from_py(atoms1, Player::one),
                                         strategy_from_py(atoms2, Player::two)));
}

py::object py_reduce(const GameSpec& game, int player, const py::sequence& atoms) {
  Player who = player == 1 ? Player::one : Player::two;
  DiscreteStrategy s = strategy_from_py(atoms, who);
  const Rational nu = interval_halfwidth(game, who);
  s.validate_interval(nu);
  ShiftedKernel kernel = shift_payoff(game);
  if (nu > 0 && kernel.M)
    s = reduce_support(s, gram_schmidt_basis(*kernel.M, Interval{nu}));
  py::list out;
  for (const Atom& atom : s.atoms)
    out.append(py::make_tuple(rational_to_string(atom.location), rational_to_string(atom.weight)));
  return out;
}

py::tuple py_mc_check(const GameSpec& game, const py::sequence& atoms1, const py::sequence& atoms2,
                      long long samples, std::uint64_t seed) {
  McResult mc = mc_check(game, strategy_from_py(atoms1, Player::one),
                         strategy_from_py(atoms2, Player::two), samples, seed);
  return py::make_tuple(mc.estimate, mc.stderr_of_mean);
}

}  // namespace

PYBIND11_MODULE(blotto, m) {
  m.doc() = "Equilibria of two-battlefield continuous Blotto games with polynomial outcomes";

  py::class_<GameSpec>(m, "GameSpec")
      .def(py::init(&make_game), py::arg("n"), py::arg("a"), py::arg("r_coeffs"),
           "Game (n, a, r): Player 2 resources, Player 1 advantage, outcome coefficients "
           "in ascending degree. Values are exact-rational strings, ints, or floats.")
      .def_property_readonly("nu1", [](const GameSpec& g) { return rational_to_string(g.nu1()); })
      .def_property_readonly("nu2", [](const GameSpec& g) { return rational_to_string(g.nu2()); });

  m.def("kernel", &py_kernel, py::arg("game"),
        "Shifted even kernel P with P(x - y) the total payoff; coefficients as exact strings.");
  m.def("basis", &py_basis, py::arg("nu"), py::arg("max_degree"),
        "Orthonormal polynomial family on [-nu, nu]: monic exact coefficients, squared norms, "
        "normalized float coefficients.");
  m.def("solve_lp", &py_solve_lp, py::arg("game"), py::arg("L") = 16, py::arg("tol") = 1e-9,
        py::arg("exact_lp") = false,
        "Grid LP equilibrium with Caratheodory support reduction and exact certification.");
  m.def("solve_symmetric", &py_solve_symmetric, py::arg("game"), py::arg("L") = 16,
        py::arg("K") = 0, "Symmetrized grid brute-force equilibrium (K = 0 uses the default cap).");
  m.def("verify", &py_verify, py::arg("game"), py::arg("strategy1"), py::arg("strategy2"),
        "Value and best-response gaps for a strategy pair given as (location, weight) lists.");
  m.def("exact_payoff", &py_exact_payoff, py::arg("game"), py::arg("strategy1"),
        py::arg("strategy2"), "Exact expected payoff as a rational string.");
  m.def("reduce", &py_reduce, py::arg("game"), py::arg("player"), py::arg("atoms"),
        "Payoff-equivalent strategy on at most M+2 atoms.");
  m.def("mc_check", &py_mc_check, py::arg("game"), py::arg("strategy1"), py::arg("strategy2"),
        py::arg("samples") = 100000, py::arg("seed") = 0,
        "(estimate, stderr) Monte Carlo cross-check of the expected payoff.");
}
