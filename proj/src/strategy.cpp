#include "blotto/strategy.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

namespace blotto {

DiscreteStrategy DiscreteStrategy::single(Player p, const Rational& location) {
  DiscreteStrategy s;
  s.player = p;
  s.atoms.push_back(Atom{location, Rational(1)});
  return s;
}

void DiscreteStrategy::canonicalize() {
  if (atoms.empty()) throw std::invalid_argument("strategy has no atoms");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  std::vector<Atom> merged;
  Rational total(0);
  for (const Atom& atom : atoms) {
    if (atom.weight < 0) throw std::invalid_argument("negative atom weight");
    total += atom.weight;
    if (atom.weight == 0) continue;
    if (!merged.empty() && merged.back().location == atom.location)
      merged.back().weight += atom.weight;
    else
      merged.push_back(atom);
  }
  if (total != 1) throw std::invalid_argument("atom weights must sum to 1");
  atoms = std::move(merged);
}

void DiscreteStrategy::validate_interval(const Rational& nu) const {
  for (const Atom& atom : atoms)
    if (atom.location < -nu || atom.location > nu)
      throw std::invalid_argument("atom location outside [-nu, nu]");
}

Rational interval_halfwidth(const GameSpec& game, Player player) {
  return player == Player::one ? game.nu1() : game.nu2();
}

std::vector<Rational> embed_pure_monic(const Rational& t, const OrthoBasis& basis) {
  if (t < -basis.interval.nu || t > basis.interval.nu)
    throw std::invalid_argument("pure strategy outside the interval");
  std::vector<Rational> out;
  out.reserve(basis.monic.size());
  for (const Polynomial& m : basis.monic) out.push_back(eval_poly(m, t));
  return out;
}

CoordVector embed_pure(const Rational& t, const OrthoBasis& basis) {
  std::vector<Rational> monic = embed_pure_monic(t, basis);
  CoordVector v;
  v.values.resize(monic.size());
  for (std::size_t i = 0; i < monic.size(); ++i)
    v.values[i] = to_double(monic[i]) / std::sqrt(to_double(basis.sq_norms[i]));
  return v;
}

std::vector<Rational> embed_strategy_monic(const DiscreteStrategy& s, const OrthoBasis& basis) {
  std::vector<Rational> acc(basis.monic.size(), Rational(0));
  for (const Atom& atom : s.atoms) {
    std::vector<Rational> v = embed_pure_monic(atom.location, basis);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += atom.weight * v[i];
  }
  return acc;
}

CoordVector embed_strategy(const DiscreteStrategy& s, const OrthoBasis& basis) {
  std::vector<Rational> monic = embed_strategy_monic(s, basis);
  CoordVector v;
  v.values.resize(monic.size());
  for (std::size_t i = 0; i < monic.size(); ++i)
    v.values[i] = to_double(monic[i]) / std::sqrt(to_double(basis.sq_norms[i]));
  return v;
}

DiscreteStrategy symmetrize(const DiscreteStrategy& s) {
  DiscreteStrategy out;
  out.player = s.player;
  for (const Atom& atom : s.atoms) {
    Rational half = atom.weight / 2;
    out.atoms.push_back(Atom{atom.location, half});
    out.atoms.push_back(Atom{-atom.location, half});
  }
  out.canonicalize();
  return out;
}

bool is_symmetric(const DiscreteStrategy& s) {
  for (const Atom& atom : s.atoms) {
    bool found = false;
    for (const Atom& other : s.atoms)
      if (other.location == -atom.location && other.weight == atom.weight) found = true;
    if (!found) return false;
  }
  return true;
}

DiscreteStrategy reduce_support(const DiscreteStrategy& s, const OrthoBasis& basis) {
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> weights;
  points.reserve(s.atoms.size());
  for (const Atom& atom : s.atoms) {
    points.push_back(embed_pure_monic(atom.location, basis));
    weights.push_back(atom.weight);
  }
  auto reduced = caratheodory_reduce(points, weights);
  DiscreteStrategy out;
  out.player = s.player;
  for (std::size_t k = 0; k < reduced.indices.size(); ++k)
    out.atoms.push_back(Atom{s.atoms[reduced.indices[k]].location, reduced.weights[k]});
  out.canonicalize();
  return out;
}

DiscreteStrategy reduce_support_symmetric(const DiscreteStrategy& s, const OrthoBasis& basis) {
  if (!is_symmetric(s)) throw std::invalid_argument("strategy is not symmetric");

  // one representative per mirror pair, at t >= 0, carrying the pair's weight
  std::vector<Rational> reps;
  std::vector<Rational> weights;
  for (const Atom& atom : s.atoms) {
    if (atom.location < 0) continue;
    reps.push_back(atom.location);
    weights.push_back(atom.location == 0 ? atom.weight : 2 * atom.weight);
  }

  // even-index monic polynomials only; odd components vanish on pairs anyway
  std::vector<std::vector<Rational>> points;
  points.reserve(reps.size());
  for (const Rational& t : reps) {
    std::vector<Rational> coords;
    for (int i = 0; i <= basis.max_degree(); i += 2)
      coords.push_back(eval_poly(basis.monic[static_cast<std::size_t>(i)], t));
    points.push_back(std::move(coords));
  }

  auto reduced = caratheodory_reduce(points, weights);
  DiscreteStrategy out;
  out.player = s.player;
  for (std::size_t k = 0; k < reduced.indices.size(); ++k) {
    const Rational& t = reps[reduced.indices[k]];
    if (t == 0) {
      out.atoms.push_back(Atom{t, reduced.weights[k]});
    } else {
      Rational half = reduced.weights[k] / 2;
      out.atoms.push_back(Atom{t, half});
      out.atoms.push_back(Atom{-t, half});
    }
  }
  out.canonicalize();
  return out;
}

Rational exact_payoff(const GameSpec& game, const DiscreteStrategy& s1, const DiscreteStrategy& s2) {
  if (s1.player != Player::one || s2.player != Player::two)
    throw std::invalid_argument("exact_payoff expects a (Player 1, Player 2) pair");
  s1.validate_interval(game.nu1());
  s2.validate_interval(game.nu2());
  Polynomial P = shift_payoff(game).P;
  Rational acc(0);
  for (const Atom& ax : s1.atoms)
    for (const Atom& ay : s2.atoms) acc += ax.weight * ay.weight * eval_poly(P, ax.location - ay.location);
  return acc;
}

}  // namespace blotto
