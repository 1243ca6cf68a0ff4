#pragma once

#include <vector>

#include "blotto/caratheodory.hpp"
#include "blotto/game.hpp"
#include "blotto/ortho_basis.hpp"

namespace blotto {

enum class Player { one = 1, two = 2 };

struct Atom {
  Rational location;  // shifted coordinates
  Rational weight;
};

/// Finitely supported mixed strategy. Canonical form: atoms sorted by
/// location, locations distinct, weights positive and summing to 1 exactly.
struct DiscreteStrategy {
  Player player = Player::one;
  std::vector<Atom> atoms;

  static DiscreteStrategy single(Player p, const Rational& location);

  /// Sorts, merges equal locations, drops zero weights; throws on negative
  /// weights or weight sum != 1.
  void canonicalize();

  /// Throws if any location is outside [-nu, nu].
  void validate_interval(const Rational& nu) const;

  int support_size() const { return static_cast<int>(atoms.size()); }
};

Rational interval_halfwidth(const GameSpec& game, Player player);

/// Strategy image in the orthonormal basis: component i is the dot product
/// with the i-th normalized basis polynomial.
struct CoordVector {
  std::vector<double> values;
};

/// Dirac atom at t: component i = normalized basis polynomial i at t.
CoordVector embed_pure(const Rational& t, const OrthoBasis& basis);
/// Same image in the monic (unnormalized) basis, exact.
std::vector<Rational> embed_pure_monic(const Rational& t, const OrthoBasis& basis);

CoordVector embed_strategy(const DiscreteStrategy& s, const OrthoBasis& basis);
std::vector<Rational> embed_strategy_monic(const DiscreteStrategy& s, const OrthoBasis& basis);

/// Even part: each atom (t, w) becomes (t, w/2) and (-t, w/2).
DiscreteStrategy symmetrize(const DiscreteStrategy& s);

bool is_symmetric(const DiscreteStrategy& s);

/// Payoff-equivalent strategy on at most basis.max_degree()+2 of s's atoms:
/// atoms are embedded in the exact monic coordinates and the convex
/// combination is reduced by caratheodory_reduce.
DiscreteStrategy reduce_support(const DiscreteStrategy& s, const OrthoBasis& basis);

/// Variant for symmetric strategies: mirror pairs are reduced as single
/// points in the even-index coordinate subspace, giving at most
/// floor(max_degree/2)+2 pairs. Throws if s is not symmetric.
DiscreteStrategy reduce_support_symmetric(const DiscreteStrategy& s, const OrthoBasis& basis);

/// Exact expected payoff sum_ij p_i q_j P(x_i - y_j).
Rational exact_payoff(const GameSpec& game, const DiscreteStrategy& s1, const DiscreteStrategy& s2);

}  // namespace blotto
