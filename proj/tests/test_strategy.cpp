#include <doctest.h>

#include <cmath>
#include <random>

#include "blotto/strategy.hpp"

using namespace blotto;

namespace {

std::mt19937 rng(99);

Rational random_rational(int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  return Rational(num(rng), den(rng));
}

GameSpec cubic_game() {
  return GameSpec{Rational(2), Rational(1),
                  Polynomial({Rational(0), Rational(0), Rational(0), Rational(-1)})};
}

DiscreteStrategy random_strategy(Player player, const Rational& nu, int max_atoms) {
  std::uniform_int_distribution<int> atom_count(1, max_atoms);
  DiscreteStrategy s;
  s.player = player;
  int k = atom_count(rng);
  Rational total(0);
  for (int i = 0; i < k; ++i) {
    Rational t = random_rational(-8, 8, 2) / 8 * nu;
    if (t < -nu) t = -nu;
    if (t > nu) t = nu;
    Rational w = random_rational(1, 6, 1);
    s.atoms.push_back(Atom{t, w});
    total += w;
  }
  for (Atom& atom : s.atoms) atom.weight /= total;
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("canonicalization merges duplicates and rejects bad weights") {
  DiscreteStrategy s;
  s.player = Player::one;
  s.atoms = {Atom{Rational(1), Rational(1, 4)}, Atom{Rational(1), Rational(1, 4)},
             Atom{Rational(0), Rational(1, 2)}, Atom{Rational(2), Rational(0)}};
  s.canonicalize();
  REQUIRE(s.atoms.size() == 2);
  CHECK(s.atoms[0].location == Rational(0));
  CHECK(s.atoms[1].weight == Rational(1, 2));

  DiscreteStrategy bad;
  bad.player = Player::one;
  bad.atoms = {Atom{Rational(0), Rational(1, 2)}};
  CHECK_THROWS_AS(bad.canonicalize(), std::invalid_argument);
  bad.atoms = {Atom{Rational(0), Rational(3, 2)}, Atom{Rational(1), Rational(-1, 2)}};
  CHECK_THROWS_AS(bad.canonicalize(), std::invalid_argument);
}

TEST_CASE("pure embedding matches the closed-form coordinate vector") {
  const Rational nu_exact(3, 2);
  OrthoBasis basis = gram_schmidt_basis(2, Interval{nu_exact});
  const double nu = to_double(nu_exact);

  for (Rational t_exact : {Rational(1, 2), Rational(0), Rational(-5, 4)}) {
    CoordVector v = embed_pure(t_exact, basis);
    const double t = to_double(t_exact);
    REQUIRE(v.values.size() == 3);
    CHECK(std::fabs(v.values[0] - std::sqrt(0.5) * std::pow(nu, -0.5)) < 1e-12);
    CHECK(std::fabs(v.values[1] - std::sqrt(1.5) * std::pow(nu, -1.5) * t) < 1e-12);
    CHECK(std::fabs(v.values[2] - (std::sqrt(45.0 / 8.0) * std::pow(nu, -2.5) * t * t -
                                   std::sqrt(5.0 / 8.0) * std::pow(nu, -0.5))) < 1e-12);
  }

  // mirror atoms agree on even components and flip odd ones
  CoordVector plus = embed_pure(nu_exact, basis), minus = embed_pure(-nu_exact, basis);
  CHECK(plus.values[0] == minus.values[0]);
  CHECK(plus.values[2] == minus.values[2]);
  CHECK(plus.values[1] == -minus.values[1]);

  CHECK_THROWS_AS(embed_pure(Rational(2), basis), std::invalid_argument);
}

TEST_CASE("strategy embedding") {
  GameSpec game = cubic_game();
  OrthoBasis basis2 = gram_schmidt_basis(2, Interval{game.nu2()});

  DiscreteStrategy single = DiscreteStrategy::single(Player::two, Rational(1, 3));
  CoordVector lhs = embed_strategy(single, basis2);
  CoordVector rhs = embed_pure(Rational(1, 3), basis2);
  for (std::size_t i = 0; i < lhs.values.size(); ++i) CHECK(lhs.values[i] == rhs.values[i]);

  // equal +-c mixture: odd components cancel exactly in the monic coordinates
  DiscreteStrategy mix;
  mix.player = Player::two;
  mix.atoms = {Atom{Rational(-1, 2), Rational(1, 2)}, Atom{Rational(1, 2), Rational(1, 2)}};
  mix.canonicalize();
  CHECK(embed_strategy_monic(mix, basis2)[1] == Rational(0));

  // worked example: Player 2's all-in mixture, component 2
  DiscreteStrategy allin;
  allin.player = Player::two;
  allin.atoms = {Atom{Rational(-1), Rational(1, 2)}, Atom{Rational(1), Rational(1, 2)}};
  allin.canonicalize();
  const double nu2 = to_double(game.nu2());
  double expected = std::sqrt(45.0 / 8.0) * std::pow(nu2, -0.5) -
                    std::sqrt(5.0 / 8.0) * std::pow(nu2, -0.5);
  CHECK(std::fabs(embed_strategy(allin, basis2).values[2] - expected) < 1e-12);
}

TEST_CASE("symmetrize") {
  DiscreteStrategy s = DiscreteStrategy::single(Player::one, Rational(3, 4));
  DiscreteStrategy sym = symmetrize(s);
  REQUIRE(sym.atoms.size() == 2);
  CHECK(sym.atoms[0].location == Rational(-3, 4));
  CHECK(sym.atoms[0].weight == Rational(1, 2));
  CHECK(sym.atoms[1].location == Rational(3, 4));

  DiscreteStrategy origin = DiscreteStrategy::single(Player::one, Rational(0));
  DiscreteStrategy sym0 = symmetrize(origin);
  REQUIRE(sym0.atoms.size() == 1);
  CHECK(sym0.atoms[0].weight == Rational(1));

  DiscreteStrategy twice = symmetrize(sym);
  REQUIRE(twice.atoms.size() == sym.atoms.size());
  for (std::size_t i = 0; i < sym.atoms.size(); ++i) {
    CHECK(twice.atoms[i].location == sym.atoms[i].location);
    CHECK(twice.atoms[i].weight == sym.atoms[i].weight);
  }
  CHECK(is_symmetric(sym));
}

TEST_CASE("symmetrization kills odd coordinates and preserves symmetric payoffs") {
  GameSpec game = cubic_game();
  OrthoBasis basis1 = gram_schmidt_basis(4, Interval{game.nu1()});
  for (int trial = 0; trial < 40; ++trial) {
    DiscreteStrategy s1 = random_strategy(Player::one, game.nu1(), 5);
    DiscreteStrategy s2 = random_strategy(Player::two, game.nu2(), 5);

    std::vector<Rational> coords = embed_strategy_monic(symmetrize(s1), basis1);
    for (std::size_t i = 1; i < coords.size(); i += 2) CHECK(coords[i] == Rational(0));
    CoordVector normalized = embed_strategy(symmetrize(s1), basis1);
    for (std::size_t i = 1; i < normalized.values.size(); i += 2)
      CHECK(std::fabs(normalized.values[i]) <= 1e-12);

    Rational both = exact_payoff(game, symmetrize(s1), symmetrize(s2));
    CHECK(both == exact_payoff(game, s1, symmetrize(s2)));
    CHECK(both == exact_payoff(game, symmetrize(s1), s2));
  }
}

TEST_CASE("component 0 is constant and embedding is linear") {
  GameSpec game = cubic_game();
  OrthoBasis basis1 = gram_schmidt_basis(2, Interval{game.nu1()});
  const double expected0 = std::sqrt(0.5) / std::sqrt(to_double(game.nu1()));
  for (int trial = 0; trial < 30; ++trial) {
    DiscreteStrategy s = random_strategy(Player::one, game.nu1(), 6);
    CHECK(std::fabs(embed_strategy(s, basis1).values[0] - expected0) <= 1e-12);

    DiscreteStrategy t = random_strategy(Player::one, game.nu1(), 6);
    Rational lambda(1, 3);
    DiscreteStrategy mix;
    mix.player = Player::one;
    for (const Atom& atom : s.atoms) mix.atoms.push_back(Atom{atom.location, lambda * atom.weight});
    for (const Atom& atom : t.atoms)
      mix.atoms.push_back(Atom{atom.location, (Rational(1) - lambda) * atom.weight});
    mix.canonicalize();

    std::vector<Rational> vm = embed_strategy_monic(mix, basis1);
    std::vector<Rational> vs = embed_strategy_monic(s, basis1);
    std::vector<Rational> vt = embed_strategy_monic(t, basis1);
    for (std::size_t i = 0; i < vm.size(); ++i)
      CHECK(vm[i] == lambda * vs[i] + (Rational(1) - lambda) * vt[i]);
  }
}

TEST_CASE("support reduction") {
  GameSpec game = cubic_game();
  const int M = 2;
  OrthoBasis basis1 = gram_schmidt_basis(M, Interval{game.nu1()});

  DiscreteStrategy small = random_strategy(Player::one, game.nu1(), 3);
  DiscreteStrategy small_reduced = reduce_support(small, basis1);
  if (small.support_size() <= M + 2) {
    REQUIRE(small_reduced.atoms.size() == small.atoms.size());
    for (std::size_t i = 0; i < small.atoms.size(); ++i) {
      CHECK(small_reduced.atoms[i].location == small.atoms[i].location);
      CHECK(small_reduced.atoms[i].weight == small.atoms[i].weight);
    }
  }

  // 20 uniform atoms on a grid
  DiscreteStrategy big;
  big.player = Player::one;
  for (int i = 0; i < 20; ++i)
    big.atoms.push_back(Atom{Rational(-3, 2) + Rational(3 * i) / Rational(19) / 2, Rational(1, 20)});
  big.canonicalize();
  DiscreteStrategy reduced = reduce_support(big, basis1);
  CHECK(reduced.support_size() <= M + 2);

  std::vector<Rational> before = embed_strategy_monic(big, basis1);
  std::vector<Rational> after = embed_strategy_monic(reduced, basis1);
  CHECK(before == after);  // exact in the monic coordinates

  // payoff equivalence against random opponents
  for (int trial = 0; trial < 10; ++trial) {
    DiscreteStrategy opponent = random_strategy(Player::two, game.nu2(), 4);
    CHECK(exact_payoff(game, big, opponent) == exact_payoff(game, reduced, opponent));
  }

  // reduced atoms are a subset of the original support
  for (const Atom& atom : reduced.atoms) {
    bool found = false;
    for (const Atom& original : big.atoms)
      if (original.location == atom.location) found = true;
    CHECK(found);
  }
}

TEST_CASE("symmetric support reduction works in the even subspace") {
  GameSpec game = cubic_game();
  const int M = 2;
  OrthoBasis basis1 = gram_schmidt_basis(M, Interval{game.nu1()});

  DiscreteStrategy big;
  big.player = Player::one;
  for (int i = 0; i < 20; ++i)
    big.atoms.push_back(Atom{Rational(-3, 2) + Rational(3 * i) / Rational(19) / 2, Rational(1, 20)});
  big.canonicalize();
  DiscreteStrategy sym = symmetrize(big);

  DiscreteStrategy reduced = reduce_support_symmetric(sym, basis1);
  CHECK(is_symmetric(reduced));

  int pairs = 0;
  for (const Atom& atom : reduced.atoms)
    if (atom.location >= 0) ++pairs;
  CHECK(pairs <= M / 2 + 2);

  CHECK(embed_strategy_monic(sym, basis1) == embed_strategy_monic(reduced, basis1));

  DiscreteStrategy lopsided = DiscreteStrategy::single(Player::one, Rational(1));
  CHECK_THROWS_AS(reduce_support_symmetric(lopsided, basis1), std::invalid_argument);
}

TEST_CASE("exact payoff worked examples") {
  GameSpec game = cubic_game();
  DiscreteStrategy x0 = DiscreteStrategy::single(Player::one, Rational(0));
  DiscreteStrategy y0 = DiscreteStrategy::single(Player::two, Rational(0));
  CHECK(exact_payoff(game, x0, y0) == Rational(-1, 4));

  DiscreteStrategy allin;
  allin.player = Player::two;
  allin.atoms = {Atom{Rational(-1), Rational(1, 2)}, Atom{Rational(1), Rational(1, 2)}};
  allin.canonicalize();
  CHECK(exact_payoff(game, x0, allin) == Rational(-13, 4));

  GameSpec fair{Rational(2), Rational(0),
                Polynomial({Rational(0), Rational(0), Rational(0), Rational(-1)})};
  DiscreteStrategy any1 = random_strategy(Player::one, fair.nu1(), 4);
  DiscreteStrategy any2 = random_strategy(Player::two, fair.nu2(), 4);
  CHECK(exact_payoff(fair, any1, any2) == Rational(0));
}
