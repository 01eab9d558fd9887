#include <gtest/gtest.h>

#include "dfaint.hpp"
#include "oracles.hpp"

using namespace dfaint;

namespace {

const Alphabet kUnary({"a"});
const Alphabet kBits({"0", "1"});

Dfa length_mod(std::size_t m, StateId residue) { return counter_dfa(kUnary, 0, m, {residue}); }

Dfa only_empty(const Alphabet& sigma) {
  std::vector<StateId> table(2 * sigma.size(), 1);
  return Dfa("eps", sigma, 2, table, 0, {0});
}

IntersectionInstance odd_and_mod3() { return IntersectionInstance({length_mod(2, 1), length_mod(3, 0)}); }

IntersectionInstance contradictory() {
  const Dfa has_one("has_one", kBits, 2, {0, 1, 1, 1}, 0, {1});
  const Dfa no_one("no_one", kBits, 2, {0, 1, 1, 1}, 0, {0});
  return IntersectionInstance({has_one, no_one});
}

const Strategy kBoth[] = {Strategy::materialized, Strategy::on_the_fly};

}  // namespace

TEST(IntersectNonempty, EmptyWordWitness) {
  const IntersectionInstance inst({only_empty(kBits), only_empty(kBits)});
  for (Strategy s : kBoth) {
    const auto w = intersect_nonempty(inst, s);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->size(), 0u);
  }
}

TEST(IntersectNonempty, OddLengthAndMod3GivesAaa) {
  const auto inst = odd_and_mod3();
  const auto expected = oracle::shortest_common_word(inst, 6);
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(expected->size(), 3u);
  for (Strategy s : kBoth) {
    const auto w = intersect_nonempty(inst, s);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->symbols, *expected);
    EXPECT_EQ(inst.alphabet().render(w->symbols), "aaa");
  }
}

TEST(IntersectNonempty, ContradictoryConstraintsAreEmpty) {
  for (Strategy s : kBoth) EXPECT_FALSE(intersect_nonempty(contradictory(), s).has_value());
}

TEST(IntersectNonempty, TiesBrokenByAlphabetOrder) {
  // Words of length 2 ending in the second symbol; shortest lexicographically
  // least is "01" over {0, 1} and "10" over {1, 0}.
  for (const Alphabet& sigma : {Alphabet({"0", "1"}), Alphabet({"1", "0"})}) {
    const Dfa len2("len2", sigma, 4, {1, 1, 2, 2, 3, 3, 3, 3}, 0, {2});
    const Dfa ends("ends", sigma, 2, {0, 1, 0, 1}, 0, {1});
    const IntersectionInstance inst({len2, ends});
    for (Strategy s : kBoth) {
      const auto w = intersect_nonempty(inst, s);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(w->symbols, (Word{0, 1}));
    }
  }
}

TEST(IntersectNonempty, MaterializedRespectsTheCapAndOnTheFlyDoesNot) {
  const auto inst = odd_and_mod3();
  EXPECT_THROW(intersect_nonempty(inst, Strategy::materialized, 5), SizeOverflow);
  EXPECT_TRUE(intersect_nonempty(inst, Strategy::on_the_fly, 5).has_value());
}

TEST(IntersectNonempty, OnTheFlyNeverExploresUnreachableStates) {
  // lcm(3, 4, 5) = 60: the shortest witness visits every tuple.
  const IntersectionInstance inst({length_mod(3, 2), length_mod(4, 3), length_mod(5, 4)});
  SearchOptions opt;
  const SearchResult r = search(inst, opt);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 59u);
  EXPECT_EQ(r.states_explored, 60u);
  // Even length and length 1 mod 4 conflict; only 4 of the 8 tuples are reachable.
  const SearchResult r2 = search(IntersectionInstance({length_mod(2, 0), length_mod(4, 1)}), opt);
  EXPECT_FALSE(r2.witness.has_value());
  EXPECT_EQ(r2.states_explored, 4u);
}

TEST(BoundedSearch, ZeroCapMeansEmptyWordOnly) {
  const auto inst = odd_and_mod3();
  EXPECT_FALSE(bounded_search(inst, 0).has_value());
  const IntersectionInstance eps({length_mod(2, 0), length_mod(3, 0)});
  const auto w = bounded_search(eps, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 0u);
}

TEST(BoundedSearch, CapTwoIsEmptyAndCapThreeFindsAaa) {
  const auto inst = odd_and_mod3();
  EXPECT_FALSE(bounded_search(inst, 2).has_value());
  EXPECT_FALSE(oracle::shortest_common_word(inst, 2).has_value());
  const auto w = bounded_search(inst, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->symbols, Word(3, 0));
}

TEST(BoundedSearch, ProductSizeCapAgreesWithUnboundedSearch) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng);
    EXPECT_EQ(bounded_search(inst, inst.product_size()), intersect_nonempty(inst));
    EXPECT_EQ(bounded_search(inst, inst.product_size() - 1), intersect_nonempty(inst));
  }
}

TEST(BoundedSearch, MaterializedStrategyHonoursTheCap) {
  SearchOptions opt;
  opt.strategy = Strategy::materialized;
  opt.step_cap = 2;
  EXPECT_FALSE(search(odd_and_mod3(), opt).witness.has_value());
  opt.step_cap = 3;
  EXPECT_TRUE(search(odd_and_mod3(), opt).witness.has_value());
}

TEST(BoundedSearch, MonotoneInTheCap) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng);
    std::optional<Witness> first;
    for (std::size_t cap = 0; cap <= inst.product_size(); ++cap) {
      const auto w = bounded_search(inst, cap);
      if (first) {
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(*w, *first);
      } else if (w) {
        first = w;
      }
    }
  }
}

TEST(Solver, StrategiesAgreeOnRandomInstances) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_instance(rng);
    const auto a = intersect_nonempty(inst, Strategy::materialized);
    const auto b = intersect_nonempty(inst, Strategy::on_the_fly);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->size(), b->size());
      EXPECT_EQ(*a, *b);
    }
  }
}

TEST(Solver, WitnessIsValidShortestAndBelowThePigeonholeBound) {
  Rng rng(4);
  InstanceShape shape;
  shape.max_states = 4;
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng, shape);
    const auto w = intersect_nonempty(inst);
    if (!w) {
      EXPECT_FALSE(oracle::shortest_common_word(inst, std::min<std::size_t>(inst.product_size(), 7)).has_value());
      continue;
    }
    for (const auto& d : inst.dfas()) EXPECT_TRUE(oracle::run_dfa(d, w->symbols));
    EXPECT_LT(w->size(), inst.product_size());
    if (w->size() <= 7) {
      const auto expected = oracle::shortest_common_word(inst, w->size());
      ASSERT_TRUE(expected.has_value());
      EXPECT_EQ(*expected, w->symbols);
    }
  }
}

TEST(Solver, DeadStatesAreNeverLeft) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng);
    const auto w = intersect_nonempty(inst);
    if (!w) continue;
    for (const auto& d : inst.dfas()) {
      StateId s = d.initial();
      bool dead = d.is_dead(s);
      for (SymbolId a : w->symbols) {
        s = d.next(s, a);
        if (dead) {
          EXPECT_TRUE(d.is_dead(s));
        }
        dead = d.is_dead(s);
      }
      EXPECT_FALSE(dead);
    }
  }
}
