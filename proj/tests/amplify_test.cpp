#include <gtest/gtest.h>

#include <cmath>

#include "dfaint.hpp"
#include "oracles.hpp"

using namespace dfaint;

namespace {

const Alphabet kUnary({"a"});

Dfa mod(std::size_t m, StateId residue) { return counter_dfa(kUnary, 0, m, {residue}, "mod" + std::to_string(m)); }

}  // namespace

TEST(Amplify, GroupSizeOneKeepsTheMembers) {
  const IntersectionInstance inst({mod(2, 1), mod(3, 0)});
  const auto r = amplify(inst, 2);
  EXPECT_EQ(r.group_size, 1u);
  EXPECT_EQ(r.padding, 0u);
  ASSERT_EQ(r.instance.size(), 2u);
  EXPECT_EQ(r.instance[0].table(), inst[0].table());
  EXPECT_EQ(r.instance[1].table(), inst[1].table());
}

TEST(Amplify, FourMembersIntoTwoGroups) {
  const IntersectionInstance inst({mod(2, 1), mod(3, 0), mod(2, 1), mod(3, 2)});
  const auto r = amplify(inst, 2);
  EXPECT_EQ(r.group_size, 2u);
  ASSERT_EQ(r.instance.size(), 2u);
  EXPECT_EQ(r.instance[0].state_count(), 6u);
  EXPECT_EQ(r.instance[1].state_count(), 6u);
  EXPECT_EQ(r.instance[0].name(), "group0");
  EXPECT_EQ(intersect_nonempty(r.instance).has_value(), intersect_nonempty(inst).has_value());
  EXPECT_FALSE(intersect_nonempty(inst).has_value());
}

TEST(Amplify, UniversalGroupStaysUniversal) {
  const Alphabet ab({"a", "b"});
  const IntersectionInstance inst({universal_dfa(ab, "u0"), universal_dfa(ab, "u1"), universal_dfa(ab, "u2")});
  const auto r = amplify(inst, 1);
  ASSERT_EQ(r.instance.size(), 1u);
  oracle::for_each_word(ab.size(), 5, [&](const Word& w) {
    EXPECT_TRUE(r.instance.accepts_all(w));
    return false;
  });
}

TEST(Amplify, NonPositiveTargetIsRejected) {
  const IntersectionInstance inst({mod(2, 1)});
  EXPECT_THROW(amplify(inst, 0), InvalidTarget);
  EXPECT_THROW(amplify(inst, -3), InvalidTarget);
}

TEST(Amplify, PadsWithUniversalAutomata) {
  const IntersectionInstance inst({mod(2, 1), mod(3, 0), mod(5, 4)});
  const auto r = amplify(inst, 2);
  EXPECT_EQ(r.group_size, 2u);
  EXPECT_EQ(r.padding, 1u);
  ASSERT_EQ(r.instance.size(), 2u);
  EXPECT_EQ(r.instance[1].state_count(), 5u);
  // More targets than members: every member alone plus padding.
  const auto wide = amplify(inst, 5);
  EXPECT_EQ(wide.group_size, 1u);
  EXPECT_EQ(wide.padding, 2u);
  EXPECT_EQ(wide.instance.size(), 5u);
  EXPECT_EQ(wide.instance[4].name(), "pad1");
}

TEST(Amplify, RespectsTheSizeCap) {
  const IntersectionInstance inst({mod(5, 1), mod(7, 0), mod(3, 2), mod(2, 0)});
  EXPECT_THROW(amplify(inst, 1, 100), SizeOverflow);
  EXPECT_NO_THROW(amplify(inst, 1, 210));
}

TEST(Amplify, PreservesVerdictAndWitnessOnRandomInstances) {
  Rng rng(55);
  InstanceShape shape;
  shape.min_dfas = 2;
  shape.max_dfas = 6;
  shape.max_states = 4;
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = random_instance(rng, shape);
    const long long k = rng.range(1, inst.size());
    const auto r = amplify(inst, k);
    ASSERT_EQ(r.instance.size(), static_cast<std::size_t>(k));
    const double bound = std::pow(static_cast<double>(inst.max_states()), static_cast<double>(r.group_size));
    EXPECT_LE(static_cast<double>(r.instance.max_states()), bound);
    const auto before = intersect_nonempty(inst);
    const auto after = intersect_nonempty(r.instance);
    ASSERT_EQ(before.has_value(), after.has_value());
    if (before) {
      EXPECT_EQ(before->size(), after->size());
      EXPECT_EQ(*before, *after);
    }
  }
}
