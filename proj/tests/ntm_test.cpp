#include <gtest/gtest.h>

#include "dfaint.hpp"
#include "oracles.hpp"

using namespace dfaint;

namespace {

OfflineNtm accept_at_once() { return OfflineNtm("accept_at_once", 1, 0, {0}, {}); }

OfflineNtm right_forever() {
  std::vector<Rule> rules;
  for (auto r0 : {InputSymbol::zero, InputSymbol::one, InputSymbol::left_end, InputSymbol::right_end}) {
    rules.push_back({0, r0, TapeSymbol::zero, {0, TapeSymbol::zero, Move::right, Move::stay}});
  }
  return OfflineNtm("right_forever", 2, 0, {1}, rules);
}

Transition tr(StateId q, TapeSymbol w, Move m0, Move m1) { return {q, w, m0, m1}; }

}  // namespace

TEST(OfflineNtm, RejectsUndeclaredStatesAndAcceptingExits) {
  EXPECT_THROW(OfflineNtm("m", 2, 2, {}, {}), InvalidMachine);
  EXPECT_THROW(OfflineNtm("m", 2, 0, {3}, {}), InvalidMachine);
  EXPECT_THROW(OfflineNtm("m", 2, 0, {}, {Rule{0, InputSymbol::zero, TapeSymbol::zero, tr(5, TapeSymbol::zero, Move::stay, Move::stay)}}),
               InvalidMachine);
  EXPECT_THROW(OfflineNtm("m", 2, 0, {1}, {Rule{1, InputSymbol::zero, TapeSymbol::zero, tr(0, TapeSymbol::zero, Move::stay, Move::stay)}}),
               InvalidMachine);
}

TEST(OfflineNtm, DuplicateRulesCollapse) {
  const Rule r{0, InputSymbol::zero, TapeSymbol::zero, tr(0, TapeSymbol::one, Move::right, Move::stay)};
  const OfflineNtm m("m", 1, 0, {}, {r, r});
  EXPECT_EQ(m.rules().size(), 1u);
}

TEST(Step, AcceptingConfigurationHasNoSuccessors) {
  EXPECT_TRUE(step(accept_at_once(), "01", initial_configuration(accept_at_once(), 2)).empty());
}

TEST(Step, DeterministicEntryGivesOneSuccessor) {
  const OfflineNtm m = contains_one_machine();
  const auto next = step(m, "01", initial_configuration(m, 1));
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(next[0].input_head, 2u);
  EXPECT_EQ(next[0].state, 0u);
}

TEST(Step, BranchingEntryGivesOneSuccessorPerDeltaEntry) {
  const std::vector<Rule> rules{
      {0, InputSymbol::one, TapeSymbol::zero, tr(1, TapeSymbol::one, Move::stay, Move::right)},
      {0, InputSymbol::one, TapeSymbol::zero, tr(0, TapeSymbol::hash, Move::right, Move::stay)},
  };
  const OfflineNtm m("branch", 2, 0, {}, rules);
  const auto& entries = m.transitions(0, InputSymbol::one, TapeSymbol::zero);
  const auto next = step(m, "1", initial_configuration(m, 2));
  ASSERT_EQ(next.size(), entries.size());
  ASSERT_EQ(next.size(), 2u);
  // Canonical order: sorted by (q', w, m0, m1).
  EXPECT_EQ(next[0].state, 0u);
  EXPECT_EQ(next[0].worktape[0], TapeSymbol::hash);
  EXPECT_EQ(next[1].state, 1u);
  EXPECT_EQ(next[1].work_head, 1u);
}

TEST(Step, MovesOffTheTapeAreExcluded) {
  const std::vector<Rule> rules{
      {0, InputSymbol::one, TapeSymbol::zero, tr(0, TapeSymbol::zero, Move::stay, Move::left)},
      {0, InputSymbol::one, TapeSymbol::zero, tr(0, TapeSymbol::zero, Move::left, Move::stay)},
  };
  const OfflineNtm m("edge", 1, 0, {}, rules);
  const auto next = step(m, "1", initial_configuration(m, 1));
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(next[0].input_head, 0u);
}

TEST(Step, NeverLeavesTheSpaceBound) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const OfflineNtm m = random_machine(rng);
    const std::string input = random_input(rng, 1, 4);
    const std::size_t cells = rng.range(1, 3);
    for (const auto& c : oracle::reachable(m, input, cells)) {
      EXPECT_LT(c.work_head, cells);
      EXPECT_EQ(c.worktape.size(), cells);
      EXPECT_LE(c.input_head, input.size() + 1);
    }
  }
}

TEST(Oracle, InitialAcceptingStateAcceptsEveryInput) {
  for (const char* s : {"", "0", "0110"}) EXPECT_TRUE(oracle_accepts(accept_at_once(), s, 1));
}

TEST(Oracle, ContainsOne) {
  const OfflineNtm m = contains_one_machine();
  EXPECT_TRUE(oracle_accepts(m, "0010", 1));
  EXPECT_FALSE(oracle_accepts(m, "0000", 1));
  // Hand enumeration: on 0010 the machine visits h0 = 1, 2, 3 in state 0 and
  // then q1 at h0 = 3; on 0000 it walks to the right endmarker and sticks.
  EXPECT_EQ(oracle::reachable(m, "0010", 1).size(), 4u);
  EXPECT_EQ(oracle::reachable(m, "0000", 1).size(), 5u);
  const auto run = oracle_run(m, "0010", 1);
  ASSERT_TRUE(run.has_value());
  EXPECT_EQ(run->length(), 3u);
  EXPECT_TRUE(is_accepting_run(m, "0010", 1, *run));
}

TEST(Oracle, RightForeverNeverAccepts) {
  EXPECT_FALSE(oracle_accepts(right_forever(), "0101", 2));
}

TEST(Oracle, AgreesWithPlainReachabilityOnRandomMachines) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const OfflineNtm m = random_machine(rng);
    const std::string input = random_input(rng, 0, 4);
    const std::size_t cells = rng.range(1, 3);
    const auto run = oracle_run(m, input, cells);
    EXPECT_EQ(run.has_value(), oracle::reaches_accepting(m, input, cells));
    if (run) {
      EXPECT_TRUE(is_accepting_run(m, input, cells, *run));
    }
  }
}

TEST(Oracle, CapRaisesStateSpaceTooLarge) {
  // 2 states * 6 positions * 3 cells * 27 tapes = 972 configurations.
  EXPECT_THROW(oracle_accepts(contains_one_machine(), "0000", 3, 971), StateSpaceTooLarge);
  EXPECT_NO_THROW(oracle_accepts(contains_one_machine(), "0000", 3, 972));
  EXPECT_THROW(oracle_accepts(contains_one_machine(), "0000", 0), ValidationError);
}

TEST(ConfigSpace, IndexIsABijection) {
  const ConfigSpace space(2, 2, 2, kDefaultConfigCap);
  EXPECT_EQ(space.count(), 2u * 4 * 2 * 9);
  for (std::uint64_t i = 0; i < space.count(); ++i) EXPECT_EQ(space.index(space.at(i)), i);
}

TEST(Input, MustBeABitString) {
  EXPECT_THROW(check_input("01a"), ValidationError);
  EXPECT_EQ(input_at("01", 0), InputSymbol::left_end);
  EXPECT_EQ(input_at("01", 2), InputSymbol::one);
  EXPECT_EQ(input_at("01", 3), InputSymbol::right_end);
}

TEST(Lint, WarnsAboutDelimitersAndMissingAcceptance) {
  EXPECT_TRUE(lint(contains_one_machine()).empty());
  const OfflineNtm writes_hash(
      "h", 1, 0, {}, {Rule{0, InputSymbol::zero, TapeSymbol::zero, tr(0, TapeSymbol::hash, Move::right, Move::stay)}});
  EXPECT_EQ(lint(writes_hash).size(), 2u);
}
