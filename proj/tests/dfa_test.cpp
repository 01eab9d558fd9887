#include <gtest/gtest.h>

#include "dfaint.hpp"
#include "oracles.hpp"

using namespace dfaint;

namespace {

Dfa even_length() {
  return Dfa("even", Alphabet({"a"}), 2, {1, 0}, 0, {0});
}

Dfa contains_one() {
  return Dfa("contains_one", Alphabet({"0", "1"}), 2, {0, 1, 1, 1}, 0, {1});
}

}  // namespace

TEST(Accepts, UniversalAutomatonAcceptsEverything) {
  const Dfa u = universal_dfa(Alphabet({"0", "1"}));
  EXPECT_EQ(u.state_count(), 1u);
  EXPECT_TRUE(accepts(u, u.alphabet().encode_chars("0110")));
  EXPECT_TRUE(accepts(u, Word{}));
}

TEST(Accepts, EvenLengthRejectsOddInput) {
  const Dfa d = even_length();
  EXPECT_FALSE(accepts(d, d.alphabet().encode_chars("aaa")));
  EXPECT_TRUE(accepts(d, d.alphabet().encode_chars("aaaa")));
}

TEST(Accepts, ContainsOneMatchesDefinitionUpToLengthFour) {
  const Dfa d = contains_one();
  EXPECT_FALSE(accepts(d, d.alphabet().encode_chars("000")));
  for (std::size_t len = 0; len <= 4; ++len) {
    oracle::for_each_word(2, len, [&](const Word& w) {
      std::string s;
      for (SymbolId a : w) s += d.alphabet().token(a);
      EXPECT_EQ(accepts(d, w), s.find('1') != std::string::npos) << s;
      return false;
    });
  }
}

TEST(Accepts, UnknownSymbolIsRejected) {
  const Dfa d = contains_one();
  EXPECT_THROW(accepts(d, Word{0, 2}), UnknownSymbol);
  EXPECT_THROW(accepts(d, std::vector<std::string>{"0", "x"}), UnknownSymbol);
  EXPECT_THROW(d.alphabet().encode_chars("012"), UnknownSymbol);
}

TEST(Alphabet, TokensMustBeDistinctAndNonEmpty) {
  EXPECT_THROW(Alphabet({"a", "b", "a"}), ValidationError);
  EXPECT_THROW(Alphabet({"a", ""}), ValidationError);
  const Alphabet multi({"ab", "c"});
  EXPECT_EQ(multi.render(multi.encode({"ab", "c", "ab"})), "ab c ab");
  EXPECT_EQ(Alphabet({"x", "y"}).render(Word{1, 0}), "yx");
}

TEST(Dfa, ConstructorValidatesInvariants) {
  const Alphabet ab({"a", "b"});
  EXPECT_THROW(Dfa("d", ab, 0, {}, 0, {}), ValidationError);
  EXPECT_THROW(Dfa("d", ab, 2, {0, 1, 1}, 0, {}), ValidationError);       // not total
  EXPECT_THROW(Dfa("d", ab, 2, {0, 1, 1, 2}, 0, {}), ValidationError);    // target out of range
  EXPECT_THROW(Dfa("d", ab, 2, {0, 1, 1, 1}, 2, {}), ValidationError);    // initial >= m
  EXPECT_THROW(Dfa("d", ab, 2, {0, 1, 1, 1}, 0, {5}), ValidationError);   // final out of range
}

TEST(Dfa, DeadStatesAreNonFinalSelfLoops) {
  const Alphabet ab({"a", "b"});
  // 0 -a-> 1, 0 -b-> 2; 1 final self-loop; 2 non-final self-loop.
  const Dfa d("d", ab, 3, {1, 2, 1, 1, 2, 2}, 0, {1});
  EXPECT_EQ(d.dead_states(), std::vector<StateId>{2});
  EXPECT_FALSE(d.is_dead(1));
  for (StateId s : d.dead_states()) {
    EXPECT_FALSE(d.is_final(s));
    for (SymbolId a = 0; a < ab.size(); ++a) EXPECT_EQ(d.next(s, a), s);
  }
}

TEST(Dfa, CounterAutomaton) {
  const Alphabet ab({"a", "b"});
  const Dfa c = counter_dfa(ab, 0, 3, {2});
  EXPECT_TRUE(accepts(c, ab.encode_chars("abab")));
  EXPECT_FALSE(accepts(c, ab.encode_chars("aaa")));
  EXPECT_TRUE(accepts(c, ab.encode_chars("aaaaa")));
}

TEST(Dfa, SerializedBits) {
  // m = 3, |Σ| = 2: 3 * 2 * 2 + 3 + 2.
  const Dfa d("d", Alphabet({"a", "b"}), 3, {1, 2, 1, 1, 2, 2}, 0, {1});
  EXPECT_EQ(serialized_bits(d), 17u);
  EXPECT_EQ(serialized_bits(universal_dfa(Alphabet({"a"}))), 1u);
}

TEST(IntersectionInstance, RequiresAtLeastOneMember) {
  EXPECT_THROW(IntersectionInstance(std::vector<Dfa>{}), ValidationError);
}

TEST(IntersectionInstance, MembersShareTheAlphabetInOrder) {
  const Dfa a = universal_dfa(Alphabet({"0", "1"}));
  const Dfa b = universal_dfa(Alphabet({"1", "0"}));
  EXPECT_THROW(IntersectionInstance({a, b}), AlphabetMismatch);
  const IntersectionInstance ok({a, contains_one()});
  EXPECT_EQ(ok.size(), 2u);
  EXPECT_EQ(ok.max_states(), 2u);
  EXPECT_EQ(ok.product_size(), 2u);
}

TEST(IntersectionInstance, ProductSizeSaturates) {
  const Alphabet a({"a"});
  std::vector<Dfa> dfas;
  for (int i = 0; i < 70; ++i) dfas.push_back(counter_dfa(a, 0, 2, {0}));
  EXPECT_EQ(IntersectionInstance(dfas).product_size(), SIZE_MAX);
}
