#include <gtest/gtest.h>

#include "dfaint.hpp"
#include "oracles.hpp"

using namespace dfaint;

TEST(TraceEncoding, FieldWidths) {
  const auto six = TraceEncoding::without_heads(5);
  EXPECT_FALSE(six.has_heads());
  EXPECT_EQ(six.width(Field::q), 3u);
  EXPECT_EQ(six.tuple_bits(), 3u + 5 * 2);
  EXPECT_EQ(six.tuple_length(), six.tuple_bits() + 1);

  // n = 6: h0 ranges over 0..7 (3 bits); S = 5: h1 needs 3 bits.
  const auto eight = TraceEncoding::with_heads(4, 6, 5);
  EXPECT_EQ(eight.width(Field::q), 2u);
  EXPECT_EQ(eight.width(Field::h0), 3u);
  EXPECT_EQ(eight.width(Field::h1), 3u);
  EXPECT_EQ(eight.tuple_bits(), 2u + 3 + 3 + 10);
}

TEST(TraceEncoding, DegenerateCountsStillGetOneBit) {
  const auto enc = TraceEncoding::with_heads(1, 1, 1);
  EXPECT_EQ(enc.width(Field::q), 1u);
  EXPECT_EQ(enc.width(Field::h1), 1u);
}

TEST(TraceEncoding, LayoutOrder) {
  const auto enc = TraceEncoding::with_heads(3, 2, 2);
  std::vector<Field> order;
  for (const auto& s : enc.layout()) order.push_back(s.field);
  EXPECT_EQ(order, (std::vector<Field>{Field::q, Field::h0, Field::h1, Field::r0, Field::r1, Field::m0, Field::m1,
                                       Field::w}));
}

TEST(TraceEncoding, OverflowBeyondSixtyThreeBits) {
  EXPECT_THROW(TraceEncoding::with_heads(2, 2, (std::size_t{1} << 63) + 1), EncodingOverflow);
  EXPECT_NO_THROW(TraceEncoding::with_heads(2, 2, std::size_t{1} << 63));
}

TEST(Serialize, MostSignificantBitFirstThenSeparator) {
  const auto enc = TraceEncoding::without_heads(4);
  TraceTuple t;
  t.q = 2;   // 10
  t.r0 = 3;  // endmarker
  t.r1 = 2;  // #
  t.m0 = 1;  // R
  t.m1 = 2;  // S
  t.w = 0;
  const Word w = serialize(enc, {t});
  EXPECT_EQ(trace_alphabet().render(w), "10" "11" "10" "01" "10" "00" "$");
}

TEST(Serialize, RoundTripsThroughSplit) {
  Rng rng(6);
  const auto enc = TraceEncoding::with_heads(3, 5, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TraceTuple> tuples(rng.range(0, 5));
    for (auto& t : tuples) {
      t.q = rng.range(0, 2);
      t.h0 = rng.range(0, 6);
      t.h1 = rng.range(0, 2);
      t.r0 = rng.range(0, 3);
      t.r1 = rng.range(0, 2);
      t.m0 = rng.range(0, 2);
      t.m1 = rng.range(0, 2);
      t.w = rng.range(0, 2);
    }
    const Word w = serialize(enc, tuples);
    EXPECT_EQ(w.size(), tuples.size() * enc.tuple_length());
    EXPECT_EQ(split_trace(enc, w), tuples);
  }
}

TEST(Serialize, ValueTooWideForItsField) {
  TraceTuple t;
  t.q = 4;
  EXPECT_THROW(serialize(TraceEncoding::without_heads(4), {t}), EncodingOverflow);
}

TEST(SplitTrace, DetectsFramingErrors) {
  const auto enc = TraceEncoding::without_heads(2);
  const Word good = serialize(enc, {TraceTuple{}});
  Word shorter(good.begin(), good.end() - 1);
  EXPECT_THROW(split_trace(enc, shorter), MalformedTrace);
  Word no_sep = good;
  no_sep.back() = kBit0;
  EXPECT_THROW(split_trace(enc, no_sep), MalformedTrace);
  Word early_sep = good;
  early_sep[0] = kSeparator;
  EXPECT_THROW(split_trace(enc, early_sep), MalformedTrace);
  EXPECT_TRUE(split_trace(enc, Word{}).empty());
}
