#pragma once

// Computation traces: fixed-width binary tuples over {0, 1}, each terminated
// by '$'. Six-field tuples carry (q, r0, r1, m0, m1, w); eight-field tuples
// add the head positions: (q, h0, h1, r0, r1, m0, m1, w). All fields are
// written most significant bit first.
//
// 2-bit codes: tape symbols 0/1/# are 00/01/10; input reads 0/1 are 00/01
// and the left/right endmarkers are 10/11; moves L/R/S are 00/01/10.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dfaint/dfa.hpp"
#include "dfaint/error.hpp"
#include "dfaint/ntm.hpp"

namespace dfaint {

inline constexpr SymbolId kBit0 = 0;
inline constexpr SymbolId kBit1 = 1;
inline constexpr SymbolId kSeparator = 2;

inline const Alphabet& trace_alphabet() {
  static const Alphabet alphabet({"0", "1", "$"});
  return alphabet;
}

enum class Field : std::uint8_t { q, h0, h1, r0, r1, m0, m1, w };

inline const char* field_name(Field f) {
  static constexpr const char* kNames[] = {"q", "h0", "h1", "r0", "r1", "m0", "m1", "w"};
  return kNames[static_cast<int>(f)];
}

// Smallest b >= 1 with 2^b >= count.
inline unsigned field_width(std::uint64_t count) {
  unsigned b = 1;
  while (b < 64 && (std::uint64_t{1} << b) < count) ++b;
  return b;
}

struct FieldSlot {
  Field field;
  unsigned offset;
  unsigned width;
};

// Where a bit position of a tuple lands.
struct BitSlot {
  Field field;
  unsigned bit;  // index within the field, 0 = most significant
  unsigned width;

  bool last() const noexcept { return bit + 1 == width; }
};

class TraceEncoding {
 public:
  static constexpr unsigned kCodeBits = 2;
  static constexpr unsigned kMaxFieldBits = 63;

  // Six-field layout.
  static TraceEncoding without_heads(std::size_t states) {
    return TraceEncoding(false, field_width(states), 0, 0);
  }

  // Eight-field layout for inputs of length n and S worktape cells.
  static TraceEncoding with_heads(std::size_t states, std::size_t input_length, std::size_t space_cells) {
    return TraceEncoding(true, field_width(states), field_width(input_length + 2), field_width(space_cells));
  }

  bool has_heads() const noexcept { return heads_; }
  unsigned width(Field f) const {
    switch (f) {
      case Field::q: return q_bits_;
      case Field::h0: return h0_bits_;
      case Field::h1: return h1_bits_;
      default: return kCodeBits;
    }
  }

  const std::vector<FieldSlot>& layout() const noexcept { return layout_; }
  const BitSlot& slot(unsigned pos) const { return bits_[pos]; }

  // Bits per tuple, excluding the separator.
  unsigned tuple_bits() const noexcept { return static_cast<unsigned>(bits_.size()); }
  unsigned tuple_length() const noexcept { return tuple_bits() + 1; }

  bool operator==(const TraceEncoding& o) const {
    return heads_ == o.heads_ && q_bits_ == o.q_bits_ && h0_bits_ == o.h0_bits_ && h1_bits_ == o.h1_bits_;
  }

 private:
  TraceEncoding(bool heads, unsigned q_bits, unsigned h0_bits, unsigned h1_bits)
      : heads_(heads), q_bits_(q_bits), h0_bits_(h0_bits), h1_bits_(h1_bits) {
    std::vector<Field> order{Field::q};
    if (heads_) {
      order.push_back(Field::h0);
      order.push_back(Field::h1);
    }
    for (Field f : {Field::r0, Field::r1, Field::m0, Field::m1, Field::w}) order.push_back(f);
    unsigned off = 0;
    for (Field f : order) {
      const unsigned w = width(f);
      if (w > kMaxFieldBits) {
        throw EncodingOverflow(std::string("field ") + field_name(f) + " needs " + std::to_string(w) + " bits");
      }
      layout_.push_back({f, off, w});
      for (unsigned j = 0; j < w; ++j) bits_.push_back({f, j, w});
      off += w;
    }
  }

  bool heads_;
  unsigned q_bits_;
  unsigned h0_bits_;
  unsigned h1_bits_;
  std::vector<FieldSlot> layout_;
  std::vector<BitSlot> bits_;
};

// Bit j (0 = most significant) of a width-bit value.
inline unsigned bit_of(std::uint64_t value, unsigned j, unsigned width) {
  return static_cast<unsigned>((value >> (width - 1 - j)) & 1u);
}

// One trace token with raw field values. Head positions are ignored by the
// six-field layout.
struct TraceTuple {
  std::uint64_t q = 0;
  std::uint64_t h0 = 0;
  std::uint64_t h1 = 0;
  std::uint64_t r0 = 0;
  std::uint64_t r1 = 0;
  std::uint64_t m0 = 0;
  std::uint64_t m1 = 0;
  std::uint64_t w = 0;

  std::uint64_t get(Field f) const {
    switch (f) {
      case Field::q: return q;
      case Field::h0: return h0;
      case Field::h1: return h1;
      case Field::r0: return r0;
      case Field::r1: return r1;
      case Field::m0: return m0;
      case Field::m1: return m1;
      case Field::w: return w;
    }
    return 0;
  }

  void set(Field f, std::uint64_t v) {
    switch (f) {
      case Field::q: q = v; break;
      case Field::h0: h0 = v; break;
      case Field::h1: h1 = v; break;
      case Field::r0: r0 = v; break;
      case Field::r1: r1 = v; break;
      case Field::m0: m0 = v; break;
      case Field::m1: m1 = v; break;
      case Field::w: w = v; break;
    }
  }

  bool operator==(const TraceTuple&) const = default;
};

inline Word serialize(const TraceEncoding& enc, const std::vector<TraceTuple>& tuples) {
  Word out;
  out.reserve(tuples.size() * enc.tuple_length());
  for (const auto& t : tuples) {
    for (const auto& slot : enc.layout()) {
      const std::uint64_t v = t.get(slot.field);
      if (slot.width < 64 && (v >> slot.width) != 0) {
        throw EncodingOverflow(std::string("value of field ") + field_name(slot.field) + " does not fit in " +
                               std::to_string(slot.width) + " bits");
      }
      for (unsigned j = 0; j < slot.width; ++j) out.push_back(bit_of(v, j, slot.width) ? kBit1 : kBit0);
    }
    out.push_back(kSeparator);
  }
  return out;
}

// Splits a trace into raw tuples; checks framing only, not field ranges.
inline std::vector<TraceTuple> split_trace(const TraceEncoding& enc, const Word& trace) {
  const std::size_t len = enc.tuple_length();
  if (trace.size() % len != 0) {
    throw MalformedTrace("trace length " + std::to_string(trace.size()) + " is not a multiple of the tuple length " +
                         std::to_string(len));
  }
  std::vector<TraceTuple> out;
  for (std::size_t base = 0; base < trace.size(); base += len) {
    TraceTuple t;
    std::size_t pos = base;
    for (const auto& slot : enc.layout()) {
      std::uint64_t v = 0;
      for (unsigned j = 0; j < slot.width; ++j, ++pos) {
        if (trace[pos] != kBit0 && trace[pos] != kBit1) {
          throw MalformedTrace("expected a bit at offset " + std::to_string(pos));
        }
        v = (v << 1) | (trace[pos] == kBit1 ? 1u : 0u);
      }
      t.set(slot.field, v);
    }
    if (trace[pos] != kSeparator) throw MalformedTrace("expected '$' at offset " + std::to_string(pos));
    out.push_back(t);
  }
  return out;
}

}  // namespace dfaint
