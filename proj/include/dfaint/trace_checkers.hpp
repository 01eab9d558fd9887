#pragma once

// The local checks that make up the compiled families. Each checker reads a
// trace bit by bit, knows only its own slice of the computation, and rejects
// as soon as the slice is inconsistent.
//
// Shared conventions:
//  - the first tuple describes the initial configuration;
//  - tuple i's (m0, m1, w) together with tuple i+1's q form the transition
//    taken from configuration i;
//  - the trace ends with a tuple whose q is accepting, with m0 = m1 = S and
//    w = r1 (the machine halts in place).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfaint/ntm.hpp"
#include "dfaint/trace.hpp"

namespace dfaint {

// Deliberate defects for fault-injection runs of the verifier.
enum class Fault : std::uint8_t { none, skip_input_check };

namespace checkers {

inline constexpr std::uint64_t kMoveCodes = 3;
inline constexpr std::uint64_t kTapeCodes = 3;

// Framing shared by every checker: `pos` is the offset within the current
// tuple, `pos == tuple_bits` means the separator is expected next.
inline bool framing_ok(const TraceEncoding& enc, unsigned pos, SymbolId a) {
  return pos == enc.tuple_bits() ? a == kSeparator : a != kSeparator;
}

// Tracks the machine state and validates each step against the transition
// relation, taking the claimed r0/r1 at face value. With an input string it
// additionally follows the input head and checks every r0 (the
// head-position-free construction).
class ControlChecker {
 public:
  struct State {
    std::uint32_t pos = 0;
    // 0: first tuple, 1: successor q pending, 2: inside a tuple, 3: accepted
    std::uint8_t phase = 0;
    std::uint32_t q = 0;
    std::uint8_t r0 = 0, r1 = 0, m0 = 0, m1 = 0, w = 0;
    std::uint64_t acc = 0;
    std::uint64_t h0 = 1;

    auto operator<=>(const State&) const = default;
  };

  ControlChecker(const OfflineNtm& m, const TraceEncoding& enc, const std::string* input = nullptr,
                 Fault fault = Fault::none)
      : m_(m), enc_(enc), input_(input), fault_(fault) {}

  State initial() const { return {}; }
  bool accepting(const State& s) const { return s.phase == 3 && s.pos == 0; }

  std::optional<State> next(State s, SymbolId a) const {
    if (s.phase == 3 || !framing_ok(enc_, s.pos, a)) return std::nullopt;
    if (a == kSeparator) return end_tuple(s);
    const BitSlot& slot = enc_.slot(s.pos++);
    s.acc = (s.acc << 1) | (a == kBit1 ? 1u : 0u);
    if (!slot.last()) return s;
    const std::uint64_t v = s.acc;
    s.acc = 0;
    switch (slot.field) {
      case Field::q: return on_state(s, v);
      case Field::h0:
      case Field::h1: return s;
      case Field::r0: return on_input_read(s, v);
      case Field::r1: return on_work_read(s, v);
      case Field::m0: return on_choice(s, Field::m0, v);
      case Field::m1: return on_choice(s, Field::m1, v);
      case Field::w: return on_choice(s, Field::w, v);
    }
    return std::nullopt;
  }

 private:
  bool halting(const State& s) const { return m_.is_accepting(s.q); }

  std::optional<State> on_state(State s, std::uint64_t v) const {
    if (v >= m_.state_count()) return std::nullopt;
    const auto q = static_cast<StateId>(v);
    if (s.phase == 0) {
      if (q != m_.initial()) return std::nullopt;
    } else {
      const Transition t{q, static_cast<TapeSymbol>(s.w), static_cast<Move>(s.m0), static_cast<Move>(s.m1)};
      if (!m_.allows(s.q, static_cast<InputSymbol>(s.r0), static_cast<TapeSymbol>(s.r1), t)) return std::nullopt;
    }
    s.phase = 2;
    s.q = q;
    s.r0 = s.r1 = s.m0 = s.m1 = s.w = 0;
    return s;
  }

  std::optional<State> on_input_read(State s, std::uint64_t v) const {
    if (input_ && fault_ != Fault::skip_input_check &&
        v != static_cast<std::uint64_t>(input_at(*input_, s.h0))) {
      return std::nullopt;
    }
    s.r0 = static_cast<std::uint8_t>(v);
    return s;
  }

  std::optional<State> on_work_read(State s, std::uint64_t v) const {
    if (v >= kTapeCodes) return std::nullopt;
    s.r1 = static_cast<std::uint8_t>(v);
    if (!halting(s) && transitions(s).empty()) return std::nullopt;
    return s;
  }

  // m0, m1 and w: keep only values consistent with some transition.
  std::optional<State> on_choice(State s, Field f, std::uint64_t v) const {
    if (v >= kMoveCodes) return std::nullopt;  // move and tape codes both stop at 10
    const auto code = static_cast<std::uint8_t>(v);
    if (f == Field::m0) s.m0 = code;
    if (f == Field::m1) s.m1 = code;
    if (f == Field::w) s.w = code;
    if (halting(s)) {
      const bool ok = f == Field::w ? code == s.r1 : code == static_cast<std::uint8_t>(Move::stay);
      return ok ? std::optional<State>(s) : std::nullopt;
    }
    for (const auto& t : transitions(s)) {
      if (static_cast<std::uint8_t>(t.input_move) != s.m0) continue;
      if (f != Field::m0 && static_cast<std::uint8_t>(t.work_move) != s.m1) continue;
      if (f == Field::w && static_cast<std::uint8_t>(t.write) != s.w) continue;
      if (f == Field::m0 && input_) {
        const long h0 = static_cast<long>(s.h0) + offset(t.input_move);
        if (h0 < 0 || h0 > static_cast<long>(input_->size()) + 1) continue;
      }
      return s;
    }
    return std::nullopt;
  }

  std::optional<State> end_tuple(State s) const {
    s.pos = 0;
    if (halting(s)) {
      State done;
      done.phase = 3;
      return done;
    }
    if (input_) s.h0 = static_cast<std::uint64_t>(static_cast<long>(s.h0) + offset(static_cast<Move>(s.m0)));
    s.phase = 1;
    return s;
  }

  const std::vector<Transition>& transitions(const State& s) const {
    return m_.transitions(s.q, static_cast<InputSymbol>(s.r0), static_cast<TapeSymbol>(s.r1));
  }

  const OfflineNtm& m_;
  const TraceEncoding& enc_;
  const std::string* input_;
  Fault fault_;
};

// Owns one position of one head (eight-field layout). Whenever the head is
// at that position it checks the follow-up tuple's head field against the
// claimed move and, for the input head, the claimed r0 against the input.
class HeadChecker {
 public:
  struct Spec {
    Field head;                               // h0 or h1
    Field move;                               // m0 or m1
    std::uint64_t position;                   // owned position
    std::uint64_t limit;                      // largest legal position
    std::uint64_t start;                      // head position in the first tuple
    std::optional<std::uint64_t> read_code;   // expected r0 code at this position
  };

  struct State {
    std::uint32_t pos = 0;
    // Required head value relative to `position` (-1, 0, +1), or kFree.
    std::int8_t expect = kFree;
    bool eq = true;
    bool owned = false;
    std::uint8_t acc = 0;
    std::uint8_t move = 0;

    auto operator<=>(const State&) const = default;
  };

  static constexpr std::int8_t kFree = 2;

  HeadChecker(const TraceEncoding& enc, Spec spec) : enc_(enc), spec_(spec) {}

  State initial() const {
    State s;
    if (spec_.start == spec_.position) s.expect = 0;
    return s;
  }
  bool accepting(const State&) const { return true; }

  std::optional<State> next(State s, SymbolId a) const {
    if (!framing_ok(enc_, s.pos, a)) return std::nullopt;
    if (a == kSeparator) {
      State fresh;
      fresh.expect = s.owned ? static_cast<std::int8_t>(offset(static_cast<Move>(s.move))) : kFree;
      return fresh;
    }
    const BitSlot& slot = enc_.slot(s.pos++);
    const unsigned bit = a == kBit1 ? 1u : 0u;
    if (slot.field == spec_.head) {
      const std::uint64_t target = s.expect == kFree ? spec_.position : spec_.position + s.expect;
      s.eq = s.eq && bit == bit_of(target, slot.bit, slot.width);
      if (slot.last()) {
        if (s.expect != kFree && !s.eq) return std::nullopt;
        s.owned = s.expect == kFree ? s.eq : s.expect == 0;
      }
    } else if (s.owned && slot.field == Field::r0 && spec_.read_code) {
      if (bit != bit_of(*spec_.read_code, slot.bit, slot.width)) return std::nullopt;
    } else if (s.owned && slot.field == spec_.move) {
      s.acc = static_cast<std::uint8_t>((s.acc << 1) | bit);
      if (slot.last()) {
        if (s.acc >= kMoveCodes) return std::nullopt;
        const long to = static_cast<long>(spec_.position) + offset(static_cast<Move>(s.acc));
        if (to < 0 || to > static_cast<long>(spec_.limit)) return std::nullopt;
        s.move = s.acc;
        s.acc = 0;
      }
    }
    return s;
  }

 private:
  const TraceEncoding& enc_;
  Spec spec_;
};

// Stores one worktape cell (eight-field layout): checks r1 whenever h1 points
// at the cell and applies w afterwards.
class CellChecker {
 public:
  struct State {
    std::uint32_t pos = 0;
    std::uint8_t stored = 0;
    bool eq = true;
    std::uint8_t acc = 0;

    auto operator<=>(const State&) const = default;
  };

  CellChecker(const TraceEncoding& enc, std::uint64_t cell) : enc_(enc), cell_(cell) {}

  State initial() const { return {}; }
  bool accepting(const State&) const { return true; }

  std::optional<State> next(State s, SymbolId a) const {
    if (!framing_ok(enc_, s.pos, a)) return std::nullopt;
    if (a == kSeparator) {
      State fresh;
      fresh.stored = s.stored;
      return fresh;
    }
    const BitSlot& slot = enc_.slot(s.pos++);
    const unsigned bit = a == kBit1 ? 1u : 0u;
    if (slot.field == Field::h1) {
      s.eq = s.eq && bit == bit_of(cell_, slot.bit, slot.width);
    } else if (s.eq && slot.field == Field::r1) {
      if (bit != bit_of(s.stored, slot.bit, slot.width)) return std::nullopt;
    } else if (s.eq && slot.field == Field::w) {
      s.acc = static_cast<std::uint8_t>((s.acc << 1) | bit);
      if (slot.last()) {
        if (s.acc >= kTapeCodes) return std::nullopt;
        s.stored = s.acc;
        s.acc = 0;
      }
    }
    return s;
  }

 private:
  const TraceEncoding& enc_;
  std::uint64_t cell_;
};

// Rejects tuples whose head fields exceed the tape bounds.
class RangeChecker {
 public:
  struct State {
    std::uint32_t pos = 0;
    bool below = false;  // field already known to be strictly below its limit

    auto operator<=>(const State&) const = default;
  };

  RangeChecker(const TraceEncoding& enc, std::uint64_t max_h0, std::uint64_t max_h1)
      : enc_(enc), max_h0_(max_h0), max_h1_(max_h1) {}

  State initial() const { return {}; }
  bool accepting(const State&) const { return true; }

  std::optional<State> next(State s, SymbolId a) const {
    if (!framing_ok(enc_, s.pos, a)) return std::nullopt;
    if (a == kSeparator) return State{};
    const BitSlot& slot = enc_.slot(s.pos++);
    if (slot.field != Field::h0 && slot.field != Field::h1) return s;
    const std::uint64_t limit = slot.field == Field::h0 ? max_h0_ : max_h1_;
    const unsigned bit = a == kBit1 ? 1u : 0u;
    const unsigned lb = bit_of(limit, slot.bit, slot.width);
    if (!s.below) {
      if (bit > lb) return std::nullopt;
      s.below = bit < lb;
    }
    if (slot.last()) s.below = false;
    return s;
  }

 private:
  const TraceEncoding& enc_;
  std::uint64_t max_h0_;
  std::uint64_t max_h1_;
};

// Holds the contents of one block of worktape cells (six-field layout) and
// follows the work head through the m1 stream, checking r1 and applying w
// whenever the head is inside the block.
class BlockChecker {
 public:
  struct State {
    std::uint32_t pos = 0;
    std::uint32_t head = 0;       // absolute work head position
    std::uint64_t contents = 0;   // base-3 digits, cell `lo` most significant
    std::uint8_t acc = 0;
    std::uint8_t move = 0;

    auto operator<=>(const State&) const = default;
  };

  // Cells [lo, lo + size) out of `cells` in total. `writable` lists the tape
  // codes the machine can ever write.
  BlockChecker(const TraceEncoding& enc, std::uint32_t lo, std::uint32_t size, std::uint32_t cells,
               std::vector<bool> writable)
      : enc_(enc), lo_(lo), size_(size), cells_(cells), writable_(std::move(writable)) {}

  State initial() const { return {}; }
  bool accepting(const State&) const { return true; }

  std::optional<State> next(State s, SymbolId a) const {
    if (!framing_ok(enc_, s.pos, a)) return std::nullopt;
    if (a == kSeparator) {
      s.pos = 0;
      s.head = static_cast<std::uint32_t>(static_cast<long>(s.head) + offset(static_cast<Move>(s.move)));
      s.move = 0;
      return s;
    }
    const BitSlot& slot = enc_.slot(s.pos++);
    const unsigned bit = a == kBit1 ? 1u : 0u;
    const bool inside = s.head >= lo_ && s.head < lo_ + size_;
    if (slot.field == Field::r1 && inside) {
      if (bit != bit_of(cell(s, s.head - lo_), slot.bit, slot.width)) return std::nullopt;
    } else if (slot.field == Field::m1 || slot.field == Field::w) {
      s.acc = static_cast<std::uint8_t>((s.acc << 1) | bit);
      if (!slot.last()) return s;
      const std::uint8_t code = s.acc;
      s.acc = 0;
      if (slot.field == Field::m1) {
        if (code >= kMoveCodes) return std::nullopt;
        const long to = static_cast<long>(s.head) + offset(static_cast<Move>(code));
        if (to < 0 || to >= static_cast<long>(cells_)) return std::nullopt;
        s.move = code;
      } else {
        if (code >= kTapeCodes || !writable_[code]) return std::nullopt;
        if (inside) s.contents = with_cell(s, s.head - lo_, code);
      }
    }
    return s;
  }

 private:
  std::uint64_t power(std::uint32_t e) const {
    std::uint64_t p = 1;
    while (e-- > 0) p *= 3;
    return p;
  }
  std::uint64_t cell(const State& s, std::uint32_t i) const { return (s.contents / power(size_ - 1 - i)) % 3; }
  std::uint64_t with_cell(const State& s, std::uint32_t i, std::uint64_t v) const {
    const std::uint64_t p = power(size_ - 1 - i);
    return s.contents - cell(s, i) * p + v * p;
  }

  const TraceEncoding& enc_;
  std::uint32_t lo_;
  std::uint32_t size_;
  std::uint32_t cells_;
  std::vector<bool> writable_;
};

}  // namespace checkers
}  // namespace dfaint
