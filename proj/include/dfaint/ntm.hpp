#pragma once

// Offline nondeterministic Turing machine: read-only input tape with
// endmarkers at positions 0 and n+1, one worktape over {0, 1, #} bounded to S
// cells. Acceptance is by reaching an accepting state, which must have no
// outgoing transitions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfaint/dfa.hpp"
#include "dfaint/error.hpp"

namespace dfaint {

// What the input head sees. The numeric values double as the 2-bit trace codes.
enum class InputSymbol : std::uint8_t { zero = 0, one = 1, left_end = 2, right_end = 3 };
enum class TapeSymbol : std::uint8_t { zero = 0, one = 1, hash = 2 };
enum class Move : std::uint8_t { left = 0, right = 1, stay = 2 };

inline constexpr std::size_t kInputSymbols = 4;
inline constexpr std::size_t kTapeSymbols = 3;

inline char to_char(InputSymbol s) { return "01<>"[static_cast<int>(s)]; }
inline char to_char(TapeSymbol s) { return "01#"[static_cast<int>(s)]; }
inline char to_char(Move m) { return "LRS"[static_cast<int>(m)]; }

inline int offset(Move m) { return m == Move::left ? -1 : m == Move::right ? 1 : 0; }

struct Transition {
  StateId target = 0;
  TapeSymbol write = TapeSymbol::zero;
  Move input_move = Move::stay;
  Move work_move = Move::stay;

  auto operator<=>(const Transition&) const = default;
};

struct Rule {
  StateId from = 0;
  InputSymbol read_input = InputSymbol::zero;
  TapeSymbol read_work = TapeSymbol::zero;
  Transition to;

  auto operator<=>(const Rule&) const = default;
};

class OfflineNtm {
 public:
  OfflineNtm(std::string name, std::size_t state_count, StateId initial,
             std::vector<StateId> accepting, const std::vector<Rule>& rules)
      : name_(std::move(name)),
        state_count_(state_count),
        initial_(initial),
        accepting_(state_count, 0),
        delta_(state_count * kInputSymbols * kTapeSymbols) {
    if (state_count_ == 0) throw InvalidMachine("machine '" + name_ + "' has no states");
    if (initial_ >= state_count_) throw InvalidMachine("initial state " + std::to_string(initial_) + " is undeclared");
    for (StateId q : accepting) {
      if (q >= state_count_) throw InvalidMachine("accepting state " + std::to_string(q) + " is undeclared");
      accepting_[q] = 1;
    }
    for (const Rule& r : rules) {
      if (r.from >= state_count_ || r.to.target >= state_count_) {
        throw InvalidMachine("transition references an undeclared state in machine '" + name_ + "'");
      }
      if (accepting_[r.from]) {
        throw InvalidMachine("accepting state " + std::to_string(r.from) + " has an outgoing transition");
      }
      auto& cell = delta_[slot(r.from, r.read_input, r.read_work)];
      auto it = std::lower_bound(cell.begin(), cell.end(), r.to);
      if (it == cell.end() || *it != r.to) cell.insert(it, r.to);
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t state_count() const noexcept { return state_count_; }
  StateId initial() const noexcept { return initial_; }
  bool is_accepting(StateId q) const { return accepting_[q] != 0; }

  std::vector<StateId> accepting() const {
    std::vector<StateId> out;
    for (std::size_t q = 0; q < state_count_; ++q) {
      if (accepting_[q]) out.push_back(static_cast<StateId>(q));
    }
    return out;
  }

  // Transitions for (q, r0, r1), sorted by (target, write, input move, work move).
  const std::vector<Transition>& transitions(StateId q, InputSymbol r0, TapeSymbol r1) const {
    return delta_[slot(q, r0, r1)];
  }

  bool allows(StateId q, InputSymbol r0, TapeSymbol r1, const Transition& t) const {
    const auto& cell = transitions(q, r0, r1);
    return std::binary_search(cell.begin(), cell.end(), t);
  }

  // All rules in canonical order.
  std::vector<Rule> rules() const {
    std::vector<Rule> out;
    for (std::size_t q = 0; q < state_count_; ++q) {
      for (std::size_t r0 = 0; r0 < kInputSymbols; ++r0) {
        for (std::size_t r1 = 0; r1 < kTapeSymbols; ++r1) {
          for (const auto& t : delta_[slot(static_cast<StateId>(q), static_cast<InputSymbol>(r0),
                                           static_cast<TapeSymbol>(r1))]) {
            out.push_back({static_cast<StateId>(q), static_cast<InputSymbol>(r0), static_cast<TapeSymbol>(r1), t});
          }
        }
      }
    }
    return out;
  }

  bool uses_stay() const {
    for (const auto& r : rules()) {
      if (r.to.input_move == Move::stay || r.to.work_move == Move::stay) return true;
    }
    return false;
  }

  bool writes(TapeSymbol s) const {
    for (const auto& r : rules()) {
      if (r.to.write == s) return true;
    }
    return false;
  }

  bool operator==(const OfflineNtm& o) const {
    return name_ == o.name_ && state_count_ == o.state_count_ && initial_ == o.initial_ &&
           accepting_ == o.accepting_ && delta_ == o.delta_;
  }

 private:
  std::size_t slot(StateId q, InputSymbol r0, TapeSymbol r1) const {
    return (q * kInputSymbols + static_cast<std::size_t>(r0)) * kTapeSymbols + static_cast<std::size_t>(r1);
  }

  std::string name_;
  std::size_t state_count_;
  StateId initial_;
  std::vector<char> accepting_;
  std::vector<std::vector<Transition>> delta_;
};

// Lint findings that do not make a machine invalid.
inline std::vector<std::string> lint(const OfflineNtm& m) {
  std::vector<std::string> out;
  if (m.writes(TapeSymbol::hash)) {
    out.push_back("machine '" + m.name() +
                  "' writes '#'; the number of delimiters on the worktape is not statically bounded");
  }
  if (m.accepting().empty()) out.push_back("machine '" + m.name() + "' has no accepting state");
  return out;
}

// Input strings are kept as text over {0, 1}.
inline void check_input(std::string_view input) {
  for (char c : input) {
    if (c != '0' && c != '1') throw ValidationError("input must be a bit string, found '" + std::string(1, c) + "'");
  }
}

inline InputSymbol input_at(std::string_view input, std::size_t pos) {
  if (pos == 0) return InputSymbol::left_end;
  if (pos == input.size() + 1) return InputSymbol::right_end;
  return input.at(pos - 1) == '1' ? InputSymbol::one : InputSymbol::zero;
}

struct Configuration {
  StateId state = 0;
  std::size_t input_head = 1;
  std::size_t work_head = 0;
  std::vector<TapeSymbol> worktape;

  auto operator<=>(const Configuration&) const = default;

  std::string to_string() const {
    std::string tape;
    for (TapeSymbol s : worktape) tape += to_char(s);
    return "(q" + std::to_string(state) + ", h0=" + std::to_string(input_head) +
           ", h1=" + std::to_string(work_head) + ", tape=" + tape + ")";
  }
};

inline Configuration initial_configuration(const OfflineNtm& m, std::size_t space_cells) {
  return {m.initial(), 1, 0, std::vector<TapeSymbol>(space_cells, TapeSymbol::zero)};
}

inline bool fits(const Configuration& c, std::size_t input_length, std::size_t space_cells) {
  return c.input_head <= input_length + 1 && c.worktape.size() == space_cells && c.work_head < space_cells;
}

// Applies one transition; false when a head would leave its tape.
inline bool apply(const Transition& t, std::size_t input_length, Configuration& c) {
  const long h0 = static_cast<long>(c.input_head) + offset(t.input_move);
  const long h1 = static_cast<long>(c.work_head) + offset(t.work_move);
  if (h0 < 0 || h0 > static_cast<long>(input_length) + 1) return false;
  if (h1 < 0 || h1 >= static_cast<long>(c.worktape.size())) return false;
  c.worktape[c.work_head] = t.write;
  c.state = t.target;
  c.input_head = static_cast<std::size_t>(h0);
  c.work_head = static_cast<std::size_t>(h1);
  return true;
}

// Successor configurations in canonical transition order. Empty for halted
// configurations.
inline std::vector<Configuration> step(const OfflineNtm& m, std::string_view input, const Configuration& c) {
  std::vector<Configuration> out;
  const auto& ts = m.transitions(c.state, input_at(input, c.input_head), c.worktape[c.work_head]);
  for (const auto& t : ts) {
    Configuration next = c;
    if (apply(t, input.size(), next)) out.push_back(std::move(next));
  }
  return out;
}

// A computation: transitions[i] leads from configurations[i] to
// configurations[i + 1].
struct Run {
  std::vector<Configuration> configurations;
  std::vector<Transition> transitions;

  std::size_t length() const noexcept { return transitions.size(); }
  bool operator==(const Run&) const = default;
};

// Checks that a run starts in the initial configuration, follows the
// transition relation and ends accepting.
inline bool is_accepting_run(const OfflineNtm& m, std::string_view input, std::size_t space_cells, const Run& run) {
  if (run.configurations.size() != run.transitions.size() + 1) return false;
  if (run.configurations.front() != initial_configuration(m, space_cells)) return false;
  for (std::size_t i = 0; i < run.transitions.size(); ++i) {
    const Configuration& c = run.configurations[i];
    if (!fits(c, input.size(), space_cells)) return false;
    if (!m.allows(c.state, input_at(input, c.input_head), c.worktape[c.work_head], run.transitions[i])) return false;
    Configuration next = c;
    if (!apply(run.transitions[i], input.size(), next) || next != run.configurations[i + 1]) return false;
  }
  return m.is_accepting(run.configurations.back().state);
}

// Bijection between configurations and 0..count-1 for fixed (|Q|, n, S).
class ConfigSpace {
 public:
  ConfigSpace(std::size_t states, std::size_t input_length, std::size_t space_cells, std::uint64_t cap)
      : states_(states), positions_(input_length + 2), cells_(space_cells) {
    if (space_cells == 0) throw ValidationError("space bound must be at least one cell");
    std::uint64_t tapes = 1;
    for (std::size_t i = 0; i < cells_; ++i) {
      tapes *= 3;
      if (tapes > cap) throw too_large(cap);
    }
    tapes_ = tapes;
    const long double total = static_cast<long double>(states_) * positions_ * cells_ * tapes_;
    if (total > static_cast<long double>(cap)) throw too_large(cap);
    count_ = states_ * positions_ * cells_ * tapes_;
  }

  std::uint64_t count() const noexcept { return count_; }
  std::size_t space_cells() const noexcept { return cells_; }

  std::uint64_t index(const Configuration& c) const {
    std::uint64_t tape = 0;
    for (TapeSymbol s : c.worktape) tape = tape * 3 + static_cast<std::uint64_t>(s);
    return ((static_cast<std::uint64_t>(c.state) * positions_ + c.input_head) * cells_ + c.work_head) * tapes_ + tape;
  }

  Configuration at(std::uint64_t idx) const {
    Configuration c;
    c.worktape.resize(cells_);
    std::uint64_t tape = idx % tapes_;
    idx /= tapes_;
    for (std::size_t i = cells_; i-- > 0;) {
      c.worktape[i] = static_cast<TapeSymbol>(tape % 3);
      tape /= 3;
    }
    c.work_head = static_cast<std::size_t>(idx % cells_);
    idx /= cells_;
    c.input_head = static_cast<std::size_t>(idx % positions_);
    c.state = static_cast<StateId>(idx / positions_);
    return c;
  }

 private:
  StateSpaceTooLarge too_large(std::uint64_t cap) const {
    return StateSpaceTooLarge("configuration space for |Q|=" + std::to_string(states_) + ", n+2=" +
                              std::to_string(positions_) + ", S=" + std::to_string(cells_) +
                              " exceeds the cap of " + std::to_string(cap));
  }

  std::uint64_t states_;
  std::uint64_t positions_;
  std::uint64_t cells_;
  std::uint64_t tapes_ = 1;
  std::uint64_t count_ = 0;
};

}  // namespace dfaint
