#pragma once

// Core automaton data model: alphabets, total DFAs, intersection instances
// and witnesses.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfaint/error.hpp"

namespace dfaint {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;
using Word = std::vector<SymbolId>;

// Ordered set of distinct printable tokens. Symbols are referred to by their
// index in this order everywhere else.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].empty()) throw ValidationError("alphabet token must be non-empty");
      for (std::size_t j = 0; j < i; ++j) {
        if (tokens_[i] == tokens_[j]) {
          throw ValidationError("alphabet tokens must be pairwise distinct: '" + tokens_[i] + "'");
        }
      }
    }
  }

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::string& token(SymbolId s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  std::optional<SymbolId> find(std::string_view tok) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i] == tok) return static_cast<SymbolId>(i);
    }
    return std::nullopt;
  }

  SymbolId at(std::string_view tok) const {
    if (auto s = find(tok)) return *s;
    throw UnknownSymbol("symbol '" + std::string(tok) + "' is not in the alphabet");
  }

  Word encode(const std::vector<std::string>& toks) const {
    Word w;
    w.reserve(toks.size());
    for (const auto& t : toks) w.push_back(at(t));
    return w;
  }

  // Splits a string into single-character tokens.
  Word encode_chars(std::string_view chars) const {
    Word w;
    w.reserve(chars.size());
    for (char c : chars) w.push_back(at(std::string_view(&c, 1)));
    return w;
  }

  // Concatenates tokens when all are single characters, else joins with spaces.
  std::string render(const Word& w) const {
    bool single = std::all_of(tokens_.begin(), tokens_.end(),
                              [](const std::string& t) { return t.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!single && i > 0) out += ' ';
      out += token(w[i]);
    }
    return out;
  }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> tokens_;
};

// Total deterministic automaton with states 0..m-1. The transition table is
// row-major: table[state * |alphabet| + symbol].
//
// Dead states are derived, not declared: every non-final state whose
// transitions all loop back to itself.
class Dfa {
 public:
  Dfa(std::string name, Alphabet alphabet, std::size_t state_count,
      std::vector<StateId> table, StateId initial, std::vector<StateId> finals)
      : name_(std::move(name)),
        alphabet_(std::move(alphabet)),
        state_count_(state_count),
        table_(std::move(table)),
        initial_(initial),
        final_(state_count, 0),
        dead_(state_count, 0) {
    if (state_count_ == 0) throw ValidationError("DFA '" + name_ + "' must have at least one state");
    if (alphabet_.empty()) throw ValidationError("DFA '" + name_ + "' has an empty alphabet");
    if (table_.size() != state_count_ * alphabet_.size()) {
      throw ValidationError("DFA '" + name_ + "': transition mapping must be total over states x alphabet");
    }
    if (initial_ >= state_count_) throw ValidationError("DFA '" + name_ + "': initial state out of range");
    for (StateId t : table_) {
      if (t >= state_count_) throw ValidationError("DFA '" + name_ + "': transition target out of range");
    }
    for (StateId f : finals) {
      if (f >= state_count_) throw ValidationError("DFA '" + name_ + "': final state out of range");
      final_[f] = 1;
    }
    const std::size_t k = alphabet_.size();
    for (std::size_t s = 0; s < state_count_; ++s) {
      if (final_[s]) continue;
      bool loops = true;
      for (std::size_t a = 0; a < k && loops; ++a) loops = table_[s * k + a] == s;
      dead_[s] = loops ? 1 : 0;
    }
  }

  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  StateId initial() const noexcept { return initial_; }
  const std::vector<StateId>& table() const noexcept { return table_; }

  StateId next(StateId s, SymbolId a) const { return table_[s * alphabet_.size() + a]; }
  bool is_final(StateId s) const { return final_[s] != 0; }
  bool is_dead(StateId s) const { return dead_[s] != 0; }

  std::vector<StateId> finals() const { return collect(final_); }
  std::vector<StateId> dead_states() const { return collect(dead_); }

  Dfa renamed(std::string name) const {
    Dfa copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  bool operator==(const Dfa& o) const {
    return name_ == o.name_ && alphabet_ == o.alphabet_ && state_count_ == o.state_count_ &&
           table_ == o.table_ && initial_ == o.initial_ && final_ == o.final_;
  }

 private:
  std::vector<StateId> collect(const std::vector<char>& flags) const {
    std::vector<StateId> out;
    for (std::size_t s = 0; s < flags.size(); ++s) {
      if (flags[s]) out.push_back(static_cast<StateId>(s));
    }
    return out;
  }

  std::string name_;
  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<StateId> table_;
  StateId initial_;
  std::vector<char> final_;
  std::vector<char> dead_;
};

inline bool accepts(const Dfa& dfa, const Word& input) {
  StateId s = dfa.initial();
  for (SymbolId a : input) {
    if (a >= dfa.alphabet().size()) {
      throw UnknownSymbol("symbol id " + std::to_string(a) + " is not in the alphabet of '" + dfa.name() + "'");
    }
    s = dfa.next(s, a);
  }
  return dfa.is_final(s);
}

inline bool accepts(const Dfa& dfa, const std::vector<std::string>& tokens) {
  return accepts(dfa, dfa.alphabet().encode(tokens));
}

// Bit length of a plain binary encoding of the automaton: one target per
// (state, symbol) pair, one final flag per state and the initial state.
inline std::uint64_t serialized_bits(const Dfa& dfa) {
  std::uint64_t m = dfa.state_count();
  std::uint64_t id_bits = 0;
  while ((std::uint64_t{1} << id_bits) < m) ++id_bits;
  return m * dfa.alphabet().size() * id_bits + m + id_bits;
}

// One-state automaton accepting every word.
inline Dfa universal_dfa(const Alphabet& alphabet, std::string name = "universal") {
  return Dfa(std::move(name), alphabet, 1, std::vector<StateId>(alphabet.size(), 0), 0, {0});
}

// Counts occurrences of `counted` modulo `modulus`; final on the listed residues.
inline Dfa counter_dfa(const Alphabet& alphabet, SymbolId counted, std::size_t modulus,
                       const std::vector<StateId>& residues, std::string name = "counter") {
  const std::size_t k = alphabet.size();
  std::vector<StateId> table(modulus * k);
  for (std::size_t s = 0; s < modulus; ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      table[s * k + a] = static_cast<StateId>(a == counted ? (s + 1) % modulus : s);
    }
  }
  return Dfa(std::move(name), alphabet, modulus, std::move(table), 0, residues);
}

// Ordered family of automata over one shared alphabet.
class IntersectionInstance {
 public:
  explicit IntersectionInstance(std::vector<Dfa> dfas) : dfas_(std::move(dfas)) {
    if (dfas_.empty()) throw ValidationError("an intersection instance needs at least one DFA");
    for (const auto& d : dfas_) {
      if (!(d.alphabet() == dfas_.front().alphabet())) {
        throw AlphabetMismatch("DFA '" + d.name() + "' does not share the alphabet of '" +
                               dfas_.front().name() + "'");
      }
    }
  }

  const std::vector<Dfa>& dfas() const noexcept { return dfas_; }
  std::size_t size() const noexcept { return dfas_.size(); }
  const Dfa& operator[](std::size_t i) const { return dfas_[i]; }
  const Alphabet& alphabet() const noexcept { return dfas_.front().alphabet(); }

  std::size_t max_states() const {
    std::size_t m = 0;
    for (const auto& d : dfas_) m = std::max(m, d.state_count());
    return m;
  }

  // Product of member state counts, saturating at SIZE_MAX.
  std::size_t product_size() const {
    std::size_t p = 1;
    for (const auto& d : dfas_) {
      if (p > SIZE_MAX / d.state_count()) return SIZE_MAX;
      p *= d.state_count();
    }
    return p;
  }

  bool accepts_all(const Word& w) const {
    return std::all_of(dfas_.begin(), dfas_.end(), [&](const Dfa& d) { return accepts(d, w); });
  }

 private:
  std::vector<Dfa> dfas_;
};

struct Witness {
  Word symbols;

  std::size_t size() const noexcept { return symbols.size(); }
  bool operator==(const Witness&) const = default;
};

}  // namespace dfaint
