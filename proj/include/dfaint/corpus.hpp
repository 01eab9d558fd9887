#pragma once

// Seeded generators for test and benchmark corpora.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dfaint/dfa.hpp"
#include "dfaint/ntm.hpp"

namespace dfaint {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::size_t range(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

 private:
  std::mt19937_64 engine_;
};

inline Alphabet letters(std::size_t count) {
  std::vector<std::string> toks;
  for (std::size_t i = 0; i < count; ++i) toks.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(std::move(toks));
}

inline Dfa random_dfa(Rng& rng, const Alphabet& sigma, std::size_t max_states, std::string name = "random") {
  const std::size_t m = rng.range(1, max_states);
  std::vector<StateId> table(m * sigma.size());
  for (auto& t : table) t = static_cast<StateId>(rng.range(0, m - 1));
  std::vector<StateId> finals;
  for (std::size_t s = 0; s < m; ++s) {
    if (rng.chance(0.4)) finals.push_back(static_cast<StateId>(s));
  }
  return Dfa(std::move(name), sigma, m, std::move(table), static_cast<StateId>(rng.range(0, m - 1)),
             std::move(finals));
}

struct InstanceShape {
  std::size_t min_dfas = 1;
  std::size_t max_dfas = 3;
  std::size_t max_states = 5;
  std::size_t max_alphabet = 3;
};

inline IntersectionInstance random_instance(Rng& rng, const InstanceShape& shape = {}) {
  const Alphabet sigma = letters(rng.range(1, shape.max_alphabet));
  const std::size_t k = rng.range(shape.min_dfas, shape.max_dfas);
  std::vector<Dfa> dfas;
  for (std::size_t i = 0; i < k; ++i) dfas.push_back(random_dfa(rng, sigma, shape.max_states, "d" + std::to_string(i)));
  return IntersectionInstance(std::move(dfas));
}

struct MachineShape {
  std::size_t min_states = 2;
  std::size_t max_states = 4;
  bool initial_accepting = false;
  double rule_density = 0.75;  // chance that a (q, r0, r1) entry is defined
  bool write_hash = true;      // allow '#' as a written symbol
};

// Random offline NTM with states 0..Q-1, initial 0 and the last state
// accepting (unless there is a single non-accepting state).
inline OfflineNtm random_machine(Rng& rng, const MachineShape& shape = {}, std::string name = "random") {
  const std::size_t q = rng.range(std::min(shape.min_states, shape.max_states), shape.max_states);
  std::vector<StateId> accepting;
  if (shape.initial_accepting) {
    accepting.push_back(0);
  } else if (q > 1) {
    accepting.push_back(static_cast<StateId>(q - 1));
  }
  std::vector<char> is_acc(q, 0);
  for (StateId a : accepting) is_acc[a] = 1;

  std::vector<Rule> rules;
  for (std::size_t s = 0; s < q; ++s) {
    if (is_acc[s]) continue;
    for (std::size_t r0 = 0; r0 < kInputSymbols; ++r0) {
      for (std::size_t r1 = 0; r1 < kTapeSymbols; ++r1) {
        if (!rng.chance(shape.rule_density)) continue;
        const std::size_t branches = rng.range(1, 2);
        for (std::size_t b = 0; b < branches; ++b) {
          Rule r;
          r.from = static_cast<StateId>(s);
          r.read_input = static_cast<InputSymbol>(r0);
          r.read_work = static_cast<TapeSymbol>(r1);
          r.to.target = static_cast<StateId>(rng.range(0, q - 1));
          r.to.write = static_cast<TapeSymbol>(rng.range(0, shape.write_hash ? kTapeSymbols - 1 : 1));
          r.to.input_move = static_cast<Move>(rng.range(0, 2));
          r.to.work_move = static_cast<Move>(rng.range(0, 2));
          rules.push_back(r);
        }
      }
    }
  }
  return OfflineNtm(std::move(name), q, 0, std::move(accepting), rules);
}

inline std::string random_input(Rng& rng, std::size_t min_length, std::size_t max_length) {
  std::string s(rng.range(min_length, max_length), '0');
  for (auto& c : s) c = rng.chance(0.5) ? '1' : '0';
  return s;
}

inline bool is_prime(std::size_t x) {
  if (x < 2) return false;
  for (std::size_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

// Smallest prime >= x.
inline std::size_t next_prime(std::size_t x) {
  while (!is_prime(x)) ++x;
  return x;
}

// Moduli of the modular-counter family: the i-th is the smallest prime that is
// at least n * p_i / 2 (p_i the i-th prime) and larger than the previous one.
inline std::vector<std::size_t> counter_moduli(std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  std::size_t p = 2;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t m = next_prime(std::max<std::size_t>(2, n * p / 2));
    if (!out.empty() && m <= out.back()) m = next_prime(out.back() + 1);
    out.push_back(m);
    p = next_prime(p + 1);
  }
  return out;
}

// k counters over {a}; counter i accepts lengths congruent to m_i - 1 modulo
// m_i. The moduli are distinct primes, so the shortest witness has length
// prod(m_i) - 1 and a breadth-first search visits every product state.
inline IntersectionInstance counter_family(std::size_t n, std::size_t k) {
  const Alphabet sigma({"a"});
  std::vector<Dfa> dfas;
  for (std::size_t m : counter_moduli(n, k)) {
    dfas.push_back(counter_dfa(sigma, 0, m, {static_cast<StateId>(m - 1)}, "mod" + std::to_string(m)));
  }
  return IntersectionInstance(std::move(dfas));
}

// Accepts iff the input contains a 1: scan right over 0s.
inline OfflineNtm contains_one_machine() {
  return OfflineNtm("contains_one", 2, 0, {1},
                    {Rule{0, InputSymbol::zero, TapeSymbol::zero, {0, TapeSymbol::zero, Move::right, Move::stay}},
                     Rule{0, InputSymbol::one, TapeSymbol::zero, {1, TapeSymbol::zero, Move::stay, Move::stay}}});
}

// Copies each input bit into worktape cell 0 and accepts at the right
// endmarker iff the last bit copied was a 1.
inline OfflineNtm last_bit_machine() {
  std::vector<Rule> rules;
  for (TapeSymbol r1 : {TapeSymbol::zero, TapeSymbol::one}) {
    rules.push_back({0, InputSymbol::zero, r1, {0, TapeSymbol::zero, Move::right, Move::stay}});
    rules.push_back({0, InputSymbol::one, r1, {0, TapeSymbol::one, Move::right, Move::stay}});
  }
  rules.push_back({0, InputSymbol::right_end, TapeSymbol::one, {1, TapeSymbol::hash, Move::stay, Move::stay}});
  rules.push_back({1, InputSymbol::right_end, TapeSymbol::hash, {2, TapeSymbol::hash, Move::stay, Move::stay}});
  return OfflineNtm("last_bit", 3, 0, {2}, rules);
}

}  // namespace dfaint
