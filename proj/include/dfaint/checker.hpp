#pragma once

// Builds explicit DFAs from small state-machine descriptions ("checkers").
// A checker exposes an initial abstract state, a partial step function (no
// successor means the input is rejected for good) and an acceptance
// predicate. Materialization enumerates the reachable abstract states in
// breadth-first order and sends every missing successor to one shared dead
// state.

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfaint/dfa.hpp"

namespace dfaint {

template <class C>
concept Checker = requires(const C& c, const typename C::State& s, SymbolId a) {
  { c.initial() } -> std::same_as<typename C::State>;
  { c.next(s, a) } -> std::same_as<std::optional<typename C::State>>;
  { c.accepting(s) } -> std::convertible_to<bool>;
  requires std::totally_ordered<typename C::State>;
};

template <Checker C>
Dfa materialize(const C& checker, const Alphabet& alphabet, std::string name) {
  using State = typename C::State;
  const std::size_t sigma = alphabet.size();
  std::vector<State> states{checker.initial()};
  std::map<State, StateId> ids{{states.front(), 0}};
  std::vector<std::optional<StateId>> raw;  // nullopt = dead
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    for (SymbolId a = 0; a < sigma; ++a) {
      const auto succ = checker.next(states[cur], a);
      if (!succ) {
        raw.emplace_back();
        continue;
      }
      auto [it, inserted] = ids.try_emplace(*succ, static_cast<StateId>(states.size()));
      if (inserted) states.push_back(*succ);
      raw.emplace_back(it->second);
    }
  }

  std::vector<StateId> finals;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (checker.accepting(states[s])) finals.push_back(static_cast<StateId>(s));
  }
  bool need_dead = false;
  for (const auto& t : raw) need_dead = need_dead || !t;
  const auto dead = static_cast<StateId>(states.size());
  const std::size_t count = states.size() + (need_dead ? 1 : 0);
  std::vector<StateId> table;
  table.reserve(count * sigma);
  for (const auto& t : raw) table.push_back(t ? *t : dead);
  if (need_dead) table.insert(table.end(), sigma, dead);
  return Dfa(std::move(name), alphabet, count, std::move(table), 0, std::move(finals));
}

}  // namespace dfaint
