#pragma once

// Intersection non-emptiness with shortest-witness extraction.
//
// Both strategies run the same breadth-first search: layers in order of
// distance, successors in alphabet order, first discoverer becomes the
// parent. The returned witness is therefore the lexicographically least
// among the shortest accepted words, whichever strategy is used.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dfaint/dfa.hpp"
#include "dfaint/product.hpp"

namespace dfaint {

enum class Strategy { materialized, on_the_fly };

struct SearchOptions {
  Strategy strategy = Strategy::on_the_fly;
  // Upper bound on witness length; unset means unbounded.
  std::optional<std::size_t> step_cap;
  // Only consulted by the materialized strategy.
  std::size_t size_cap = kDefaultProductCap;
};

struct SearchResult {
  std::optional<Witness> witness;
  // Distinct product states discovered by the search.
  std::size_t states_explored = 0;
};

namespace detail {

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

// Node bookkeeping shared by both strategies.
struct BfsTree {
  std::vector<std::size_t> parent;
  std::vector<SymbolId> via;

  std::size_t add(std::size_t p, SymbolId a) {
    parent.push_back(p);
    via.push_back(a);
    return parent.size() - 1;
  }

  Witness path_to(std::size_t node) const {
    Witness w;
    for (std::size_t v = node; parent[v] != kNoParent; v = parent[v]) w.symbols.push_back(via[v]);
    return {Word(w.symbols.rbegin(), w.symbols.rend())};
  }
};

inline SearchResult search_materialized(const IntersectionInstance& inst, const SearchOptions& opt) {
  ProductOptions popt;
  popt.size_cap = opt.size_cap;
  const Dfa prod = product(inst, popt);
  const std::size_t sigma = prod.alphabet().size();

  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> node_of(prod.state_count(), kUnseen);
  std::vector<StateId> state_of;
  BfsTree tree;

  SearchResult res;
  auto discover = [&](StateId s, std::size_t parent, SymbolId a) -> std::optional<std::size_t> {
    if (node_of[s] != kUnseen) return std::nullopt;
    node_of[s] = tree.add(parent, a);
    state_of.push_back(s);
    return node_of[s];
  };

  discover(prod.initial(), kNoParent, 0);
  if (prod.is_final(prod.initial())) {
    res.witness = Witness{};
    res.states_explored = 1;
    return res;
  }
  std::size_t depth = 0;
  std::size_t layer_end = 1;
  for (std::size_t cur = 0; cur < state_of.size(); ++cur) {
    if (cur == layer_end) {
      ++depth;
      layer_end = state_of.size();
    }
    if (opt.step_cap && depth >= *opt.step_cap) break;
    const StateId s = state_of[cur];
    if (prod.is_dead(s)) continue;
    for (SymbolId a = 0; a < sigma; ++a) {
      const StateId t = prod.next(s, a);
      if (auto node = discover(t, cur, a); node && prod.is_final(t)) {
        res.witness = tree.path_to(*node);
        res.states_explored = state_of.size();
        return res;
      }
    }
  }
  res.states_explored = state_of.size();
  return res;
}

// Explores state tuples lazily. Tuples live in one flat arena; the visited
// set stores arena indices and hashes through the arena.
class TupleArena {
 public:
  explicit TupleArena(std::size_t width) : width_(width) {}

  std::size_t size() const noexcept { return width_ == 0 ? 0 : data_.size() / width_; }
  const StateId* at(std::size_t i) const { return data_.data() + i * width_; }
  StateId* push() {
    data_.resize(data_.size() + width_);
    return data_.data() + data_.size() - width_;
  }
  void pop() { data_.resize(data_.size() - width_); }
  std::size_t width() const noexcept { return width_; }

 private:
  std::size_t width_;
  std::vector<StateId> data_;
};

// Open-addressing set of arena indices, hashed through the tuples they
// name. Slots hold index + 1; 0 marks an empty slot.
class TupleSet {
 public:
  explicit TupleSet(const TupleArena& arena) : arena_(arena), slots_(1024, 0) {}

  // Inserts arena index i unless an equal tuple is already present.
  bool insert(std::size_t i) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    std::size_t pos = hash(arena_.at(i)) & (slots_.size() - 1);
    while (slots_[pos] != 0) {
      if (equal(slots_[pos] - 1, i)) return false;
      pos = (pos + 1) & (slots_.size() - 1);
    }
    slots_[pos] = i + 1;
    ++count_;
    return true;
  }

 private:
  std::size_t hash(const StateId* t) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t j = 0; j < arena_.width(); ++j) {
      h = (h ^ t[j]) * 0xbf58476d1ce4e5b9ull;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }

  bool equal(std::size_t a, std::size_t b) const noexcept {
    const StateId* x = arena_.at(a);
    const StateId* y = arena_.at(b);
    for (std::size_t j = 0; j < arena_.width(); ++j) {
      if (x[j] != y[j]) return false;
    }
    return true;
  }

  void grow() {
    std::vector<std::size_t> old(slots_.size() * 2, 0);
    old.swap(slots_);
    for (std::size_t v : old) {
      if (v == 0) continue;
      std::size_t pos = hash(arena_.at(v - 1)) & (slots_.size() - 1);
      while (slots_[pos] != 0) pos = (pos + 1) & (slots_.size() - 1);
      slots_[pos] = v;
    }
  }

  const TupleArena& arena_;
  std::vector<std::size_t> slots_;
  std::size_t count_ = 0;
};

inline SearchResult search_on_the_fly(const IntersectionInstance& inst, const SearchOptions& opt) {
  const std::size_t k = inst.size();
  const std::size_t sigma = inst.alphabet().size();
  TupleArena arena(k);
  TupleSet seen(arena);
  BfsTree tree;

  auto all_final = [&](const StateId* t) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!inst[i].is_final(t[i])) return false;
    }
    return true;
  };

  SearchResult res;
  StateId* init = arena.push();
  for (std::size_t i = 0; i < k; ++i) init[i] = inst[i].initial();
  seen.insert(0);
  tree.add(kNoParent, 0);
  if (all_final(arena.at(0))) {
    res.witness = Witness{};
    res.states_explored = 1;
    return res;
  }

  std::size_t depth = 0;
  std::size_t layer_end = 1;
  for (std::size_t cur = 0; cur < arena.size(); ++cur) {
    if (cur == layer_end) {
      ++depth;
      layer_end = arena.size();
    }
    if (opt.step_cap && depth >= *opt.step_cap) break;
    for (SymbolId a = 0; a < sigma; ++a) {
      StateId* succ = arena.push();
      const StateId* from = arena.at(cur);  // after push: the arena may have moved
      bool dead = false;
      for (std::size_t i = 0; i < k; ++i) {
        succ[i] = inst[i].next(from[i], a);
        if (inst[i].is_dead(succ[i])) {
          dead = true;
          break;
        }
      }
      // A dead component can never leave its dead state, so the tuple cannot
      // reach a final tuple and is not worth recording.
      if (dead || !seen.insert(arena.size() - 1)) {
        arena.pop();
        continue;
      }
      const std::size_t node = tree.add(cur, a);
      if (all_final(arena.at(node))) {
        res.witness = tree.path_to(node);
        res.states_explored = arena.size();
        return res;
      }
    }
  }
  res.states_explored = arena.size();
  return res;
}

}  // namespace detail

inline SearchResult search(const IntersectionInstance& inst, const SearchOptions& opt = {}) {
  return opt.strategy == Strategy::materialized ? detail::search_materialized(inst, opt)
                                                : detail::search_on_the_fly(inst, opt);
}

inline std::optional<Witness> intersect_nonempty(const IntersectionInstance& inst,
                                                 Strategy strategy = Strategy::on_the_fly,
                                                 std::size_t size_cap = kDefaultProductCap) {
  SearchOptions opt;
  opt.strategy = strategy;
  opt.size_cap = size_cap;
  return search(inst, opt).witness;
}

// Deterministic form of the counter-bounded nondeterministic search: only
// witnesses of length <= step_cap are reported.
inline std::optional<Witness> bounded_search(const IntersectionInstance& inst, std::size_t step_cap) {
  SearchOptions opt;
  opt.step_cap = step_cap;
  return search(inst, opt).witness;
}

}  // namespace dfaint
