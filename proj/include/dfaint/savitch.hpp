#pragma once

// Divide-and-conquer reachability: b is reachable from a within t steps iff
// some middle configuration m splits the budget into ceil(t/2) and floor(t/2).
// The existential guess is realized by iterating over every configuration of
// the bounded space, so the working set is one configuration per recursion
// level and the depth is ceil(log2 t).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>
#include <string_view>

#include "dfaint/ntm.hpp"
#include "dfaint/oracle.hpp"

namespace dfaint {

// Cheap lower bound on the number of steps from a to b. Each step moves each
// head by at most one cell and rewrites only the cell under the work head, so
// the work head has to visit every cell on which a and b differ.
inline std::uint64_t step_lower_bound(const Configuration& a, const Configuration& b) {
  auto diff = [](std::size_t x, std::size_t y) -> std::uint64_t { return x > y ? x - y : y - x; };
  std::uint64_t lb = std::max(diff(a.input_head, b.input_head), diff(a.work_head, b.work_head));
  std::uint64_t changed = 0;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < a.worktape.size(); ++i) {
    if (a.worktape[i] == b.worktape[i]) continue;
    if (changed++ == 0) lo = i;
    hi = i;
  }
  if (changed > 0) {
    const std::uint64_t span = hi - lo;
    const std::uint64_t tour = std::min(diff(a.work_head, lo) + span + diff(hi, b.work_head),
                                        diff(a.work_head, hi) + span + diff(lo, b.work_head));
    lb = std::max({lb, changed, tour});
  }
  if (lb == 0 && a.state != b.state) lb = 1;
  return lb;
}

namespace detail {

// All-pairs step distances in an abstraction of the configuration graph that
// keeps the state, both heads and at most one tracked worktape cell; every
// other cell may hold any symbol. Each real step is an abstract step, so the
// distances are lower bounds on real ones.
class AbstractDistance {
 public:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::size_t kMaxNodes = 1024;
  static constexpr std::size_t kUntracked = std::numeric_limits<std::size_t>::max();

  AbstractDistance(const OfflineNtm& m, std::string_view input, std::size_t cells, std::size_t tracked)
      : positions_(input.size() + 2),
        cells_(cells),
        tracked_(tracked),
        values_(tracked == kUntracked ? 1 : kTapeSymbols),
        nodes_(m.state_count() * positions_ * cells_ * values_) {
    if (nodes_ > kMaxNodes) {
      nodes_ = 0;
      return;
    }
    std::vector<std::vector<std::size_t>> succ(nodes_);
    for (std::size_t u = 0; u < nodes_; ++u) {
      const std::size_t v = u % values_;
      const std::size_t h1 = (u / values_) % cells_;
      const std::size_t h0 = (u / (values_ * cells_)) % positions_;
      const auto q = static_cast<StateId>(u / (values_ * cells_ * positions_));
      const bool under_head = h1 == tracked_;
      for (std::size_t r1 = 0; r1 < kTapeSymbols; ++r1) {
        if (under_head && r1 != v) continue;
        for (const auto& t : m.transitions(q, input_at(input, h0), static_cast<TapeSymbol>(r1))) {
          const long n0 = static_cast<long>(h0) + offset(t.input_move);
          const long n1 = static_cast<long>(h1) + offset(t.work_move);
          if (n0 < 0 || n0 >= static_cast<long>(positions_) || n1 < 0 || n1 >= static_cast<long>(cells_)) continue;
          const std::size_t nv = under_head ? static_cast<std::size_t>(t.write) : v;
          succ[u].push_back(node(t.target, static_cast<std::size_t>(n0), static_cast<std::size_t>(n1), nv));
        }
      }
    }
    dist_.assign(nodes_ * nodes_, kInf);
    std::vector<std::size_t> queue;
    for (std::size_t src = 0; src < nodes_; ++src) {
      std::uint32_t* row = &dist_[src * nodes_];
      queue.assign(1, src);
      row[src] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        for (std::size_t w : succ[u]) {
          if (row[w] != kInf) continue;
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  // 0 when the abstraction was too large to tabulate.
  std::uint64_t lower_bound(const Configuration& a, const Configuration& b) const {
    if (nodes_ == 0) return 0;
    const std::uint32_t d = dist_[node(a) * nodes_ + node(b)];
    return d == kInf ? std::numeric_limits<std::uint64_t>::max() : d;
  }

 private:
  std::size_t node(StateId q, std::size_t h0, std::size_t h1, std::size_t v) const {
    return ((q * positions_ + h0) * cells_ + h1) * values_ + v;
  }
  std::size_t node(const Configuration& c) const {
    const std::size_t v = tracked_ == kUntracked ? 0 : static_cast<std::size_t>(c.worktape[tracked_]);
    return node(c.state, c.input_head, c.work_head, v);
  }

  std::size_t positions_;
  std::size_t cells_;
  std::size_t tracked_;
  std::size_t values_;
  std::size_t nodes_;
  std::vector<std::uint32_t> dist_;
};

}  // namespace detail

struct SavitchOptions {
  std::uint64_t cap = kDefaultConfigCap;
  // Skip middles that provably cannot split a path (sound lower bounds). With
  // pruning off the recursion tries every middle configuration.
  bool prune = true;
};

// Reachability queries for one machine, input and space bound. The bound
// tables are built once and shared by all queries.
class SavitchReach {
 public:
  SavitchReach(const OfflineNtm& m, std::string_view input, std::size_t space_cells, SavitchOptions opt = {})
      : machine_(m), input_(input), space_(m.state_count(), input.size(), space_cells, opt.cap), prune_(opt.prune) {
    check_input(input_);
    if (!prune_) return;
    abstractions_.emplace_back(m, input_, space_cells, detail::AbstractDistance::kUntracked);
    for (std::size_t c = 0; c < space_cells; ++c) abstractions_.emplace_back(m, input_, space_cells, c);
  }

  // True iff b is reachable from a in at most t steps.
  bool reach(const Configuration& a, const Configuration& b, std::uint64_t t) {
    for (const Configuration* c : {&a, &b}) {
      if (!fits(*c, input_.size(), space_.space_cells()) || c->state >= machine_.state_count()) {
        throw ValidationError("configurations must respect the space bound");
      }
    }
    return recurse(a, b, t);
  }

  std::uint64_t calls() const noexcept { return calls_; }
  const ConfigSpace& space() const noexcept { return space_; }

 private:
  std::uint64_t lower_bound(const Configuration& a, const Configuration& b) const {
    std::uint64_t lb = step_lower_bound(a, b);
    for (const auto& abs : abstractions_) lb = std::max(lb, abs.lower_bound(a, b));
    return lb;
  }

  const std::vector<Transition>& moves(const Configuration& a) const {
    return machine_.transitions(a.state, input_at(input_, a.input_head), a.worktape[a.work_head]);
  }

  bool one_step(const Configuration& a, const Configuration& b) const {
    for (const auto& t : moves(a)) {
      Configuration next = a;
      if (apply(t, input_.size(), next) && next == b) return true;
    }
    return false;
  }

  bool recurse(const Configuration& a, const Configuration& b, std::uint64_t t) {
    ++calls_;
    if (a == b) return true;
    if (t == 0) return false;
    if (t == 1) return one_step(a, b);
    const std::uint64_t first = (t + 1) / 2;
    const std::uint64_t second = t / 2;
    if (prune_) {
      if (moves(a).empty() || lower_bound(a, b) > t) return false;
      if (first == 1) {
        // The only middles with a one-step first half are a and its successors.
        if (one_step(a, b)) return true;
        for (const Configuration& mid : step(machine_, input_, a)) {
          if (recurse(mid, b, second)) return true;
        }
        return false;
      }
    }
    for (std::uint64_t i = 0; i < space_.count(); ++i) {
      const Configuration mid = space_.at(i);
      if (prune_ && (lower_bound(a, mid) > first || lower_bound(mid, b) > second)) continue;
      if (recurse(a, mid, first) && recurse(mid, b, second)) return true;
    }
    return false;
  }

  const OfflineNtm& machine_;
  std::string input_;
  ConfigSpace space_;
  bool prune_;
  std::vector<detail::AbstractDistance> abstractions_;
  std::uint64_t calls_ = 0;
};

inline bool savitch_reach(const OfflineNtm& m, std::string_view input, const Configuration& a,
                          const Configuration& b, std::uint64_t steps, SavitchOptions opt = {}) {
  SavitchReach solver(m, input, a.worktape.size(), opt);
  return solver.reach(a, b, steps);
}

// Acceptance decided through the halving recursion: some accepting
// configuration reachable from the initial one within `steps` steps.
inline bool savitch_accepts(const OfflineNtm& m, std::string_view input, std::size_t space_cells,
                            std::uint64_t steps, SavitchOptions opt = {}) {
  SavitchReach solver(m, input, space_cells, opt);
  const Configuration start = initial_configuration(m, space_cells);
  for (std::uint64_t i = 0; i < solver.space().count(); ++i) {
    const Configuration c = solver.space().at(i);
    if (m.is_accepting(c.state) && solver.reach(start, c, steps)) return true;
  }
  return false;
}

}  // namespace dfaint
