#pragma once

// Brute-force ground truth: breadth-first search over the space-bounded
// configuration graph.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "dfaint/ntm.hpp"

namespace dfaint {

inline constexpr std::uint64_t kDefaultConfigCap = 10'000'000;

namespace detail {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

struct ConfigBfs {
  std::vector<std::uint32_t> dist;
  std::vector<std::uint64_t> parent;
  std::vector<Transition> via;
};

// BFS from `source`; stops early at the first configuration satisfying
// `stop`, returning its index.
template <class Stop>
std::optional<std::uint64_t> config_bfs(const OfflineNtm& m, std::string_view input, const ConfigSpace& space,
                                        const Configuration& source, ConfigBfs& out, Stop stop,
                                        std::uint32_t max_depth = kUnreached) {
  out.dist.assign(space.count(), kUnreached);
  out.parent.assign(space.count(), 0);
  out.via.assign(space.count(), Transition{});
  std::vector<std::uint64_t> queue{space.index(source)};
  out.dist[queue.front()] = 0;
  if (stop(source)) return queue.front();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t u = queue[head];
    if (out.dist[u] >= max_depth) continue;
    const Configuration c = space.at(u);
    const auto& ts = m.transitions(c.state, input_at(input, c.input_head), c.worktape[c.work_head]);
    for (const auto& t : ts) {
      Configuration next = c;
      if (!apply(t, input.size(), next)) continue;
      const std::uint64_t v = space.index(next);
      if (out.dist[v] != kUnreached) continue;
      out.dist[v] = out.dist[u] + 1;
      out.parent[v] = u;
      out.via[v] = t;
      if (stop(next)) return v;
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Shortest accepting run within the space bound, if any.
inline std::optional<Run> oracle_run(const OfflineNtm& m, std::string_view input, std::size_t space_cells,
                                     std::uint64_t cap = kDefaultConfigCap) {
  check_input(input);
  const ConfigSpace space(m.state_count(), input.size(), space_cells, cap);
  detail::ConfigBfs bfs;
  const Configuration start = initial_configuration(m, space_cells);
  auto hit = detail::config_bfs(m, input, space, start, bfs,
                                [&](const Configuration& c) { return m.is_accepting(c.state); });
  if (!hit) return std::nullopt;
  Run run;
  const std::uint64_t root = space.index(start);
  for (std::uint64_t v = *hit;; v = bfs.parent[v]) {
    run.configurations.push_back(space.at(v));
    if (v == root) break;
    run.transitions.push_back(bfs.via[v]);
  }
  std::reverse(run.configurations.begin(), run.configurations.end());
  std::reverse(run.transitions.begin(), run.transitions.end());
  return run;
}

inline bool oracle_accepts(const OfflineNtm& m, std::string_view input, std::size_t space_cells,
                           std::uint64_t cap = kDefaultConfigCap) {
  return oracle_run(m, input, space_cells, cap).has_value();
}

// Breadth-first distances from `source` to every configuration (kUnreached
// when unreachable), indexed by ConfigSpace::index.
inline std::vector<std::uint32_t> reachability_distances(const OfflineNtm& m, std::string_view input,
                                                         const ConfigSpace& space, const Configuration& source) {
  detail::ConfigBfs bfs;
  detail::config_bfs(m, input, space, source, bfs, [](const Configuration&) { return false; });
  return std::move(bfs.dist);
}

// Whether `target` is reachable from `source` in at most `steps` steps.
inline bool bfs_reach(const OfflineNtm& m, std::string_view input, const Configuration& source,
                      const Configuration& target, std::uint64_t steps, std::uint64_t cap = kDefaultConfigCap) {
  const ConfigSpace space(m.state_count(), input.size(), source.worktape.size(), cap);
  const auto dist = reachability_distances(m, input, space, source);
  const std::uint32_t d = dist[space.index(target)];
  return d != detail::kUnreached && d <= steps;
}

}  // namespace dfaint
