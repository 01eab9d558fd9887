#pragma once

// Scaling measurements. Each row reports the median wall time of repeated
// searches and the (deterministic) number of product states explored.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dfaint/corpus.hpp"
#include "dfaint/io/csv.hpp"
#include "dfaint/reductions.hpp"
#include "dfaint/solver.hpp"

namespace dfaint {

inline const char* to_string(Strategy s) { return s == Strategy::materialized ? "materialized" : "on_the_fly"; }

struct BenchOptions {
  // counter: modular-counter family with k members of size ~n.
  // linear / kozen: the last-bit machine compiled on a length-n input, with
  // k_or_S the space bound or the block count.
  std::string family = "counter";
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ks;
  std::vector<Strategy> strategies{Strategy::on_the_fly};
  std::size_t repeats = 3;
  std::size_t size_cap = kDefaultProductCap;
};

inline std::string bench_input(std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) s[i] = (i % 3 == 1) ? '1' : '0';
  return s;
}

inline IntersectionInstance bench_instance(const std::string& family, std::size_t n, std::size_t k) {
  if (family == "counter") return counter_family(n, k);
  if (family == "linear") return compile_linear(last_bit_machine(), bench_input(n), k).instance;
  if (family == "kozen") return compile_kozen(last_bit_machine(), bench_input(n), k).instance;
  throw ValidationError("unknown bench family '" + family + "' (expected counter, linear or kozen)");
}

inline io::BenchRow bench_one(const IntersectionInstance& inst, const std::string& family, std::size_t n,
                              std::size_t k, Strategy strategy, std::size_t repeats, std::size_t size_cap) {
  io::BenchRow row;
  row.construction = family;
  row.n = n;
  row.k_or_s = k;
  row.strategy = to_string(strategy);
  row.dfas = inst.size();
  row.max_states = inst.max_states();
  SearchOptions opt;
  opt.strategy = strategy;
  opt.size_cap = size_cap;
  std::vector<std::uint64_t> times;
  try {
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const SearchResult res = search(inst, opt);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      row.states_explored = res.states_explored;
      row.verdict = res.witness ? "nonempty" : "empty";
    }
  } catch (const SizeOverflow&) {
    row.states_explored = 0;
    row.time_ns = 0;
    row.verdict = "skipped";
    return row;
  }
  std::sort(times.begin(), times.end());
  row.time_ns = times[times.size() / 2];
  return row;
}

inline std::vector<io::BenchRow> run_bench(const BenchOptions& opt) {
  std::vector<io::BenchRow> rows;
  for (std::size_t n : opt.ns) {
    for (std::size_t k : opt.ks) {
      const IntersectionInstance inst = bench_instance(opt.family, n, k);
      for (Strategy s : opt.strategies) rows.push_back(bench_one(inst, opt.family, n, k, s, opt.repeats, opt.size_cap));
    }
  }
  return rows;
}

}  // namespace dfaint
