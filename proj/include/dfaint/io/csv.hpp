#pragma once

// Benchmark CSV rows.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dfaint/error.hpp"
#include "dfaint/io/text.hpp"

namespace dfaint::io {

inline constexpr std::string_view kBenchHeader =
    "construction,n,k_or_S,strategy,dfas,max_states,product_states_explored,time_ns,verdict";

struct BenchRow {
  std::string construction;
  std::uint64_t n = 0;
  std::uint64_t k_or_s = 0;
  std::string strategy;
  std::uint64_t dfas = 0;
  std::uint64_t max_states = 0;
  std::uint64_t states_explored = 0;
  std::uint64_t time_ns = 0;
  std::string verdict;  // nonempty, empty or skipped

  bool operator==(const BenchRow&) const = default;
};

inline std::string emit_row(const BenchRow& r) {
  std::ostringstream out;
  out << r.construction << ',' << r.n << ',' << r.k_or_s << ',' << r.strategy << ',' << r.dfas << ','
      << r.max_states << ',' << r.states_explored << ',' << r.time_ns << ',' << r.verdict;
  return out.str();
}

inline std::string emit_csv(const std::vector<BenchRow>& rows) {
  std::string out(kBenchHeader);
  out += '\n';
  for (const auto& r : rows) out += emit_row(r) + '\n';
  return out;
}

inline std::vector<BenchRow> parse_csv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1) {
      if (line != kBenchHeader) throw ParseError("unexpected CSV header", number);
      continue;
    }
    if (line.empty()) continue;
    std::vector<Token> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back({line.substr(start, comma == std::string::npos ? std::string::npos : comma - start), false});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 9) throw ParseError("expected 9 columns", number);
    BenchRow r;
    r.construction = cells[0].text;
    r.n = parse_count(cells[1], number, "n");
    r.k_or_s = parse_count(cells[2], number, "k_or_S");
    r.strategy = cells[3].text;
    r.dfas = parse_count(cells[4], number, "dfas");
    r.max_states = parse_count(cells[5], number, "max_states");
    r.states_explored = parse_count(cells[6], number, "product_states_explored");
    r.time_ns = parse_count(cells[7], number, "time_ns");
    r.verdict = cells[8].text;
    rows.push_back(std::move(r));
  }
  if (number == 0) throw ParseError("missing CSV header", 0);
  return rows;
}

}  // namespace dfaint::io
