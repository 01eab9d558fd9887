#pragma once

// Compilers from space-bounded offline NTM acceptance to DFA intersection.
//
// compile_kozen: k+1 automata over six-field traces. One control automaton
// follows the state and the input head; automaton i >= 1 stores worktape
// block i (cells (i-1)B .. iB-1, B = max(1, ceil(log2 n))) and follows the
// work head through the m1 stream.
//
// compile_linear: 1 + (n+2) + S + S + 1 automata over eight-field traces,
// each with O(log n) states: control, one per input position, one per work
// head position, one per worktape cell, and a range check on head fields.
//
// In both families the intersection is non-empty iff the machine accepts the
// input within the space bound; the shortest witness encodes a shortest
// accepting run.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dfaint/checker.hpp"
#include "dfaint/dfa.hpp"
#include "dfaint/ntm.hpp"
#include "dfaint/trace.hpp"
#include "dfaint/trace_checkers.hpp"

namespace dfaint {

enum class Construction { kozen, linear };

inline const char* to_string(Construction c) { return c == Construction::kozen ? "kozen" : "linear"; }

struct CompileOptions {
  // Reject machines that use the Stay move.
  bool no_stay = false;
  Fault fault = Fault::none;
};

struct Provenance {
  std::string machine_name;
  std::string input;
  Construction construction = Construction::linear;
  std::size_t blocks = 0;       // k; kozen only
  std::size_t space_cells = 0;  // S (for kozen: k * block size)
};

struct CompiledFamily {
  IntersectionInstance instance;
  TraceEncoding encoding;
  Provenance provenance;
  OfflineNtm machine;
};

// Worktape cells per block in the six-field construction.
inline std::size_t block_size(std::size_t input_length) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < input_length) ++b;
  return b == 0 ? 1 : b;
}

namespace detail {

inline void check_compile_inputs(const OfflineNtm& m, const std::string& input, const CompileOptions& opt) {
  check_input(input);
  if (input.empty()) throw ValidationError("input must have length n >= 1");
  if (opt.no_stay && m.uses_stay()) {
    throw InvalidMachine("machine '" + m.name() + "' uses the Stay move but --no-stay was requested");
  }
}

inline std::string position_name(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

}  // namespace detail

inline CompiledFamily compile_kozen(const OfflineNtm& m, const std::string& input, std::size_t blocks,
                                   const CompileOptions& opt = {}) {
  detail::check_compile_inputs(m, input, opt);
  if (blocks == 0) throw ValidationError("block count k must be at least 1");
  const std::size_t b = block_size(input.size());
  const std::size_t cells = blocks * b;
  const TraceEncoding enc = TraceEncoding::without_heads(m.state_count());
  const Alphabet& sigma = trace_alphabet();

  std::vector<bool> writable(kTapeSymbols, false);
  writable[static_cast<std::size_t>(TapeSymbol::zero)] = true;
  for (const auto& r : m.rules()) writable[static_cast<std::size_t>(r.to.write)] = true;

  std::vector<Dfa> dfas;
  dfas.push_back(materialize(checkers::ControlChecker(m, enc, &input, opt.fault), sigma, "control"));
  for (std::size_t i = 0; i < blocks; ++i) {
    checkers::BlockChecker block(enc, static_cast<std::uint32_t>(i * b), static_cast<std::uint32_t>(b),
                                 static_cast<std::uint32_t>(cells), writable);
    dfas.push_back(materialize(block, sigma, detail::position_name("block", i + 1)));
  }
  return {IntersectionInstance(std::move(dfas)), enc,
          Provenance{m.name(), input, Construction::kozen, blocks, cells}, m};
}

inline CompiledFamily compile_linear(const OfflineNtm& m, const std::string& input, std::size_t space_cells,
                                    const CompileOptions& opt = {}) {
  detail::check_compile_inputs(m, input, opt);
  if (space_cells == 0) throw ValidationError("space bound S must be at least 1");
  const std::size_t n = input.size();
  const TraceEncoding enc = TraceEncoding::with_heads(m.state_count(), n, space_cells);
  const Alphabet& sigma = trace_alphabet();

  std::vector<Dfa> dfas;
  dfas.push_back(materialize(checkers::ControlChecker(m, enc), sigma, "control"));
  for (std::size_t p = 0; p <= n + 1; ++p) {
    checkers::HeadChecker::Spec spec{Field::h0, Field::m0, p, n + 1, 1, std::nullopt};
    if (opt.fault != Fault::skip_input_check) spec.read_code = static_cast<std::uint64_t>(input_at(input, p));
    dfas.push_back(materialize(checkers::HeadChecker(enc, spec), sigma, detail::position_name("input_head", p)));
  }
  for (std::size_t c = 0; c < space_cells; ++c) {
    checkers::HeadChecker::Spec spec{Field::h1, Field::m1, c, space_cells - 1, 0, std::nullopt};
    dfas.push_back(materialize(checkers::HeadChecker(enc, spec), sigma, detail::position_name("work_head", c)));
  }
  for (std::size_t c = 0; c < space_cells; ++c) {
    dfas.push_back(materialize(checkers::CellChecker(enc, c), sigma, detail::position_name("cell", c)));
  }
  dfas.push_back(materialize(checkers::RangeChecker(enc, n + 1, space_cells - 1), sigma, "range"));
  return {IntersectionInstance(std::move(dfas)), enc,
          Provenance{m.name(), input, Construction::linear, 0, space_cells}, m};
}

}  // namespace dfaint
