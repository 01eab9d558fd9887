#pragma once

// Witness <-> Run conversion for compiled families. Decoding re-validates
// every step against the machine, independently of the automata.

#include <string>
#include <vector>

#include "dfaint/reductions.hpp"

namespace dfaint {

namespace detail {

inline void check_ranges(const CompiledFamily& fam, const TraceTuple& t, std::size_t index) {
  auto fail = [&](const char* what) {
    throw MalformedTrace("tuple " + std::to_string(index) + ": " + what + " out of range");
  };
  if (t.q >= fam.machine.state_count()) fail("q");
  if (fam.encoding.has_heads()) {
    if (t.h0 > fam.provenance.input.size() + 1) fail("h0");
    if (t.h1 >= fam.provenance.space_cells) fail("h1");
  }
  if (t.r1 >= kTapeSymbols) fail("r1");
  if (t.m0 > 2) fail("m0");
  if (t.m1 > 2) fail("m1");
  if (t.w >= kTapeSymbols) fail("w");
}

}  // namespace detail

inline Run decode_witness(const CompiledFamily& fam, const Witness& witness) {
  const auto tuples = split_trace(fam.encoding, witness.symbols);
  if (tuples.empty()) throw MalformedTrace("empty trace");
  for (std::size_t i = 0; i < tuples.size(); ++i) detail::check_ranges(fam, tuples[i], i);

  const OfflineNtm& m = fam.machine;
  const std::string& input = fam.provenance.input;
  auto invalid = [](std::size_t i, const std::string& what) {
    throw InvalidStep("tuple " + std::to_string(i) + ": " + what);
  };

  Run run;
  Configuration c = initial_configuration(m, fam.provenance.space_cells);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const TraceTuple& t = tuples[i];
    run.configurations.push_back(c);
    if (t.q != c.state) invalid(i, "state does not match the run");
    if (fam.encoding.has_heads() && (t.h0 != c.input_head || t.h1 != c.work_head)) {
      invalid(i, "head position does not match the run");
    }
    const InputSymbol r0 = input_at(input, c.input_head);
    const TapeSymbol r1 = c.worktape[c.work_head];
    if (t.r0 != static_cast<std::uint64_t>(r0)) invalid(i, "r0 does not match the input");
    if (t.r1 != static_cast<std::uint64_t>(r1)) invalid(i, "r1 does not match the worktape");

    if (i + 1 == tuples.size()) {
      if (!m.is_accepting(c.state)) invalid(i, "trace does not end in an accepting state");
      if (t.m0 != static_cast<std::uint64_t>(Move::stay) || t.m1 != static_cast<std::uint64_t>(Move::stay) ||
          t.w != t.r1) {
        invalid(i, "final tuple must halt in place");
      }
      break;
    }
    const Transition step{static_cast<StateId>(tuples[i + 1].q), static_cast<TapeSymbol>(t.w),
                          static_cast<Move>(t.m0), static_cast<Move>(t.m1)};
    if (!m.allows(c.state, r0, r1, step)) invalid(i, "transition is not in the relation");
    if (!apply(step, input.size(), c)) invalid(i, "move leaves the tape");
    run.transitions.push_back(step);
  }
  return run;
}

// Inverse of decode_witness for valid accepting runs.
inline Witness encode_run(const CompiledFamily& fam, const Run& run) {
  std::vector<TraceTuple> tuples;
  const std::string& input = fam.provenance.input;
  for (std::size_t i = 0; i < run.configurations.size(); ++i) {
    const Configuration& c = run.configurations[i];
    TraceTuple t;
    t.q = c.state;
    t.h0 = c.input_head;
    t.h1 = c.work_head;
    t.r0 = static_cast<std::uint64_t>(input_at(input, c.input_head));
    t.r1 = static_cast<std::uint64_t>(c.worktape[c.work_head]);
    if (i < run.transitions.size()) {
      t.m0 = static_cast<std::uint64_t>(run.transitions[i].input_move);
      t.m1 = static_cast<std::uint64_t>(run.transitions[i].work_move);
      t.w = static_cast<std::uint64_t>(run.transitions[i].write);
    } else {
      t.m0 = t.m1 = static_cast<std::uint64_t>(Move::stay);
      t.w = t.r1;
    }
    tuples.push_back(t);
  }
  return {serialize(fam.encoding, tuples)};
}

}  // namespace dfaint
