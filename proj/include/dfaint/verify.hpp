#pragma once

// Cross-validation of both compilers against the configuration-graph oracle
// over a seeded random corpus.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfaint/corpus.hpp"
#include "dfaint/decode.hpp"
#include "dfaint/oracle.hpp"
#include "dfaint/reductions.hpp"
#include "dfaint/solver.hpp"

namespace dfaint {

struct VerifyOptions {
  std::size_t machines = 50;
  std::uint64_t seed = 1;
  std::size_t max_states = 4;
  std::size_t max_input = 5;
  std::size_t max_space = 3;
  // Kozen families use k = 1 and inputs of at most this length.
  std::size_t kozen_max_input = 4;
  bool initial_accepting = false;
  Fault fault = Fault::none;
  std::uint64_t config_cap = kDefaultConfigCap;
};

struct Tally {
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t skipped = 0;
  std::size_t nonempty = 0;
  std::vector<std::string> failures;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  Tally kozen;
  Tally linear;

  bool ok() const { return kozen.disagree == 0 && linear.disagree == 0; }
};

namespace detail {

inline void check_family(const CompiledFamily& fam, const OfflineNtm& m, const std::string& input, std::size_t cells,
                         std::uint64_t cap, std::size_t index, Tally& tally) {
  bool expected = false;
  try {
    expected = oracle_accepts(m, input, cells, cap);
  } catch (const StateSpaceTooLarge&) {
    ++tally.skipped;
    return;
  }
  const auto witness = intersect_nonempty(fam.instance);
  std::string problem;
  if (witness.has_value() != expected) {
    problem = expected ? "oracle accepts but the intersection is empty" : "oracle rejects but a witness exists";
  } else if (witness) {
    try {
      const Run run = decode_witness(fam, *witness);
      if (!is_accepting_run(m, input, cells, run)) problem = "decoded run is not an accepting run";
    } catch (const Error& e) {
      problem = std::string("witness does not decode: ") + e.what();
    }
  }
  if (problem.empty()) {
    ++tally.agree;
    if (witness) ++tally.nonempty;
  } else {
    ++tally.disagree;
    tally.failures.push_back("case " + std::to_string(index) + " (" + to_string(fam.provenance.construction) +
                             ", input " + input + ", S " + std::to_string(cells) + "): " + problem);
  }
}

}  // namespace detail

inline VerifyReport verify_corpus(const VerifyOptions& opt) {
  VerifyReport report;
  report.seed = opt.seed;
  Rng rng(opt.seed);
  MachineShape shape;
  shape.max_states = opt.max_states;
  shape.initial_accepting = opt.initial_accepting;
  CompileOptions copt;
  copt.fault = opt.fault;

  for (std::size_t i = 0; i < opt.machines; ++i) {
    const OfflineNtm m = random_machine(rng, shape, "m" + std::to_string(i));
    const std::string input = random_input(rng, 1, opt.max_input);
    const std::size_t cells = rng.range(1, opt.max_space);
    ++report.cases;

    detail::check_family(compile_linear(m, input, cells, copt), m, input, cells, opt.config_cap, i, report.linear);

    const std::string short_input = input.substr(0, std::min(input.size(), opt.kozen_max_input));
    const CompiledFamily kozen = compile_kozen(m, short_input, 1, copt);
    detail::check_family(kozen, m, short_input, kozen.provenance.space_cells, opt.config_cap, i, report.kozen);
  }
  return report;
}

}  // namespace dfaint
