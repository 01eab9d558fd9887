// dfaint: command-line front end.
//
// Exit codes: solve 0 = nonempty, 1 = empty; simulate/savitch 0 = accept,
// 1 = reject; verify 1 on any disagreement; 2 on any error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dfaint.hpp"

namespace {

using namespace dfaint;

constexpr int kExitError = 2;

struct Globals {
  bool strict = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> cap;
  std::string out;
};

std::string render_witness(const Alphabet& sigma, const Witness& w) {
  return w.symbols.empty() ? "(empty)" : sigma.render(w.symbols);
}

void print_run(const Run& run) {
  std::cout << "run (" << run.length() << " steps):\n";
  for (std::size_t i = 0; i < run.configurations.size(); ++i) {
    std::cout << "  " << i << ": " << run.configurations[i].to_string();
    if (i < run.transitions.size()) {
      const Transition& t = run.transitions[i];
      std::cout << "  -> q" << t.target << " write " << to_char(t.write) << " move " << to_char(t.input_move)
                << to_char(t.work_move);
    }
    std::cout << '\n';
  }
}

std::string require_out(const Globals& g, const char* cmd) {
  if (g.out.empty()) throw ValidationError(std::string(cmd) + " needs --out <dir>");
  return g.out;
}

int cmd_solve(const Globals& g, const std::string& path, const std::string& strategy,
              std::optional<std::size_t> step_cap) {
  const IntersectionInstance inst = io::read_instance(path, g.strict);
  SearchOptions opt;
  if (strategy == "materialized") {
    opt.strategy = Strategy::materialized;
  } else if (strategy != "on_the_fly") {
    throw ValidationError("unknown strategy '" + strategy + "' (expected materialized or on_the_fly)");
  }
  opt.step_cap = step_cap;
  if (g.cap) opt.size_cap = *g.cap;
  const SearchResult res = search(inst, opt);
  if (!res.witness) {
    std::cout << "EMPTY" << (step_cap ? " (no witness of length <= " + std::to_string(*step_cap) + ")" : "") << '\n';
    std::cout << "states explored: " << res.states_explored << '\n';
    return 1;
  }
  std::cout << "NONEMPTY\n";
  std::cout << "witness: " << render_witness(inst.alphabet(), *res.witness) << '\n';
  std::cout << "length: " << res.witness->size() << '\n';
  std::cout << "states explored: " << res.states_explored << '\n';
  if (auto fam = io::read_family(path, g.strict)) print_run(decode_witness(*fam, *res.witness));
  return 0;
}

void report_family(const CompiledFamily& fam, const std::string& int_path) {
  std::cout << "wrote " << int_path << '\n';
  std::cout << "construction: " << to_string(fam.provenance.construction) << '\n';
  std::cout << "dfas: " << fam.instance.size() << '\n';
  std::cout << "max states: " << fam.instance.max_states() << '\n';
  std::cout << "tuple bits: " << fam.encoding.tuple_bits() << '\n';
  for (const auto& w : lint(fam.machine)) std::cerr << "warning: " << w << '\n';
}

int cmd_compile(const Globals& g, Construction c, const std::string& machine_path, const std::string& input,
                std::size_t param, bool no_stay) {
  const OfflineNtm m = io::read_ntm(machine_path);
  CompileOptions opt;
  opt.no_stay = no_stay;
  const CompiledFamily fam =
      c == Construction::kozen ? compile_kozen(m, input, param, opt) : compile_linear(m, input, param, opt);
  report_family(fam, io::write_family(require_out(g, c == Construction::kozen ? "compile-kozen" : "compile-linear"), fam));
  return 0;
}

int cmd_amplify(const Globals& g, const std::string& path, long long k) {
  const IntersectionInstance inst = io::read_instance(path, g.strict);
  const AmplifyResult res = amplify(inst, k, g.cap.value_or(kDefaultProductCap));
  const std::string dir = require_out(g, "amplify");
  const std::string int_path = io::write_instance(dir, res.instance, "amplified.int");
  io::Metadata meta;
  meta.set("source", std::filesystem::absolute(path).string());
  meta.set("source_dfas", std::to_string(inst.size()));
  meta.set("k", std::to_string(k));
  meta.set("d", std::to_string(res.group_size));
  meta.set("padding", std::to_string(res.padding));
  io::write_file(io::metadata_path(int_path), io::emit_metadata(meta));
  std::cout << "wrote " << int_path << '\n';
  std::cout << "d: " << res.group_size << "\npadding: " << res.padding << '\n';
  for (const auto& d : res.instance.dfas()) std::cout << d.name() << ": " << d.state_count() << " states\n";
  return 0;
}

int cmd_simulate(const Globals& g, const std::string& machine_path, const std::string& input, std::size_t cells) {
  const OfflineNtm m = io::read_ntm(machine_path);
  for (const auto& w : lint(m)) std::cerr << "warning: " << w << '\n';
  const auto run = oracle_run(m, input, cells, g.cap.value_or(kDefaultConfigCap));
  if (!run) {
    std::cout << "REJECT\n";
    return 1;
  }
  std::cout << "ACCEPT\n";
  print_run(*run);
  return 0;
}

int cmd_savitch(const Globals& g, const std::string& machine_path, const std::string& input, std::size_t cells,
                std::optional<std::uint64_t> steps, bool no_prune) {
  const OfflineNtm m = io::read_ntm(machine_path);
  SavitchOptions opt;
  opt.cap = g.cap.value_or(kDefaultConfigCap);
  opt.prune = !no_prune;
  SavitchReach solver(m, input, cells, opt);
  const std::uint64_t t = steps.value_or(solver.space().count());
  const Configuration start = initial_configuration(m, cells);
  bool accepted = false;
  for (std::uint64_t i = 0; i < solver.space().count() && !accepted; ++i) {
    const Configuration c = solver.space().at(i);
    accepted = m.is_accepting(c.state) && solver.reach(start, c, t);
  }
  std::cout << (accepted ? "ACCEPT" : "REJECT") << '\n';
  std::cout << "step budget: " << t << "\nrecursive calls: " << solver.calls() << '\n';
  return accepted ? 0 : 1;
}

void print_tally(const char* name, const Tally& t) {
  std::cout << name << ": " << t.agree << " agree, " << t.disagree << " disagree, " << t.skipped << " skipped ("
            << t.nonempty << " nonempty)\n";
  for (const auto& f : t.failures) std::cout << "  " << f << '\n';
}

int cmd_verify(const Globals& g, VerifyOptions opt) {
  opt.seed = g.seed;
  if (g.cap) opt.config_cap = *g.cap;
  const VerifyReport r = verify_corpus(opt);
  std::cout << "seed: " << r.seed << "\ncases: " << r.cases << '\n';
  print_tally("kozen", r.kozen);
  print_tally("linear", r.linear);
  std::cout << (r.ok() ? "OK" : "DISAGREEMENT") << '\n';
  return r.ok() ? 0 : 1;
}

int cmd_bench(const Globals& g, BenchOptions opt, const std::vector<std::string>& strategies) {
  opt.strategies.clear();
  for (const auto& s : strategies) {
    if (s == "materialized") opt.strategies.push_back(Strategy::materialized);
    else if (s == "on_the_fly") opt.strategies.push_back(Strategy::on_the_fly);
    else throw ValidationError("unknown strategy '" + s + "'");
  }
  if (g.cap) opt.size_cap = *g.cap;
  const std::string csv = io::emit_csv(run_bench(opt));
  if (g.out.empty()) {
    std::cout << csv;
  } else {
    io::write_file(g.out, csv);
    std::cerr << "wrote " << g.out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DFA intersection non-emptiness laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--strict", g.strict, "Reject .dfa files with omitted transitions");
  app.add_option("--seed", g.seed, "Seed for generated corpora");
  app.add_option("--cap", g.cap, "Product size cap (solve, amplify, bench) or configuration cap (simulate, savitch, verify)");
  app.add_option("--out", g.out, "Output directory (compile, amplify) or CSV file (bench)");

  int status = 0;
  std::function<int()> action;

  auto* solve = app.add_subcommand("solve", "Decide intersection non-emptiness of an instance");
  std::string solve_path, strategy = "on_the_fly";
  std::optional<std::size_t> step_cap;
  solve->add_option("instance", solve_path, "Instance file (.int)")->required();
  solve->add_option("--strategy", strategy, "materialized or on_the_fly");
  solve->add_option("--step-cap", step_cap, "Only report witnesses of at most this length");
  solve->callback([&] { action = [&] { return cmd_solve(g, solve_path, strategy, step_cap); }; });

  std::string machine_path, input;
  std::size_t blocks = 1, cells = 1;
  bool no_stay = false;
  auto* kozen = app.add_subcommand("compile-kozen", "Compile a machine and input to k+1 automata");
  kozen->add_option("machine", machine_path, "Machine file (.ntm)")->required();
  kozen->add_option("input", input, "Input bit string")->required();
  kozen->add_option("-k,--blocks", blocks, "Number of worktape blocks")->default_val(1);
  kozen->add_flag("--no-stay", no_stay, "Reject machines that use the Stay move");
  kozen->callback([&] {
    action = [&] { return cmd_compile(g, Construction::kozen, machine_path, input, blocks, no_stay); };
  });

  auto* linear = app.add_subcommand("compile-linear", "Compile a machine and input to 2S+n+4 automata");
  linear->add_option("machine", machine_path, "Machine file (.ntm)")->required();
  linear->add_option("input", input, "Input bit string")->required();
  linear->add_option("-S,--space", cells, "Worktape cells")->required();
  linear->add_flag("--no-stay", no_stay, "Reject machines that use the Stay move");
  linear->callback([&] {
    action = [&] { return cmd_compile(g, Construction::linear, machine_path, input, cells, no_stay); };
  });

  auto* amp = app.add_subcommand("amplify", "Collapse an instance to k automata by grouped products");
  std::string amp_path;
  long long amp_k = 0;
  amp->add_option("instance", amp_path, "Instance file (.int)")->required();
  amp->add_option("-k,--target", amp_k, "Target automaton count")->required();
  amp->callback([&] { action = [&] { return cmd_amplify(g, amp_path, amp_k); }; });

  auto* sim = app.add_subcommand("simulate", "Decide acceptance by configuration-graph search");
  sim->add_option("machine", machine_path, "Machine file (.ntm)")->required();
  sim->add_option("input", input, "Input bit string")->required();
  sim->add_option("-S,--space", cells, "Worktape cells")->required();
  sim->callback([&] { action = [&] { return cmd_simulate(g, machine_path, input, cells); }; });

  auto* sav = app.add_subcommand("savitch", "Decide acceptance by the halving recursion");
  std::optional<std::uint64_t> steps;
  bool no_prune = false;
  sav->add_option("machine", machine_path, "Machine file (.ntm)")->required();
  sav->add_option("input", input, "Input bit string")->required();
  sav->add_option("-S,--space", cells, "Worktape cells")->required();
  sav->add_option("--steps", steps, "Step budget (default: number of configurations)");
  sav->add_flag("--no-prune", no_prune, "Try every middle configuration");
  sav->callback([&] { action = [&] { return cmd_savitch(g, machine_path, input, cells, steps, no_prune); }; });

  auto* ver = app.add_subcommand("verify", "Cross-check both compilers against the oracle on a random corpus");
  VerifyOptions vopt;
  bool inject = false;
  ver->add_option("--machines", vopt.machines, "Corpus size")->default_val(50);
  ver->add_option("--max-states", vopt.max_states, "Maximum machine states")->default_val(4);
  ver->add_option("--max-input", vopt.max_input, "Maximum input length")->default_val(5);
  ver->add_option("--max-space", vopt.max_space, "Maximum worktape cells (linear)")->default_val(3);
  ver->add_flag("--initial-accepting", vopt.initial_accepting, "Generate machines whose initial state accepts");
  ver->add_flag("--inject-fault", inject, "Compile with the input check disabled");
  ver->callback([&] {
    action = [&] {
      if (inject) vopt.fault = Fault::skip_input_check;
      return cmd_verify(g, vopt);
    };
  });

  auto* bench = app.add_subcommand("bench", "Measure search cost across instance sizes (CSV)");
  BenchOptions bopt;
  std::vector<std::string> strategies{"on_the_fly"};
  bench->add_option("--family", bopt.family, "counter, linear or kozen")->default_val("counter");
  bench->add_option("--n", bopt.ns, "Sizes n (comma separated)")->delimiter(',');
  bench->add_option("--k", bopt.ks, "Counts k, or S / k for compiled families (comma separated)")->delimiter(',');
  bench->add_option("--strategy", strategies, "Strategies (comma separated)")->delimiter(',');
  bench->add_option("--repeats", bopt.repeats, "Timed runs per row (median reported)")->default_val(3);
  bench->callback([&] { action = [&] { return cmd_bench(g, bopt, strategies); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    status = action();
  } catch (const dfaint::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return status;
}
