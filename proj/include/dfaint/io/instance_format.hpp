#pragma once

// `.int` instance files (`use <path.dfa>` lines, resolved relative to the
// instance file) and on-disk compiled families:
//
//   <dir>/family.int      use lines
//   <dir>/NNN_<name>.dfa  one per automaton
//   <dir>/family.meta     provenance sidecar
//   <dir>/machine.ntm     source machine

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfaint/dfa.hpp"
#include "dfaint/io/dfa_format.hpp"
#include "dfaint/io/metadata.hpp"
#include "dfaint/io/ntm_format.hpp"
#include "dfaint/io/text.hpp"
#include "dfaint/reductions.hpp"

namespace dfaint::io {

namespace fs = std::filesystem;

inline std::vector<std::string> parse_instance_paths(std::string_view text) {
  std::vector<std::string> paths;
  for (const Line& line : tokenize(text, true)) {
    if (line.tokens[0].text != "use") throw ParseError("unknown directive '" + line.tokens[0].text + "'", line.number);
    if (line.tokens.size() != 2) throw ParseError("expected 'use <path>'", line.number);
    paths.push_back(line.tokens[1].text);
  }
  if (paths.empty()) throw ValidationError("an intersection instance needs at least one DFA");
  return paths;
}

inline std::string emit_instance_paths(const std::vector<std::string>& paths) {
  std::string out;
  for (const auto& p : paths) out += "use " + quote_if_needed(p, false) + "\n";
  return out;
}

inline Dfa read_dfa(const std::string& path, bool strict = false) {
  const std::string text = read_file(path);
  try {
    return parse_dfa(text, strict);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline OfflineNtm read_ntm(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_ntm(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline IntersectionInstance read_instance(const std::string& path, bool strict = false) {
  std::vector<std::string> paths;
  try {
    paths = parse_instance_paths(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
  const fs::path base = fs::path(path).parent_path();
  std::vector<Dfa> dfas;
  for (const auto& p : paths) {
    const fs::path full = fs::path(p).is_absolute() ? fs::path(p) : base / p;
    dfas.push_back(read_dfa(full.string(), strict));
  }
  return IntersectionInstance(std::move(dfas));
}

inline std::string dfa_file_name(std::size_t index, const std::string& name) {
  char prefix[16];
  std::snprintf(prefix, sizeof prefix, "%03zu_", index);
  std::string safe;
  for (char c : name) safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return prefix + (safe.empty() ? std::string("dfa") : safe) + ".dfa";
}

// Writes <dir>/<int_name> and one .dfa per member; returns the .int path.
inline std::string write_instance(const std::string& dir, const IntersectionInstance& inst,
                                  const std::string& int_name = "family.int") {
  fs::create_directories(dir);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const std::string file = dfa_file_name(i, inst[i].name());
    write_file((fs::path(dir) / file).string(), emit_dfa(inst[i]));
    paths.push_back(file);
  }
  const std::string int_path = (fs::path(dir) / int_name).string();
  write_file(int_path, emit_instance_paths(paths));
  return int_path;
}

inline std::string metadata_path(const std::string& int_path) {
  return fs::path(int_path).replace_extension(".meta").string();
}

inline Metadata family_metadata(const CompiledFamily& fam) {
  const Provenance& p = fam.provenance;
  Metadata meta;
  meta.set("machine", p.machine_name);
  meta.set("machine_file", "machine.ntm");
  meta.set("input", p.input);
  meta.set("construction", to_string(p.construction));
  if (p.construction == Construction::kozen) meta.set("k", std::to_string(p.blocks));
  meta.set("S", std::to_string(p.space_cells));
  meta.set("dfas", std::to_string(fam.instance.size()));
  meta.set("width_q", std::to_string(fam.encoding.width(Field::q)));
  if (fam.encoding.has_heads()) {
    meta.set("width_h0", std::to_string(fam.encoding.width(Field::h0)));
    meta.set("width_h1", std::to_string(fam.encoding.width(Field::h1)));
  }
  meta.set("width_code", std::to_string(TraceEncoding::kCodeBits));
  meta.set("tuple_bits", std::to_string(fam.encoding.tuple_bits()));
  return meta;
}

inline std::string write_family(const std::string& dir, const CompiledFamily& fam) {
  const std::string int_path = write_instance(dir, fam.instance);
  write_file((fs::path(dir) / "machine.ntm").string(), emit_ntm(fam.machine));
  write_file(metadata_path(int_path), emit_metadata(family_metadata(fam)));
  return int_path;
}

inline std::size_t meta_count(const Metadata& meta, const char* key) {
  return parse_count(Token{meta.require(key), false}, 0, key);
}

// Rebuilds a family from a loaded instance and its sidecar, checking that the
// recorded widths match the encoding implied by the parameters.
inline CompiledFamily restore_family(IntersectionInstance inst, const Metadata& meta, const OfflineNtm& machine) {
  Provenance p;
  p.machine_name = meta.require("machine");
  p.input = meta.require("input");
  check_input(p.input);
  const std::string& construction = meta.require("construction");
  p.space_cells = meta_count(meta, "S");
  std::optional<TraceEncoding> enc;
  if (construction == "kozen") {
    p.construction = Construction::kozen;
    p.blocks = meta_count(meta, "k");
    enc = TraceEncoding::without_heads(machine.state_count());
  } else if (construction == "linear") {
    p.construction = Construction::linear;
    enc = TraceEncoding::with_heads(machine.state_count(), p.input.size(), p.space_cells);
  } else {
    throw ValidationError("unknown construction '" + construction + "'");
  }
  if (meta_count(meta, "tuple_bits") != enc->tuple_bits() || meta_count(meta, "width_q") != enc->width(Field::q)) {
    throw ValidationError("metadata field widths do not match the machine and parameters");
  }
  if (!(inst.alphabet() == trace_alphabet())) throw ValidationError("family automata must use the trace alphabet");
  return {std::move(inst), *enc, std::move(p), machine};
}

// Loads the compiled family behind an instance file when its sidecar records
// a construction.
inline std::optional<CompiledFamily> read_family(const std::string& int_path, bool strict = false) {
  const std::string meta_file = metadata_path(int_path);
  if (!fs::exists(meta_file)) return std::nullopt;
  const Metadata meta = parse_metadata(read_file(meta_file));
  if (!meta.get("construction")) return std::nullopt;
  const fs::path machine_file = fs::path(int_path).parent_path() / meta.require("machine_file");
  return restore_family(read_instance(int_path, strict), meta, read_ntm(machine_file.string()));
}

}  // namespace dfaint::io
