#pragma once

// `.ntm` text format:
//
//   ntm <name>
//   states <count>
//   initial <id>
//   accept <id> ...
//   delta <q> <r0> <r1> -> <q'> <w> <m0> <m1>
//
// r0 is one of 0 1 < >; r1 and w are one of 0 1 #; moves are L R S. Because
// '#' is a tape symbol, comments are whole lines starting with '#' or
// trailing text starting with '#' after a complete directive.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfaint/io/text.hpp"
#include "dfaint/ntm.hpp"

namespace dfaint::io {

namespace detail {

inline bool is_comment(const Token& t) { return !t.quoted && !t.text.empty() && t.text[0] == '#'; }

inline InputSymbol parse_input_symbol(const Token& t, std::size_t line) {
  if (t.text == "0") return InputSymbol::zero;
  if (t.text == "1") return InputSymbol::one;
  if (t.text == "<") return InputSymbol::left_end;
  if (t.text == ">") return InputSymbol::right_end;
  throw ParseError("unknown input symbol '" + t.text + "'", line);
}

inline TapeSymbol parse_tape_symbol(const Token& t, std::size_t line) {
  if (t.text == "0") return TapeSymbol::zero;
  if (t.text == "1") return TapeSymbol::one;
  if (t.text == "#") return TapeSymbol::hash;
  throw ParseError("unknown tape symbol '" + t.text + "'", line);
}

inline Move parse_move(const Token& t, std::size_t line) {
  if (t.text == "L") return Move::left;
  if (t.text == "R") return Move::right;
  if (t.text == "S") return Move::stay;
  throw ParseError("unknown move '" + t.text + "'", line);
}

}  // namespace detail

inline OfflineNtm parse_ntm(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::size_t> states;
  std::optional<std::size_t> initial;
  std::vector<std::size_t> accepting;
  std::vector<Rule> rules;
  std::vector<std::size_t> rule_lines;

  for (const Line& line : tokenize(text, false)) {
    auto t = line.tokens;
    const std::size_t ln = line.number;
    const std::string kw = t[0].text;
    auto fixed = [&](std::size_t n, const char* usage) {
      if (t.size() > n && detail::is_comment(t[n])) t.resize(n);
      if (t.size() != n) throw ParseError(std::string("expected '") + usage + "'", ln);
    };
    if (kw == "ntm") {
      if (name) throw ParseError("duplicate 'ntm' line", ln);
      fixed(2, "ntm <name>");
      name = t[1].text;
    } else if (kw == "states") {
      if (states) throw ParseError("duplicate 'states' line", ln);
      fixed(2, "states <count>");
      states = parse_count(t[1], ln, "state count");
    } else if (kw == "initial") {
      if (initial) throw ParseError("duplicate 'initial' line", ln);
      fixed(2, "initial <id>");
      initial = parse_count(t[1], ln, "state id");
    } else if (kw == "accept") {
      for (std::size_t i = 1; i < t.size() && !detail::is_comment(t[i]); ++i) {
        accepting.push_back(parse_count(t[i], ln, "state id"));
      }
    } else if (kw == "delta") {
      fixed(9, "delta <q> <r0> <r1> -> <q'> <w> <m0> <m1>");
      if (t[4].text != "->") throw ParseError("expected '->' in delta line", ln);
      Rule r;
      r.from = static_cast<StateId>(parse_count(t[1], ln, "state id"));
      r.read_input = detail::parse_input_symbol(t[2], ln);
      r.read_work = detail::parse_tape_symbol(t[3], ln);
      r.to.target = static_cast<StateId>(parse_count(t[5], ln, "state id"));
      r.to.write = detail::parse_tape_symbol(t[6], ln);
      r.to.input_move = detail::parse_move(t[7], ln);
      r.to.work_move = detail::parse_move(t[8], ln);
      if (std::find(rules.begin(), rules.end(), r) != rules.end()) throw ParseError("duplicate delta line", ln);
      rules.push_back(r);
      rule_lines.push_back(ln);
    } else {
      throw ParseError("unknown directive '" + kw + "'", ln);
    }
  }

  if (!name) throw ParseError("missing 'ntm' line", 0);
  if (!states) throw ParseError("missing 'states' line", 0);
  if (!initial) throw ParseError("missing 'initial' line", 0);
  const std::size_t q = *states;
  if (q == 0) throw ValidationError("machine must have at least one state");
  if (*initial >= q) throw ValidationError("initial state " + std::to_string(*initial) + " is undeclared");
  for (std::size_t a : accepting) {
    if (a >= q) throw ValidationError("accepting state " + std::to_string(a) + " is undeclared");
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    const std::string where = "line " + std::to_string(rule_lines[i]) + ": ";
    if (r.from >= q || r.to.target >= q) throw ValidationError(where + "transition references an undeclared state");
    if (std::find(accepting.begin(), accepting.end(), r.from) != accepting.end()) {
      throw ValidationError(where + "accepting states must have no outgoing transitions");
    }
  }
  std::vector<StateId> acc(accepting.begin(), accepting.end());
  return OfflineNtm(*name, q, static_cast<StateId>(*initial), std::move(acc), rules);
}

inline std::string emit_ntm(const OfflineNtm& m) {
  std::string out = "ntm " + quote_if_needed(m.name(), false) + "\n";
  out += "states " + std::to_string(m.state_count()) + "\n";
  out += "initial " + std::to_string(m.initial()) + "\n";
  out += "accept";
  for (StateId q : m.accepting()) out += " " + std::to_string(q);
  out += "\n";
  for (const Rule& r : m.rules()) {
    out += "delta " + std::to_string(r.from) + " " + to_char(r.read_input) + " " + to_char(r.read_work) + " -> " +
           std::to_string(r.to.target) + " " + to_char(r.to.write) + " " + to_char(r.to.input_move) + " " +
           to_char(r.to.work_move) + "\n";
  }
  return out;
}

}  // namespace dfaint::io
