#pragma once

// `.dfa` text format:
//
//   dfa <name>
//   alphabet <tok> <tok> ...
//   states <m>
//   initial <id>
//   final <id> ...
//   trans <src> <tok> <dst>
//
// Unquoted '#' starts a comment. Omitted transitions go to an implicit dead
// state appended as state m, unless parsing is strict.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfaint/dfa.hpp"
#include "dfaint/io/text.hpp"

namespace dfaint::io {

inline Dfa parse_dfa(std::string_view text, bool strict = false) {
  std::optional<std::string> name;
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> states;
  std::optional<std::size_t> initial;
  std::vector<std::size_t> finals;
  struct Trans {
    std::size_t src;
    std::string tok;
    std::size_t dst;
    std::size_t line;
  };
  std::vector<Trans> trans;

  auto once = [](bool seen, const char* what, std::size_t line) {
    if (seen) throw ParseError(std::string("duplicate '") + what + "' line", line);
  };

  for (const Line& line : tokenize(text, true)) {
    const std::string& kw = line.tokens[0].text;
    const auto& t = line.tokens;
    const std::size_t ln = line.number;
    if (kw == "dfa") {
      once(name.has_value(), "dfa", ln);
      if (t.size() != 2) throw ParseError("expected 'dfa <name>'", ln);
      name = t[1].text;
    } else if (kw == "alphabet") {
      once(alphabet.has_value(), "alphabet", ln);
      std::vector<std::string> toks;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!t[i].quoted && t[i].text.size() != 1) {
          throw ParseError("multi-character token '" + t[i].text + "' must be quoted", ln);
        }
        toks.push_back(t[i].text);
      }
      alphabet = Alphabet(std::move(toks));
    } else if (kw == "states") {
      once(states.has_value(), "states", ln);
      if (t.size() != 2) throw ParseError("expected 'states <m>'", ln);
      states = parse_count(t[1], ln, "state count");
    } else if (kw == "initial") {
      once(initial.has_value(), "initial", ln);
      if (t.size() != 2) throw ParseError("expected 'initial <id>'", ln);
      initial = parse_count(t[1], ln, "state id");
    } else if (kw == "final") {
      for (std::size_t i = 1; i < t.size(); ++i) finals.push_back(parse_count(t[i], ln, "state id"));
    } else if (kw == "trans") {
      if (t.size() != 4) throw ParseError("expected 'trans <src> <tok> <dst>'", ln);
      trans.push_back({parse_count(t[1], ln, "state id"), t[2].text, parse_count(t[3], ln, "state id"), ln});
    } else {
      throw ParseError("unknown directive '" + kw + "'", ln);
    }
  }

  if (!name) throw ParseError("missing 'dfa' line", 0);
  if (!alphabet) throw ParseError("missing 'alphabet' line", 0);
  if (!states) throw ParseError("missing 'states' line", 0);
  if (!initial) throw ParseError("missing 'initial' line", 0);
  const std::size_t m = *states;
  const std::size_t sigma = alphabet->size();
  if (m == 0) throw ValidationError("DFA must have at least one state");
  if (*initial >= m) throw ValidationError("initial < m violated: initial state " + std::to_string(*initial));
  for (std::size_t f : finals) {
    if (f >= m) throw ValidationError("finals within 0..m-1 violated: final state " + std::to_string(f));
  }

  constexpr StateId kMissing = static_cast<StateId>(-1);
  std::vector<StateId> table(m * sigma, kMissing);
  for (const Trans& tr : trans) {
    const auto sym = alphabet->find(tr.tok);
    if (!sym) throw ParseError("symbol '" + tr.tok + "' is not in the alphabet", tr.line);
    if (tr.src >= m || tr.dst >= m) {
      throw ValidationError("line " + std::to_string(tr.line) + ": transition endpoints must lie in 0..m-1");
    }
    StateId& slot = table[tr.src * sigma + *sym];
    if (slot != kMissing) throw ParseError("duplicate transition for state " + std::to_string(tr.src) + " on '" + tr.tok + "'", tr.line);
    slot = static_cast<StateId>(tr.dst);
  }

  std::size_t count = m;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != kMissing) continue;
    if (strict) {
      throw ValidationError("transition mapping is not total: state " + std::to_string(i / sigma) + " on '" +
                            alphabet->token(static_cast<SymbolId>(i % sigma)) + "'");
    }
    if (count == m) {
      count = m + 1;
      table.insert(table.end(), sigma, static_cast<StateId>(m));
    }
    table[i] = static_cast<StateId>(m);
  }
  std::vector<StateId> fin(finals.begin(), finals.end());
  return Dfa(*name, *alphabet, count, std::move(table), static_cast<StateId>(*initial), std::move(fin));
}

inline std::string emit_dfa(const Dfa& dfa) {
  std::string out = "dfa " + quote_if_needed(dfa.name(), false) + "\n";
  out += "alphabet";
  for (const auto& tok : dfa.alphabet().tokens()) out += " " + quote_if_needed(tok);
  out += "\nstates " + std::to_string(dfa.state_count()) + "\n";
  out += "initial " + std::to_string(dfa.initial()) + "\n";
  out += "final";
  for (StateId f : dfa.finals()) out += " " + std::to_string(f);
  out += "\n";
  const std::size_t sigma = dfa.alphabet().size();
  for (std::size_t s = 0; s < dfa.state_count(); ++s) {
    for (SymbolId a = 0; a < sigma; ++a) {
      out += "trans " + std::to_string(s) + " " + quote_if_needed(dfa.alphabet().token(a)) + " " +
             std::to_string(dfa.next(static_cast<StateId>(s), a)) + "\n";
    }
  }
  return out;
}

}  // namespace dfaint::io
