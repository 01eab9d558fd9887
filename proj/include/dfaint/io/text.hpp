#pragma once

// Line tokenizer shared by the text formats. Tokens are separated by
// whitespace; double quotes group a token (with \" and \\ escapes). Where a
// format allows it, an unquoted '#' starts a comment.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dfaint/error.hpp"

namespace dfaint::io {

struct Token {
  std::string text;
  bool quoted = false;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Splits text into non-empty tokenized lines. With `hash_comments` an
// unquoted token starting with '#' ends the line; otherwise only a line whose
// first character (after indentation) is '#' is a comment.
inline std::vector<Line> tokenize(std::string_view text, bool hash_comments) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#' && (hash_comments || line.tokens.empty())) break;
      Token tok;
      if (raw[i] == '"') {
        tok.quoted = true;
        ++i;
        bool closed = false;
        while (i < raw.size()) {
          char c = raw[i++];
          if (c == '"') {
            closed = true;
            break;
          }
          if (c == '\\' && i < raw.size()) c = raw[i++];
          tok.text += c;
        }
        if (!closed) throw ParseError("unterminated quoted token", number);
      } else {
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) tok.text += raw[i++];
      }
      line.tokens.push_back(std::move(tok));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

// Quotes a token unless it is a plain word that reads back unchanged.
inline std::string quote_if_needed(const std::string& tok, bool force_single_char = true) {
  bool plain = !tok.empty() && (!force_single_char || tok.size() == 1);
  for (char c : tok) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '"' || !std::isprint(static_cast<unsigned char>(c))) {
      plain = false;
    }
  }
  if (plain) return tok;
  std::string out = "\"";
  for (char c : tok) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::size_t parse_count(const Token& tok, std::size_t line, const char* what) {
  const std::string& s = tok.text;
  if (s.empty() || s.size() > 18) throw ParseError(std::string("invalid ") + what + " '" + s + "'", line);
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("invalid ") + what + " '" + s + "'", line);
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace dfaint::io
