#pragma once

// Ordered key=value sidecar. Blank lines and lines starting with '#' are
// ignored; keys keep their insertion order on emission.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfaint/error.hpp"

namespace dfaint::io {

class Metadata {
 public:
  void set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_) {
      if (k == key) {
        v = value;
        return;
      }
    }
    entries_.emplace_back(key, value);
  }

  std::optional<std::string> get(std::string_view key) const {
    for (const auto& [k, v] : entries_) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  const std::string& require(std::string_view key) const {
    for (const auto& [k, v] : entries_) {
      if (k == key) return v;
    }
    throw ValidationError("metadata is missing key '" + std::string(key) + "'");
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
  bool operator==(const Metadata&) const = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

inline Metadata parse_metadata(std::string_view text) {
  Metadata meta;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", number);
    std::string key(line.substr(first, eq - first));
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    if (key.empty()) throw ParseError("empty key", number);
    if (meta.get(key)) throw ParseError("duplicate key '" + key + "'", number);
    meta.set(key, std::string(line.substr(eq + 1)));
  }
  return meta;
}

inline std::string emit_metadata(const Metadata& meta) {
  std::string out;
  for (const auto& [k, v] : meta.entries()) out += k + "=" + v + "\n";
  return out;
}

}  // namespace dfaint::io
