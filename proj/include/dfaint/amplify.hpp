#pragma once

// Self-reduction from an instance with d*k members to one with k members:
// consecutive groups of d automata are replaced by their full products, so
// every output automaton has at most (max member size)^d states.

#include <cstddef>
#include <string>
#include <vector>

#include "dfaint/dfa.hpp"
#include "dfaint/product.hpp"

namespace dfaint {

struct AmplifyResult {
  IntersectionInstance instance;
  std::size_t group_size = 0;  // d
  std::size_t padding = 0;     // universal automata appended to reach d*k
};

inline AmplifyResult amplify(const IntersectionInstance& inst, long long k,
                             std::size_t size_cap = kDefaultProductCap) {
  if (k <= 0) throw InvalidTarget("target count k must be positive, got " + std::to_string(k));
  const std::size_t target = static_cast<std::size_t>(k);
  const std::size_t d = (inst.size() + target - 1) / target;
  const std::size_t padding = d * target - inst.size();

  std::vector<Dfa> members = inst.dfas();
  for (std::size_t i = 0; i < padding; ++i) {
    members.push_back(universal_dfa(inst.alphabet(), "pad" + std::to_string(i)));
  }
  if (d == 1) return {IntersectionInstance(std::move(members)), 1, padding};

  std::vector<Dfa> out;
  out.reserve(target);
  for (std::size_t g = 0; g < target; ++g) {
    std::vector<Dfa> group(members.begin() + static_cast<std::ptrdiff_t>(g * d),
                           members.begin() + static_cast<std::ptrdiff_t>((g + 1) * d));
    ProductOptions opt;
    opt.size_cap = size_cap;
    opt.name = "group" + std::to_string(g);
    out.push_back(product(IntersectionInstance(std::move(group)), opt));
  }
  return {IntersectionInstance(std::move(out)), d, padding};
}

}  // namespace dfaint
