#pragma once

// Rabin-Scott product of an intersection instance.
//
// Product state ids use a mixed-radix encoding of the member state tuple with
// the first DFA as the most significant digit, so ids are reproducible.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dfaint/dfa.hpp"

namespace dfaint {

inline constexpr std::size_t kDefaultProductCap = 50'000'000;

struct ProductOptions {
  std::size_t size_cap = kDefaultProductCap;
  // Keep only states reachable from the initial tuple, renumbered in
  // breadth-first discovery order (alphabet order within a layer).
  bool prune_unreachable = false;
  std::string name = "product";
};

// Mixed-radix codec for product state tuples.
class TupleCodec {
 public:
  explicit TupleCodec(const IntersectionInstance& inst) {
    radix_.reserve(inst.size());
    for (const auto& d : inst.dfas()) radix_.push_back(d.state_count());
    stride_.assign(radix_.size(), 1);
    for (std::size_t i = radix_.size(); i-- > 1;) stride_[i - 1] = stride_[i] * radix_[i];
  }

  std::size_t encode(const std::vector<StateId>& tuple) const {
    std::size_t id = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) id += tuple[i] * stride_[i];
    return id;
  }

  void decode(std::size_t id, std::vector<StateId>& tuple) const {
    tuple.resize(radix_.size());
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      tuple[i] = static_cast<StateId>(id / stride_[i]);
      id %= stride_[i];
    }
  }

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> stride_;
};

namespace detail {

inline Dfa full_product(const IntersectionInstance& inst, const ProductOptions& opt) {
  const std::size_t total = inst.product_size();
  if (total > opt.size_cap) {
    throw SizeOverflow("product has " +
                       (total == SIZE_MAX ? std::string("more than 2^64") : std::to_string(total)) +
                       " states, above the cap of " + std::to_string(opt.size_cap));
  }
  const std::size_t sigma = inst.alphabet().size();
  const TupleCodec codec(inst);
  std::vector<StateId> table(total * sigma);
  std::vector<StateId> finals;
  std::vector<StateId> tuple, succ(inst.size());
  for (std::size_t id = 0; id < total; ++id) {
    codec.decode(id, tuple);
    bool all_final = true;
    for (std::size_t i = 0; i < inst.size(); ++i) all_final = all_final && inst[i].is_final(tuple[i]);
    if (all_final) finals.push_back(static_cast<StateId>(id));
    for (SymbolId a = 0; a < sigma; ++a) {
      for (std::size_t i = 0; i < inst.size(); ++i) succ[i] = inst[i].next(tuple[i], a);
      table[id * sigma + a] = static_cast<StateId>(codec.encode(succ));
    }
  }
  std::vector<StateId> init(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) init[i] = inst[i].initial();
  return Dfa(opt.name, inst.alphabet(), total, std::move(table),
             static_cast<StateId>(codec.encode(init)), std::move(finals));
}

inline Dfa reachable_product(const IntersectionInstance& inst, const ProductOptions& opt) {
  const std::size_t k = inst.size();
  const std::size_t sigma = inst.alphabet().size();

  std::vector<StateId> init(k);
  for (std::size_t i = 0; i < k; ++i) init[i] = inst[i].initial();

  // Discovery order doubles as the new numbering.
  std::vector<std::vector<StateId>> order{init};
  std::map<std::vector<StateId>, StateId> ids{{init, 0}};
  std::vector<StateId> table;
  std::vector<StateId> finals;
  std::vector<StateId> succ(k);
  for (std::size_t cur = 0; cur < order.size(); ++cur) {
    const auto tuple = order[cur];
    bool all_final = true;
    for (std::size_t i = 0; i < k; ++i) all_final = all_final && inst[i].is_final(tuple[i]);
    if (all_final) finals.push_back(static_cast<StateId>(cur));
    for (SymbolId a = 0; a < sigma; ++a) {
      for (std::size_t i = 0; i < k; ++i) succ[i] = inst[i].next(tuple[i], a);
      auto [it, inserted] = ids.try_emplace(succ, static_cast<StateId>(order.size()));
      if (inserted) {
        if (order.size() >= opt.size_cap) {
          throw SizeOverflow("reachable product exceeds the cap of " + std::to_string(opt.size_cap) + " states");
        }
        order.push_back(succ);
      }
      table.push_back(it->second);
    }
  }
  return Dfa(opt.name, inst.alphabet(), order.size(), std::move(table), 0, std::move(finals));
}

}  // namespace detail

inline Dfa product(const IntersectionInstance& inst, const ProductOptions& opt = {}) {
  return opt.prune_unreachable ? detail::reachable_product(inst, opt) : detail::full_product(inst, opt);
}

}  // namespace dfaint
