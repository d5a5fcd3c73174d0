#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "sumfree/bigint.hpp"
#include "sumfree/element_set.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

inline constexpr std::size_t kMaxEnumerationOrder = 32;

struct EnumerationResult {
  BigInt total_sum_free;                        // includes the empty set
  std::vector<ElementSet> maximal_sets;         // ascending bitmask order
  std::map<std::size_t, std::uint64_t> size_histogram;

  bool operator==(const EnumerationResult&) const = default;
};

// Number of sum-free subsets (empty set included), by a DFS that adds
// elements in ascending index order.
BigInt count_sum_free(const GroupTable& g);

// Same count with the DFS split at a fixed prefix depth across `workers`
// threads. The value does not depend on `workers`.
BigInt count_sum_free_parallel(const GroupTable& g, unsigned workers);

EnumerationResult enumerate_maximal_sum_free(const GroupTable& g, unsigned workers = 1);

// Greedy ascending-index extension of a sum-free set to a maximal one.
ElementSet extend_to_maximal(const GroupTable& g, const ElementSet& a);

// "bitmask,cardinality" rows with a header line.
void write_maximal_csv(const EnumerationResult& result, std::ostream& out);

}  // namespace sumfree
