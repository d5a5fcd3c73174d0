#pragma once

#include <cstddef>
#include <vector>

#include "sumfree/element_set.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

inline constexpr std::size_t kMaxLatticeOrder = 256;

struct Subgroup {
  ElementSet elements;
  bool is_maximal = false;
  std::size_t index = 1;
};

struct SubgroupList {
  std::vector<Subgroup> all;      // ascending bitmask order
  std::vector<Subgroup> maximal;  // ascending bitmask order
};

// Smallest subgroup containing `gens`.
ElementSet generated_subgroup(const GroupTable& g, const ElementSet& gens);

// Full lattice by join closure: starts from the cyclic subgroups and joins
// every new subgroup with each cyclic one until nothing new appears.
SubgroupList enumerate_subgroups(const GroupTable& g);

std::vector<Subgroup> maximal_subgroups(const GroupTable& g);

// Intersection of the maximal subgroups (the whole group when there are none).
ElementSet frattini(const GroupTable& g);

bool is_subgroup(const GroupTable& g, const ElementSet& h);

struct Lemma21Witness {
  bool complement_is_max_sum_free = false;
  bool index_is_two = false;
  bool operator==(const Lemma21Witness&) const = default;
};

// Evaluates both sides of "G \ H is a non-empty maximal sum-free set iff
// [G:H] = 2" independently. H = G yields {false, false}.
Lemma21Witness lemma21_witness(const GroupTable& g, const Subgroup& h);

}  // namespace sumfree
