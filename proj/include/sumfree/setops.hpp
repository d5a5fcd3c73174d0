#pragma once

#include "sumfree/element_set.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

// {x + y : x in a, y in b}
ElementSet sumset(const GroupTable& g, const ElementSet& a, const ElementSet& b);
// {x - y : x in a, y in b}, where x - y means x + neg(y).
ElementSet difference_set(const GroupTable& g, const ElementSet& a, const ElementSet& b);
// {x in G : x + x in a}
ElementSet half_set(const GroupTable& g, const ElementSet& a);
// {x + y : y in a}
ElementSet left_translate(const GroupTable& g, Element x, const ElementSet& a);

bool is_sum_free(const GroupTable& g, const ElementSet& a);

// Would a ∪ {x} still be sum-free? Assumes a is sum-free and x is not in a.
bool can_extend_sum_free(const GroupTable& g, const ElementSet& a, Element x);

// Maximality straight from the definition: a is sum-free and no a ∪ {x}
// with x outside a is sum-free.
bool is_maximal_sum_free_direct(const GroupTable& g, const ElementSet& a);

// Complement test: G \ a == (a+a) ∪ (a-a) ∪ ½a. The trivial group is
// rejected, where this disagrees with the direct definition for a = ∅.
bool maximality_criterion(const GroupTable& g, const ElementSet& a);

}  // namespace sumfree
