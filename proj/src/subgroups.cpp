#include "sumfree/subgroups.hpp"

#include <algorithm>
#include <set>

#include "sumfree/error.hpp"
#include "sumfree/setops.hpp"

namespace sumfree {
namespace {

void check_lattice_order(const GroupTable& g) {
  if (g.order() > kMaxLatticeOrder) {
    throw Error(ErrorKind::OrderOverflow, "subgroup enumeration is capped at order " +
                                              std::to_string(kMaxLatticeOrder));
  }
}

}  // namespace

ElementSet generated_subgroup(const GroupTable& g, const ElementSet& gens) {
  if (gens.order() != g.order()) {
    throw Error(ErrorKind::Precondition, "generator set does not belong to the group");
  }
  ElementSet closure(g.order());
  closure.insert(0);
  std::vector<Element> members{0};
  std::vector<Element> worklist;
  gens.for_each([&](Element x) {
    if (!closure.contains(x)) {
      closure.insert(x);
      members.push_back(x);
      worklist.push_back(x);
    }
  });
  auto admit = [&](Element z) {
    if (!closure.contains(z)) {
      closure.insert(z);
      members.push_back(z);
      worklist.push_back(z);
    }
  };
  while (!worklist.empty()) {
    const Element x = worklist.back();
    worklist.pop_back();
    admit(g.neg(x));
    // members grows while we iterate; index-based loop picks up new entries.
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Element y = members[i];
      admit(g.add(x, y));
      admit(g.add(y, x));
    }
  }
  return closure;
}

bool is_subgroup(const GroupTable& g, const ElementSet& h) {
  if (h.order() != g.order() || !h.contains(0)) return false;
  const auto members = h.elements();
  for (const Element x : members) {
    if (!h.contains(g.neg(x))) return false;
    for (const Element y : members)
      if (!h.contains(g.add(x, y))) return false;
  }
  return true;
}

SubgroupList enumerate_subgroups(const GroupTable& g) {
  check_lattice_order(g);
  const std::size_t n = g.order();

  std::set<ElementSet> cyclic_set;
  for (Element x = 0; x < n; ++x) {
    cyclic_set.insert(generated_subgroup(g, ElementSet(n, {x})));
  }
  const std::vector<ElementSet> cyclic(cyclic_set.begin(), cyclic_set.end());

  std::set<ElementSet> found(cyclic.begin(), cyclic.end());
  std::vector<ElementSet> worklist(cyclic.begin(), cyclic.end());
  while (!worklist.empty()) {
    const ElementSet h = std::move(worklist.back());
    worklist.pop_back();
    for (const auto& c : cyclic) {
      if (c.is_subset_of(h)) continue;
      ElementSet joined = generated_subgroup(g, h | c);
      if (found.insert(joined).second) worklist.push_back(std::move(joined));
    }
  }

  SubgroupList list;
  list.all.reserve(found.size());
  for (const auto& h : found) {
    const std::size_t size = h.size();
    if (n % size != 0) {
      throw Error(ErrorKind::Axiom, "Lagrange divisibility fails for " + h.to_literal());
    }
    list.all.push_back(Subgroup{h, false, n / size});
  }
  for (auto& s : list.all) {
    if (s.index == 1) continue;
    bool maximal = true;
    for (const auto& t : list.all) {
      if (t.index != 1 && t.elements != s.elements && s.elements.is_subset_of(t.elements)) {
        maximal = false;
        break;
      }
    }
    s.is_maximal = maximal;
    if (maximal) list.maximal.push_back(s);
  }
  return list;
}

std::vector<Subgroup> maximal_subgroups(const GroupTable& g) {
  return enumerate_subgroups(g).maximal;
}

ElementSet frattini(const GroupTable& g) {
  const auto maximal = maximal_subgroups(g);
  ElementSet phi = ElementSet::full(g.order());
  for (const auto& m : maximal) phi &= m.elements;
  return phi;
}

Lemma21Witness lemma21_witness(const GroupTable& g, const Subgroup& h) {
  if (h.elements.order() != g.order()) {
    throw Error(ErrorKind::Precondition, "subgroup does not belong to the group");
  }
  const std::size_t size = h.elements.size();
  if (size == g.order()) return {};
  Lemma21Witness w;
  w.complement_is_max_sum_free = is_maximal_sum_free_direct(g, h.elements.complement());
  w.index_is_two = g.order() == 2 * size;
  return w;
}

}  // namespace sumfree
