#include "sumfree/setops.hpp"

#include "sumfree/error.hpp"

namespace sumfree {
namespace {

void check_owner(const GroupTable& g, const ElementSet& a) {
  if (a.order() != g.order()) {
    throw Error(ErrorKind::Precondition, "set of order " + std::to_string(a.order()) +
                                             " does not belong to group '" + g.name() + "'");
  }
}

}  // namespace

ElementSet sumset(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  check_owner(g, a);
  check_owner(g, b);
  ElementSet out(g.order());
  const auto rhs = b.elements();
  a.for_each([&](Element x) {
    for (const Element y : rhs) out.insert(g.add(x, y));
  });
  return out;
}

ElementSet difference_set(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  check_owner(g, a);
  check_owner(g, b);
  ElementSet out(g.order());
  const auto rhs = b.elements();
  a.for_each([&](Element x) {
    for (const Element y : rhs) out.insert(g.add(x, g.neg(y)));
  });
  return out;
}

ElementSet half_set(const GroupTable& g, const ElementSet& a) {
  check_owner(g, a);
  ElementSet out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (a.contains(g.add(x, x))) out.insert(x);
  }
  return out;
}

ElementSet left_translate(const GroupTable& g, Element x, const ElementSet& a) {
  check_owner(g, a);
  ElementSet out(g.order());
  a.for_each([&](Element y) { out.insert(g.add(x, y)); });
  return out;
}

bool is_sum_free(const GroupTable& g, const ElementSet& a) {
  check_owner(g, a);
  const auto members = a.elements();
  for (const Element x : members)
    for (const Element y : members)
      if (a.contains(g.add(x, y))) return false;
  return true;
}

bool can_extend_sum_free(const GroupTable& g, const ElementSet& a, Element x) {
  const Element twice = g.add(x, x);
  if (twice == x || a.contains(twice)) return false;
  bool ok = true;
  a.for_each([&](Element y) {
    if (!ok) return;
    const Element l = g.add(y, x);
    const Element r = g.add(x, y);
    if (l == x || a.contains(l) || r == x || a.contains(r)) ok = false;
  });
  if (!ok) return false;
  // x = y + z with y, z in a  <=>  -y + x in a for some y in a.
  a.for_each([&](Element y) {
    if (ok && a.contains(g.add(g.neg(y), x))) ok = false;
  });
  if (!ok) return false;
  return true;
}

bool is_maximal_sum_free_direct(const GroupTable& g, const ElementSet& a) {
  if (!is_sum_free(g, a)) return false;
  for (Element x = 0; x < g.order(); ++x) {
    if (a.contains(x)) continue;
    ElementSet bigger = a;
    bigger.insert(x);
    if (is_sum_free(g, bigger)) return false;
  }
  return true;
}

bool maximality_criterion(const GroupTable& g, const ElementSet& a) {
  check_owner(g, a);
  if (g.order() < 2) {
    throw Error(ErrorKind::Precondition, "maximality criterion requires a nontrivial group");
  }
  const ElementSet rhs = sumset(g, a, a) | difference_set(g, a, a) | half_set(g, a);
  return rhs == a.complement();
}

}  // namespace sumfree
