#include "sumfree/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "sumfree/error.hpp"
#include "sumfree/setops.hpp"

namespace sumfree {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Element x) { return Mask{1} << x; }

// Table-driven DFS over sum-free sets. A node is a sum-free set `members`
// together with `forbidden` = (A+A) ∪ (-A+A) ∪ (A-A) ∪ ½A ∪ {0}; an element
// outside both may join without creating a relation x + y = z.
class SumFreeSearch {
 public:
  struct Node {
    Mask members = 0;
    Mask forbidden = 1;  // {0}
    Element next = 0;    // smallest index a child may add
  };

  struct Tally {
    std::uint64_t count = 0;
    std::vector<Mask> maximal;
  };

  SumFreeSearch(const GroupTable& g, bool collect_maximal)
      : n_(static_cast<Element>(g.order())), collect_(collect_maximal) {
    if (g.order() > kMaxEnumerationOrder) {
      throw Error(ErrorKind::OrderOverflow, "exhaustive enumeration is capped at order " +
                                                std::to_string(kMaxEnumerationOrder));
    }
    full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    add_.resize(std::size_t{n_} * n_);
    neg_.resize(n_);
    half_of_.assign(n_, 0);
    for (Element x = 0; x < n_; ++x) {
      neg_[x] = g.neg(x);
      for (Element y = 0; y < n_; ++y) add_[x * n_ + y] = g.add(x, y);
      half_of_[g.add(x, x)] |= bit(x);
    }
  }

  Mask addable(const Node& node) const { return full_ & ~node.members & ~node.forbidden; }

  Node child(const Node& node, Element x) const {
    Node c;
    c.members = node.members | bit(x);
    c.next = x + 1;
    Mask f = node.forbidden | half_of_[x] | bit(sum(x, x));
    const Element nx = neg_[x];
    for (Mask m = node.members; m != 0; m &= m - 1) {
      const auto a = static_cast<Element>(std::countr_zero(m));
      const Element na = neg_[a];
      f |= bit(sum(x, a)) | bit(sum(a, x));
      f |= bit(sum(nx, a)) | bit(sum(na, x));
      f |= bit(sum(x, na)) | bit(sum(a, nx));
    }
    c.forbidden = f;
    return c;
  }

  // Visits `node` itself (counted once) and every descendant.
  void run(const Node& node, Tally& tally) const {
    ++tally.count;
    const Mask open = addable(node);
    if (collect_ && open == 0) tally.maximal.push_back(node.members);
    for (Mask m = open & ~(bit(node.next) - 1); m != 0; m &= m - 1) {
      run(child(node, static_cast<Element>(std::countr_zero(m))), tally);
    }
  }

  // Visits only `node` and returns its children.
  std::vector<Node> expand(const Node& node, Tally& tally) const {
    ++tally.count;
    const Mask open = addable(node);
    if (collect_ && open == 0) tally.maximal.push_back(node.members);
    std::vector<Node> kids;
    for (Mask m = open & ~(bit(node.next) - 1); m != 0; m &= m - 1) {
      kids.push_back(child(node, static_cast<Element>(std::countr_zero(m))));
    }
    return kids;
  }

 private:
  Element sum(Element a, Element b) const { return add_[a * n_ + b]; }

  Element n_;
  bool collect_;
  Mask full_ = 0;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<Mask> half_of_;
};

SumFreeSearch::Tally run_partitioned(const SumFreeSearch& search, unsigned workers) {
  if (workers == 0) throw Error(ErrorKind::Precondition, "worker count must be positive");
  SumFreeSearch::Tally head;
  std::vector<SumFreeSearch::Node> frontier{SumFreeSearch::Node{}};
  const std::size_t wanted = std::size_t{4} * workers;
  while (!frontier.empty() && frontier.size() < wanted) {
    std::vector<SumFreeSearch::Node> next;
    for (const auto& node : frontier) {
      auto kids = search.expand(node, head);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    frontier = std::move(next);
  }

  std::vector<SumFreeSearch::Tally> slots(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
      search.run(frontier[i], slots[i]);
    }
  };
  const unsigned spawn = static_cast<unsigned>(
      std::min<std::size_t>(workers, frontier.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (auto& s : slots) {
    head.count += s.count;
    head.maximal.insert(head.maximal.end(), s.maximal.begin(), s.maximal.end());
  }
  return head;
}

}  // namespace

BigInt count_sum_free(const GroupTable& g) {
  const SumFreeSearch search(g, false);
  SumFreeSearch::Tally tally;
  search.run(SumFreeSearch::Node{}, tally);
  return BigInt(tally.count);
}

BigInt count_sum_free_parallel(const GroupTable& g, unsigned workers) {
  const SumFreeSearch search(g, false);
  return BigInt(run_partitioned(search, workers).count);
}

EnumerationResult enumerate_maximal_sum_free(const GroupTable& g, unsigned workers) {
  const SumFreeSearch search(g, true);
  auto tally = run_partitioned(search, workers);
  std::sort(tally.maximal.begin(), tally.maximal.end());

  EnumerationResult result;
  result.total_sum_free = tally.count;
  result.maximal_sets.reserve(tally.maximal.size());
  for (const Mask m : tally.maximal) {
    ElementSet s = ElementSet::from_mask(g.order(), m);
    if (!is_maximal_sum_free_direct(g, s)) {
      throw Error(ErrorKind::Axiom, "search emitted non-maximal set " + s.to_literal());
    }
    ++result.size_histogram[s.size()];
    result.maximal_sets.push_back(std::move(s));
  }
  return result;
}

ElementSet extend_to_maximal(const GroupTable& g, const ElementSet& a) {
  if (!is_sum_free(g, a)) {
    throw Error(ErrorKind::Precondition, "cannot extend " + a.to_literal() + ": not sum-free");
  }
  // Sum-freeness is hereditary, so an element rejected once stays rejected
  // as the set grows; one ascending pass equals the repeated smallest-first
  // greedy.
  ElementSet out = a;
  for (Element x = 0; x < g.order(); ++x) {
    if (!out.contains(x) && can_extend_sum_free(g, out, x)) out.insert(x);
  }
  return out;
}

void write_maximal_csv(const EnumerationResult& result, std::ostream& out) {
  out << "bitmask,cardinality\n";
  for (const auto& s : result.maximal_sets) out << s.to_hex() << "," << s.size() << "\n";
}

}  // namespace sumfree
