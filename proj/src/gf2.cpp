#include "sumfree/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <thread>
#include <unordered_set>

#include "sumfree/error.hpp"

namespace sumfree::gf2 {
namespace {

void check_dimension(unsigned n, unsigned cap, const char* what) {
  if (n == 0 || n > cap) {
    throw Error(ErrorKind::Range, std::string(what) + ": dimension " + std::to_string(n) +
                                      " outside 1.." + std::to_string(cap));
  }
}

std::size_t set_order(unsigned n) {
  check_dimension(n, kMaxSetDimension, "element sets");
  return std::size_t{1} << n;
}

}  // namespace

Functional::Functional(Word m, unsigned dim) : mask(m), n(dim) {
  check_dimension(n, kMaxDimension, "functional");
  if (mask == 0 || (mask >> n) != 0) {
    throw Error(ErrorKind::Range, "functional mask " + std::to_string(mask) +
                                      " is not a nonzero " + std::to_string(n) + "-bit word");
  }
}

std::string to_bit_string(const Functional& alpha) {
  std::string s = "0b";
  for (unsigned i = alpha.n; i-- > 0;) s += ((alpha.mask >> i) & 1U) ? '1' : '0';
  return s;
}

FunctionalSet::FunctionalSet(unsigned n, std::vector<Word> masks)
    : n_(n), members_(std::move(masks)) {
  check_dimension(n, kMaxDimension, "functional set");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorKind::Precondition, "functional set has repeated members");
  }
  for (const Word m : members_) Functional(m, n);
}

AffineSystem::AffineSystem(unsigned n) : n_(n) {
  check_dimension(n, kMaxDimension, "affine system");
}

bool AffineSystem::add(Word alpha) noexcept {
  if (!consistent_) return false;
  std::uint64_t row = std::uint64_t{alpha} | (std::uint64_t{1} << n_);
  for (unsigned b = n_; b-- > 0;) {
    if (!((row >> b) & 1U)) continue;
    if (pivot_rows_[b] == 0) {
      pivot_rows_[b] = row;
      ++rank_;
      return true;
    }
    row ^= pivot_rows_[b];
  }
  // Coefficients reduced to zero: 0 = target.
  consistent_ = row == 0;
  return consistent_;
}

std::uint64_t AffineSystem::solution_count() const noexcept {
  return consistent_ ? std::uint64_t{1} << (n_ - rank_) : 0;
}

ElementSet hyperplane(const Functional& alpha) {
  ElementSet s(set_order(alpha.n));
  for (Word x = 0; x < s.order(); ++x)
    if (dot(alpha.mask, x) == 0) s.insert(x);
  return s;
}

ElementSet hyperplane_complement(const Functional& alpha) { return hyperplane(alpha).complement(); }

std::uint64_t union_cardinality_brute(const FunctionalSet& s) {
  check_dimension(s.dimension(), kMaxBruteDimension, "brute-force union");
  const std::uint64_t space = std::uint64_t{1} << s.dimension();
  std::uint64_t covered = 0;
  for (std::uint64_t x = 0; x < space; ++x) {
    const bool hit = std::any_of(s.members().begin(), s.members().end(),
                                 [x](Word a) { return dot(a, static_cast<Word>(x)) == 0; });
    covered += hit ? 1 : 0;
  }
  return covered;
}

std::uint64_t union_cardinality_fast(const FunctionalSet& s) {
  AffineSystem system(s.dimension());
  for (const Word a : s.members()) {
    if (!system.add(a)) break;
  }
  return (std::uint64_t{1} << s.dimension()) - system.solution_count();
}

namespace {

using Tallies = std::map<std::uint64_t, std::int64_t>;

void merge_into(Tallies& into, const Tallies& from) {
  for (const auto& [e, c] : from) into[e] += c;
}

// Flat: every nonempty subset of the k functionals {1, ..., k}, split into
// contiguous index ranges.
Tallies flat_tallies(unsigned n, UnionMethod method, unsigned jobs) {
  const unsigned k = (1U << n) - 1;
  const std::uint64_t subsets = std::uint64_t{1} << k;
  const std::uint64_t space = std::uint64_t{1} << n;
  const unsigned workers = std::max(1U, jobs);
  std::vector<Tallies> parts(workers);

  auto work = [&](unsigned w) {
    const std::uint64_t lo = 1 + (subsets - 1) * w / workers;
    const std::uint64_t hi = 1 + (subsets - 1) * (w + 1) / workers;
    std::vector<Word> chosen;
    for (std::uint64_t s = lo; s < hi; ++s) {
      chosen.clear();
      for (std::uint64_t m = s; m != 0; m &= m - 1) {
        chosen.push_back(static_cast<Word>(std::countr_zero(m) + 1));
      }
      const FunctionalSet fs(n, chosen);
      const std::uint64_t u = method == UnionMethod::Fast ? union_cardinality_fast(fs)
                                                          : union_cardinality_brute(fs);
      parts[w][space - u] += (chosen.size() % 2 == 1) ? 1 : -1;
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  pool.clear();

  Tallies total;
  for (const auto& p : parts) merge_into(total, p);
  return total;
}

class PrunedWalk {
 public:
  explicit PrunedWalk(unsigned n) : n_(n), k_((1U << n) - 1) {}

  // Subsets whose smallest member is functional `first`.
  void from_first(Word first, Tallies& out) const {
    AffineSystem system(n_);
    system.add(first);
    out[system.solution_count()] += 1;
    descend(system, first + 1, 1, out);
  }

  unsigned functional_count() const noexcept { return k_; }

 private:
  void descend(const AffineSystem& system, Word next, unsigned size, Tallies& out) const {
    const std::int64_t sign = ((size + 1) % 2 == 1) ? 1 : -1;
    for (Word j = next; j <= k_; ++j) {
      AffineSystem child = system;
      if (!child.add(j)) {
        // Every extension by members above j is inconsistent too and the
        // signed sum over those extensions is zero unless there are none.
        if (j == k_) out[0] += sign;
        continue;
      }
      out[child.solution_count()] += sign;
      descend(child, j + 1, size + 1, out);
    }
  }

  unsigned n_;
  Word k_;
};

Tallies pruned_tallies(unsigned n, unsigned jobs) {
  const PrunedWalk walk(n);
  const unsigned k = walk.functional_count();
  std::vector<Tallies> parts(k);
  std::atomic<unsigned> cursor{0};
  auto work = [&] {
    for (unsigned i = cursor++; i < k; i = cursor++) walk.from_first(i + 1, parts[i]);
  };
  const unsigned workers = std::clamp(jobs, 1U, k);
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  Tallies total;
  for (const auto& p : parts) merge_into(total, p);
  return total;
}

}  // namespace

XnResult xn_inclusion_exclusion(unsigned n, const XnOptions& options) {
  if (n < 1 || n > 5) {
    throw Error(ErrorKind::Range, "x_n is supported for 1 <= n <= 5, got " + std::to_string(n));
  }
  if (n == 5 && !options.allow_n5) {
    throw Error(ErrorKind::Range, "x_5 requires the explicit n=5 opt-in");
  }
  XnStrategy strategy = options.strategy;
  if (strategy == XnStrategy::Auto) strategy = n <= 4 ? XnStrategy::Flat : XnStrategy::Pruned;
  if (strategy == XnStrategy::Flat && n > 4) {
    throw Error(ErrorKind::Range, "flat subset iteration is limited to n <= 4");
  }
  if (strategy == XnStrategy::Pruned && options.method == UnionMethod::Brute) {
    throw Error(ErrorKind::Precondition, "the pruned walk always uses elimination");
  }

  XnResult result;
  result.n = n;
  const unsigned k = (1U << n) - 1;
  result.term_count = (std::uint64_t{1} << k) - 1;
  result.exponent_tallies = strategy == XnStrategy::Flat
                                ? flat_tallies(n, options.method, options.jobs)
                                : pruned_tallies(n, options.jobs);
  for (const auto& [exponent, count] : result.exponent_tallies) {
    result.value += BigInt(count) << static_cast<unsigned>(exponent);
  }
  return result;
}

std::optional<Functional> matches_hyperplane_complement(const ElementSet& a, unsigned n) {
  const std::size_t order = set_order(n);
  if (a.order() != order) {
    throw Error(ErrorKind::Precondition, "set does not belong to Z2^" + std::to_string(n));
  }
  if (a.size() != order / 2) return std::nullopt;
  const ElementSet kernel = a.complement();
  if (!kernel.contains(0)) return std::nullopt;

  // Reduced row echelon basis of span(kernel), pivot = highest set bit.
  std::array<Word, kMaxSetDimension> rows{};
  unsigned rank = 0;
  kernel.for_each([&](Element v) {
    Word r = v;
    for (unsigned b = n; b-- > 0 && r != 0;) {
      if (!((r >> b) & 1U)) continue;
      if (rows[b] == 0) {
        rows[b] = r;
        ++rank;
        return;
      }
      r ^= rows[b];
    }
  });
  // 0 in kernel, |kernel| = 2^(n-1) = |span| forces kernel = span.
  if (rank != n - 1) return std::nullopt;
  for (unsigned b = 0; b < n; ++b) {
    if (rows[b] == 0) continue;
    for (unsigned lower = 0; lower < b; ++lower)
      if (rows[lower] != 0 && ((rows[b] >> lower) & 1U)) rows[b] ^= rows[lower];
  }
  unsigned free_col = 0;
  while (rows[free_col] != 0) ++free_col;
  Word alpha = Word{1} << free_col;
  for (unsigned b = 0; b < n; ++b)
    if (rows[b] != 0 && ((rows[b] >> free_col) & 1U)) alpha |= Word{1} << b;

  const Functional f(alpha, n);
  if (hyperplane_complement(f) != a) return std::nullopt;
  return f;
}

namespace {

std::uint32_t encode(const LinearMap& m) {
  std::uint32_t key = 0;
  for (unsigned i = 0; i < m.n; ++i) key |= m.columns[i] << (4 * i);
  return key;
}

std::vector<LinearMap> build_general_linear_group(unsigned n) {
  LinearMap identity;
  identity.n = n;
  for (unsigned i = 0; i < n; ++i) identity.columns[i] = Word{1} << i;

  // Transvection e_j -> e_j + e_i.
  std::vector<LinearMap> generators;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      LinearMap t = identity;
      t.columns[j] ^= Word{1} << i;
      generators.push_back(t);
    }
  }

  std::vector<LinearMap> group{identity};
  std::unordered_set<std::uint32_t> seen{encode(identity)};
  std::deque<LinearMap> queue{identity};
  while (!queue.empty()) {
    const LinearMap m = queue.front();
    queue.pop_front();
    for (const auto& t : generators) {
      LinearMap product;
      product.n = n;
      for (unsigned c = 0; c < n; ++c) product.columns[c] = m.apply(t.columns[c]);
      if (seen.insert(encode(product)).second) {
        group.push_back(product);
        queue.push_back(product);
      }
    }
  }
  return group;
}

}  // namespace

const std::vector<LinearMap>& general_linear_group(unsigned n) {
  check_dimension(n, kMaxGlDimension, "GL(n,2)");
  static const std::array<std::vector<LinearMap>, kMaxGlDimension + 1> groups = [] {
    std::array<std::vector<LinearMap>, kMaxGlDimension + 1> g;
    for (unsigned d = 1; d <= kMaxGlDimension; ++d) g[d] = build_general_linear_group(d);
    return g;
  }();
  return groups[n];
}

ElementSet apply_linear_map(const LinearMap& map, const ElementSet& a) {
  if (a.order() != (std::size_t{1} << map.n)) {
    throw Error(ErrorKind::Precondition, "set does not belong to Z2^" + std::to_string(map.n));
  }
  ElementSet out(a.order());
  a.for_each([&](Element x) { out.insert(map.apply(x)); });
  return out;
}

ElementSet gl_canonical_form(const ElementSet& a, unsigned n) {
  const auto& group = general_linear_group(n);
  if (a.order() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::Precondition, "set does not belong to Z2^" + std::to_string(n));
  }
  const auto members = a.elements();
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& m : group) {
    std::uint64_t image = 0;
    for (const Element x : members) image |= std::uint64_t{1} << m.apply(x);
    best = std::min(best, image);
  }
  return ElementSet::from_mask(a.order(), best);
}

}  // namespace sumfree::gf2
