#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sumfree/bigint.hpp"
#include "sumfree/element_set.hpp"

namespace sumfree::gf2 {

using Word = std::uint32_t;

inline constexpr unsigned kMaxDimension = 31;
inline constexpr unsigned kMaxBruteDimension = 20;
inline constexpr unsigned kMaxSetDimension = 12;
inline constexpr unsigned kMaxGlDimension = 4;

inline int dot(Word a, Word x) noexcept { return std::popcount(a & x) & 1; }

// Nonzero linear functional x -> parity(mask & x) on Z2^n. Its kernel is a
// maximal subgroup (hyperplane) of Z2^n.
struct Functional {
  Word mask = 0;
  unsigned n = 0;

  Functional(Word mask, unsigned n);
  bool operator==(const Functional&) const = default;
};

// "0b..." with n digits, most significant coordinate first.
std::string to_bit_string(const Functional& alpha);

// Distinct nonzero functionals in ascending mask order.
class FunctionalSet {
 public:
  FunctionalSet(unsigned n, std::vector<Word> masks);

  unsigned dimension() const noexcept { return n_; }
  const std::vector<Word>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  unsigned n_;
  std::vector<Word> members_;
};

// Incremental Gaussian elimination for the affine system {α·x = 1 : α chosen}.
class AffineSystem {
 public:
  explicit AffineSystem(unsigned n);

  // Adds the row (alpha | 1). Returns false once the system is inconsistent.
  bool add(Word alpha) noexcept;

  unsigned rank() const noexcept { return rank_; }
  bool consistent() const noexcept { return consistent_; }
  // Number of x in Z2^n satisfying every row.
  std::uint64_t solution_count() const noexcept;

 private:
  unsigned n_;
  unsigned rank_ = 0;
  bool consistent_ = true;
  std::array<std::uint64_t, kMaxDimension> pivot_rows_{};
};

ElementSet hyperplane(const Functional& alpha);
ElementSet hyperplane_complement(const Functional& alpha);

// |∪ hyperplanes| by scanning all 2^n vectors.
std::uint64_t union_cardinality_brute(const FunctionalSet& s);
// |∪ hyperplanes| = 2^n - #{x : α·x = 1 for all α}, by elimination.
std::uint64_t union_cardinality_fast(const FunctionalSet& s);

enum class UnionMethod { Fast, Brute };
enum class XnStrategy { Auto, Flat, Pruned };

struct XnOptions {
  unsigned jobs = 1;
  bool allow_n5 = false;
  UnionMethod method = UnionMethod::Fast;
  XnStrategy strategy = XnStrategy::Auto;
};

struct XnResult {
  unsigned n = 0;
  BigInt value;
  std::uint64_t term_count = 0;  // 2^(2^n - 1) - 1 nonempty subsets
  // Net signed number of subsets per exponent 2^n - |union|.
  std::map<std::uint64_t, std::int64_t> exponent_tallies;
};

// Sum over nonempty subsets S of the 2^n - 1 maximal subgroups of
// (-1)^(|S|-1) 2^(2^n - |∪S|). Flat iterates every subset; Pruned walks the
// subsets depth-first and drops subtrees below an inconsistent system,
// whose terms cancel in pairs.
XnResult xn_inclusion_exclusion(unsigned n, const XnOptions& options = {});

// The α with a = {x : α·x = 1}, if any.
std::optional<Functional> matches_hyperplane_complement(const ElementSet& a, unsigned n);

// Invertible linear map on Z2^n stored by column images of the basis vectors.
struct LinearMap {
  std::array<Word, kMaxGlDimension> columns{};
  unsigned n = 0;

  Word apply(Word x) const noexcept {
    Word y = 0;
    for (unsigned i = 0; i < n; ++i)
      if ((x >> i) & 1U) y ^= columns[i];
    return y;
  }
};

// All of GL(n,2), built by closing the transvections under composition.
const std::vector<LinearMap>& general_linear_group(unsigned n);

ElementSet apply_linear_map(const LinearMap& map, const ElementSet& a);

// Minimal bitmask over the GL(n,2)-orbit of a.
ElementSet gl_canonical_form(const ElementSet& a, unsigned n);

}  // namespace sumfree::gf2
