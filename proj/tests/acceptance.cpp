// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sumfree/claims.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/gf2.hpp"
#include "sumfree/setops.hpp"
#include "sumfree/subgroups.hpp"

using namespace sumfree;
using namespace sumfree::claims;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& note) {
    if (!cond) {
      ok = false;
      notes.push_back(note);
    }
  }
};

std::string witness(const VerificationReport& r, const std::string& key) {
  for (const auto& w : r.witnesses)
    if (w.rfind(key + "=", 0) == 0) return w.substr(key.size() + 1);
  return {};
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<ElementSet> complement_family(unsigned n) {
  std::vector<ElementSet> out;
  for (gf2::Word a = 1; a < (gf2::Word{1} << n); ++a)
    out.push_back(gf2::hyperplane_complement(gf2::Functional(a, n)));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome ac1() {
  Outcome o;
  const BigInt expected[] = {2, 7, 64, 3049};
  for (unsigned n = 1; n <= 4; ++n) {
    const auto t = std::chrono::steady_clock::now();
    const auto value = gf2::xn_inclusion_exclusion(n).value;
    const double s = seconds_since(t);
    o.require(value == expected[n - 1], "x_" + std::to_string(n) + "=" + to_decimal(value) +
                                            " expected " + to_decimal(expected[n - 1]));
    o.require(s < 1.0, "x_" + std::to_string(n) + " took " + std::to_string(s) + " s");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto brute = count_sum_free(make_elementary_abelian_2(n));
    const auto xn = gf2::xn_inclusion_exclusion(n).value;
    o.require(brute == xn, "n=" + std::to_string(n) + " brute " + to_decimal(brute) + " != x_n " +
                               to_decimal(xn));
  }
  const auto brute4 = count_sum_free(make_elementary_abelian_2(4));
  o.notes.push_back("derived brute(Z2^4)=" + to_decimal(brute4));
  o.require(brute4 > 3049, "brute(Z2^4)=" + to_decimal(brute4) + " does not exceed 3049");
  return o;
}

Outcome ac3() {
  Outcome o;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto sets = enumerate_maximal_sum_free(make_elementary_abelian_2(n)).maximal_sets;
    const std::size_t half = std::size_t{1} << (n - 1);
    o.require(sets.size() == (std::size_t{1} << n) - 1, "n=" + std::to_string(n) + " count " +
                                                            std::to_string(sets.size()));
    for (const auto& a : sets)
      o.require(a.size() == half, "n=" + std::to_string(n) + " size " + std::to_string(a.size()));
    o.require(sets == complement_family(n), "n=" + std::to_string(n) + " family differs");
  }
  const auto sets = enumerate_maximal_sum_free(make_elementary_abelian_2(4)).maximal_sets;
  const auto family = complement_family(4);
  const std::set<ElementSet> found(sets.begin(), sets.end());
  std::size_t complements = 0;
  for (const auto& c : family) complements += found.contains(c) ? 1 : 0;
  std::size_t recognised = 0;
  for (const auto& a : sets) recognised += gf2::matches_hyperplane_complement(a, 4) ? 1 : 0;
  o.require(sets.size() > 15, "n=4 total " + std::to_string(sets.size()));
  o.require(complements == 15 && recognised == 15,
            "n=4 complements " + std::to_string(complements) + "/" + std::to_string(recognised));
  o.notes.push_back("n=4 total=" + std::to_string(sets.size()));
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto reports = verify_corpus();
  std::set<std::string> holds;
  for (const auto& r : reports) {
    o.require(r.status == Status::Pass, r.group + " status " + std::string(to_string(r.status)));
    const bool equal = witness(r, "families_equal") == "true";
    if (equal) holds.insert(r.group);
    if (!equal) o.require(!witness(r, "not_a_complement").empty(), r.group + " has no witness");
  }
  o.require(holds == std::set<std::string>{"Z2", "Z2^2", "Z2^3"}, "property set mismatch");
  for (const char* g : {"Z4", "Z8", "Z2xZ4", "D4", "Q8", "S3", "Z2^4"}) {
    o.require(std::any_of(reports.begin(), reports.end(),
                          [&](const VerificationReport& r) { return r.group == g; }),
              std::string(g) + " missing from corpus");
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto r = counterexample(4);
  o.require(witness(r, "sum_free") == "true", "A not sum-free");
  o.require(witness(r, "complements_containing_A") == "0", "A inside a hyperplane complement");
  o.require(witness(r, "extension_is_complement") == "false", "extension is a complement");
  o.require(r.status == Status::Pass, "report status " + std::string(to_string(r.status)));
  // Independent replay with the oracles.
  const auto g = make_elementary_abelian_2(4);
  const ElementSet a(16, {1, 2, 4, 8, 15});
  o.require(oracle::sum_free(g, a.to_mask()), "oracle: A not sum-free");
  for (gf2::Word alpha = 1; alpha < 16; ++alpha)
    o.require(!a.is_subset_of(gf2::hyperplane_complement(gf2::Functional(alpha, 4))),
              "oracle: A in complement " + std::to_string(alpha));
  const auto ext = extend_to_maximal(g, a);
  o.require(oracle::maximal(g, ext.to_mask()) && a.is_subset_of(ext), "oracle: extension not maximal");
  o.require(ext.size() != 8, "oracle: extension has complement size");
  o.notes.push_back("extension=" + ext.to_literal());
  return o;
}

Outcome ac6() {
  Outcome o;
  std::vector<std::string> specs;
  for (const auto& e : builtin_corpus()) specs.push_back(e.spec);
  for (const auto& spec : specs) {
    const auto r = verify_lemma21(spec);
    o.require(r.status == Status::Pass, "lemma21 " + spec);
    const auto g = parse_group_spec(spec);
    o.require(witness(r, "subgroups") == std::to_string(oracle::subgroups(g).size()),
              "lemma21 " + spec + " lattice size");
  }
  // Order-12 groups are added so the exhaustive mode is exercised at 2^12 subsets.
  specs.push_back("D6");
  specs.push_back("Z12");
  specs.push_back("Z2xZ6");
  std::size_t exhaustive = 0, sampled = 0;
  for (const auto& spec : specs) {
    const auto g = parse_group_spec(spec);
    RunOptions opts;
    opts.lemma22_samples = 100'000;
    const auto r = verify_lemma22(spec, opts);
    o.require(r.status == Status::Pass, "lemma22 " + spec);
    if (g.order() <= 12) {
      ++exhaustive;
      o.require(witness(r, "subsets") == std::to_string(std::uint64_t{1} << g.order()),
                "lemma22 " + spec + " not exhaustive");
    } else {
      ++sampled;
      o.require(witness(r, "subsets") == "100000", "lemma22 " + spec + " sample size");
    }
  }
  o.notes.push_back(std::to_string(exhaustive) + " exhaustive, " + std::to_string(sampled) +
                    " sampled");
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t checked = 0, mismatches = 0;
  auto check = [&](const gf2::FunctionalSet& s) {
    ++checked;
    if (gf2::union_cardinality_fast(s) != gf2::union_cardinality_brute(s)) ++mismatches;
  };
  auto from_pick = [](unsigned n, std::uint64_t pick) {
    std::vector<gf2::Word> rows;
    for (gf2::Word i = 0; i < (gf2::Word{1} << n) - 1; ++i)
      if ((pick >> i) & 1U) rows.push_back(i + 1);
    return gf2::FunctionalSet(n, rows);
  };
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ((1U << n) - 1)); ++pick)
      check(from_pick(n, pick));
  for (std::uint64_t pick = 1; pick < (1U << 15); ++pick)
    if (std::popcount(pick) <= 4) check(from_pick(4, pick));
  std::mt19937_64 rng(7);
  for (unsigned n = 1; n <= 8; ++n) {
    const std::uint64_t k = (std::uint64_t{1} << n) - 1;
    for (int i = 0; i < 10'000; ++i) {
      std::vector<gf2::Word> rows;
      for (gf2::Word a = 1; a <= k; ++a)
        if (rng() & 1U) rows.push_back(a);
      if (rows.empty()) rows.push_back(1);
      check(gf2::FunctionalSet(n, rows));
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.notes.push_back(std::to_string(checked) + " families");
  return o;
}

Outcome ac8() {
  Outcome o;
  std::vector<std::string> specs;
  for (const auto& e : builtin_corpus()) specs.push_back(e.spec);
  for (const auto& spec : specs) {
    const auto g = parse_group_spec(spec);
    std::string base;
    for (const unsigned workers : {1U, 2U, 8U}) {
      const auto r = enumerate_maximal_sum_free(g, workers);
      std::ostringstream bytes;
      bytes << to_decimal(r.total_sum_free) << "\n"
            << to_decimal(count_sum_free_parallel(g, workers)) << "\n";
      write_maximal_csv(r, bytes);
      if (workers == 1) {
        base = bytes.str();
      } else {
        o.require(bytes.str() == base, spec + " differs at " + std::to_string(workers) + " workers");
      }
    }
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  for (unsigned n = 1; n <= 5; ++n) {
    const auto g = make_elementary_abelian_2(n);
    o.require(frattini(g) == ElementSet(g.order(), {0}), "Z2^" + std::to_string(n));
  }
  const auto z4 = make_cyclic(4);
  o.require(frattini(z4) == ElementSet(4, {0, 2}), "Z4 gives " + frattini(z4).to_literal());
  return o;
}

Outcome ac10() {
  Outcome o;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto r = check_odd_sum_claim(n);
    o.require(r.status == Status::Pass && witness(r, "claim_holds") == "true",
              "n=" + std::to_string(n) + " claim does not hold");
  }
  const auto r = check_odd_sum_claim(4);
  const auto w = witness(r, "counterexample");
  o.require(r.status == Status::RefutedAsExpected && witness(r, "claim_holds") == "false",
            "n=4 claim not refuted");
  o.require(!w.empty(), "n=4 missing witness");
  if (!w.empty()) {
    const auto g = make_elementary_abelian_2(4);
    const auto a = parse_set_literal(w, 16);
    o.require(oracle::maximal(g, a.to_mask()) && !gf2::matches_hyperplane_complement(a, 4),
              "n=4 witness fails oracle");
    o.notes.push_back("witness=" + w);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1  golden x_n values 2, 7, 64, 3049 under 1 s", ac1},
      {"AC2  equality for n<=3, brute count exceeds 3049 at n=4", ac2},
      {"AC3  2^n-1 maximal sets for n<=3; n=4 has >15 with 15 complements", ac3},
      {"AC4  corpus boundary", ac4},
      {"AC5  counterexample replay in Z2^4", ac5},
      {"AC6  lemma suites", ac6},
      {"AC7  GF(2) union kernel", ac7},
      {"AC8  determinism for 1, 2, 8 workers", ac8},
      {"AC9  Frattini subgroups", ac9},
      {"AC10 odd-sum claim audit", ac10},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::string detail;
    for (const auto& n : o.notes) detail += (detail.empty() ? "" : "; ") + n;
    std::printf("[%s] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", name, seconds_since(t),
                detail.empty() ? "" : " -- ", detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(),
              seconds_since(start));
  return failed == 0 ? 0 : 1;
}
