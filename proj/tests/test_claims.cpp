#include <cstdlib>
#include <fstream>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "sumfree/claims.hpp"
#include "sumfree/error.hpp"

using namespace sumfree;
using namespace sumfree::claims;

namespace {

bool has(const VerificationReport& r, const std::string& witness) {
  return std::find(r.witnesses.begin(), r.witnesses.end(), witness) != r.witnesses.end();
}

bool has_prefix(const VerificationReport& r, const std::string& prefix) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const std::string& w) { return w.rfind(prefix, 0) == 0; });
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("sumfree-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Reports without timing, for equality comparisons.
std::vector<VerificationReport> untimed(std::vector<VerificationReport> rs) {
  for (auto& r : rs) r.runtime_ms = 0;
  return rs;
}

bool same(const VerificationReport& a, const VerificationReport& b) {
  return a.claim_id == b.claim_id && a.group == b.group && a.status == b.status &&
         a.witnesses == b.witnesses;
}

}  // namespace

TEST_CASE("lemma21") {
  const auto z = verify_lemma21("Z2^3");
  CHECK(z.status == Status::Pass);
  CHECK(has(z, "subgroups=16"));
  CHECK(has(z, "index_two_complements=7"));
  const auto s = verify_lemma21("S3");
  CHECK(s.status == Status::Pass);
  CHECK(has(s, "subgroups=6"));
  CHECK(has(s, "index_two_complements=1"));
  const auto q = verify_lemma21("Q8");
  CHECK(q.status == Status::Pass);
  CHECK(has(q, "index_two_complements=3"));
  for (const auto& entry : builtin_corpus()) {
    const auto r = verify_lemma21(entry.spec);
    CHECK_MESSAGE(r.status == Status::Pass, entry.spec);
    const auto g = parse_group_spec(entry.spec);
    CHECK(has(r, "subgroups=" + std::to_string(oracle::subgroups(g).size())));
  }
  CHECK_THROWS_AS(verify_lemma21("Z128"), Error);
}

TEST_CASE("lemma22") {
  const auto z4 = verify_lemma22("Z4");
  CHECK(z4.status == Status::Pass);
  CHECK(has(z4, "mode=exhaustive"));
  CHECK(has(z4, "subsets=16"));
  CHECK(has(verify_lemma22("S3"), "subsets=64"));
  CHECK(has(verify_lemma22("Z2^3"), "subsets=256"));
  CHECK(has(verify_lemma22("D6"), "subsets=4096"));
  CHECK(has(verify_lemma22("D6"), "maximal_sum_free=30"));

  RunOptions few;
  few.lemma22_samples = 2000;
  const auto d8 = verify_lemma22("D8", few);
  CHECK(d8.status == Status::Pass);
  CHECK(has(d8, "mode=sampled"));
  CHECK(has(d8, "subsets=2000"));
  CHECK(same(d8, verify_lemma22("D8", few)));

  CHECK_THROWS_AS(verify_lemma22("Z1"), Error);
  CHECK_THROWS_AS(verify_lemma22("Z17"), Error);
}

TEST_CASE("theorem") {
  const auto z23 = verify_theorem("Z2^3");
  CHECK(z23.status == Status::Pass);
  CHECK(has(z23, "maximal_sum_free=7"));
  CHECK(has(z23, "maximal_subgroup_complements=7"));
  CHECK(has(z23, "families_equal=true"));

  const auto z4 = verify_theorem("Z4");
  CHECK(z4.status == Status::Pass);
  CHECK(has(z4, "families_equal=false"));
  CHECK(has(z4, "not_a_complement={2}"));

  const auto z24 = verify_theorem("Z2^4");
  CHECK(z24.status == Status::Pass);
  CHECK(has(z24, "families_equal=false"));
  CHECK(has(z24, "maximal_sum_free=183"));
  CHECK(has(z24, "not_a_complement_count=168"));
  CHECK_THROWS_AS(verify_theorem("Z64"), Error);
  CHECK_THROWS_AS(verify_theorem("Z0"), Error);
}

TEST_CASE("corpus") {
  const auto reports = verify_corpus();
  REQUIRE(reports.size() == builtin_corpus().size());
  CHECK(all_ok(reports));
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& entry = builtin_corpus()[i];
    CHECK(reports[i].group == entry.spec);
    CHECK(reports[i].status == Status::Pass);
    CHECK(has(reports[i], std::string("families_equal=") + (entry.expected_property ? "true" : "false")));
    CHECK(entry.expected_property == (entry.spec == "Z2" || entry.spec == "Z2^2" || entry.spec == "Z2^3"));
    if (!entry.expected_property) CHECK(has_prefix(reports[i], "not_a_complement="));
  }
}

TEST_CASE("counterexample") {
  const auto r4 = counterexample(4);
  CHECK(r4.status == Status::Pass);
  CHECK(has(r4, "A={1,2,4,8,15}"));
  CHECK(has(r4, "sum_free=true"));
  CHECK(has(r4, "complements_containing_A=0"));
  CHECK(has(r4, "extension_is_complement=false"));
  CHECK(has(r4, "hyperplanes_checked=15"));
  const auto r5 = counterexample(5);
  CHECK(r5.status == Status::Pass);
  CHECK(has(r5, "hyperplanes_checked=31"));
  CHECK_THROWS_AS(counterexample(3), Error);
  CHECK_THROWS_AS(counterexample(13), Error);
}

TEST_CASE("compute_xn") {
  const auto r2 = compute_xn(2);
  CHECK(r2.status == Status::Pass);
  CHECK(has(r2, "x_n=7"));
  CHECK(has(r2, "sum_free_count=7"));
  CHECK(has(r2, "relation=equal"));
  CHECK(has(compute_xn(3), "x_n=64"));
  CHECK(compute_xn(1).status == Status::Pass);

  const auto r4 = compute_xn(4);
  CHECK(r4.status == Status::RefutedAsExpected);
  CHECK(has(r4, "x_n=2881"));
  CHECK(has(r4, "sum_free_count=3049"));
  CHECK(has(r4, "relation=strict"));

  CHECK_THROWS_AS(compute_xn(0), Error);
  CHECK_THROWS_AS(compute_xn(5), Error);
  CHECK_THROWS_AS(compute_xn(6), Error);
}

TEST_CASE("count and classify") {
  const auto c = count("Z2^4");
  CHECK(c.status == Status::Pass);
  CHECK(has(c, "sum_free=3049"));
  CHECK(has(c, "maximal_sum_free=183"));
  CHECK(has(c, "size_histogram=5:168,8:15"));

  const auto k3 = classify_maximal(3);
  CHECK(k3.status == Status::Pass);
  CHECK(has(k3, "maximal_sum_free=7"));
  CHECK(has(k3, "orbits=1"));
  const auto k2 = classify_maximal(2);
  CHECK(has(k2, "maximal_sum_free=3"));
  CHECK(has(k2, "orbits=1"));

  const auto k4 = classify_maximal(4);
  CHECK(k4.status == Status::RefutedAsExpected);
  CHECK(has(k4, "hyperplane_complements=15"));
  CHECK(has(k4, "orbits=2"));
  CHECK(has(k4, "orbit[0] rep={3,4,6,8,9} size=168 cardinality=5 complement=false"));
  CHECK_THROWS_AS(classify_maximal(5), Error);
  CHECK_THROWS_AS(classify_maximal(0), Error);
}

TEST_CASE("odd-sum claim") {
  const auto r1 = check_odd_sum_claim(1);
  CHECK(r1.status == Status::Pass);
  CHECK(has(r1, "claim_holds=true"));
  const auto r3 = check_odd_sum_claim(3);
  CHECK(r3.status == Status::Pass);
  CHECK(has(r3, "odd_sum_sets=7"));
  const auto r4 = check_odd_sum_claim(4);
  CHECK(r4.status == Status::RefutedAsExpected);
  CHECK(has(r4, "claim_holds=false"));
  CHECK(has(r4, "counterexample={3,4,6,8,9}"));
  CHECK_THROWS_AS(check_odd_sum_claim(5), Error);
}

TEST_CASE("reports are identical across job counts") {
  std::vector<VerificationReport> base;
  for (const unsigned jobs : {1U, 2U, 8U}) {
    RunOptions o;
    o.jobs = jobs;
    auto rs = verify_corpus(o);
    rs.push_back(compute_xn(4, o));
    rs.push_back(classify_maximal(4, o));
    rs.push_back(count("D8", o));
    rs = untimed(std::move(rs));
    if (base.empty()) {
      base = rs;
      continue;
    }
    CHECK(render_reports(rs, ReportFormat::Json) == render_reports(base, ReportFormat::Json));
  }
}

TEST_CASE("rendering") {
  CHECK(render_reports({}, ReportFormat::Json) == "[]\n");
  CHECK(render_reports({}, ReportFormat::Csv) == "claim_id,group,status,witnesses,runtime_ms\n");

  const std::vector<VerificationReport> one = {{"count", "Z4", Status::Pass, {"a=1", "b,c"}, 3}};
  CHECK(render_reports(one, ReportFormat::Csv) ==
        "claim_id,group,status,witnesses,runtime_ms\ncount,Z4,pass,\"a=1; b,c\",3\n");

  const auto j = nlohmann::json::parse(render_reports(one, ReportFormat::Json));
  REQUIRE(j.is_array());
  CHECK(j[0]["claim_id"] == "count");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["witnesses"].size() == 2);
  CHECK(j[0]["runtime_ms"] == 3);

  const std::vector<VerificationReport> two = {
      {"theorem", "Z2", Status::Pass, {"x"}, 0},
      {"theorem", "Z4", Status::Fail, {"y"}, 0},
      {"compute-xn", "Z2^4", Status::RefutedAsExpected, {}, 0}};
  const auto text = render_reports(two, ReportFormat::Text);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  CHECK(text.find("✓ theorem") == 0);
  CHECK(text.find("✗ theorem") != std::string::npos);
  CHECK(text.find("refuted-as-expected") != std::string::npos);
  CHECK_FALSE(all_ok(two));
  CHECK(all_ok(std::span(two).last(1)));

  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("csv") == ReportFormat::Csv);
  CHECK(parse_format("text") == ReportFormat::Text);
  CHECK_FALSE(parse_format("xml").has_value());

  TempDir dir;
  const auto out = dir.path() / "r.json";
  emit_report(one, ReportFormat::Json, out);
  std::ifstream in(out);
  CHECK(nlohmann::json::parse(in) == j);
  CHECK_THROWS_AS(emit_report(one, ReportFormat::Json, dir.path() / "missing" / "r.json"), Error);
}

TEST_CASE("cache") {
  TempDir dir;
  RunOptions o;
  o.cache_dir = dir.path();
  const auto g = make_elementary_abelian_2(4);

  const auto first = cached_enumeration(g, "Z2^4", o);
  CHECK_FALSE(first.cache_mismatch);
  const auto entries = std::distance(std::filesystem::directory_iterator(dir.path()),
                                     std::filesystem::directory_iterator());
  CHECK(entries == 1);
  const auto second = cached_enumeration(g, "Z2^4", o);
  CHECK(second.result == first.result);

  RunOptions fresh = o;
  fresh.no_cache = true;
  CHECK_FALSE(cached_enumeration(g, "Z2^4", fresh).cache_mismatch);
  CHECK(same(count("Z2^4", o), count("Z2^4", fresh)));

  // Tamper with the stored total; a hit returns it, --no-cache catches it.
  const auto path = std::filesystem::directory_iterator(dir.path())->path();
  nlohmann::json j;
  {
    std::ifstream in(path);
    j = nlohmann::json::parse(in);
  }
  j["total_sum_free"] = "3048";
  {
    std::ofstream outf(path);
    outf << j.dump();
  }
  CHECK(cached_enumeration(g, "Z2^4", o).result.total_sum_free == 3048);
  CHECK(cached_enumeration(g, "Z2^4", fresh).cache_mismatch);
  const auto flagged = count("Z2^4", fresh);
  CHECK(flagged.status == Status::Fail);
  CHECK(has(flagged, "cache=mismatch"));
  CHECK(classify_maximal(4, fresh).status == Status::Fail);

  // A corrupt entry is ignored and rewritten.
  {
    std::ofstream outf(path);
    outf << "not json";
  }
  CHECK(cached_enumeration(g, "Z2^4", o).result.total_sum_free == 3049);
  CHECK(cached_enumeration(g, "Z2^4", o).result.total_sum_free == 3049);

  // Environment variable supplies the default directory.
  TempDir env_dir;
  ::setenv(std::string(kCacheDirEnv).c_str(), env_dir.path().c_str(), 1);
  count("Z4");
  ::unsetenv(std::string(kCacheDirEnv).c_str());
  CHECK_FALSE(std::filesystem::is_empty(env_dir.path()));
}

TEST_CASE("error propagation") {
  CHECK_THROWS_AS(count("Z2^"), Error);
  CHECK_THROWS_AS(count("Z5000"), Error);
  CHECK_THROWS_AS(count("file:/nonexistent/table.txt"), Error);
  try {
    count("Zq");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}
