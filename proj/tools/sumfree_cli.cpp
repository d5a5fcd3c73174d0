// sumfree: command-line front end over the C API.
//
//   sumfree verify lemma21|lemma22|theorem|corpus [--group SPEC]
//   sumfree counterexample [--n 4]
//   sumfree compute-xn --n N [--allow-n5]
//   sumfree count --group SPEC [--sets-csv PATH]
//   sumfree classify [--n 4]
//   sumfree check-odd-sum --n N
//
// Exit status: 0 when every report is pass or refuted-as-expected, 1 when
// any report fails, 2 on usage or runtime errors.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sumfree/sumfree.h"

namespace {

struct ReportsDeleter {
  void operator()(sumfree_reports* r) const { sumfree_reports_free(r); }
};
struct GroupDeleter {
  void operator()(sumfree_group* g) const { sumfree_group_free(g); }
};

int fail_with(sumfree_status status) {
  std::fprintf(stderr, "sumfree: %s: %s\n", sumfree_status_string(status), sumfree_last_error());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and claim verification for sum-free subsets of finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sumfree_version()));

  std::string group;
  unsigned n = 0;
  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  std::string cache_dir;
  bool no_cache = false;
  bool allow_n5 = false;
  std::string sets_csv;

  app.add_option("--group", group, "Group spec: Z<m>, Z2^<n>, D<m>, Q8, S3, AxB, file:<path>");
  app.add_option("--n", n, "Dimension n for Z2^n commands");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write the report here instead of standard output");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "Enumeration cache directory (default: $SUMFREE_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "Recompute; compare against cached entries when present");
  app.add_flag("--allow-n5", allow_n5, "Permit the n=5 inclusion-exclusion run");

  auto* verify = app.add_subcommand("verify", "Verify a lemma or theorem")->fallthrough();
  std::string target;
  verify->add_option("target", target, "lemma21, lemma22, theorem or corpus")
      ->required()
      ->check(CLI::IsMember({"lemma21", "lemma22", "theorem", "corpus"}));
  auto* cex = app.add_subcommand("counterexample", "Replay the five-element counterexample")->fallthrough();
  auto* xn = app.add_subcommand("compute-xn", "Inclusion-exclusion x_n against the exact count")->fallthrough();
  auto* count = app.add_subcommand("count", "Count sum-free and maximal sum-free subsets")->fallthrough();
  count->add_option("--sets-csv", sets_csv, "Also write every maximal set as bitmask,cardinality");
  auto* classify = app.add_subcommand("classify", "Classify maximal sum-free sets of Z2^n up to GL(n,2)")->fallthrough();
  auto* odd = app.add_subcommand("check-odd-sum", "Test whether every maximal set is an odd-sum set")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  sumfree_options opts{};
  opts.jobs = jobs;
  opts.cache_dir = cache_dir.empty() ? nullptr : cache_dir.c_str();
  opts.no_cache = no_cache ? 1 : 0;
  opts.allow_n5 = allow_n5 ? 1 : 0;

  sumfree_reports* raw = nullptr;
  if (const auto s = sumfree_reports_create(&raw); s != SUMFREE_OK) return fail_with(s);
  const std::unique_ptr<sumfree_reports, ReportsDeleter> reports(raw);

  auto need_group = [&]() -> bool {
    if (!group.empty()) return true;
    std::fprintf(stderr, "sumfree: --group is required for this command\n");
    return false;
  };
  auto dimension_or = [&](unsigned fallback) { return n == 0 ? fallback : n; };

  sumfree_status status = SUMFREE_OK;
  if (verify->parsed()) {
    if (target == "corpus") {
      status = sumfree_run_verify_corpus(&opts, reports.get());
    } else {
      if (!need_group()) return 2;
      if (target == "lemma21") status = sumfree_run_verify_lemma21(group.c_str(), &opts, reports.get());
      if (target == "lemma22") status = sumfree_run_verify_lemma22(group.c_str(), &opts, reports.get());
      if (target == "theorem") status = sumfree_run_verify_theorem(group.c_str(), &opts, reports.get());
    }
  } else if (cex->parsed()) {
    status = sumfree_run_counterexample(dimension_or(4), &opts, reports.get());
  } else if (xn->parsed()) {
    if (n == 0) {
      std::fprintf(stderr, "sumfree: --n is required for compute-xn\n");
      return 2;
    }
    status = sumfree_run_compute_xn(n, &opts, reports.get());
  } else if (count->parsed()) {
    if (!need_group()) return 2;
    status = sumfree_run_count(group.c_str(), &opts, reports.get());
    if (status == SUMFREE_OK && !sets_csv.empty()) {
      sumfree_group* g = nullptr;
      status = sumfree_group_parse(group.c_str(), &g);
      const std::unique_ptr<sumfree_group, GroupDeleter> owned(g);
      if (status == SUMFREE_OK) status = sumfree_write_maximal_csv(g, jobs, sets_csv.c_str());
    }
  } else if (classify->parsed()) {
    status = sumfree_run_classify(dimension_or(4), &opts, reports.get());
  } else if (odd->parsed()) {
    if (n == 0) {
      std::fprintf(stderr, "sumfree: --n is required for check-odd-sum\n");
      return 2;
    }
    status = sumfree_run_check_odd_sum(n, &opts, reports.get());
  }
  if (status != SUMFREE_OK) return fail_with(status);

  status = sumfree_reports_write(reports.get(), format.c_str(),
                                 out_path.empty() ? nullptr : out_path.c_str());
  if (status != SUMFREE_OK) return fail_with(status);
  return sumfree_reports_all_ok(reports.get()) ? 0 : 1;
}
