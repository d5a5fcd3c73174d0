#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/enumerate.hpp"
#include "sumfree/group.hpp"

namespace sumfree::claims {

inline constexpr std::string_view kCodeVersion = "1.0.0";
inline constexpr std::string_view kCacheDirEnv = "SUMFREE_CACHE_DIR";

enum class Status { Pass, Fail, RefutedAsExpected };

std::string_view to_string(Status s);

struct VerificationReport {
  std::string claim_id;
  std::string group;
  Status status = Status::Fail;
  std::vector<std::string> witnesses;
  std::int64_t runtime_ms = 0;
};

struct RunOptions {
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  // Recompute everything; a cached entry, if present, is compared against
  // the fresh result and a mismatch fails the report.
  bool no_cache = false;
  bool allow_n5 = false;
  std::size_t lemma22_samples = 100'000;
  std::uint64_t seed = 20140615;
};

struct CorpusEntry {
  std::string spec;
  bool expected_property;  // maximal sum-free family == complement family
};

const std::vector<CorpusEntry>& builtin_corpus();

VerificationReport verify_lemma21(std::string_view spec, const RunOptions& options = {});
VerificationReport verify_lemma22(std::string_view spec, const RunOptions& options = {});
VerificationReport verify_theorem(std::string_view spec, const RunOptions& options = {});
std::vector<VerificationReport> verify_corpus(const RunOptions& options = {});
VerificationReport counterexample(unsigned n = 4, const RunOptions& options = {});
VerificationReport compute_xn(unsigned n, const RunOptions& options = {});
VerificationReport count(std::string_view spec, const RunOptions& options = {});
VerificationReport classify_maximal(unsigned n = 4, const RunOptions& options = {});
VerificationReport check_odd_sum_claim(unsigned n, const RunOptions& options = {});

// Maximal sum-free enumeration through the on-disk cache, when configured.
struct CachedEnumeration {
  EnumerationResult result;
  bool cache_mismatch = false;
};
CachedEnumeration cached_enumeration(const GroupTable& g, std::string_view spec,
                                     const RunOptions& options);

enum class ReportFormat { Json, Csv, Text };

std::optional<ReportFormat> parse_format(std::string_view name);
std::string render_reports(std::span<const VerificationReport> reports, ReportFormat format);
// Writes to `out`, or standard output when absent.
void emit_report(std::span<const VerificationReport> reports, ReportFormat format,
                 const std::optional<std::filesystem::path>& out);

// True iff every status is pass or refuted-as-expected.
bool all_ok(std::span<const VerificationReport> reports);

}  // namespace sumfree::claims
