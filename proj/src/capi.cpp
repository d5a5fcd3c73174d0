#include "sumfree/sumfree.h"

#include <cstring>
#include <fstream>
#include <string>

#include "sumfree/claims.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/error.hpp"
#include "sumfree/gf2.hpp"
#include "sumfree/setops.hpp"

struct sumfree_group {
  sumfree::GroupTable table;
};

struct sumfree_reports {
  std::vector<sumfree::claims::VerificationReport> items;
};

namespace {

thread_local std::string last_error;

sumfree_status code_for(sumfree::ErrorKind kind) {
  using sumfree::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse: return SUMFREE_ERR_PARSE;
    case ErrorKind::OrderOverflow: return SUMFREE_ERR_ORDER_OVERFLOW;
    case ErrorKind::Axiom: return SUMFREE_ERR_AXIOM;
    case ErrorKind::Io: return SUMFREE_ERR_IO;
    case ErrorKind::Precondition: return SUMFREE_ERR_PRECONDITION;
    case ErrorKind::Range: return SUMFREE_ERR_RANGE;
  }
  return SUMFREE_ERR_INTERNAL;
}

template <typename F>
sumfree_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SUMFREE_OK;
  } catch (const sumfree::Error& e) {
    last_error = e.what();
    return code_for(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SUMFREE_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SUMFREE_ERR_INTERNAL;
  }
}

sumfree_status invalid(const char* what) {
  last_error = what;
  return SUMFREE_ERR_INVALID_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sumfree::claims::RunOptions convert(const sumfree_options* opts) {
  sumfree::claims::RunOptions o;
  if (!opts) return o;
  o.jobs = opts->jobs == 0 ? 1 : opts->jobs;
  if (opts->cache_dir) o.cache_dir = std::filesystem::path(opts->cache_dir);
  o.no_cache = opts->no_cache != 0;
  o.allow_n5 = opts->allow_n5 != 0;
  return o;
}

sumfree::ElementSet parse_set(const sumfree_group* g, const char* set) {
  return sumfree::parse_set_literal(set, g->table.order());
}

const sumfree::claims::VerificationReport* report_at(const sumfree_reports* r, size_t i) {
  return (r && i < r->items.size()) ? &r->items[i] : nullptr;
}

}  // namespace

extern "C" {

const char* sumfree_version(void) {
  static const std::string version(sumfree::claims::kCodeVersion);
  return version.c_str();
}

const char* sumfree_last_error(void) { return last_error.c_str(); }

const char* sumfree_status_string(sumfree_status status) {
  switch (status) {
    case SUMFREE_OK: return "ok";
    case SUMFREE_ERR_PARSE: return "parse error";
    case SUMFREE_ERR_ORDER_OVERFLOW: return "order overflow";
    case SUMFREE_ERR_AXIOM: return "group axiom violation";
    case SUMFREE_ERR_IO: return "i/o error";
    case SUMFREE_ERR_PRECONDITION: return "precondition violated";
    case SUMFREE_ERR_RANGE: return "out of range";
    case SUMFREE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SUMFREE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sumfree_string_free(char* s) { delete[] s; }

sumfree_status sumfree_group_parse(const char* spec, sumfree_group** out) {
  if (!spec || !out) return invalid("null argument");
  return guarded([&] { *out = new sumfree_group{sumfree::parse_group_spec(spec)}; });
}

sumfree_status sumfree_group_load(const char* path, sumfree_group** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new sumfree_group{sumfree::from_table_file(path)}; });
}

sumfree_status sumfree_group_save(const sumfree_group* g, const char* path) {
  if (!g || !path) return invalid("null argument");
  return guarded([&] { sumfree::save_table_file(g->table, path); });
}

void sumfree_group_free(sumfree_group* g) { delete g; }

size_t sumfree_group_order(const sumfree_group* g) { return g ? g->table.order() : 0; }

const char* sumfree_group_name(const sumfree_group* g) {
  return g ? g->table.name().c_str() : "";
}

sumfree_status sumfree_group_add(const sumfree_group* g, uint32_t a, uint32_t b, uint32_t* out) {
  if (!g || !out) return invalid("null argument");
  if (a >= g->table.order() || b >= g->table.order()) return invalid("element out of range");
  *out = g->table.add(a, b);
  return SUMFREE_OK;
}

sumfree_status sumfree_group_neg(const sumfree_group* g, uint32_t a, uint32_t* out) {
  if (!g || !out) return invalid("null argument");
  if (a >= g->table.order()) return invalid("element out of range");
  *out = g->table.neg(a);
  return SUMFREE_OK;
}

sumfree_status sumfree_group_element_order(const sumfree_group* g, uint32_t a, size_t* out) {
  if (!g || !out) return invalid("null argument");
  if (a >= g->table.order()) return invalid("element out of range");
  *out = sumfree::element_order(g->table, a);
  return SUMFREE_OK;
}

sumfree_status sumfree_group_is_elementary_abelian_2(const sumfree_group* g, int* out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] { *out = sumfree::is_elementary_abelian_2(g->table) ? 1 : 0; });
}

sumfree_status sumfree_set_is_sum_free(const sumfree_group* g, const char* set, int* out) {
  if (!g || !set || !out) return invalid("null argument");
  return guarded([&] { *out = sumfree::is_sum_free(g->table, parse_set(g, set)) ? 1 : 0; });
}

sumfree_status sumfree_set_is_maximal_sum_free(const sumfree_group* g, const char* set, int* out) {
  if (!g || !set || !out) return invalid("null argument");
  return guarded([&] {
    *out = sumfree::is_maximal_sum_free_direct(g->table, parse_set(g, set)) ? 1 : 0;
  });
}

sumfree_status sumfree_set_maximality_criterion(const sumfree_group* g, const char* set, int* out) {
  if (!g || !set || !out) return invalid("null argument");
  return guarded([&] {
    *out = sumfree::maximality_criterion(g->table, parse_set(g, set)) ? 1 : 0;
  });
}

sumfree_status sumfree_set_extend_to_maximal(const sumfree_group* g, const char* set,
                                             char** out_literal) {
  if (!g || !set || !out_literal) return invalid("null argument");
  return guarded([&] {
    *out_literal = duplicate(sumfree::extend_to_maximal(g->table, parse_set(g, set)).to_literal());
  });
}

sumfree_status sumfree_count_sum_free(const sumfree_group* g, unsigned jobs, char** out_decimal) {
  if (!g || !out_decimal) return invalid("null argument");
  return guarded([&] {
    const auto n = sumfree::count_sum_free_parallel(g->table, jobs == 0 ? 1 : jobs);
    *out_decimal = duplicate(sumfree::to_decimal(n));
  });
}

sumfree_status sumfree_xn(unsigned n, unsigned jobs, int allow_n5, char** out_decimal) {
  if (!out_decimal) return invalid("null argument");
  return guarded([&] {
    sumfree::gf2::XnOptions o;
    o.jobs = jobs == 0 ? 1 : jobs;
    o.allow_n5 = allow_n5 != 0;
    *out_decimal = duplicate(sumfree::to_decimal(sumfree::gf2::xn_inclusion_exclusion(n, o).value));
  });
}

sumfree_status sumfree_write_maximal_csv(const sumfree_group* g, unsigned jobs, const char* path) {
  if (!g || !path) return invalid("null argument");
  return guarded([&] {
    const auto result = sumfree::enumerate_maximal_sum_free(g->table, jobs == 0 ? 1 : jobs);
    std::ofstream out(path);
    if (!out) throw sumfree::Error(sumfree::ErrorKind::Io, std::string("cannot write '") + path + "'");
    sumfree::write_maximal_csv(result, out);
    if (!out) throw sumfree::Error(sumfree::ErrorKind::Io, std::string("write failed: ") + path);
  });
}

sumfree_status sumfree_reports_create(sumfree_reports** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new sumfree_reports{}; });
}

void sumfree_reports_free(sumfree_reports* r) { delete r; }

size_t sumfree_reports_count(const sumfree_reports* r) { return r ? r->items.size() : 0; }

int sumfree_reports_all_ok(const sumfree_reports* r) {
  return r && sumfree::claims::all_ok(r->items) ? 1 : 0;
}

const char* sumfree_report_claim_id(const sumfree_reports* r, size_t i) {
  const auto* rep = report_at(r, i);
  return rep ? rep->claim_id.c_str() : nullptr;
}

const char* sumfree_report_group(const sumfree_reports* r, size_t i) {
  const auto* rep = report_at(r, i);
  return rep ? rep->group.c_str() : nullptr;
}

sumfree_report_status sumfree_report_status_at(const sumfree_reports* r, size_t i) {
  const auto* rep = report_at(r, i);
  if (!rep) return SUMFREE_REPORT_FAIL;
  switch (rep->status) {
    case sumfree::claims::Status::Pass: return SUMFREE_REPORT_PASS;
    case sumfree::claims::Status::RefutedAsExpected: return SUMFREE_REPORT_REFUTED_AS_EXPECTED;
    case sumfree::claims::Status::Fail: break;
  }
  return SUMFREE_REPORT_FAIL;
}

size_t sumfree_report_witness_count(const sumfree_reports* r, size_t i) {
  const auto* rep = report_at(r, i);
  return rep ? rep->witnesses.size() : 0;
}

const char* sumfree_report_witness(const sumfree_reports* r, size_t i, size_t w) {
  const auto* rep = report_at(r, i);
  return (rep && w < rep->witnesses.size()) ? rep->witnesses[w].c_str() : nullptr;
}

sumfree_status sumfree_reports_render(const sumfree_reports* r, const char* format, char** out) {
  if (!r || !format || !out) return invalid("null argument");
  const auto f = sumfree::claims::parse_format(format);
  if (!f) return invalid("format must be json, csv or text");
  return guarded([&] { *out = duplicate(sumfree::claims::render_reports(r->items, *f)); });
}

sumfree_status sumfree_reports_write(const sumfree_reports* r, const char* format,
                                     const char* path) {
  if (!r || !format) return invalid("null argument");
  const auto f = sumfree::claims::parse_format(format);
  if (!f) return invalid("format must be json, csv or text");
  return guarded([&] {
    std::optional<std::filesystem::path> out;
    if (path) out = std::filesystem::path(path);
    sumfree::claims::emit_report(r->items, *f, out);
  });
}

sumfree_status sumfree_run_verify_lemma21(const char* spec, const sumfree_options* opts,
                                          sumfree_reports* into) {
  if (!spec || !into) return invalid("null argument");
  return guarded([&] { into->items.push_back(sumfree::claims::verify_lemma21(spec, convert(opts))); });
}

sumfree_status sumfree_run_verify_lemma22(const char* spec, const sumfree_options* opts,
                                          sumfree_reports* into) {
  if (!spec || !into) return invalid("null argument");
  return guarded([&] { into->items.push_back(sumfree::claims::verify_lemma22(spec, convert(opts))); });
}

sumfree_status sumfree_run_verify_theorem(const char* spec, const sumfree_options* opts,
                                          sumfree_reports* into) {
  if (!spec || !into) return invalid("null argument");
  return guarded([&] { into->items.push_back(sumfree::claims::verify_theorem(spec, convert(opts))); });
}

sumfree_status sumfree_run_verify_corpus(const sumfree_options* opts, sumfree_reports* into) {
  if (!into) return invalid("null argument");
  return guarded([&] {
    auto reports = sumfree::claims::verify_corpus(convert(opts));
    into->items.insert(into->items.end(), reports.begin(), reports.end());
  });
}

sumfree_status sumfree_run_counterexample(unsigned n, const sumfree_options* opts,
                                          sumfree_reports* into) {
  if (!into) return invalid("null argument");
  return guarded([&] { into->items.push_back(sumfree::claims::counterexample(n, convert(opts))); });
}

sumfree_status sumfree_run_compute_xn(unsigned n, const sumfree_options* opts,
                                      sumfree_reports* into) {
  if (!into) return invalid("null argument");
  return guarded([&] { into->items.push_back(sumfree::claims::compute_xn(n, convert(opts))); });
}

sumfree_status sumfree_run_count(const char* spec, const sumfree_options* opts,
                                 sumfree_reports* into) {
  if (!spec || !into) return invalid("null argument");
  return guarded([&] { into->items.push_back(sumfree::claims::count(spec, convert(opts))); });
}

sumfree_status sumfree_run_classify(unsigned n, const sumfree_options* opts,
                                    sumfree_reports* into) {
  if (!into) return invalid("null argument");
  return guarded([&] { into->items.push_back(sumfree::claims::classify_maximal(n, convert(opts))); });
}

sumfree_status sumfree_run_check_odd_sum(unsigned n, const sumfree_options* opts,
                                         sumfree_reports* into) {
  if (!into) return invalid("null argument");
  return guarded([&] {
    into->items.push_back(sumfree::claims::check_odd_sum_claim(n, convert(opts)));
  });
}

}  // extern "C"
