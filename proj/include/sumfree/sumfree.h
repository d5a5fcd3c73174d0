/*
 * sumfree.h - C interface to the sum-free subset engine.
 *
 * All functions returning sumfree_status leave a human-readable message
 * retrievable through sumfree_last_error() (thread-local) on failure.
 * Strings handed out through char** parameters are owned by the caller and
 * released with sumfree_string_free().
 */
#ifndef SUMFREE_SUMFREE_H
#define SUMFREE_SUMFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SUMFREE_API __declspec(dllexport)
#else
#  define SUMFREE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sumfree_status {
  SUMFREE_OK = 0,
  SUMFREE_ERR_PARSE = 1,
  SUMFREE_ERR_ORDER_OVERFLOW = 2,
  SUMFREE_ERR_AXIOM = 3,
  SUMFREE_ERR_IO = 4,
  SUMFREE_ERR_PRECONDITION = 5,
  SUMFREE_ERR_RANGE = 6,
  SUMFREE_ERR_INVALID_ARGUMENT = 7,
  SUMFREE_ERR_INTERNAL = 8
} sumfree_status;

typedef enum sumfree_report_status {
  SUMFREE_REPORT_PASS = 0,
  SUMFREE_REPORT_FAIL = 1,
  SUMFREE_REPORT_REFUTED_AS_EXPECTED = 2
} sumfree_report_status;

typedef struct sumfree_group sumfree_group;
typedef struct sumfree_reports sumfree_reports;

typedef struct sumfree_options {
  unsigned jobs;          /* 0 is treated as 1 */
  const char* cache_dir;  /* NULL: use SUMFREE_CACHE_DIR, or no cache */
  int no_cache;           /* recompute and compare against any cached entry */
  int allow_n5;           /* permit x_5 */
} sumfree_options;

SUMFREE_API const char* sumfree_version(void);
SUMFREE_API const char* sumfree_last_error(void);
SUMFREE_API const char* sumfree_status_string(sumfree_status status);
SUMFREE_API void sumfree_string_free(char* s);

/* Groups */
SUMFREE_API sumfree_status sumfree_group_parse(const char* spec, sumfree_group** out);
SUMFREE_API sumfree_status sumfree_group_load(const char* path, sumfree_group** out);
SUMFREE_API sumfree_status sumfree_group_save(const sumfree_group* g, const char* path);
SUMFREE_API void sumfree_group_free(sumfree_group* g);
SUMFREE_API size_t sumfree_group_order(const sumfree_group* g);
SUMFREE_API const char* sumfree_group_name(const sumfree_group* g);
SUMFREE_API sumfree_status sumfree_group_add(const sumfree_group* g, uint32_t a, uint32_t b,
                                             uint32_t* out);
SUMFREE_API sumfree_status sumfree_group_neg(const sumfree_group* g, uint32_t a, uint32_t* out);
SUMFREE_API sumfree_status sumfree_group_element_order(const sumfree_group* g, uint32_t a,
                                                       size_t* out);
SUMFREE_API sumfree_status sumfree_group_is_elementary_abelian_2(const sumfree_group* g, int* out);

/* Sets are passed as literals: "{i1,i2,...}" or "0x<hex>". */
SUMFREE_API sumfree_status sumfree_set_is_sum_free(const sumfree_group* g, const char* set,
                                                   int* out);
SUMFREE_API sumfree_status sumfree_set_is_maximal_sum_free(const sumfree_group* g,
                                                           const char* set, int* out);
SUMFREE_API sumfree_status sumfree_set_maximality_criterion(const sumfree_group* g,
                                                            const char* set, int* out);
SUMFREE_API sumfree_status sumfree_set_extend_to_maximal(const sumfree_group* g, const char* set,
                                                         char** out_literal);

/* Counting; exact values as decimal strings. */
SUMFREE_API sumfree_status sumfree_count_sum_free(const sumfree_group* g, unsigned jobs,
                                                  char** out_decimal);
SUMFREE_API sumfree_status sumfree_xn(unsigned n, unsigned jobs, int allow_n5,
                                      char** out_decimal);
/* "bitmask,cardinality" CSV of every maximal sum-free set. */
SUMFREE_API sumfree_status sumfree_write_maximal_csv(const sumfree_group* g, unsigned jobs,
                                                     const char* path);

/* Report collections */
SUMFREE_API sumfree_status sumfree_reports_create(sumfree_reports** out);
SUMFREE_API void sumfree_reports_free(sumfree_reports* r);
SUMFREE_API size_t sumfree_reports_count(const sumfree_reports* r);
SUMFREE_API int sumfree_reports_all_ok(const sumfree_reports* r);
SUMFREE_API const char* sumfree_report_claim_id(const sumfree_reports* r, size_t i);
SUMFREE_API const char* sumfree_report_group(const sumfree_reports* r, size_t i);
SUMFREE_API sumfree_report_status sumfree_report_status_at(const sumfree_reports* r, size_t i);
SUMFREE_API size_t sumfree_report_witness_count(const sumfree_reports* r, size_t i);
SUMFREE_API const char* sumfree_report_witness(const sumfree_reports* r, size_t i, size_t w);
/* format: "json", "csv" or "text". */
SUMFREE_API sumfree_status sumfree_reports_render(const sumfree_reports* r, const char* format,
                                                  char** out);
/* path NULL writes to standard output. */
SUMFREE_API sumfree_status sumfree_reports_write(const sumfree_reports* r, const char* format,
                                                 const char* path);

/* Claim runners; each appends its report(s) to `into`. */
SUMFREE_API sumfree_status sumfree_run_verify_lemma21(const char* spec,
                                                      const sumfree_options* opts,
                                                      sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_verify_lemma22(const char* spec,
                                                      const sumfree_options* opts,
                                                      sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_verify_theorem(const char* spec,
                                                      const sumfree_options* opts,
                                                      sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_verify_corpus(const sumfree_options* opts,
                                                     sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_counterexample(unsigned n, const sumfree_options* opts,
                                                      sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_compute_xn(unsigned n, const sumfree_options* opts,
                                                  sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_count(const char* spec, const sumfree_options* opts,
                                             sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_classify(unsigned n, const sumfree_options* opts,
                                                sumfree_reports* into);
SUMFREE_API sumfree_status sumfree_run_check_odd_sum(unsigned n, const sumfree_options* opts,
                                                     sumfree_reports* into);

#ifdef __cplusplus
}
#endif

#endif /* SUMFREE_SUMFREE_H */
