#ifndef SEQEFFECT_H
#define SEQEFFECT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SEQEFFECT_BUILDING)
#define SEQEFFECT_API __declspec(dllexport)
#else
#define SEQEFFECT_API __declspec(dllimport)
#endif
#else
#define SEQEFFECT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum seqeffect_status {
  SEQEFFECT_OK = 0,
  SEQEFFECT_E_NOT_HERMITIAN,
  SEQEFFECT_E_NO_CONVERGENCE,
  SEQEFFECT_E_DOMAIN,
  SEQEFFECT_E_NOT_PSD,
  SEQEFFECT_E_SHAPE_MISMATCH,
  SEQEFFECT_E_SPECTRUM_OUT_OF_RANGE,
  SEQEFFECT_E_NOT_PROJECTION,
  SEQEFFECT_E_NOT_UNIT_VECTOR,
  SEQEFFECT_E_FAMILY_DOMAIN,
  SEQEFFECT_E_NOT_COMMUTING,
  SEQEFFECT_E_NOT_DIM2,
  SEQEFFECT_E_INVALID_SPEC,
  SEQEFFECT_E_PARSE,
  SEQEFFECT_E_NULL_ARGUMENT,
  SEQEFFECT_E_INTERNAL
} seqeffect_status;

typedef enum seqeffect_verdict {
  SEQEFFECT_REPORT_PASS = 0,
  SEQEFFECT_REPORT_FAIL = 1,
  SEQEFFECT_REPORT_VACUOUS = 2
} seqeffect_verdict;

typedef struct seqeffect_tolerance {
  double eq_tol;
  double psd_tol;
  double cluster_gap;
} seqeffect_tolerance;

typedef struct seqeffect_run_config {
  size_t dim;
  size_t samples;
  uint64_t seed;
  seqeffect_tolerance tol;
} seqeffect_run_config;

typedef struct seqeffect_product seqeffect_product;
typedef struct seqeffect_report seqeffect_report;

SEQEFFECT_API const char* seqeffect_status_string(seqeffect_status status);
/* Message of the last failed call on this thread; "" if none. */
SEQEFFECT_API const char* seqeffect_last_error(void);

SEQEFFECT_API void seqeffect_default_tolerance(seqeffect_tolerance* out);
SEQEFFECT_API void seqeffect_default_run_config(seqeffect_run_config* out);

/* Strings returned through char** are owned by the caller. */
SEQEFFECT_API void seqeffect_string_free(char* s);

/* spec_json: "\"standard\"" or a family object such as {"kind":"borel","lambda":1}.
   tol may be NULL for defaults. */
SEQEFFECT_API seqeffect_status seqeffect_product_create(const char* spec_json, const seqeffect_tolerance* tol,
                                                        seqeffect_product** out);
SEQEFFECT_API void seqeffect_product_free(seqeffect_product* p);
SEQEFFECT_API seqeffect_status seqeffect_product_label(const seqeffect_product* p, char** out);
/* 0 when the product works in every dimension. */
SEQEFFECT_API seqeffect_status seqeffect_product_required_dim(const seqeffect_product* p, size_t* out);
/* a_json, b_json: {"dim": n, "re": [...], "im": [...]} row-major. */
SEQEFFECT_API seqeffect_status seqeffect_product_apply(const seqeffect_product* p, const char* a_json,
                                                       const char* b_json, char** out_json);

SEQEFFECT_API size_t seqeffect_suite_count(void);
SEQEFFECT_API seqeffect_status seqeffect_suite_info(size_t index, const char** id, const char** reference,
                                                    const char** summary);

SEQEFFECT_API seqeffect_status seqeffect_run_suite(const seqeffect_product* p, const char* suite_id,
                                                   const seqeffect_run_config* cfg, seqeffect_report** out);
/* Reruns from the "config" object embedded in a report. */
SEQEFFECT_API seqeffect_status seqeffect_run_from_config(const char* config_json, seqeffect_report** out);
/* Parses a full report document. */
SEQEFFECT_API seqeffect_status seqeffect_report_load(const char* report_json, seqeffect_report** out);
SEQEFFECT_API void seqeffect_report_free(seqeffect_report* r);

SEQEFFECT_API seqeffect_status seqeffect_report_status(const seqeffect_report* r, seqeffect_verdict* out);
SEQEFFECT_API seqeffect_status seqeffect_report_counts(const seqeffect_report* r, size_t* checked,
                                                       size_t* indeterminate, size_t* positives, size_t* failures,
                                                       size_t* witnesses);
SEQEFFECT_API seqeffect_status seqeffect_report_json(const seqeffect_report* r, char** out);
SEQEFFECT_API seqeffect_status seqeffect_report_text(const seqeffect_report* r, char** out);
/* The embedded run configuration, suitable for seqeffect_run_from_config. */
SEQEFFECT_API seqeffect_status seqeffect_report_config_json(const seqeffect_report* r, char** out);
/* Re-evaluates each recorded failure from its serialized inputs.
   replayable counts failures with a registered clause; reproduced counts
   those that still fail. */
SEQEFFECT_API seqeffect_status seqeffect_report_replay(const seqeffect_report* r, size_t* replayable,
                                                       size_t* reproduced);

#ifdef __cplusplus
}
#endif

#endif
