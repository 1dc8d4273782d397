/* C interface to the H-function library. Every call returns a status code;
 * on failure hfun_last_error() describes the problem (thread-local). Strings
 * handed out by the library are released with hfun_string_free(). */
#ifndef HFUN_HFUN_H
#define HFUN_HFUN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HFUN_BUILDING_LIBRARY)
#define HFUN_API __attribute__((visibility("default")))
#else
#define HFUN_API
#endif

typedef enum hfun_status {
  HFUN_OK = 0,
  HFUN_ERR_INVALID_SPEC = 1,
  HFUN_ERR_POLE = 2,
  HFUN_ERR_DIVERGENT = 3,
  HFUN_ERR_NO_CONVERGENCE = 4,
  HFUN_ERR_MULTIPLE_POLES = 5,
  HFUN_ERR_DOMAIN = 6,
  HFUN_ERR_CONTOUR = 7,
  HFUN_ERR_DECAY = 8,
  HFUN_ERR_STRUCTURE = 9,
  HFUN_ERR_UNEVALUABLE = 10,
  HFUN_ERR_PARSE = 11,
  HFUN_ERR_IO = 12,
  HFUN_ERR_ARGUMENT = 13, /* null pointer or bad enum value */
  HFUN_ERR_INTERNAL = 14
} hfun_status;

typedef struct hfun_complex {
  double re;
  double im;
} hfun_complex;

typedef enum hfun_method { HFUN_METHOD_AUTO = 0, HFUN_METHOD_SERIES = 1, HFUN_METHOD_MB = 2 } hfun_method;

typedef struct hfun_eval_options {
  double tol;
  int64_t max_terms;
  hfun_method method;
} hfun_eval_options;

typedef struct hfun_eval_result {
  hfun_complex value;
  double abs_error_estimate;
  const char* method; /* static string */
  int64_t work;
} hfun_eval_result;

typedef struct hfun_spec hfun_spec;
typedef struct hfun_report_set hfun_report_set;

HFUN_API const char* hfun_version(void);
HFUN_API const char* hfun_last_error(void);
HFUN_API const char* hfun_status_name(hfun_status status);

HFUN_API void hfun_eval_options_default(hfun_eval_options* options);
HFUN_API hfun_status hfun_parse_complex(const char* text, hfun_complex* out);

/* Parses and validates; *out is set only on success. */
HFUN_API hfun_status hfun_spec_from_json(const char* json_text, hfun_spec** out);
HFUN_API hfun_status hfun_spec_from_file(const char* path, hfun_spec** out);
HFUN_API hfun_status hfun_spec_to_json(const hfun_spec* spec, char** out);
HFUN_API void hfun_spec_free(hfun_spec* spec);

/* z on the principal branch; options may be NULL for the defaults. */
HFUN_API hfun_status hfun_eval(const hfun_spec* spec, hfun_complex z, const hfun_eval_options* options,
                               hfun_eval_result* out);
/* z = modulus * e^{i phase} without reducing phase. */
HFUN_API hfun_status hfun_eval_polar(const hfun_spec* spec, double modulus, double phase,
                                     const hfun_eval_options* options, hfun_eval_result* out);
HFUN_API hfun_status hfun_eval_json(const hfun_spec* spec, hfun_complex z, const hfun_eval_options* options,
                                    char** out);

/* identity: "akr", "new", "reduce-akr" or "reduce-new"; alpha and lambda are
 * ignored by the reduce forms. */
HFUN_API hfun_status hfun_split_json(const hfun_spec* spec, const char* identity, hfun_complex alpha, double lambda,
                                     char** out);

HFUN_API hfun_status hfun_mlsum_json(double alpha, double beta, double gamma, double delta, double x, double tol,
                                     char** out);

/* suite: "gamma", "splits", "mlsum", "catalog" or "all"; catalog_path may be
 * NULL for the built-in catalog. */
HFUN_API hfun_status hfun_verify(const char* suite, double threshold, const char* catalog_path, hfun_report_set** out);
HFUN_API size_t hfun_report_count(const hfun_report_set* reports);
HFUN_API int hfun_report_passed(const hfun_report_set* reports);
HFUN_API hfun_status hfun_report_json(const hfun_report_set* reports, char** out);
HFUN_API hfun_status hfun_report_csv(const hfun_report_set* reports, char** out);
HFUN_API void hfun_report_free(hfun_report_set* reports);

HFUN_API void hfun_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
