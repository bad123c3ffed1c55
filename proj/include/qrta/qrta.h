#ifndef QRTA_QRTA_H
#define QRTA_QRTA_H

/* C interface to libqrta. Every call returns a qrta_status; on failure
 * qrta_last_error() describes the problem (thread-local, valid until the
 * next call on the same thread). Objects are opaque and owned by the
 * caller, who releases them with the matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QRTA_BUILDING_LIBRARY)
#define QRTA_API __declspec(dllexport)
#else
#define QRTA_API __declspec(dllimport)
#endif
#else
#define QRTA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qrta_status {
  QRTA_OK = 0,
  QRTA_E_INVALID_ARGUMENT = 1,
  QRTA_E_DOMAIN = 2,
  QRTA_E_IO = 3,
  QRTA_E_INTERNAL = 4
} qrta_status;

typedef enum qrta_format { QRTA_FORMAT_CSV = 0, QRTA_FORMAT_JSON = 1 } qrta_format;

typedef struct qrta_options {
  size_t eval_budget; /* 0 = unlimited */
} qrta_options;

typedef struct qrta_state qrta_state;
typedef struct qrta_report qrta_report;
typedef struct qrta_verify_result qrta_verify_result;

QRTA_API const char* qrta_version(void);
QRTA_API const char* qrta_last_error(void);
QRTA_API void qrta_string_free(char* s);

/* States. Complex arrays are interleaved (re, im) pairs. */
QRTA_API qrta_status qrta_state_from_amplitudes(int n_qubits, const double* re_im, qrta_state** out);
QRTA_API qrta_status qrta_state_from_density(int n_qubits, const double* re_im, qrta_state** out);
/* index 0 is |s>, index k >= 1 is psi_k. */
QRTA_API qrta_status qrta_grover_state(int n_qubits, uint64_t target, int iterations, int index, qrta_state** out);
/* stage in 1..3 */
QRTA_API qrta_status qrta_hhl_state(double b0, double b1, int stage, qrta_state** out);
QRTA_API qrta_status qrta_state_qubits(const qrta_state* state, int* out);
/* Writes dimension^2 interleaved entries into buffer of `capacity` doubles. */
QRTA_API qrta_status qrta_state_density(const qrta_state* state, double* buffer, size_t capacity);
QRTA_API void qrta_state_free(qrta_state* state);

/* Measures. options may be NULL. split uses letters, e.g. "A|BC". */
QRTA_API qrta_status qrta_coherence(const qrta_state* state, double* out);
QRTA_API qrta_status qrta_discord(const qrta_state* state, const char* split, const qrta_options* options,
                                  double* out);
QRTA_API qrta_status qrta_gm(const qrta_state* state, const qrta_options* options, double* out);

/* Reports. measures is a comma list of coherence,discord,gm (NULL = all).
 * has_b1 = 0 derives b1 = sqrt(1 - b0^2). */
QRTA_API qrta_status qrta_grover_report(int n_qubits, uint64_t target, int iterations, const char* measures,
                                        const qrta_options* options, qrta_report** out);
QRTA_API qrta_status qrta_hhl_report(double b0, double b1, int has_b1, const qrta_options* options,
                                     qrta_report** out);
QRTA_API qrta_status qrta_hhl_sweep(int steps, const qrta_options* options, qrta_report** out);
QRTA_API size_t qrta_report_rows(const qrta_report* report);
/* Result freed with qrta_string_free. */
QRTA_API qrta_status qrta_report_render(const qrta_report* report, qrta_format format, char** out);
QRTA_API qrta_status qrta_report_write(const qrta_report* report, qrta_format format, const char* path);
QRTA_API void qrta_report_free(qrta_report* report);

/* Verification. suite: tables, lemmas, oracles, invariants or all. */
QRTA_API qrta_status qrta_verify_run(const char* suite, const qrta_options* options, qrta_verify_result** out);
QRTA_API int qrta_verify_passed(const qrta_verify_result* result);
QRTA_API size_t qrta_verify_checks(const qrta_verify_result* result);
QRTA_API size_t qrta_verify_failures(const qrta_verify_result* result);
QRTA_API qrta_status qrta_verify_render(const qrta_verify_result* result, char** out);
QRTA_API void qrta_verify_free(qrta_verify_result* result);

#ifdef __cplusplus
}
#endif

#endif
