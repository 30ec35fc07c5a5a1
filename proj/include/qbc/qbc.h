/* Copyright 2026 the qbc authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the exact verification suites and Koornwinder expansions.
 * A run object holds one configuration plus the outputs of the last call;
 * all returned strings are UTF-8, owned by the run, and valid until the next
 * call on the same run (or qbc_run_free).
 */

#ifndef QBC_QBC_H
#define QBC_QBC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* status codes; the CLI uses them verbatim as process exit codes */
enum {
  QBC_OK = 0,      /* every selected check passed with exact zero residuals */
  QBC_FAIL = 1,    /* an identity failed (nonzero exact residual)           */
  QBC_CONFIG = 2,  /* invalid configuration                                 */
  QBC_ABORTED = 3, /* singularity resample budget exhausted                 */
};

typedef struct qbc_run qbc_run;

qbc_run* qbc_run_new(void);
void qbc_run_free(qbc_run* run);

/* integer knobs: "m", "n", "r", "l", "k", "size", "trials", "budget", "jobs";
 * returns QBC_OK or QBC_CONFIG for an unknown key */
int qbc_run_set_int(qbc_run* run, const char* key, long value);
int qbc_run_set_seed(qbc_run* run, uint64_t seed);
/* integer lists: "lambda", "mu", "alpha", "beta" */
int qbc_run_set_list(qbc_run* run, const char* key, const int* values, size_t len);

/* run a verification suite: a single check id (e.g. "cauchy", "thm2-2",
 * "transform-bc", "eigen") or "all" for the full acceptance grid */
int qbc_run_execute(qbc_run* run, const char* suite);
/* compute the polynomial expansion for the configured label and certify it */
int qbc_run_koornwinder(qbc_run* run);

/* JSON report of the last execute/koornwinder call ("" before any call) */
const char* qbc_run_report(const qbc_run* run);
/* printable text output (the koornwinder coefficient list; "" otherwise) */
const char* qbc_run_text(const qbc_run* run);
/* message of the last error ("" when the last call succeeded) */
const char* qbc_run_error(const qbc_run* run);

#ifdef __cplusplus
}
#endif

#endif /* QBC_QBC_H */
