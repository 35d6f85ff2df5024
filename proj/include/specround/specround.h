/* C interface to the spectral-rounding core.
 *
 * Conventions:
 *   - Creation functions return NULL on failure; query functions return
 *     an sr_status (SR_OK = 0). After any failure, sr_last_error_code()
 *     and sr_last_error() describe the problem for the calling thread;
 *     the message stays valid until the thread's next library call.
 *   - Handles are opaque and freed by their matching sr_*_free; freeing
 *     NULL is a no-op. Handles are immutable after creation and safe to
 *     share across threads.
 *   - Output buffers are caller-allocated; sizes come from the paired
 *     count queries.
 */
#ifndef SPECROUND_H
#define SPECROUND_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
    SR_OK = 0,
    SR_E_INVALID_ARGUMENT = 1,
    SR_E_K_TOO_LARGE = 2,
    SR_E_NONFINITE_INPUT = 3,
    SR_E_ISOLATED_VERTEX = 4,
    SR_E_Q_OUT_OF_RANGE = 5,
    SR_E_K_OUT_OF_RANGE = 6,
    SR_E_LENGTH_MISMATCH = 7,
    SR_E_EMPTY_DATA = 8,
    SR_E_SINGLE_CLUSTER = 9,
    SR_E_NONFINITE_LIKELIHOOD = 10,
    SR_E_SOLVER_FAILURE = 11,
    SR_E_IO = 12,
    SR_E_PARSE = 13,
    SR_E_INTERNAL = 14
} sr_status;

const char* sr_version(void);

/* Last failure on the calling thread. */
int sr_last_error_code(void);
const char* sr_last_error(void);

/* ---------- datasets ---------- */

typedef struct sr_dataset sr_dataset;

/* Presets: "ideal-a", "ideal-b", "ideal-c", "noisy:<level>" (1..8). */
sr_dataset* sr_dataset_from_preset(const char* name, uint64_t seed);

/* label_mode: 0 = detect the label column, 1 = require it, 2 = ignore. */
sr_dataset* sr_dataset_read_csv(const char* path, int label_mode);

sr_status sr_dataset_write_csv(const sr_dataset* ds, const char* path,
                               int with_labels);

int sr_dataset_n(const sr_dataset* ds);
int sr_dataset_dim(const sr_dataset* ds);
int sr_dataset_has_labels(const sr_dataset* ds);

/* out: n*dim doubles, row-major (point i at out[i*dim]). */
sr_status sr_dataset_points(const sr_dataset* ds, double* out);

/* out: n labels; fails with SR_E_EMPTY_DATA when the set has none. */
sr_status sr_dataset_labels(const sr_dataset* ds, int32_t* out);

void sr_dataset_free(sr_dataset* ds);

/* ---------- similarity graphs ---------- */

typedef struct sr_similarity sr_similarity;

sr_similarity* sr_similarity_knn(const sr_dataset* ds, int k);
sr_similarity* sr_similarity_gaussian(const sr_dataset* ds, double sigma);
sr_similarity* sr_similarity_read_csv(const char* path);
sr_status sr_similarity_write_csv(const sr_similarity* sim, const char* path);

int sr_similarity_n(const sr_similarity* sim);

/* Number of connected components of {(i,j): s_ij > 0}; < 0 on error. */
int sr_similarity_components(const sr_similarity* sim);

void sr_similarity_free(sr_similarity* sim);

/* ---------- eigensystem ---------- */

typedef struct sr_eigensystem sr_eigensystem;

/* K smallest eigenpairs of the normalized random-walk Laplacian. */
sr_eigensystem* sr_eigensystem_compute(const sr_similarity* sim, int K);

int sr_eigensystem_n(const sr_eigensystem* es);
int sr_eigensystem_count(const sr_eigensystem* es);

/* out: K eigenvalues, ascending. */
sr_status sr_eigensystem_values(const sr_eigensystem* es, double* out);

/* out: n*K doubles, column-major (eigenvector j at out[j*n]). */
sr_status sr_eigensystem_vectors(const sr_eigensystem* es, double* out);

void sr_eigensystem_free(sr_eigensystem* es);

/* ---------- clustering ---------- */

typedef struct sr_result sr_result;

typedef struct sr_trace_entry {
    int32_t q;
    int32_t k;
    double lcm_bic;
    double ltm_bic;
} sr_trace_entry;

/* dof_mode: 0 = two free parameters per secondary vector (default),
 *           1 = secondary conditionals treated as structural.          */
sr_result* sr_cluster_ltm(const sr_eigensystem* es, int K, double delta,
                          int restarts, uint64_t seed, int dof_mode);

sr_result* sr_cluster_naive(const sr_eigensystem* es, int K, double delta);

sr_result* sr_cluster_kmeans(const sr_eigensystem* es, int k, int restarts,
                             uint64_t seed);

int sr_result_n(const sr_result* res);

/* Number of leading eigenvectors behind the partition (k for kmeans). */
int sr_result_q(const sr_result* res);

int sr_result_k(const sr_result* res);

/* Bit 0: best score sat at q = floor(K/2) (K likely too small).
 * Bit 1: the naive search never saw its pass-then-fail trigger and fell
 * back to the last partition. */
int sr_result_flags(const sr_result* res);

/* out: n cluster labels in 0..k-1, canonical order. */
sr_status sr_result_assignment(const sr_result* res, int32_t* out);

int sr_result_trace_size(const sr_result* res);
sr_status sr_result_trace(const sr_result* res, sr_trace_entry* out);

void sr_result_free(sr_result* res);

/* ---------- evaluation ---------- */

typedef struct sr_metrics {
    double rand_index;
    double vi;
    int32_t k_found;
    int32_t k_true;
} sr_metrics;

/* Compares two labelings of the same n points (labels are arbitrary
 * integers; only the induced partitions matter). */
sr_status sr_evaluate(const int32_t* predicted, const int32_t* truth, int n,
                      sr_metrics* out);

typedef struct sr_labels sr_labels;

sr_labels* sr_labels_read_csv(const char* path);
int sr_labels_n(const sr_labels* labels);
sr_status sr_labels_get(const sr_labels* labels, int32_t* out);
void sr_labels_free(sr_labels* labels);

sr_status sr_labels_write_csv(const char* path, const int32_t* labels, int n);

#ifdef __cplusplus
}
#endif

#endif /* SPECROUND_H */
