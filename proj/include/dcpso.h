/*
 * dcpso — multi-swarm clustering particle swarm optimizer for dynamic
 * environments, with a built-in moving-peaks benchmark and experiment
 * harness.
 *
 * C interface over the C++ core. All objects are opaque handles created and
 * destroyed through this API; functions report dcpso_status and, where a
 * `char* err, size_t err_len` pair is accepted, a NUL-terminated message.
 */

#ifndef DCPSO_H_
#define DCPSO_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dcpso_status {
  DCPSO_OK = 0,
  DCPSO_ERR_CONFIG = 2,   /* invalid configuration (key, value, constraint) */
  DCPSO_ERR_IO = 3,       /* filesystem failure */
  DCPSO_ERR_ARGUMENT = 4, /* null handle, index out of range, ... */
  DCPSO_ERR_INTERNAL = 5, /* a run failed one of its internal audits */
} dcpso_status;

/* Experiment configuration (benchmark settings, PSO constants, thresholds,
 * budget). Keys mirror the config-file schema; see the README key table. */
typedef struct dcpso_config dcpso_config;

/* Outcome of one experiment: config.runs independent runs at a single
 * configuration, plus aggregate statistics. */
typedef struct dcpso_result dcpso_result;

/* Snapshot of one environment within one run. */
typedef struct dcpso_change_record {
  int32_t environment;        /* 1-based environment index */
  double best_found;          /* best evaluation seen in the environment */
  double optimum;             /* oracle optimum of the environment */
  int32_t peaks_found;        /* peaks within a probe radius of a cluster */
  int32_t clusters_generated; /* clusters created during the environment */
  int32_t survived_clusters;  /* live + archived clusters at change time */
  int64_t evaluations_used;   /* fitness evaluations spent in the environment */
} dcpso_change_record;

const char* dcpso_version(void);

/* Static description of a status code. */
const char* dcpso_status_name(dcpso_status status);

/* --- configuration ------------------------------------------------------ */

/* Fresh configuration holding every documented default. */
dcpso_status dcpso_config_create(dcpso_config** out);

/* Parses a `key = value` config file ('#' comments). Unknown keys, bad
 * values, and constraint violations yield DCPSO_ERR_CONFIG; a missing file
 * yields DCPSO_ERR_IO. */
dcpso_status dcpso_config_load(const char* path, dcpso_config** out,
                               char* err, size_t err_len);

/* Sets one key. Constraints are re-checked when the experiment runs. */
dcpso_status dcpso_config_set(dcpso_config* config, const char* key,
                              const char* value, char* err, size_t err_len);

/* Serializes the current value of one key (truncates to value_len). */
dcpso_status dcpso_config_get(const dcpso_config* config, const char* key,
                              char* value, size_t value_len);

void dcpso_config_free(dcpso_config* config);

/* --- experiments -------------------------------------------------------- */

/* Validates the configuration and executes config.runs independent runs
 * (run i is seeded base_seed + i). Deterministic: identical configurations
 * produce identical results. */
dcpso_status dcpso_experiment_run(const dcpso_config* config, dcpso_result** out,
                                  char* err, size_t err_len);

int32_t dcpso_result_runs(const dcpso_result* result);
int32_t dcpso_result_environments(const dcpso_result* result);
uint64_t dcpso_result_run_seed(const dcpso_result* result, int32_t run);
double dcpso_result_run_offline_error(const dcpso_result* result, int32_t run);
dcpso_status dcpso_result_record(const dcpso_result* result, int32_t run,
                                 int32_t environment_index /* 0-based */,
                                 dcpso_change_record* out);

double dcpso_result_offline_error_mean(const dcpso_result* result);
double dcpso_result_offline_error_stddev(const dcpso_result* result);
double dcpso_result_peaks_found_mean(const dcpso_result* result);
double dcpso_result_clusters_generated_mean(const dcpso_result* result);
double dcpso_result_survived_clusters_mean(const dcpso_result* result);

void dcpso_result_free(dcpso_result* result);

/* --- metrics files ------------------------------------------------------ */

/* One row per (run, environment): run_seed, environment_index, best_found,
 * optimum, error, peaks_found, clusters_generated, survived_clusters. */
dcpso_status dcpso_write_per_change_csv(const dcpso_result* result,
                                        const char* path, char* err,
                                        size_t err_len);

/* One row per result, keyed by (swarm_size, max_subsize). */
dcpso_status dcpso_write_summary_csv(const dcpso_result* const* results,
                                     size_t count, const char* path, char* err,
                                     size_t err_len);

/* Plot data: offline error (y) against swarm size (x), one series per
 * max_subsize value. */
dcpso_status dcpso_write_plot_csv(const dcpso_result* const* results,
                                  size_t count, const char* path, char* err,
                                  size_t err_len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DCPSO_H_ */
