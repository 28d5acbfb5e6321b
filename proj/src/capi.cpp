#include "dcpso.h"

#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "harness.hpp"

struct dcpso_config {
  dcpso::ExperimentConfig value;
};

struct dcpso_result {
  dcpso::ExperimentResult value;
};

namespace {

void copy_message(const char* message, char* err, size_t err_len) {
  if (!err || err_len == 0) return;
  std::strncpy(err, message, err_len - 1);
  err[err_len - 1] = '\0';
}

dcpso_status status_from_current_exception(char* err, size_t err_len) {
  try {
    throw;
  } catch (const dcpso::ConfigError& e) {
    copy_message(e.what(), err, err_len);
    return DCPSO_ERR_CONFIG;
  } catch (const dcpso::IoError& e) {
    copy_message(e.what(), err, err_len);
    return DCPSO_ERR_IO;
  } catch (const std::invalid_argument& e) {
    copy_message(e.what(), err, err_len);
    return DCPSO_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    copy_message(e.what(), err, err_len);
    return DCPSO_ERR_INTERNAL;
  } catch (...) {
    copy_message("unknown error", err, err_len);
    return DCPSO_ERR_INTERNAL;
  }
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

template <class WriteFn>
dcpso_status write_multi_csv(const dcpso_result* const* results, size_t count,
                             const char* path, char* err, size_t err_len,
                             WriteFn&& write) {
  if ((!results && count > 0) || !path) return DCPSO_ERR_ARGUMENT;
  try {
    std::vector<const dcpso::ExperimentResult*> views;
    views.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!results[i]) return DCPSO_ERR_ARGUMENT;
      views.push_back(&results[i]->value);
    }
    write(std::string(path),
          std::span<const dcpso::ExperimentResult* const>(views));
    return DCPSO_OK;
  } catch (...) {
    return status_from_current_exception(err, err_len);
  }
}

}  // namespace

extern "C" {

const char* dcpso_version(void) { return "1.0.0"; }

const char* dcpso_status_name(dcpso_status status) {
  switch (status) {
    case DCPSO_OK: return "ok";
    case DCPSO_ERR_CONFIG: return "configuration error";
    case DCPSO_ERR_IO: return "i/o error";
    case DCPSO_ERR_ARGUMENT: return "invalid argument";
    case DCPSO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

dcpso_status dcpso_config_create(dcpso_config** out) {
  if (!out) return DCPSO_ERR_ARGUMENT;
  *out = new (std::nothrow) dcpso_config{};
  return *out ? DCPSO_OK : DCPSO_ERR_INTERNAL;
}

dcpso_status dcpso_config_load(const char* path, dcpso_config** out,
                               char* err, size_t err_len) {
  if (!path || !out) return DCPSO_ERR_ARGUMENT;
  *out = nullptr;
  try {
    auto config = new dcpso_config{dcpso::parse_config_file(path)};
    *out = config;
    return DCPSO_OK;
  } catch (...) {
    return status_from_current_exception(err, err_len);
  }
}

dcpso_status dcpso_config_set(dcpso_config* config, const char* key,
                              const char* value, char* err, size_t err_len) {
  if (!config || !key || !value) return DCPSO_ERR_ARGUMENT;
  try {
    dcpso::apply_config_override(config->value, key, value);
    return DCPSO_OK;
  } catch (...) {
    return status_from_current_exception(err, err_len);
  }
}

dcpso_status dcpso_config_get(const dcpso_config* config, const char* key,
                              char* value, size_t value_len) {
  if (!config || !key || !value || value_len == 0) return DCPSO_ERR_ARGUMENT;
  try {
    const std::string current = dcpso::get_config_value(config->value, key);
    copy_message(current.c_str(), value, value_len);
    return DCPSO_OK;
  } catch (...) {
    return status_from_current_exception(nullptr, 0);
  }
}

void dcpso_config_free(dcpso_config* config) { delete config; }

dcpso_status dcpso_experiment_run(const dcpso_config* config, dcpso_result** out,
                                  char* err, size_t err_len) {
  if (!config || !out) return DCPSO_ERR_ARGUMENT;
  *out = nullptr;
  try {
    auto result = new dcpso_result{dcpso::run_and_aggregate(config->value)};
    *out = result;
    return DCPSO_OK;
  } catch (...) {
    return status_from_current_exception(err, err_len);
  }
}

int32_t dcpso_result_runs(const dcpso_result* result) {
  return result ? static_cast<int32_t>(result->value.runs.size()) : 0;
}

int32_t dcpso_result_environments(const dcpso_result* result) {
  return result ? result->value.config.environments : 0;
}

uint64_t dcpso_result_run_seed(const dcpso_result* result, int32_t run) {
  if (!result || run < 0 || run >= dcpso_result_runs(result)) return 0;
  return result->value.runs[static_cast<size_t>(run)].seed;
}

double dcpso_result_run_offline_error(const dcpso_result* result, int32_t run) {
  if (!result || run < 0 || run >= dcpso_result_runs(result)) return kNan;
  return result->value.runs[static_cast<size_t>(run)].offline_error;
}

dcpso_status dcpso_result_record(const dcpso_result* result, int32_t run,
                                 int32_t environment_index,
                                 dcpso_change_record* out) {
  if (!result || !out) return DCPSO_ERR_ARGUMENT;
  if (run < 0 || run >= dcpso_result_runs(result)) return DCPSO_ERR_ARGUMENT;
  const auto& records = result->value.runs[static_cast<size_t>(run)].records;
  if (environment_index < 0 ||
      environment_index >= static_cast<int32_t>(records.size())) {
    return DCPSO_ERR_ARGUMENT;
  }
  const dcpso::ChangeRecord& rec = records[static_cast<size_t>(environment_index)];
  out->environment = rec.environment;
  out->best_found = rec.best_found;
  out->optimum = rec.optimum;
  out->peaks_found = rec.peaks_found;
  out->clusters_generated = rec.clusters_generated;
  out->survived_clusters = rec.survived_clusters;
  out->evaluations_used = rec.evaluations_used;
  return DCPSO_OK;
}

double dcpso_result_offline_error_mean(const dcpso_result* result) {
  return result ? result->value.summary.offline_error_mean : kNan;
}

double dcpso_result_offline_error_stddev(const dcpso_result* result) {
  return result ? result->value.summary.offline_error_stddev : kNan;
}

double dcpso_result_peaks_found_mean(const dcpso_result* result) {
  return result ? result->value.summary.peaks_found_mean : kNan;
}

double dcpso_result_clusters_generated_mean(const dcpso_result* result) {
  return result ? result->value.summary.clusters_generated_mean : kNan;
}

double dcpso_result_survived_clusters_mean(const dcpso_result* result) {
  return result ? result->value.summary.survived_clusters_mean : kNan;
}

void dcpso_result_free(dcpso_result* result) { delete result; }

dcpso_status dcpso_write_per_change_csv(const dcpso_result* result,
                                        const char* path, char* err,
                                        size_t err_len) {
  if (!result || !path) return DCPSO_ERR_ARGUMENT;
  try {
    dcpso::write_per_change_csv(std::string(path), result->value);
    return DCPSO_OK;
  } catch (...) {
    return status_from_current_exception(err, err_len);
  }
}

dcpso_status dcpso_write_summary_csv(const dcpso_result* const* results,
                                     size_t count, const char* path, char* err,
                                     size_t err_len) {
  return write_multi_csv(results, count, path, err, err_len,
                         [](const std::string& p,
                            std::span<const dcpso::ExperimentResult* const> r) {
                           dcpso::write_summary_csv(p, r);
                         });
}

dcpso_status dcpso_write_plot_csv(const dcpso_result* const* results,
                                  size_t count, const char* path, char* err,
                                  size_t err_len) {
  return write_multi_csv(results, count, path, err, err_len,
                         [](const std::string& p,
                            std::span<const dcpso::ExperimentResult* const> r) {
                           dcpso::write_plot_csv(p, r);
                         });
}

}  // extern "C"
