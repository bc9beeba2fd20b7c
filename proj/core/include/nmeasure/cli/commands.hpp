#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nmeasure/metrics/wasserstein.hpp"
#include "nmeasure/report/report.hpp"
#include "nmeasure/train/trainer.hpp"

namespace nmeasure {

// ---- train

struct TrainRequest {
    std::filesystem::path config_file;
    /// Extra "section.key=value" assignments.
    std::vector<std::string> overrides;
    /// Must not exist or be empty: runs are never overwritten.
    std::filesystem::path run_dir;
    TrainObserver observer;
};

/// Validates the configuration, trains and leaves in run_dir: config.ini
/// (canonical snapshot), training_record.csv, losses.csv (timing-free copy
/// of the losses), checkpoints/ and manifest.json.
std::filesystem::path cmd_train(const TrainRequest& request);

// ---- reference

struct ReferenceRequest {
    std::string problem;
    std::size_t n_samples = 10000;
    std::uint64_t seed = 0;
    /// Uniform grid sizes; nx is ignored for the ODE.
    std::size_t nx = 51;
    std::size_t nt = 41;
    /// Copy of the cached ensemble; empty returns the cache file itself.
    std::filesystem::path output;
};

struct ReferenceResult {
    std::filesystem::path path;
    bool cache_hit = false;
};

/// $NMEASURE_CACHE, else $HOME/.cache/nmeasure.
std::filesystem::path cache_root();

/// Cache key of a reference request (hex SHA-256 prefix).
std::string reference_cache_key(const ReferenceRequest& request);

/// Ground-truth ensemble on the uniform grid for parameters drawn with the
/// seed, cached under cache_root()/reference by problem, count, seed and grid.
ReferenceResult cmd_reference(const ReferenceRequest& request);

// ---- evaluate

struct EvaluateRequest {
    std::filesystem::path run_dir;
    std::filesystem::path reference_csv;
    /// Wasserstein slices; empty means every grid time.
    std::vector<double> t_slices;
    /// Seed of the fresh parameter draws for the model ensemble.
    std::uint64_t seed = 0;
    /// Model samples; 0 means as many as the reference has.
    std::size_t n_samples = 0;
    /// Empty: checkpoints/checkpoint_final.bin.
    std::filesystem::path checkpoint;
};

struct EvaluateResult {
    std::filesystem::path dir;
    double mean_relative_l2 = 0.0;
    double std_relative_l2 = 0.0;
    double abs_error_mean_p95 = 0.0;
    double abs_error_std_p95 = 0.0;
    std::vector<WassersteinPoint> wasserstein;
};

/// Samples the trained measure on the reference grid and writes, under
/// run_dir/eval/<reference stem>_s<seed>/: model_ensemble.csv,
/// wasserstein.csv, moments_model.csv, moments_reference.csv,
/// abs_error_mean.csv, abs_error_std.csv and summary.json.
EvaluateResult cmd_evaluate(const EvaluateRequest& request);

// ---- report

/// render() followed by a manifest refresh of the run directory.
std::vector<std::filesystem::path> cmd_report(const ReportSpec& spec);

/// Loads config.ini of a run directory.
TrainConfig load_run_config(const std::filesystem::path& run_dir);

}  // namespace nmeasure
