#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nmeasure/core/problem.hpp"
#include "nmeasure/loss/collocation.hpp"
#include "nmeasure/loss/residual_loss.hpp"
#include "nmeasure/measures/measure.hpp"
#include "nmeasure/networks/mlp.hpp"
#include "nmeasure/train/lbfgs.hpp"

namespace nmeasure {

struct OptimizerConfig {
    double lr = 1.0;
    std::size_t max_inner_iterations = 20;
    std::size_t history_size = 20;
};

struct TrainSeeds {
    std::uint64_t init = 1;
    std::uint64_t domain = 2;
    std::uint64_t params = 3;
    std::uint64_t test = 4;
};

struct TrainConfig {
    std::string problem;
    MeasureVariant variant = MeasureVariant::fullnn;
    std::size_t hidden_layers = 5;
    std::size_t hidden_width = 32;
    Activation activation = Activation::snake;
    /// Total degree of the chaos basis (pce_nn).
    std::size_t pce_degree = 5;
    /// Chebyshev degrees of the space-time basis (galerkin_nn).
    std::size_t galerkin_degree_x = 10;
    std::size_t galerkin_degree_t = 10;

    OptimizerConfig optimizer;
    std::size_t outer_iterations = 600;
    std::size_t resample_domain_every = 50;
    std::size_t resample_params_every = 50;
    std::size_t checkpoint_every = 100;

    CollocationCounts counts;
    SamplingStrategy strategy = SamplingStrategy::uniform_random;
    std::size_t n_xi = 100;
    /// Held-out batch size; 0 means the same as the training sizes.
    std::size_t n_xi_test = 0;

    TrainSeeds seeds;
    LossWeights weights;
    /// Checkpoints and the record go here; empty disables all file output.
    std::filesystem::path output_dir;

    /// Every violated field, one message each; empty when valid.
    std::vector<std::string> violations() const;
    /// Throws InvalidArgument listing every violation.
    void validate() const;
};

/// Per-problem protocol defaults (architecture, sampling, schedule).
TrainConfig default_train_config(const std::string& problem, MeasureVariant variant = MeasureVariant::fullnn);

struct TrainingRow {
    std::size_t iteration = 0;
    double train_loss = 0.0;
    double test_loss = 0.0;
    double seconds = 0.0;
    bool resampled_domain = false;
    bool resampled_params = false;
};

/// Row 0 holds the losses of the initial parameters; row k the losses after
/// outer step k, with the resample flags applied before that step.
struct TrainingRecord {
    std::vector<TrainingRow> rows;

    void write_csv(const std::filesystem::path& path) const;
    static TrainingRecord read_csv(const std::filesystem::path& path);
};

inline constexpr const char* kTrainingRecordHeader =
    "iteration,train_loss,test_loss,seconds,resampled_domain,resampled_params";

/// Fresh Xavier-initialized measure for the configuration.
std::unique_ptr<NeuralMeasure> make_measure(const TrainConfig& config, const RandomProblem& problem);
/// Measure of the configured variant around an existing network.
std::unique_ptr<NeuralMeasure> make_measure(const TrainConfig& config, const RandomProblem& problem, Mlp net);

/// Collocation points and parameters for the held-out test batch.
CollocationBatch make_test_batch(const TrainConfig& config, const RandomProblem& problem);

double evaluate_test_loss(const NeuralMeasure& measure, const RandomProblem& problem,
                          const CollocationBatch& test_batch, const LossWeights& weights);

struct TrainResult {
    std::unique_ptr<NeuralMeasure> measure;
    TrainingRecord record;
};

/// Optional per-row observer, e.g. for progress logging.
using TrainObserver = std::function<void(const TrainingRow&)>;

TrainResult train(const TrainConfig& config, const TrainObserver& observer = {});
/// Trains a caller-supplied measure (any variant, not necessarily a network).
TrainResult train(const TrainConfig& config, const RandomProblem& problem, std::unique_ptr<NeuralMeasure> initial,
                  const TrainObserver& observer = {});

std::filesystem::path checkpoint_path(const std::filesystem::path& output_dir, std::size_t iteration);
std::filesystem::path final_checkpoint_path(const std::filesystem::path& output_dir);

}  // namespace nmeasure
