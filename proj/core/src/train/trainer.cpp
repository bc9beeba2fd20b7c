#include "nmeasure/train/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <sstream>

#include "nmeasure/core/allocator.hpp"
#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/csv.hpp"
#include "nmeasure/networks/checkpoint.hpp"
#include "nmeasure/problems/problems.hpp"

namespace nmeasure {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Independent stream seed for the k-th draw from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
    return splitmix64(splitmix64(base) ^ (k * 0xD1B54A32D192ED03ULL));
}

CollocationBatch draw_batch(const TrainConfig& config, const RandomProblem& problem, std::uint64_t domain_seed,
                            std::uint64_t param_seed, std::size_t n_xi) {
    CollocationBatch batch = sample_collocation(problem, config.counts, config.strategy, domain_seed);
    batch.set_parameters(problem.params, problem.params.sample(n_xi, param_seed));
    return batch;
}

}  // namespace

std::vector<std::string> TrainConfig::violations() const {
    std::vector<std::string> out;
    auto positive = [&](std::size_t v, const char* name) {
        if (v < 1) out.push_back(std::string(name) + " must be >= 1");
    };
    if (problem.empty()) {
        out.emplace_back("problem is required");
    } else {
        const auto names = problem_names();
        if (std::find(names.begin(), names.end(), problem) == names.end()) {
            out.push_back("problem '" + problem + "' is not a bundled problem");
        }
    }
    positive(hidden_layers, "hidden_layers");
    positive(hidden_width, "hidden_width");
    if (!(optimizer.lr > 0.0) || !std::isfinite(optimizer.lr)) out.emplace_back("optimizer.lr must be > 0");
    positive(optimizer.max_inner_iterations, "optimizer.max_inner_iterations");
    positive(optimizer.history_size, "optimizer.history_size");
    positive(outer_iterations, "outer_iterations");
    positive(resample_domain_every, "resample_domain_every");
    positive(resample_params_every, "resample_params_every");
    positive(checkpoint_every, "checkpoint_every");
    positive(counts.n_x, "n_x");
    positive(counts.n_t, "n_t");
    positive(counts.n_boundary, "n_boundary");
    positive(counts.n_initial, "n_initial");
    positive(n_xi, "n_xi");
    try {
        weights.validate();
    } catch (const InvalidArgument& e) {
        out.emplace_back(e.what());
    }
    return out;
}

void TrainConfig::validate() const {
    const auto v = violations();
    if (v.empty()) return;
    std::string msg = "invalid training configuration:";
    for (const auto& s : v) msg += "\n  - " + s;
    throw InvalidArgument(msg);
}

TrainConfig default_train_config(const std::string& problem, MeasureVariant variant) {
    TrainConfig c;
    c.problem = problem;
    c.variant = variant;
    if (problem == "bistable") {
        c.hidden_layers = 5;
        c.hidden_width = 32;
        c.strategy = SamplingStrategy::uniform_random;
        // Dense shared times: with 100 the network hides a jump to the
        // unstable equilibrium between collocation times.
        c.counts = {1, 400, 100, 1};
        c.resample_domain_every = 50;
        c.resample_params_every = 50;
        c.outer_iterations = 600;
        c.n_xi = 25;
        c.galerkin_degree_x = 0;
        c.galerkin_degree_t = 16;
    } else if (problem == "diffusion") {
        c.hidden_layers = 6;
        c.hidden_width = 20;
        c.strategy = SamplingStrategy::cartesian_product;
        c.counts = {20, 10, 20, 20};
        c.resample_domain_every = 50;
        c.resample_params_every = 100;
        c.outer_iterations = 1000;
        c.n_xi = 100;
    } else if (problem == "reaction_diffusion") {
        c.hidden_layers = 6;
        c.hidden_width = 40;
        c.strategy = SamplingStrategy::cartesian_product;
        c.counts = {40, 20, 40, 40};
        c.resample_domain_every = 50;
        c.resample_params_every = 100;
        c.outer_iterations = 1000;
        c.n_xi = 100;
    } else {
        throw InvalidArgument("no defaults for unknown problem '" + problem + "'");
    }
    return c;
}

void TrainingRecord::write_csv(const std::filesystem::path& path) const {
    std::ostringstream os;
    os << kTrainingRecordHeader << '\n';
    for (const auto& r : rows) {
        os << r.iteration << ',' << format_double(r.train_loss) << ',' << format_double(r.test_loss) << ','
           << format_double(r.seconds) << ',' << (r.resampled_domain ? 1 : 0) << ',' << (r.resampled_params ? 1 : 0)
           << '\n';
    }
    atomic_write(path, os.str());
}

TrainingRecord TrainingRecord::read_csv(const std::filesystem::path& path) {
    const CsvTable table = nmeasure::read_csv(path);
    std::string header;
    for (std::size_t i = 0; i < table.header.size(); ++i) header += (i ? "," : "") + table.header[i];
    if (header != kTrainingRecordHeader) {
        throw IoError("training record " + path.string() + ": unexpected header '" + header + "'");
    }
    TrainingRecord rec;
    for (const auto& row : table.rows) {
        TrainingRow r;
        r.iteration = static_cast<std::size_t>(row[0]);
        r.train_loss = row[1];
        r.test_loss = row[2];
        r.seconds = row[3];
        r.resampled_domain = row[4] != 0.0;
        r.resampled_params = row[5] != 0.0;
        if (!rec.rows.empty() && r.iteration <= rec.rows.back().iteration) {
            throw IoError("training record " + path.string() + ": iteration indices are not increasing");
        }
        rec.rows.push_back(r);
    }
    return rec;
}

std::unique_ptr<NeuralMeasure> make_measure(const TrainConfig& config, const RandomProblem& problem, Mlp net) {
    switch (config.variant) {
        case MeasureVariant::fullnn:
            return std::make_unique<FullNNMeasure>(problem.domain, problem.params, std::move(net));
        case MeasureVariant::pce_nn:
            return std::make_unique<PCENNMeasure>(problem.domain, problem.params, std::move(net),
                                                  ChaosBasis(problem.params.dimension(), config.pce_degree));
        case MeasureVariant::galerkin_nn:
            return std::make_unique<GalerkinNNMeasure>(
                problem.domain, problem.params, std::move(net),
                SpaceTimeBasis(problem.domain, config.galerkin_degree_x, config.galerkin_degree_t));
    }
    throw InvalidArgument("unknown measure variant");
}

std::unique_ptr<NeuralMeasure> make_measure(const TrainConfig& config, const RandomProblem& problem) {
    MLPArchitecture arch;
    switch (config.variant) {
        case MeasureVariant::fullnn:
            arch = FullNNMeasure::architecture_for(problem.domain, problem.params, config.hidden_layers,
                                                   config.hidden_width, config.activation);
            break;
        case MeasureVariant::pce_nn:
            arch = PCENNMeasure::architecture_for(problem.domain,
                                                  ChaosBasis(problem.params.dimension(), config.pce_degree),
                                                  config.hidden_layers, config.hidden_width, config.activation);
            break;
        case MeasureVariant::galerkin_nn:
            arch = GalerkinNNMeasure::architecture_for(
                problem.params, SpaceTimeBasis(problem.domain, config.galerkin_degree_x, config.galerkin_degree_t),
                config.hidden_layers, config.hidden_width, config.activation);
            break;
    }
    return make_measure(config, problem, Mlp(arch, xavier_init(arch, config.seeds.init)));
}

CollocationBatch make_test_batch(const TrainConfig& config, const RandomProblem& problem) {
    const std::size_t n_xi = config.n_xi_test > 0 ? config.n_xi_test : config.n_xi;
    return draw_batch(config, problem, derive_seed(config.seeds.test, 0), derive_seed(config.seeds.test, 1), n_xi);
}

double evaluate_test_loss(const NeuralMeasure& measure, const RandomProblem& problem,
                          const CollocationBatch& test_batch, const LossWeights& weights) {
    return residual_loss(measure, problem, test_batch, weights);
}

std::filesystem::path checkpoint_path(const std::filesystem::path& output_dir, std::size_t iteration) {
    char name[64];
    std::snprintf(name, sizeof name, "checkpoint_%06zu.bin", iteration);
    return output_dir / "checkpoints" / name;
}

std::filesystem::path final_checkpoint_path(const std::filesystem::path& output_dir) {
    return output_dir / "checkpoints" / "checkpoint_final.bin";
}

TrainResult train(const TrainConfig& config, const TrainObserver& observer) {
    config.validate();
    const RandomProblem problem = make_problem(config.problem);
    return train(config, problem, make_measure(config, problem), observer);
}

TrainResult train(const TrainConfig& config, const RandomProblem& problem, std::unique_ptr<NeuralMeasure> initial,
                  const TrainObserver& observer) {
    if (!initial) throw InvalidArgument("train: no initial measure");
    tune_allocator_for_batches();
    // The problem is supplied directly, so only its name check is skipped.
    std::vector<std::string> bad;
    for (auto& v : config.violations()) {
        if (v.rfind("problem", 0) != 0) bad.push_back(std::move(v));
    }
    if (!bad.empty()) {
        std::string msg = "invalid training configuration:";
        for (const auto& s : bad) msg += "\n  - " + s;
        throw InvalidArgument(msg);
    }

    TrainResult result;
    result.measure = std::move(initial);
    NeuralMeasure& measure = *result.measure;
    const auto* network = dynamic_cast<const NetworkMeasure*>(&measure);
    const bool write_files = !config.output_dir.empty();
    const auto record_path = config.output_dir / "training_record.csv";

    auto save = [&](const std::filesystem::path& path) {
        if (write_files && network != nullptr) save_checkpoint(path, network->network());
    };

    std::size_t domain_draws = 0;
    std::size_t param_draws = 0;
    CollocationBatch batch = draw_batch(config, problem, derive_seed(config.seeds.domain, domain_draws),
                                        derive_seed(config.seeds.params, param_draws), config.n_xi);
    const CollocationBatch test_batch = make_test_batch(config, problem);

    LbfgsOptions opts;
    opts.lr = config.optimizer.lr;
    opts.max_iterations = config.optimizer.max_inner_iterations;
    opts.history_size = config.optimizer.history_size;
    Lbfgs optimizer(opts);

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

    auto emit = [&](const TrainingRow& row) {
        if (!std::isfinite(row.train_loss) || !std::isfinite(row.test_loss)) {
            if (write_files) result.record.write_csv(record_path);
            throw NonFiniteValue("training aborted at iteration " + std::to_string(row.iteration) +
                                 ": non-finite loss; the last checkpoint is kept");
        }
        result.record.rows.push_back(row);
        if (observer) observer(row);
    };

    {
        TrainingRow row;
        row.train_loss = residual_loss(measure, problem, batch, config.weights);
        row.test_loss = evaluate_test_loss(measure, problem, test_batch, config.weights);
        row.seconds = elapsed();
        emit(row);
    }

    for (std::size_t k = 1; k <= config.outer_iterations; ++k) {
        const ResampleFlags flags = resample_due(k, config.resample_domain_every, config.resample_params_every);
        if (flags.domain) {
            CollocationBatch fresh =
                sample_collocation(problem, config.counts, config.strategy,
                                   derive_seed(config.seeds.domain, ++domain_draws));
            batch.interior = std::move(fresh.interior);
            batch.boundary = std::move(fresh.boundary);
            batch.initial = std::move(fresh.initial);
        }
        if (flags.params) {
            batch.set_parameters(problem.params,
                                 problem.params.sample(config.n_xi, derive_seed(config.seeds.params, ++param_draws)));
        }

        Objective objective = [&](const Eigen::VectorXd& theta, Eigen::VectorXd& grad) {
            measure.theta() = theta;
            LossEvaluation ev = evaluate_loss(measure, problem, batch, config.weights, true);
            grad = std::move(ev.gradient);
            return ev.value;
        };

        TrainingRow row;
        row.iteration = k;
        row.resampled_domain = flags.domain;
        row.resampled_params = flags.params;
        Eigen::VectorXd theta = measure.theta();
        try {
            const LbfgsStepResult step = optimizer.step(theta, objective);
            measure.theta() = theta;
            row.train_loss = step.final_loss;
        } catch (const NonFiniteValue& e) {
            if (write_files) result.record.write_csv(record_path);
            throw NonFiniteValue(std::string("training aborted at iteration ") + std::to_string(k) + ": " +
                                 e.what() + "; the last checkpoint is kept");
        }
        row.test_loss = evaluate_test_loss(measure, problem, test_batch, config.weights);
        row.seconds = elapsed();
        emit(row);

        if (k % config.checkpoint_every == 0) {
            save(checkpoint_path(config.output_dir, k));
            if (write_files) result.record.write_csv(record_path);
        }
    }
    save(final_checkpoint_path(config.output_dir));
    if (write_files) result.record.write_csv(record_path);
    return result;
}

}  // namespace nmeasure
