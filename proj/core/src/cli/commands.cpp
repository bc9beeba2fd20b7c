#include "nmeasure/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "nmeasure/cli/config.hpp"
#include "nmeasure/cli/manifest.hpp"
#include "nmeasure/core/error.hpp"
#include "nmeasure/core/version.hpp"
#include "nmeasure/metrics/csv.hpp"
#include "nmeasure/metrics/ensemble.hpp"
#include "nmeasure/metrics/statistics.hpp"
#include "nmeasure/networks/checkpoint.hpp"
#include "nmeasure/problems/problems.hpp"
#include "nmeasure/problems/reference.hpp"

namespace nmeasure {

namespace fs = std::filesystem;

namespace {

bool is_empty_or_missing(const fs::path& dir) {
    return !fs::exists(dir) || (fs::is_directory(dir) && fs::is_empty(dir));
}

std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void write_losses_csv(const fs::path& path, const TrainingRecord& record) {
    std::ostringstream os;
    os << "iteration,train_loss,test_loss\n";
    for (const auto& r : record.rows) {
        os << r.iteration << ',' << format_double(r.train_loss) << ',' << format_double(r.test_loss) << '\n';
    }
    atomic_write(path, os.str());
}

double relative_or_nan(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (b.norm() == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return relative_l2_error(a, b);
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

TrainConfig load_run_config(const fs::path& run_dir) { return load_train_config(run_dir / "config.ini"); }

// ---------------------------------------------------------------- train

fs::path cmd_train(const TrainRequest& request) {
    TrainConfig config = load_train_config(request.config_file, request.overrides);
    if (request.run_dir.empty()) throw InvalidArgument("train: a run directory is required");
    if (!is_empty_or_missing(request.run_dir)) {
        throw InvalidArgument("run directory " + request.run_dir.string() +
                              " already exists and is not empty; runs are never overwritten");
    }
    fs::create_directories(request.run_dir);
    config.output_dir = request.run_dir;

    const std::string snapshot = format_train_config(config);
    atomic_write(request.run_dir / "config.ini", snapshot);
    RunManifest manifest;
    manifest.version = version();
    manifest.config = snapshot;
    manifest.seeds = config.seeds;
    manifest.created_at = manifest.updated_at = utc_timestamp();
    manifest.artifacts = scan_artifacts(request.run_dir);
    write_manifest(request.run_dir, manifest);

    try {
        const TrainResult result = train(config, request.observer);
        write_losses_csv(request.run_dir / "losses.csv", result.record);
    } catch (...) {
        refresh_manifest(request.run_dir);
        throw;
    }
    refresh_manifest(request.run_dir);
    return request.run_dir;
}

// ---------------------------------------------------------------- reference

fs::path cache_root() {
    if (const char* env = std::getenv("NMEASURE_CACHE"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "nmeasure";
    return fs::temp_directory_path() / "nmeasure-cache";
}

std::string reference_cache_key(const ReferenceRequest& r) {
    std::ostringstream os;
    os << "reference-v1|" << r.problem << '|' << r.n_samples << '|' << r.seed << '|' << r.nx << '|' << r.nt;
    return sha256_hex(os.str()).substr(0, 16);
}

ReferenceResult cmd_reference(const ReferenceRequest& request) {
    const RandomProblem problem = make_problem(request.problem);
    if (request.n_samples < 1) throw InvalidArgument("reference: n_samples must be >= 1");
    if (request.nt < 2) throw InvalidArgument("reference: nt must be >= 2");
    if (problem.domain.has_space() && request.nx < 2) throw InvalidArgument("reference: nx must be >= 2");
    ReferenceRequest key_request = request;
    if (!problem.domain.has_space()) key_request.nx = 1;

    std::ostringstream name;
    name << request.problem << "_n" << request.n_samples << "_s" << request.seed << '_'
         << reference_cache_key(key_request) << ".csv";
    const fs::path cached = cache_root() / "reference" / name.str();

    ReferenceResult result;
    result.cache_hit = fs::is_regular_file(cached);
    if (!result.cache_hit) {
        const Eigen::MatrixXd xi = problem.params.sample(request.n_samples, request.seed);
        const auto grid = uniform_grid(problem.domain, key_request.nx, request.nt);
        EmpiricalEnsemble e = reference_ensemble(request.problem, xi, grid);
        e.meta = request.problem + " reference seed " + std::to_string(request.seed);
        write_ensemble_csv(cached, e);
    }
    result.path = cached;
    if (!request.output.empty()) {
        if (request.output.has_parent_path()) fs::create_directories(request.output.parent_path());
        const fs::path tmp = fs::path(request.output).concat(".tmp");
        fs::copy_file(cached, tmp, fs::copy_options::overwrite_existing);
        fs::rename(tmp, request.output);
        result.path = request.output;
    }
    return result;
}

// ---------------------------------------------------------------- evaluate

EvaluateResult cmd_evaluate(const EvaluateRequest& request) {
    const TrainConfig config = load_run_config(request.run_dir);
    const RandomProblem problem = make_problem(config.problem);
    const fs::path ckpt = request.checkpoint.empty() ? final_checkpoint_path(request.run_dir) : request.checkpoint;
    if (!fs::is_regular_file(ckpt)) throw IoError("missing checkpoint: " + ckpt.string());
    if (!fs::is_regular_file(request.reference_csv)) {
        throw IoError("missing reference ensemble: " + request.reference_csv.string());
    }
    const auto measure = make_measure(config, problem, load_checkpoint(ckpt));
    const EmpiricalEnsemble ref = read_ensemble_csv(request.reference_csv);

    for (const auto& p : ref.grid) {
        if (!problem.domain.contains(p.x, p.t) || (!problem.domain.has_space() && p.x != 0.0)) {
            std::ostringstream os;
            os << "grid mismatch: reference point (x=" << p.x << ", t=" << p.t << ") is not on the "
               << config.problem << " domain";
            throw InvalidArgument(os.str());
        }
    }
    const auto times = ref.times();
    std::vector<double> slices = request.t_slices.empty() ? times : request.t_slices;
    const Interval& span = problem.domain.time();
    for (double& t : slices) {
        if (!span.contains(t)) {
            std::ostringstream os;
            os << "time slice t=" << t << " lies outside the time domain [" << span.lo << ", " << span.hi << "]";
            throw InvalidArgument(os.str());
        }
        const auto it = std::find_if(times.begin(), times.end(), [&](double g) {
            return std::abs(g - t) <= 1e-9 * std::max(1.0, std::abs(t));
        });
        if (it == times.end()) {
            std::ostringstream os;
            os << "grid mismatch: time slice t=" << t << " is not a time of the reference grid";
            throw InvalidArgument(os.str());
        }
        t = *it;
    }

    const std::size_t n = request.n_samples > 0 ? request.n_samples : ref.samples();
    const Eigen::MatrixXd xi = problem.params.sample(n, mix_seed(request.seed ^ 0x6576616cULL));
    EmpiricalEnsemble model = sample_pushforward(*measure, xi, ref.grid);
    model.meta = config.problem + " model seed " + std::to_string(request.seed);

    std::ostringstream dirname;
    dirname << request.reference_csv.stem().string() << "_s" << request.seed;
    const fs::path out = request.run_dir / "eval" / dirname.str();
    fs::create_directories(out);

    EvaluateResult result;
    result.dir = out;
    result.wasserstein = wasserstein_over_time(model, ref, slices, 1, request.seed);
    const MomentField mm = ensemble_moments(model);
    const MomentField mr = ensemble_moments(ref);
    const Eigen::VectorXd err_mean = error_heatmap(mm.mean, mr.mean);
    const Eigen::VectorXd err_std = error_heatmap(mm.std, mr.std);
    result.mean_relative_l2 = relative_or_nan(mm.mean, mr.mean);
    result.std_relative_l2 = relative_or_nan(mm.std, mr.std);
    result.abs_error_mean_p95 = percentile(to_vector(err_mean), 95.0);
    result.abs_error_std_p95 = percentile(to_vector(err_std), 95.0);

    write_ensemble_csv(out / "model_ensemble.csv", model);
    write_wasserstein_csv(out / "wasserstein.csv", result.wasserstein);
    write_moments_csv(out / "moments_model.csv", mm);
    write_moments_csv(out / "moments_reference.csv", mr);
    write_heatmap_csv(out / "abs_error_mean.csv", ref.grid, err_mean);
    write_heatmap_csv(out / "abs_error_std.csv", ref.grid, err_std);

    nlohmann::ordered_json j;
    j["problem"] = config.problem;
    j["variant"] = to_string(config.variant);
    j["reference"] = fs::absolute(request.reference_csv).lexically_normal().string();
    j["checkpoint"] = fs::relative(fs::absolute(ckpt), fs::absolute(request.run_dir)).generic_string();
    j["seed"] = request.seed;
    j["n_samples"] = n;
    j["t_slices"] = slices;
    j["mean_relative_l2"] = result.mean_relative_l2;
    j["std_relative_l2"] = result.std_relative_l2;
    j["abs_error_mean_p95"] = result.abs_error_mean_p95;
    j["abs_error_std_p95"] = result.abs_error_std_p95;
    auto w = nlohmann::ordered_json::array();
    for (const auto& p : result.wasserstein) w.push_back({{"t", p.t}, {"wasserstein_p1", p.distance}});
    j["wasserstein"] = w;
    atomic_write(out / "summary.json", j.dump(2) + "\n");

    if (fs::is_regular_file(request.run_dir / kManifestFile)) refresh_manifest(request.run_dir);
    return result;
}

// ---------------------------------------------------------------- report

std::vector<fs::path> cmd_report(const ReportSpec& spec) {
    auto files = render(spec);
    if (fs::is_regular_file(spec.run_dir / kManifestFile)) refresh_manifest(spec.run_dir);
    return files;
}

}  // namespace nmeasure
