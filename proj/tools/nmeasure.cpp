#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nmeasure/cli/commands.hpp"
#include "nmeasure/cli/config.hpp"
#include "nmeasure/cli/manifest.hpp"
#include "nmeasure/core/allocator.hpp"
#include "nmeasure/core/error.hpp"
#include "nmeasure/core/version.hpp"

namespace {

void print_row(const nmeasure::TrainingRow& r) {
    std::printf("%6zu  train %.6e  test %.6e  %8.1fs%s%s\n", r.iteration, r.train_loss, r.test_loss, r.seconds,
                r.resampled_domain ? "  [domain]" : "", r.resampled_params ? "  [params]" : "");
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    nmeasure::tune_allocator_for_batches();

    CLI::App app{"Neural pushforward measures for random differential equations"};
    app.set_version_flag("--version", nmeasure::version());
    app.require_subcommand(1);

    // train
    nmeasure::TrainRequest train_req;
    std::size_t log_every = 10;
    bool quiet = false;
    auto* train = app.add_subcommand("train", "Train a measure from a configuration file");
    train->add_option("--config,-c", train_req.config_file, "Configuration file")->required()->check(CLI::ExistingFile);
    train->add_option("--run,-r", train_req.run_dir, "New run directory")->required();
    train->add_option("--set", train_req.overrides, "Override, section.key=value (repeatable)");
    train->add_option("--log-every", log_every, "Print every n-th outer step")->check(CLI::PositiveNumber);
    train->add_flag("--quiet,-q", quiet, "No progress output");

    // reference
    nmeasure::ReferenceRequest ref_req;
    auto* reference = app.add_subcommand("reference", "Compute (or fetch from cache) a reference ensemble");
    reference->add_option("--problem,-p", ref_req.problem, "bistable, diffusion or reaction_diffusion")->required();
    reference->add_option("--samples,-n", ref_req.n_samples, "Parameter draws")->capture_default_str();
    reference->add_option("--seed,-s", ref_req.seed, "Seed of the parameter draws")->capture_default_str();
    reference->add_option("--nx", ref_req.nx, "Spatial grid points")->capture_default_str();
    reference->add_option("--nt", ref_req.nt, "Time grid points")->capture_default_str();
    reference->add_option("--out,-o", ref_req.output, "Copy the ensemble CSV here");

    // evaluate
    nmeasure::EvaluateRequest eval_req;
    auto* evaluate = app.add_subcommand("evaluate", "Compare a trained run with a reference ensemble");
    evaluate->add_option("--run,-r", eval_req.run_dir, "Run directory")->required()->check(CLI::ExistingDirectory);
    evaluate->add_option("--reference", eval_req.reference_csv, "Reference ensemble CSV")->required();
    evaluate->add_option("--t", eval_req.t_slices, "Time slices (comma separated)")->delimiter(',');
    evaluate->add_option("--seed,-s", eval_req.seed, "Seed of the model parameter draws")->capture_default_str();
    evaluate->add_option("--samples,-n", eval_req.n_samples, "Model samples (default: as the reference)");
    evaluate->add_option("--checkpoint", eval_req.checkpoint, "Checkpoint (default: final)");

    // report
    nmeasure::ReportSpec spec;
    std::string figures = "all";
    bool no_png = false, no_svg = false;
    auto* report = app.add_subcommand("report", "Render figures from run artifacts");
    report->add_option("--run,-r", spec.run_dir, "Run directory")->required()->check(CLI::ExistingDirectory);
    report->add_option("--figures,-f", figures,
                       "loss_curves,histograms,wasserstein_series,moment_fields,error_heatmap or all")
        ->capture_default_str();
    report->add_option("--t", spec.t_slices, "Time slices (comma separated)")->delimiter(',');
    report->add_option("--eval", spec.eval_dir, "Evaluation directory (default: the only one)");
    report->add_option("--out,-o", spec.output_dir, "Output directory (default: <run>/figures)");
    report->add_option("--bins", spec.histogram_bins, "Histogram bins")->capture_default_str();
    report->add_flag("--no-png", no_png, "Skip PNG output");
    report->add_flag("--no-svg", no_svg, "Skip SVG output");

    // utilities
    auto* schema = app.add_subcommand("schema", "Print the configuration schema");
    std::filesystem::path verify_dir;
    auto* verify = app.add_subcommand("verify", "Check a run directory against its manifest");
    verify->add_option("--run,-r", verify_dir, "Run directory")->required()->check(CLI::ExistingDirectory);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*train) {
            if (!quiet) {
                train_req.observer = [&](const nmeasure::TrainingRow& r) {
                    if (r.iteration % log_every == 0) print_row(r);
                };
            }
            const auto dir = nmeasure::cmd_train(train_req);
            std::cout << "run written to " << dir.string() << '\n';
        } else if (*reference) {
            const auto r = nmeasure::cmd_reference(ref_req);
            std::cout << (r.cache_hit ? "cache hit: " : "computed: ") << r.path.string() << '\n';
        } else if (*evaluate) {
            const auto r = nmeasure::cmd_evaluate(eval_req);
            std::printf("metrics written to %s\n", r.dir.string().c_str());
            std::printf("relative L2 error of the mean field  %.6g\n", r.mean_relative_l2);
            std::printf("relative L2 error of the std field   %.6g\n", r.std_relative_l2);
            std::printf("95th percentile |mean error|         %.6g\n", r.abs_error_mean_p95);
            std::printf("95th percentile |std error|          %.6g\n", r.abs_error_std_p95);
        } else if (*report) {
            spec.figures = nmeasure::parse_figure_list(figures);
            spec.png = !no_png;
            spec.svg = !no_svg;
            for (const auto& f : nmeasure::cmd_report(spec)) std::cout << f.string() << '\n';
        } else if (*schema) {
            std::cout << nmeasure::train_config_schema();
        } else if (*verify) {
            const auto problems = nmeasure::verify_manifest(verify_dir);
            for (const auto& p : problems) std::cout << p << '\n';
            if (!problems.empty()) return 2;
            std::cout << "manifest verified\n";
        }
    } catch (const nmeasure::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
