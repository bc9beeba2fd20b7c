#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace nmeasure {

enum class FigureKind { loss_curves, histograms, wasserstein_series, moment_fields, error_heatmap };

std::string to_string(FigureKind kind);
FigureKind figure_kind_from_string(const std::string& s);
/// Comma-separated list; "all" expands to every kind.
std::vector<FigureKind> parse_figure_list(const std::string& list);

/// What to draw from a run directory.
///
/// loss_curves reads run_dir/training_record.csv. Every other figure reads the
/// evaluation directory written by `evaluate`: model_ensemble.csv,
/// wasserstein.csv, moments_model.csv, moments_reference.csv,
/// abs_error_mean.csv, abs_error_std.csv and summary.json (which names the
/// reference ensemble used by the histograms).
struct ReportSpec {
    std::filesystem::path run_dir;
    std::vector<FigureKind> figures;
    /// Times for histograms and moment profiles; empty picks first, middle
    /// and last grid time.
    std::vector<double> t_slices;
    /// Empty: the single subdirectory of run_dir/eval.
    std::filesystem::path eval_dir;
    /// Empty: run_dir/figures.
    std::filesystem::path output_dir;
    bool png = true;
    bool svg = true;
    std::size_t histogram_bins = 50;
};

/// Renders every requested figure and returns the image paths. Each figure
/// <kind>.png / <kind>.svg ships with <kind>.csv holding exactly the plotted
/// arrays. Loss curves and histogram frequencies use a log y axis.
std::vector<std::filesystem::path> render(const ReportSpec& spec);

/// Path of the sidecar CSV for a figure kind.
std::filesystem::path sidecar_path(const std::filesystem::path& output_dir, FigureKind kind);

}  // namespace nmeasure
