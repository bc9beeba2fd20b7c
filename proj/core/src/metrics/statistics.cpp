#include "nmeasure/metrics/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nmeasure/core/error.hpp"
#include "nmeasure/core/summation.hpp"
#include "nmeasure/metrics/csv.hpp"

namespace nmeasure {

MomentField ensemble_moments(const EmpiricalEnsemble& e) {
    e.validate();
    const Eigen::Index n = e.values.rows();
    if (n < 2) throw InvalidArgument("ensemble_moments: need at least 2 samples, got " + std::to_string(n));
    MomentField m;
    m.grid = e.grid;
    m.mean.resize(e.values.cols());
    m.std.resize(e.values.cols());
    for (Eigen::Index j = 0; j < e.values.cols(); ++j) {
        CompensatedSum s;
        for (Eigen::Index i = 0; i < n; ++i) s.add(e.values(i, j));
        const double mean = s.value() / static_cast<double>(n);
        CompensatedSum ss;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d = e.values(i, j) - mean;
            ss.add(d * d);
        }
        m.mean[j] = mean;
        m.std[j] = std::sqrt(ss.value() / static_cast<double>(n - 1));
    }
    return m;
}

void write_moments_csv(const std::filesystem::path& path, const MomentField& m) {
    CsvTable table;
    table.header = {"x", "t", "mean", "std"};
    for (std::size_t j = 0; j < m.grid.size(); ++j) {
        const auto k = static_cast<Eigen::Index>(j);
        table.rows.push_back({m.grid[j].x, m.grid[j].t, m.mean[k], m.std[k]});
    }
    write_csv(path, table);
}

MomentField read_moments_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    const std::size_t cx = table.column("x"), ct = table.column("t");
    const std::size_t cm = table.column("mean"), cs = table.column("std");
    MomentField m;
    const auto n = static_cast<Eigen::Index>(table.rows.size());
    m.mean.resize(n);
    m.std.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto& r = table.rows[static_cast<std::size_t>(j)];
        m.grid.push_back({r[cx], r[ct]});
        m.mean[j] = r[cm];
        m.std[j] = r[cs];
    }
    return m;
}

std::size_t Histogram::total() const {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

Histogram histogram(std::span<const double> samples, std::size_t n_bins, double lo, double hi) {
    if (n_bins < 1) throw InvalidArgument("histogram: n_bins must be >= 1");
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
        throw InvalidArgument("histogram: range must be finite with lo <= hi");
    }
    Histogram h;
    if (lo == hi) {
        h.edges = {lo, hi};
        h.counts = {samples.size()};
        return h;
    }
    h.edges.resize(n_bins + 1);
    const double width = (hi - lo) / static_cast<double>(n_bins);
    for (std::size_t k = 0; k <= n_bins; ++k) h.edges[k] = lo + width * static_cast<double>(k);
    h.edges.back() = hi;
    h.counts.assign(n_bins, 0);
    for (double v : samples) {
        if (std::isnan(v)) throw InvalidArgument("histogram: NaN sample");
        double pos = (v - lo) / width;
        pos = std::clamp(pos, 0.0, static_cast<double>(n_bins - 1));
        auto k = static_cast<std::size_t>(pos);
        // Right-closed last bin; interior edges belong to the upper bin.
        if (k + 1 < n_bins && v >= h.edges[k + 1]) ++k;
        h.counts[k] += 1;
    }
    return h;
}

Histogram histogram(std::span<const double> samples, std::size_t n_bins) {
    if (samples.empty()) return histogram(samples, n_bins, 0.0, 0.0);
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    return histogram(samples, n_bins, *mn, *mx);
}

std::pair<double, double> pooled_range(std::span<const double> a, std::span<const double> b) {
    if (a.empty() && b.empty()) throw InvalidArgument("pooled_range: both samples are empty");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (auto s : {a, b}) {
        for (double v : s) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

Eigen::VectorXd error_heatmap(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw InvalidArgument("error_heatmap: fields differ in size");
    return (a - b).cwiseAbs();
}

void write_heatmap_csv(const std::filesystem::path& path, const std::vector<SpaceTime>& grid,
                       const Eigen::VectorXd& error) {
    if (static_cast<Eigen::Index>(grid.size()) != error.size()) {
        throw InvalidArgument("write_heatmap_csv: grid and error sizes differ");
    }
    CsvTable table;
    table.header = {"x", "t", "abs_error"};
    for (std::size_t j = 0; j < grid.size(); ++j) {
        table.rows.push_back({grid[j].x, grid[j].t, error[static_cast<Eigen::Index>(j)]});
    }
    write_csv(path, table);
}

double relative_l2_error(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw InvalidArgument("relative_l2_error: fields differ in size");
    const double denom = b.norm();
    if (denom == 0.0) throw InvalidArgument("relative_l2_error: reference field is zero");
    return (a - b).norm() / denom;
}

double percentile(std::span<const double> values, double q) {
    if (values.empty()) throw InvalidArgument("percentile: empty input");
    if (!(q >= 0.0 && q <= 100.0)) throw InvalidArgument("percentile: q must lie in [0, 100]");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const double pos = q / 100.0 * static_cast<double>(v.size() - 1);
    const auto k = static_cast<std::size_t>(pos);
    if (k + 1 >= v.size()) return v.back();
    const double frac = pos - static_cast<double>(k);
    return v[k] + frac * (v[k + 1] - v[k]);
}

}  // namespace nmeasure
