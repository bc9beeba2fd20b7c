#include "nmeasure/metrics/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/csv.hpp"

namespace nmeasure {

namespace {

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

void EmpiricalEnsemble::validate() const {
    if (static_cast<std::size_t>(values.cols()) != grid.size()) {
        throw InvalidArgument("ensemble: grid has " + std::to_string(grid.size()) + " points but values have " +
                              std::to_string(values.cols()) + " columns");
    }
    if (!values.allFinite()) throw NonFiniteValue("ensemble contains non-finite values");
}

std::vector<double> EmpiricalEnsemble::times() const {
    std::vector<double> ts;
    for (const auto& p : grid) {
        if (std::none_of(ts.begin(), ts.end(), [&](double t) { return same_time(t, p.t); })) ts.push_back(p.t);
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

std::vector<std::size_t> EmpiricalEnsemble::columns_at_time(double t) const {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (same_time(grid[j].t, t)) cols.push_back(j);
    }
    return cols;
}

std::vector<double> EmpiricalEnsemble::pooled_at_time(double t) const {
    const auto cols = columns_at_time(t);
    std::vector<double> out;
    out.reserve(cols.size() * samples());
    for (std::size_t c : cols) {
        for (Eigen::Index i = 0; i < values.rows(); ++i) out.push_back(values(i, static_cast<Eigen::Index>(c)));
    }
    return out;
}

void write_ensemble_csv(const std::filesystem::path& path, const EmpiricalEnsemble& e) {
    e.validate();
    std::string out = "xi_index,x,t,u\n";
    out.reserve(out.size() + e.samples() * e.points() * 48);
    for (Eigen::Index i = 0; i < e.values.rows(); ++i) {
        const std::string idx = std::to_string(i);
        for (std::size_t j = 0; j < e.grid.size(); ++j) {
            out += idx;
            out += ',';
            out += format_double(e.grid[j].x);
            out += ',';
            out += format_double(e.grid[j].t);
            out += ',';
            out += format_double(e.values(i, static_cast<Eigen::Index>(j)));
            out += '\n';
        }
    }
    atomic_write(path, out);
}

EmpiricalEnsemble read_ensemble_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    const std::vector<std::string> expected = {"xi_index", "x", "t", "u"};
    if (table.header != expected) throw IoError(path.string() + ": expected header xi_index,x,t,u");
    if (table.rows.empty()) throw IoError(path.string() + ": ensemble has no records");
    EmpiricalEnsemble e;
    for (const auto& r : table.rows) {
        if (r[0] != 0.0) break;
        e.grid.push_back({r[1], r[2]});
    }
    const std::size_t np = e.grid.size();
    if (table.rows.size() % np != 0) throw IoError(path.string() + ": record count is not samples x grid");
    const std::size_t ns = table.rows.size() / np;
    e.values.resize(static_cast<Eigen::Index>(ns), static_cast<Eigen::Index>(np));
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            const auto& r = table.rows[i * np + j];
            if (r[0] != static_cast<double>(i) || r[1] != e.grid[j].x || r[2] != e.grid[j].t) {
                throw IoError(path.string() + ": sample " + std::to_string(i) + " does not follow the grid of sample 0");
            }
            e.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r[3];
        }
    }
    e.meta = path.filename().string();
    return e;
}

std::vector<SpaceTime> uniform_grid(const DomainSpec& domain, std::size_t nx, std::size_t nt) {
    if (nt < 1 || (domain.has_space() && nx < 1)) throw InvalidArgument("uniform_grid: counts must be >= 1");
    auto axis = [](const Interval& iv, std::size_t n) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = n == 1 ? iv.lo : iv.lo + iv.length() * static_cast<double>(i) / static_cast<double>(n - 1);
        }
        if (n > 1) v.back() = iv.hi;
        return v;
    };
    const auto ts = axis(domain.time(), nt);
    std::vector<SpaceTime> grid;
    if (!domain.has_space()) {
        for (double t : ts) grid.push_back({0.0, t});
        return grid;
    }
    const auto xs = axis(domain.space(), nx);
    for (double x : xs) {
        for (double t : ts) grid.push_back({x, t});
    }
    return grid;
}

}  // namespace nmeasure
