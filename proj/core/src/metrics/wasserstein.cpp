#include "nmeasure/metrics/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "nmeasure/core/error.hpp"
#include "nmeasure/core/summation.hpp"
#include "nmeasure/metrics/csv.hpp"

namespace nmeasure {

namespace {

void check_order(int p) {
    if (p != 1 && p != 2) throw InvalidArgument("Wasserstein order must be 1 or 2, got " + std::to_string(p));
}

void check_finite(std::span<const double> v, const char* which) {
    for (double x : v) {
        if (!std::isfinite(x)) throw InvalidArgument(std::string("Wasserstein: non-finite value in sample ") + which);
    }
}

}  // namespace

double empirical_wasserstein_1d(std::span<const double> a, std::span<const double> b, int p) {
    check_order(p);
    if (a.empty() || b.empty()) throw InvalidArgument("Wasserstein: empty sample");
    if (a.size() != b.size()) {
        throw InvalidArgument("Wasserstein: sample sizes differ (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + "); truncate first");
    }
    check_finite(a, "a");
    check_finite(b, "b");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    CompensatedSum sum;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const double d = std::abs(sa[i] - sb[i]);
        sum.add(p == 1 ? d : d * d);
    }
    const double mean = sum.value() / static_cast<double>(sa.size());
    return p == 1 ? mean : std::sqrt(mean);
}

double wasserstein_1d_truncated(std::span<const double> a, std::span<const double> b, int p,
                                std::uint64_t seed) {
    if (a.size() == b.size()) return empirical_wasserstein_1d(a, b, p);
    if (a.empty() || b.empty()) throw InvalidArgument("Wasserstein: empty sample");
    const std::size_t n = std::min(a.size(), b.size());
    std::mt19937_64 rng(seed);
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::shuffle(sa.begin(), sa.end(), rng);
    std::shuffle(sb.begin(), sb.end(), rng);
    sa.resize(n);
    sb.resize(n);
    return empirical_wasserstein_1d(sa, sb, p);
}

void require_same_grid(const EmpiricalEnsemble& a, const EmpiricalEnsemble& b) {
    if (a.grid.size() != b.grid.size()) {
        throw InvalidArgument("grid mismatch: " + std::to_string(a.grid.size()) + " vs " +
                              std::to_string(b.grid.size()) + " points");
    }
    for (std::size_t j = 0; j < a.grid.size(); ++j) {
        const auto& p = a.grid[j];
        const auto& q = b.grid[j];
        const double tol = 1e-12 * (1.0 + std::max({std::abs(p.x), std::abs(p.t)}));
        if (std::abs(p.x - q.x) > tol || std::abs(p.t - q.t) > tol) {
            std::ostringstream os;
            os << "grid mismatch at point " << j << ": (" << p.x << ", " << p.t << ") vs (" << q.x << ", " << q.t
               << ")";
            throw InvalidArgument(os.str());
        }
    }
}

std::vector<WassersteinPoint> wasserstein_over_time(const EmpiricalEnsemble& model, const EmpiricalEnsemble& ref,
                                                    std::span<const double> t_slices, int p,
                                                    std::uint64_t seed) {
    check_order(p);
    require_same_grid(model, ref);
    std::vector<WassersteinPoint> out;
    out.reserve(t_slices.size());
    for (double t : t_slices) {
        const auto a = model.pooled_at_time(t);
        if (a.empty()) {
            std::ostringstream os;
            os << "time slice t=" << t << " is not on the ensemble grid";
            throw InvalidArgument(os.str());
        }
        const auto b = ref.pooled_at_time(t);
        out.push_back({t, wasserstein_1d_truncated(a, b, p, seed)});
    }
    return out;
}

void write_wasserstein_csv(const std::filesystem::path& path, const std::vector<WassersteinPoint>& series, int p) {
    check_order(p);
    CsvTable table;
    table.header = {"t", p == 1 ? "wasserstein_p1" : "wasserstein_p2"};
    for (const auto& w : series) table.rows.push_back({w.t, w.distance});
    write_csv(path, table);
}

}  // namespace nmeasure
