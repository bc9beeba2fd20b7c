#include "nmeasure/report/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/csv.hpp"
#include "nmeasure/metrics/ensemble.hpp"
#include "nmeasure/metrics/statistics.hpp"
#include "nmeasure/report/figure.hpp"
#include "nmeasure/train/trainer.hpp"

namespace nmeasure {

namespace {

namespace fs = std::filesystem;

const std::vector<std::pair<FigureKind, std::string>>& kind_names() {
    static const std::vector<std::pair<FigureKind, std::string>> names{
        {FigureKind::loss_curves, "loss_curves"},
        {FigureKind::histograms, "histograms"},
        {FigureKind::wasserstein_series, "wasserstein_series"},
        {FigureKind::moment_fields, "moment_fields"},
        {FigureKind::error_heatmap, "error_heatmap"},
    };
    return names;
}

void require_file(const fs::path& p) {
    if (!fs::is_regular_file(p)) throw IoError("missing artifact: " + p.string());
}

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

std::vector<double> distinct_sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return same_time(a, b); }), v.end());
    return v;
}

struct EvalContext {
    fs::path dir;
    std::string problem;
    fs::path reference;
};

fs::path resolve_eval_dir(const ReportSpec& spec) {
    if (!spec.eval_dir.empty()) {
        if (!fs::is_directory(spec.eval_dir)) throw IoError("missing artifact: " + spec.eval_dir.string());
        return spec.eval_dir;
    }
    const fs::path root = spec.run_dir / "eval";
    if (!fs::is_directory(root)) throw IoError("missing artifact: " + root.string() + " (run evaluate first)");
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) dirs.push_back(entry.path());
    }
    if (dirs.empty()) throw IoError("missing artifact: no evaluation under " + root.string());
    if (dirs.size() > 1) {
        std::sort(dirs.begin(), dirs.end());
        std::string names;
        for (const auto& d : dirs) names += " " + d.filename().string();
        throw InvalidArgument("several evaluations under " + root.string() + ", choose one:" + names);
    }
    return dirs.front();
}

EvalContext load_eval(const ReportSpec& spec) {
    EvalContext ctx;
    ctx.dir = resolve_eval_dir(spec);
    const fs::path summary = ctx.dir / "summary.json";
    require_file(summary);
    std::ifstream in(summary);
    nlohmann::json j;
    try {
        in >> j;
        ctx.problem = j.value("problem", "");
        ctx.reference = j.at("reference").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("cannot parse " + summary.string() + ": " + e.what());
    }
    return ctx;
}

std::string u_label(const std::string& problem, bool has_space) {
    (void)problem;
    return has_space ? "u(x, t)" : "u(t)";
}

std::vector<double> default_slices(const std::vector<double>& times) {
    if (times.empty()) return {};
    std::vector<double> s{times.front(), times[times.size() / 2], times.back()};
    return distinct_sorted(s);
}

std::vector<double> check_slices(const std::vector<double>& wanted, const std::vector<double>& times) {
    if (wanted.empty()) return default_slices(times);
    std::vector<double> out;
    for (double t : wanted) {
        const auto it = std::find_if(times.begin(), times.end(), [&](double g) { return same_time(g, t); });
        if (it == times.end()) {
            std::ostringstream os;
            os << "time slice " << t << " is not a grid time of the evaluation";
            throw InvalidArgument(os.str());
        }
        out.push_back(*it);
    }
    return out;
}

void emit(const Figure& fig, const CsvTable& sidecar, const ReportSpec& spec, const fs::path& out_dir,
          FigureKind kind, std::vector<fs::path>& files) {
    write_csv(sidecar_path(out_dir, kind), sidecar);
    const std::string stem = to_string(kind);
    if (spec.png) {
        write_png(fig, out_dir / (stem + ".png"));
        files.push_back(out_dir / (stem + ".png"));
    }
    if (spec.svg) {
        write_svg(fig, out_dir / (stem + ".svg"));
        files.push_back(out_dir / (stem + ".svg"));
    }
}

// ---------------------------------------------------------------- figures

void loss_curves(const ReportSpec& spec, const fs::path& out, std::vector<fs::path>& files) {
    const fs::path path = spec.run_dir / "training_record.csv";
    require_file(path);
    const auto record = TrainingRecord::read_csv(path);
    CsvTable table{{"iteration", "train_loss", "test_loss"}, {}};
    Series train{"train", {}, {}, series_color(0), LineStyle::solid};
    Series test{"test", {}, {}, series_color(1), LineStyle::solid};
    for (const auto& r : record.rows) {
        const double it = static_cast<double>(r.iteration);
        table.rows.push_back({it, r.train_loss, r.test_loss});
        train.x.push_back(it);
        train.y.push_back(r.train_loss);
        test.x.push_back(it);
        test.y.push_back(r.test_loss);
    }
    Panel panel;
    panel.title = "Training and test loss";
    panel.xlabel = "outer iteration";
    panel.ylabel = "loss";
    panel.log_y = true;
    panel.series = {train, test};
    Figure fig;
    fig.panels = {panel};
    emit(fig, table, spec, out, FigureKind::loss_curves, files);
}

void histograms(const ReportSpec& spec, const EvalContext& ctx, const fs::path& out,
                std::vector<fs::path>& files) {
    const fs::path model_path = ctx.dir / "model_ensemble.csv";
    require_file(model_path);
    require_file(ctx.reference);
    const auto model = read_ensemble_csv(model_path);
    const auto ref = read_ensemble_csv(ctx.reference);
    const auto slices = check_slices(spec.t_slices, model.times());
    const bool has_space = model.grid.size() > model.times().size();

    CsvTable table{{"t", "bin_lo", "bin_hi", "model_count", "reference_count", "model_frequency",
                    "reference_frequency"},
                   {}};
    Figure fig;
    fig.columns = static_cast<int>(std::min<std::size_t>(3, std::max<std::size_t>(1, slices.size())));
    for (double t : slices) {
        const auto a = model.pooled_at_time(t);
        const auto b = ref.pooled_at_time(t);
        if (b.empty()) throw InvalidArgument("reference ensemble has no values at a requested time slice");
        const auto [lo, hi] = pooled_range(a, b);
        const auto ha = histogram(a, spec.histogram_bins, lo, hi);
        const auto hb = histogram(b, spec.histogram_bins, lo, hi);
        Series sa{"model", ha.edges, {}, series_color(0), LineStyle::steps};
        Series sb{"reference", hb.edges, {}, series_color(1), LineStyle::steps};
        for (std::size_t k = 0; k < ha.counts.size(); ++k) {
            const double fa = static_cast<double>(ha.counts[k]) / static_cast<double>(a.size());
            const double fb = static_cast<double>(hb.counts[k]) / static_cast<double>(b.size());
            sa.y.push_back(fa);
            sb.y.push_back(fb);
            table.rows.push_back({t, ha.edges[k], ha.edges[k + 1], static_cast<double>(ha.counts[k]),
                                  static_cast<double>(hb.counts[k]), fa, fb});
        }
        Panel panel;
        std::ostringstream title;
        title << "Histogram at t = " << t;
        panel.title = title.str();
        panel.xlabel = u_label(ctx.problem, has_space);
        panel.ylabel = "frequency";
        panel.log_y = true;
        panel.series = {sb, sa};
        fig.panels.push_back(panel);
    }
    emit(fig, table, spec, out, FigureKind::histograms, files);
}

void wasserstein_series(const ReportSpec& spec, const EvalContext& ctx, const fs::path& out,
                        std::vector<fs::path>& files) {
    const fs::path path = ctx.dir / "wasserstein.csv";
    require_file(path);
    const auto src = read_csv(path);
    const auto t = src.column_values("t");
    const auto w = src.column_values("wasserstein_p1");
    CsvTable table{{"t", "wasserstein_p1"}, {}};
    for (std::size_t i = 0; i < t.size(); ++i) table.rows.push_back({t[i], w[i]});
    Panel panel;
    panel.title = "Wasserstein distance to the reference";
    panel.xlabel = "t";
    panel.ylabel = "W1";
    panel.series = {Series{"", t, w, series_color(0), LineStyle::solid}};
    Figure fig;
    fig.panels = {panel};
    emit(fig, table, spec, out, FigureKind::wasserstein_series, files);
}

struct MomentPair {
    MomentField model;
    MomentField ref;
};

MomentPair load_moments(const EvalContext& ctx) {
    const fs::path pm = ctx.dir / "moments_model.csv";
    const fs::path pr = ctx.dir / "moments_reference.csv";
    require_file(pm);
    require_file(pr);
    MomentPair m{read_moments_csv(pm), read_moments_csv(pr)};
    if (m.model.grid.size() != m.ref.grid.size()) throw InvalidArgument("moment fields are on different grids");
    return m;
}

void moment_fields(const ReportSpec& spec, const EvalContext& ctx, const fs::path& out,
                   std::vector<fs::path>& files) {
    const auto m = load_moments(ctx);
    const auto& grid = m.model.grid;
    std::vector<double> xs_all, ts_all;
    for (const auto& p : grid) {
        xs_all.push_back(p.x);
        ts_all.push_back(p.t);
    }
    const auto times = distinct_sorted(ts_all);
    const bool has_space = distinct_sorted(xs_all).size() > 1;

    CsvTable table{{"x", "t", "model_mean", "model_std", "reference_mean", "reference_std"}, {}};
    Figure fig;
    auto make_panel = [&](const std::vector<std::size_t>& idx, bool along_x, const std::string& title) {
        std::vector<std::size_t> order = idx;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return along_x ? grid[a].x < grid[b].x : grid[a].t < grid[b].t;
        });
        Series mm{"model mean", {}, {}, series_color(0), LineStyle::solid};
        Series rm{"reference mean", {}, {}, series_color(1), LineStyle::dashed};
        Band mb{{}, {}, {}, series_color(0)};
        Band rb{{}, {}, {}, series_color(1)};
        for (std::size_t j : order) {
            const double c = along_x ? grid[j].x : grid[j].t;
            table.rows.push_back({grid[j].x, grid[j].t, m.model.mean[j], m.model.std[j], m.ref.mean[j], m.ref.std[j]});
            mm.x.push_back(c);
            mm.y.push_back(m.model.mean[j]);
            rm.x.push_back(c);
            rm.y.push_back(m.ref.mean[j]);
            mb.x.push_back(c);
            mb.lo.push_back(m.model.mean[j] - m.model.std[j]);
            mb.hi.push_back(m.model.mean[j] + m.model.std[j]);
            rb.x.push_back(c);
            rb.lo.push_back(m.ref.mean[j] - m.ref.std[j]);
            rb.hi.push_back(m.ref.mean[j] + m.ref.std[j]);
        }
        Panel panel;
        panel.title = title;
        panel.xlabel = along_x ? "x" : "t";
        panel.ylabel = "mean +- std of " + u_label(ctx.problem, has_space);
        panel.bands = {rb, mb};
        panel.series = {rm, mm};
        fig.panels.push_back(panel);
    };
    if (!has_space) {
        std::vector<std::size_t> idx(grid.size());
        for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
        make_panel(idx, false, "Mean and standard deviation");
    } else {
        const auto slices = check_slices(spec.t_slices, times);
        fig.columns = static_cast<int>(std::min<std::size_t>(3, slices.size()));
        for (double t : slices) {
            std::vector<std::size_t> idx;
            for (std::size_t j = 0; j < grid.size(); ++j) {
                if (same_time(grid[j].t, t)) idx.push_back(j);
            }
            std::ostringstream title;
            title << "Mean and std at t = " << t;
            make_panel(idx, true, title.str());
        }
    }
    emit(fig, table, spec, out, FigureKind::moment_fields, files);
}

void error_heatmap_figure(const ReportSpec& spec, const EvalContext& ctx, const fs::path& out,
                          std::vector<fs::path>& files) {
    const fs::path pm = ctx.dir / "abs_error_mean.csv";
    const fs::path ps = ctx.dir / "abs_error_std.csv";
    require_file(pm);
    require_file(ps);
    const auto em = read_csv(pm);
    const auto es = read_csv(ps);
    if (em.rows.size() != es.rows.size()) throw InvalidArgument("error fields are on different grids");
    const auto x = em.column_values("x");
    const auto t = em.column_values("t");
    const auto vm = em.column_values("abs_error");
    const auto vs = es.column_values("abs_error");

    CsvTable table{{"x", "t", "abs_error_mean", "abs_error_std"}, {}};
    for (std::size_t i = 0; i < x.size(); ++i) table.rows.push_back({x[i], t[i], vm[i], vs[i]});

    const auto xs = distinct_sorted(x);
    const auto ts = distinct_sorted(t);
    Figure fig;
    if (xs.size() <= 1) {
        std::vector<std::size_t> order(t.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
        Series sm{"|mean error|", {}, {}, series_color(0), LineStyle::solid};
        Series ss{"|std error|", {}, {}, series_color(1), LineStyle::dashed};
        for (std::size_t i : order) {
            sm.x.push_back(t[i]);
            sm.y.push_back(vm[i]);
            ss.x.push_back(t[i]);
            ss.y.push_back(vs[i]);
        }
        Panel panel;
        panel.title = "Absolute error of the moments";
        panel.xlabel = "t";
        panel.ylabel = "absolute error";
        panel.series = {sm, ss};
        fig.panels = {panel};
    } else {
        auto index_of = [](const std::vector<double>& axis, double v) {
            const auto it = std::lower_bound(axis.begin(), axis.end(), v - 1e-9 * std::max(1.0, std::abs(v)));
            return static_cast<std::size_t>(it - axis.begin());
        };
        auto field = [&](const std::vector<double>& v) {
            std::vector<double> values(xs.size() * ts.size(), std::nan(""));
            for (std::size_t i = 0; i < v.size(); ++i) values[index_of(ts, t[i]) * xs.size() + index_of(xs, x[i])] = v[i];
            return values;
        };
        fig.columns = 2;
        for (int k = 0; k < 2; ++k) {
            Panel panel;
            panel.title = k == 0 ? "Absolute error of the mean" : "Absolute error of the std";
            panel.xlabel = "x";
            panel.ylabel = "t";
            panel.heatmap = Heatmap{xs, ts, field(k == 0 ? vm : vs), "abs error"};
            fig.panels.push_back(panel);
        }
    }
    emit(fig, table, spec, out, FigureKind::error_heatmap, files);
}

}  // namespace

std::string to_string(FigureKind kind) {
    for (const auto& [k, name] : kind_names()) {
        if (k == kind) return name;
    }
    throw InvalidArgument("unknown figure kind");
}

FigureKind figure_kind_from_string(const std::string& s) {
    std::string known;
    for (const auto& [k, name] : kind_names()) {
        if (name == s) return k;
        known += (known.empty() ? "" : ", ") + name;
    }
    throw InvalidArgument("unknown figure '" + s + "' (known: " + known + ")");
}

std::vector<FigureKind> parse_figure_list(const std::string& list) {
    std::vector<FigureKind> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, e - b + 1);
        if (item == "all") {
            for (const auto& [k, name] : kind_names()) out.push_back(k);
        } else {
            out.push_back(figure_kind_from_string(item));
        }
    }
    std::vector<FigureKind> unique;
    for (auto k : out) {
        if (std::find(unique.begin(), unique.end(), k) == unique.end()) unique.push_back(k);
    }
    return unique;
}

fs::path sidecar_path(const fs::path& output_dir, FigureKind kind) { return output_dir / (to_string(kind) + ".csv"); }

std::vector<fs::path> render(const ReportSpec& spec) {
    std::vector<fs::path> files;
    if (spec.figures.empty()) return files;
    if (spec.histogram_bins == 0) throw InvalidArgument("histogram_bins must be >= 1");
    const fs::path out = spec.output_dir.empty() ? spec.run_dir / "figures" : spec.output_dir;

    const bool needs_eval = std::any_of(spec.figures.begin(), spec.figures.end(),
                                        [](FigureKind k) { return k != FigureKind::loss_curves; });
    EvalContext ctx;
    if (needs_eval) ctx = load_eval(spec);

    fs::create_directories(out);
    for (FigureKind kind : spec.figures) {
        switch (kind) {
            case FigureKind::loss_curves: loss_curves(spec, out, files); break;
            case FigureKind::histograms: histograms(spec, ctx, out, files); break;
            case FigureKind::wasserstein_series: wasserstein_series(spec, ctx, out, files); break;
            case FigureKind::moment_fields: moment_fields(spec, ctx, out, files); break;
            case FigureKind::error_heatmap: error_heatmap_figure(spec, ctx, out, files); break;
        }
    }
    return files;
}

}  // namespace nmeasure
