#include "nmeasure/report/figure.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "font_data.hpp"
#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/csv.hpp"

namespace nmeasure {

namespace {

struct Point {
    double x, y;
};

struct Rect {
    double x0, y0, x1, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

enum class Anchor { start, middle, end };

constexpr Color kBlack{0, 0, 0};
constexpr Color kGrid{225, 225, 225};
constexpr Color kWhite{255, 255, 255};

// Drawing primitives shared by the raster and vector back ends. Coordinates
// are pixels with y pointing down.
class Surface {
public:
    virtual ~Surface() = default;
    virtual void polyline(const std::vector<Point>& pts, Color c, double width, bool dashed) = 0;
    virtual void fill_rect(const Rect& r, Color c, double alpha) = 0;
    virtual void fill_polygon(const std::vector<Point>& pts, Color c, double alpha) = 0;
    /// Baseline-anchored text; vertical text reads bottom to top.
    virtual void text(double x, double y, const std::string& s, Color c, Anchor anchor, bool vertical) = 0;
    virtual void set_clip(std::optional<Rect> clip) = 0;

    void line(double x0, double y0, double x1, double y1, Color c, double width = 1.0, bool dashed = false) {
        polyline({{x0, y0}, {x1, y1}}, c, width, dashed);
    }
};

double text_width(const std::string& s) { return static_cast<double>(s.size()) * detail::kGlyphWidth; }

// ---------------------------------------------------------------- raster

class RasterSurface final : public Surface {
public:
    RasterSurface(int width, int height) : w_(width), h_(height), rgb_(static_cast<std::size_t>(width * height) * 3, 255) {}

    void polyline(const std::vector<Point>& pts, Color c, double width, bool dashed) override {
        double offset = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            segment(pts[i], pts[i + 1], c, width, dashed, offset);
            offset += std::hypot(pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y);
        }
    }

    void fill_rect(const Rect& r, Color c, double alpha) override {
        const int x0 = static_cast<int>(std::floor(std::min(r.x0, r.x1)));
        const int x1 = static_cast<int>(std::ceil(std::max(r.x0, r.x1)));
        const int y0 = static_cast<int>(std::floor(std::min(r.y0, r.y1)));
        const int y1 = static_cast<int>(std::ceil(std::max(r.y0, r.y1)));
        for (int y = y0; y < y1; ++y) {
            for (int x = x0; x < x1; ++x) blend(x, y, c, alpha);
        }
    }

    void fill_polygon(const std::vector<Point>& pts, Color c, double alpha) override {
        if (pts.size() < 3) return;
        double ymin = pts[0].y, ymax = pts[0].y;
        for (const auto& p : pts) {
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        std::vector<double> xs;
        for (int y = static_cast<int>(std::floor(ymin)); y <= static_cast<int>(std::ceil(ymax)); ++y) {
            const double sy = y + 0.5;
            xs.clear();
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Point& a = pts[i];
                const Point& b = pts[(i + 1) % pts.size()];
                if ((a.y <= sy && b.y > sy) || (b.y <= sy && a.y > sy)) {
                    xs.push_back(a.x + (sy - a.y) / (b.y - a.y) * (b.x - a.x));
                }
            }
            std::sort(xs.begin(), xs.end());
            for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
                for (int x = static_cast<int>(std::ceil(xs[k] - 0.5)); x < static_cast<int>(std::ceil(xs[k + 1] - 0.5));
                     ++x) {
                    blend(x, y, c, alpha);
                }
            }
        }
    }

    void text(double x, double y, const std::string& s, Color c, Anchor anchor, bool vertical) override {
        const double tw = text_width(s);
        const double shift = anchor == Anchor::start ? 0.0 : anchor == Anchor::middle ? tw / 2 : tw;
        const int gw = detail::kGlyphWidth;
        const int gh = detail::kGlyphHeight;
        for (std::size_t k = 0; k < s.size(); ++k) {
            char ch = s[k];
            if (ch < detail::kGlyphFirst || ch > detail::kGlyphLast) ch = '?';
            const auto* glyph = detail::kGlyphs[ch - detail::kGlyphFirst];
            const double advance = static_cast<double>(k) * gw - shift;
            for (int gy = 0; gy < gh; ++gy) {
                for (int gx = 0; gx < gw; ++gx) {
                    const std::uint8_t cov = glyph[gy * gw + gx];
                    if (cov == 0) continue;
                    const double dy = gy - detail::kGlyphAscent;
                    int px, py;
                    if (vertical) {
                        px = static_cast<int>(std::lround(x + dy));
                        py = static_cast<int>(std::lround(y - advance - gx));
                    } else {
                        px = static_cast<int>(std::lround(x + advance + gx));
                        py = static_cast<int>(std::lround(y + dy));
                    }
                    blend(px, py, c, cov / 255.0);
                }
            }
        }
    }

    void set_clip(std::optional<Rect> clip) override { clip_ = clip; }

    void write(const std::filesystem::path& path) const {
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        const auto tmp = std::filesystem::path(path).concat(".tmp");
        FILE* fp = std::fopen(tmp.c_str(), "wb");
        if (!fp) throw IoError("cannot open for writing: " + tmp.string());
        png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        png_infop info = png ? png_create_info_struct(png) : nullptr;
        if (!png || !info) {
            png_destroy_write_struct(&png, &info);
            std::fclose(fp);
            throw IoError("libpng initialisation failed");
        }
        if (setjmp(png_jmpbuf(png))) {
            png_destroy_write_struct(&png, &info);
            std::fclose(fp);
            throw IoError("PNG encoding failed: " + path.string());
        }
        png_init_io(png, fp);
        png_set_IHDR(png, info, static_cast<png_uint_32>(w_), static_cast<png_uint_32>(h_), 8, PNG_COLOR_TYPE_RGB,
                     PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);
        for (int y = 0; y < h_; ++y) {
            png_write_row(png, const_cast<png_bytep>(rgb_.data() + static_cast<std::size_t>(y * w_) * 3));
        }
        png_write_end(png, nullptr);
        png_destroy_write_struct(&png, &info);
        if (std::fclose(fp) != 0) throw IoError("write failed: " + tmp.string());
        std::filesystem::rename(tmp, path);
    }

private:
    void blend(int x, int y, Color c, double alpha) {
        if (x < 0 || y < 0 || x >= w_ || y >= h_ || alpha <= 0.0) return;
        if (clip_ && (x < clip_->x0 || x >= clip_->x1 || y < clip_->y0 || y >= clip_->y1)) return;
        alpha = std::min(alpha, 1.0);
        auto* px = &rgb_[static_cast<std::size_t>(y * w_ + x) * 3];
        const std::array<std::uint8_t, 3> src{c.r, c.g, c.b};
        for (int k = 0; k < 3; ++k) px[k] = static_cast<std::uint8_t>(std::lround(px[k] * (1.0 - alpha) + src[k] * alpha));
    }

    // Antialiased thick segment via distance-to-segment coverage.
    void segment(Point a, Point b, Color c, double width, bool dashed, double offset) {
        if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(b.x) || !std::isfinite(b.y)) return;
        const double r = width / 2.0;
        const double dx = b.x - a.x, dy = b.y - a.y;
        const double len2 = dx * dx + dy * dy;
        const double len = std::sqrt(len2);
        int x0 = static_cast<int>(std::floor(std::min(a.x, b.x) - r - 1));
        int x1 = static_cast<int>(std::ceil(std::max(a.x, b.x) + r + 1));
        int y0 = static_cast<int>(std::floor(std::min(a.y, b.y) - r - 1));
        int y1 = static_cast<int>(std::ceil(std::max(a.y, b.y) + r + 1));
        x0 = std::max(x0, 0);
        y0 = std::max(y0, 0);
        x1 = std::min(x1, w_ - 1);
        y1 = std::min(y1, h_ - 1);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const double px = x + 0.5 - a.x, py = y + 0.5 - a.y;
                double t = len2 > 0 ? (px * dx + py * dy) / len2 : 0.0;
                t = std::clamp(t, 0.0, 1.0);
                const double ex = px - t * dx, ey = py - t * dy;
                const double d = std::sqrt(ex * ex + ey * ey);
                const double cov = std::clamp(r + 0.5 - d, 0.0, 1.0);
                if (cov <= 0.0) continue;
                if (dashed && std::fmod(offset + t * len, 10.0) > 6.0) continue;
                blend(x, y, c, cov);
            }
        }
    }

    int w_, h_;
    std::vector<std::uint8_t> rgb_;
    std::optional<Rect> clip_;
};

// ---------------------------------------------------------------- SVG

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string rgb(Color c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", c.r, c.g, c.b);
    return buf;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

class SvgSurface final : public Surface {
public:
    SvgSurface(int width, int height) : w_(width), h_(height) {}

    void polyline(const std::vector<Point>& pts, Color c, double width, bool dashed) override {
        os_ << "<polyline fill=\"none\" stroke=\"" << rgb(c) << "\" stroke-width=\"" << num(width) << "\"";
        if (dashed) os_ << " stroke-dasharray=\"6,4\"";
        os_ << clip_attr() << " points=\"";
        for (const auto& p : pts) {
            if (std::isfinite(p.x) && std::isfinite(p.y)) os_ << num(p.x) << ',' << num(p.y) << ' ';
        }
        os_ << "\"/>\n";
    }

    void fill_rect(const Rect& r, Color c, double alpha) override {
        os_ << "<rect x=\"" << num(std::min(r.x0, r.x1)) << "\" y=\"" << num(std::min(r.y0, r.y1)) << "\" width=\""
            << num(std::abs(r.width())) << "\" height=\"" << num(std::abs(r.height())) << "\" fill=\"" << rgb(c)
            << "\"";
        if (alpha < 1.0) os_ << " fill-opacity=\"" << num(alpha) << "\"";
        os_ << clip_attr() << "/>\n";
    }

    void fill_polygon(const std::vector<Point>& pts, Color c, double alpha) override {
        os_ << "<polygon fill=\"" << rgb(c) << "\" fill-opacity=\"" << num(alpha) << "\"" << clip_attr()
            << " points=\"";
        for (const auto& p : pts) os_ << num(p.x) << ',' << num(p.y) << ' ';
        os_ << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, Color c, Anchor anchor, bool vertical) override {
        const char* a = anchor == Anchor::start ? "start" : anchor == Anchor::middle ? "middle" : "end";
        os_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" fill=\"" << rgb(c)
            << "\" font-family=\"DejaVu Sans Mono, monospace\" font-size=\"12\" text-anchor=\"" << a << "\"";
        if (vertical) os_ << " transform=\"rotate(-90 " << num(x) << ' ' << num(y) << ")\"";
        os_ << '>' << xml_escape(s) << "</text>\n";
    }

    void set_clip(std::optional<Rect> clip) override {
        if (!clip) {
            clip_id_.clear();
            return;
        }
        clip_id_ = "clip" + std::to_string(++clips_);
        os_ << "<clipPath id=\"" << clip_id_ << "\"><rect x=\"" << num(clip->x0) << "\" y=\"" << num(clip->y0)
            << "\" width=\"" << num(clip->width()) << "\" height=\"" << num(clip->height()) << "\"/></clipPath>\n";
    }

    void write(const std::filesystem::path& path) const {
        std::ostringstream doc;
        doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
            << "\" viewBox=\"0 0 " << w_ << ' ' << h_ << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << os_.str() << "</svg>\n";
        atomic_write(path, doc.str());
    }

private:
    std::string clip_attr() const { return clip_id_.empty() ? "" : " clip-path=\"url(#" + clip_id_ + ")\""; }

    int w_, h_;
    std::ostringstream os_;
    std::string clip_id_;
    int clips_ = 0;
};

// ---------------------------------------------------------------- layout

struct Scale {
    double lo, hi;
    double p0, p1;  // pixel positions of lo and hi
    bool log = false;

    double operator()(double v) const {
        if (log) v = v > 0 ? std::log10(v) : -std::numeric_limits<double>::infinity();
        return p0 + (v - lo) / (hi - lo) * (p1 - p0);
    }
};

std::string tick_label(double v) {
    if (std::abs(v) < 1e-300) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::vector<double> linear_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (span / step <= 7.0) break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + 1e-9 * step; t += step) {
        ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    }
    return ticks;
}

// Decade exponents covering [lo, hi] (already in log10 units).
std::vector<double> log_ticks(double lo, double hi) {
    const int a = static_cast<int>(std::ceil(lo - 1e-9));
    const int b = static_cast<int>(std::floor(hi + 1e-9));
    const int stride = std::max(1, (b - a) / 7 + 1);
    std::vector<double> ticks;
    for (int e = a; e <= b; e += stride) ticks.push_back(e);
    return ticks;
}

std::pair<double, double> padded(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) return {0.0, 1.0};
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(lo))) {
        const double d = std::max(0.5, std::abs(lo) * 0.1);
        return {lo - d, hi + d};
    }
    const double pad = 0.04 * (hi - lo);
    return {lo - pad, hi + pad};
}

Color viridis(double t) {
    static constexpr std::array<std::array<double, 3>, 5> stops{{
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
    t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0) * 4.0;
    const auto k = std::min<std::size_t>(3, static_cast<std::size_t>(t));
    const double f = t - static_cast<double>(k);
    auto mix = [&](int c) {
        return static_cast<std::uint8_t>(std::lround(stops[k][c] + f * (stops[k + 1][c] - stops[k][c])));
    };
    return {mix(0), mix(1), mix(2)};
}

// Cell edges around sorted grid coordinates.
std::vector<double> cell_edges(const std::vector<double>& c) {
    std::vector<double> e(c.size() + 1);
    if (c.size() == 1) {
        e[0] = c[0] - 0.5;
        e[1] = c[0] + 0.5;
        return e;
    }
    for (std::size_t i = 1; i < c.size(); ++i) e[i] = 0.5 * (c[i - 1] + c[i]);
    e[0] = c[0] - (e[1] - c[0]);
    e[c.size()] = c.back() + (c.back() - e[c.size() - 1]);
    return e;
}

std::vector<Point> step_points(const Series& s, const Scale& sx, const Scale& sy) {
    // x holds n+1 bin edges and y n bin heights.
    std::vector<Point> pts;
    const double floor_px = sy.p0;
    for (std::size_t i = 0; i + 1 < s.x.size() && i < s.y.size(); ++i) {
        double py = sy(s.y[i]);
        if (!std::isfinite(py)) py = floor_px;
        pts.push_back({sx(s.x[i]), py});
        pts.push_back({sx(s.x[i + 1]), py});
    }
    return pts;
}

void draw_panel(Surface& surf, const Panel& panel, const Rect& box) {
    const bool has_heat = panel.heatmap.has_value();
    const Rect plot{box.x0 + 72, box.y0 + 30, box.x1 - (has_heat ? 95 : 18), box.y1 - 48};

    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    auto take_y = [&](double v) {
        if (!std::isfinite(v)) return;
        if (panel.log_y) {
            if (v <= 0) return;
            v = std::log10(v);
        }
        ylo = std::min(ylo, v);
        yhi = std::max(yhi, v);
    };
    for (const auto& s : panel.series) {
        for (double v : s.x) {
            if (std::isfinite(v)) xlo = std::min(xlo, v), xhi = std::max(xhi, v);
        }
        for (double v : s.y) take_y(v);
    }
    for (const auto& b : panel.bands) {
        for (double v : b.x) {
            if (std::isfinite(v)) xlo = std::min(xlo, v), xhi = std::max(xhi, v);
        }
        for (double v : b.lo) take_y(v);
        for (double v : b.hi) take_y(v);
    }
    std::vector<double> xe, ye;
    if (has_heat) {
        xe = cell_edges(panel.heatmap->xs);
        ye = cell_edges(panel.heatmap->ys);
        xlo = xe.front();
        xhi = xe.back();
        ylo = ye.front();
        yhi = ye.back();
    }
    auto [x0, x1] = has_heat ? std::pair{xlo, xhi} : padded(xlo, xhi);
    auto [y0, y1] = has_heat ? std::pair{ylo, yhi} : padded(ylo, yhi);
    if (panel.log_y && !has_heat) {
        // Pad by a fraction of a decade rather than linearly.
        if (std::isfinite(ylo) && std::isfinite(yhi)) {
            const double pad = std::max(0.05 * (yhi - ylo), 0.1);
            y0 = ylo - pad;
            y1 = yhi + pad;
        }
    }
    const Scale sx{x0, x1, plot.x0, plot.x1};
    const Scale sy{y0, y1, plot.y1, plot.y0, panel.log_y && !has_heat};
    // Scale for tick positions given in already-transformed units.
    const Scale sy_raw{y0, y1, plot.y1, plot.y0};

    // Grid and ticks.
    const auto xt = linear_ticks(x0, x1);
    const auto yt = sy.log ? log_ticks(y0, y1) : linear_ticks(y0, y1);
    for (double t : xt) {
        const double px = sx(t);
        if (!has_heat) surf.line(px, plot.y0, px, plot.y1, kGrid);
        surf.line(px, plot.y1, px, plot.y1 + 4, kBlack);
        surf.text(px, plot.y1 + 17, tick_label(t), kBlack, Anchor::middle, false);
    }
    for (double t : yt) {
        const double py = sy_raw(t);
        if (!has_heat) surf.line(plot.x0, py, plot.x1, py, kGrid);
        surf.line(plot.x0 - 4, py, plot.x0, py, kBlack);
        const std::string label = sy.log ? "1e" + std::to_string(static_cast<int>(t)) : tick_label(t);
        surf.text(plot.x0 - 7, py + 4, label, kBlack, Anchor::end, false);
    }

    surf.set_clip(plot);
    if (has_heat) {
        const auto& hm = *panel.heatmap;
        double vlo = std::numeric_limits<double>::infinity(), vhi = -vlo;
        for (double v : hm.values) {
            if (std::isfinite(v)) vlo = std::min(vlo, v), vhi = std::max(vhi, v);
        }
        if (!(vhi > vlo)) vhi = vlo + 1.0;
        for (std::size_t iy = 0; iy < hm.ys.size(); ++iy) {
            for (std::size_t ix = 0; ix < hm.xs.size(); ++ix) {
                const double v = hm.values[iy * hm.xs.size() + ix];
                surf.fill_rect({sx(xe[ix]), sy(ye[iy + 1]), sx(xe[ix + 1]), sy(ye[iy])}, viridis((v - vlo) / (vhi - vlo)),
                               1.0);
            }
        }
        surf.set_clip(std::nullopt);
        // Colour bar.
        const Rect bar{plot.x1 + 14, plot.y0, plot.x1 + 28, plot.y1};
        const int steps = 64;
        for (int k = 0; k < steps; ++k) {
            const double f0 = static_cast<double>(k) / steps, f1 = static_cast<double>(k + 1) / steps;
            surf.fill_rect({bar.x0, bar.y1 - f1 * bar.height(), bar.x1, bar.y1 - f0 * bar.height()},
                           viridis((f0 + f1) / 2), 1.0);
        }
        const Scale sv{vlo, vhi, bar.y1, bar.y0};
        for (double t : linear_ticks(vlo, vhi)) {
            surf.line(bar.x1, sv(t), bar.x1 + 3, sv(t), kBlack);
            surf.text(bar.x1 + 5, sv(t) + 4, tick_label(t), kBlack, Anchor::start, false);
        }
        if (!hm.colorbar_label.empty()) {
            surf.text(box.x1 - 4, (bar.y0 + bar.y1) / 2, hm.colorbar_label, kBlack, Anchor::middle, true);
        }
    } else {
        for (const auto& b : panel.bands) {
            std::vector<Point> poly;
            for (std::size_t i = 0; i < b.x.size(); ++i) poly.push_back({sx(b.x[i]), sy(b.hi[i])});
            for (std::size_t i = b.x.size(); i-- > 0;) poly.push_back({sx(b.x[i]), sy(b.lo[i])});
            surf.fill_polygon(poly, b.color, 0.22);
        }
        for (const auto& s : panel.series) {
            std::vector<Point> pts;
            if (s.style == LineStyle::steps) {
                pts = step_points(s, sx, sy);
            } else {
                for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
                    const double py = sy(s.y[i]);
                    if (std::isfinite(py)) pts.push_back({sx(s.x[i]), py});
                }
            }
            if (pts.size() == 1) pts.push_back({pts[0].x + 0.5, pts[0].y});
            surf.polyline(pts, s.color, 1.6, s.style == LineStyle::dashed);
        }
        surf.set_clip(std::nullopt);
    }

    // Frame, labels, title.
    surf.polyline({{plot.x0, plot.y0}, {plot.x1, plot.y0}, {plot.x1, plot.y1}, {plot.x0, plot.y1}, {plot.x0, plot.y0}},
                  kBlack, 1.0, false);
    surf.text((plot.x0 + plot.x1) / 2, box.y1 - 10, panel.xlabel, kBlack, Anchor::middle, false);
    surf.text(box.x0 + 14, (plot.y0 + plot.y1) / 2, panel.ylabel, kBlack, Anchor::middle, true);
    surf.text((plot.x0 + plot.x1) / 2, box.y0 + 18, panel.title, kBlack, Anchor::middle, false);

    // Legend.
    double ly = plot.y0 + 16;
    double widest = 0;
    std::size_t labelled = 0;
    for (const auto& s : panel.series) {
        if (s.label.empty()) continue;
        widest = std::max(widest, text_width(s.label));
        ++labelled;
    }
    if (labelled > 0 && !has_heat) {
        const double lx = plot.x1 - widest - 42;
        surf.fill_rect({lx - 6, plot.y0 + 4, plot.x1 - 4, plot.y0 + 8 + 18.0 * static_cast<double>(labelled)}, kWhite,
                       0.85);
        for (const auto& s : panel.series) {
            if (s.label.empty()) continue;
            surf.line(lx, ly - 4, lx + 24, ly - 4, s.color, 2.0, s.style == LineStyle::dashed);
            surf.text(lx + 30, ly, s.label, kBlack, Anchor::start, false);
            ly += 18;
        }
    }
}

void draw_figure(Surface& surf, const Figure& fig, int width, int height) {
    (void)width;
    (void)height;
    const int cols = std::max(1, fig.columns);
    const double top = fig.title.empty() ? 0.0 : 28.0;
    if (!fig.title.empty()) surf.text(width / 2.0, 20, fig.title, kBlack, Anchor::middle, false);
    for (std::size_t i = 0; i < fig.panels.size(); ++i) {
        const int r = static_cast<int>(i) / cols;
        const int c = static_cast<int>(i) % cols;
        const Rect box{static_cast<double>(c * fig.panel_width), top + r * fig.panel_height,
                       static_cast<double>((c + 1) * fig.panel_width), top + (r + 1) * fig.panel_height};
        draw_panel(surf, fig.panels[i], box);
    }
}

std::pair<int, int> figure_size(const Figure& fig) {
    const int cols = std::max(1, std::min<int>(fig.columns, std::max<int>(1, static_cast<int>(fig.panels.size()))));
    const int rows = std::max<int>(1, (static_cast<int>(fig.panels.size()) + cols - 1) / cols);
    const int top = fig.title.empty() ? 0 : 28;
    return {cols * fig.panel_width, rows * fig.panel_height + top};
}

}  // namespace

Color series_color(std::size_t index) {
    static constexpr std::array<Color, 6> palette{{
        {31, 119, 180}, {214, 39, 40}, {44, 160, 44}, {255, 127, 14}, {148, 103, 189}, {140, 86, 75}}};
    return palette[index % palette.size()];
}

void write_svg(const Figure& figure, const std::filesystem::path& path) {
    const auto [w, h] = figure_size(figure);
    SvgSurface surf(w, h);
    draw_figure(surf, figure, w, h);
    surf.write(path);
}

void write_png(const Figure& figure, const std::filesystem::path& path) {
    const auto [w, h] = figure_size(figure);
    RasterSurface surf(w, h);
    draw_figure(surf, figure, w, h);
    surf.write(path);
}

}  // namespace nmeasure
