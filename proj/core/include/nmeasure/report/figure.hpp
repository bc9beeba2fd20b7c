#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace nmeasure {

struct Color {
    std::uint8_t r = 0, g = 0, b = 0;
};

enum class LineStyle { solid, dashed, steps };

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    Color color;
    LineStyle style = LineStyle::solid;
};

/// Shaded region between lo(x) and hi(x).
struct Band {
    std::vector<double> x;
    std::vector<double> lo;
    std::vector<double> hi;
    Color color;
};

/// Scalar field on a tensor grid: values[it * xs.size() + ix].
struct Heatmap {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> values;
    std::string colorbar_label;
};

struct Panel {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool log_y = false;
    std::vector<Band> bands;
    std::vector<Series> series;
    std::optional<Heatmap> heatmap;
};

struct Figure {
    std::string title;
    std::vector<Panel> panels;
    int columns = 1;
    int panel_width = 520;
    int panel_height = 380;
};

void write_svg(const Figure& figure, const std::filesystem::path& path);
void write_png(const Figure& figure, const std::filesystem::path& path);

/// Palette used for series, in order.
Color series_color(std::size_t index);

}  // namespace nmeasure
