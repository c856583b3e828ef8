// Minimal deterministic SVG plotting: fixed canvas, fixed-precision number
// formatting, no external dependencies. Identical inputs give identical bytes.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fracto::svg {

enum class LineStyle { Solid, Dashed, Dotted };

struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f4e8c";
    LineStyle style = LineStyle::Solid;
    bool circles = false;   // draw markers instead of a line
    int circle_every = 1;   // decimation for marker series
    std::string label;
};

enum class AxisScale { Linear, Log };

struct Panel {
    std::string title;
    std::string x_label;
    std::string y_label;
    AxisScale x_scale = AxisScale::Linear;
    AxisScale y_scale = AxisScale::Linear;
    std::vector<Series> series;
    std::optional<std::string> placeholder;  // drawn when there is no data
};

/// Lays panels out on a fixed grid (ncols per row) and writes the file.
void write_figure(const std::string& path, const std::vector<Panel>& panels,
                  int ncols, int panel_width = 420, int panel_height = 320);

}  // namespace fracto::svg
