#include "fracto/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fracto::svg {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Range {
    double lo = 0.0, hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool use_x, AxisScale scale) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : series) {
        const auto& v = use_x ? s.x : s.y;
        for (double d : v) {
            if (!std::isfinite(d)) continue;
            if (scale == AxisScale::Log && !(d > 0.0)) continue;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    if (!(lo < hi)) {
        if (std::isfinite(lo)) return {lo - 1.0, lo + 1.0};
        return {0.0, 1.0};
    }
    if (scale == AxisScale::Log) return {std::log10(lo), std::log10(hi)};
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

double to_axis(double v, AxisScale scale) {
    if (scale == AxisScale::Log) {
        return v > 0.0 ? std::log10(v) : std::numeric_limits<double>::quiet_NaN();
    }
    return v;
}

}  // namespace

void write_figure(const std::string& path, const std::vector<Panel>& panels,
                  int ncols, int panel_width, int panel_height) {
    if (panels.empty() || ncols < 1) {
        throw std::invalid_argument("write_figure: nothing to draw");
    }
    const int nrows = int((panels.size() + std::size_t(ncols) - 1) / std::size_t(ncols));
    const int W = ncols * panel_width;
    const int H = nrows * panel_height;
    const double ml = 58, mr = 14, mt = 30, mb = 40;  // per-panel margins

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const Panel& panel = panels[p];
        const double ox = double(int(p) % ncols) * panel_width;
        const double oy = double(int(p) / ncols) * panel_height;
        const double x0 = ox + ml, y0 = oy + mt;
        const double pw = panel_width - ml - mr, ph = panel_height - mt - mb;

        out << "<g>\n";
        out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\""
            << num(pw) << "\" height=\"" << num(ph)
            << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        if (!panel.title.empty()) {
            out << "<text x=\"" << num(x0 + pw / 2) << "\" y=\"" << num(oy + 20)
                << "\" font-family=\"sans-serif\" font-size=\"13\" "
                   "text-anchor=\"middle\">" << panel.title << "</text>\n";
        }
        if (panel.placeholder) {
            out << "<text x=\"" << num(x0 + pw / 2) << "\" y=\"" << num(y0 + ph / 2)
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#999999\" "
                   "text-anchor=\"middle\">" << *panel.placeholder << "</text>\n";
            out << "</g>\n";
            continue;
        }

        const Range rx = data_range(panel.series, true, panel.x_scale);
        const Range ry = data_range(panel.series, false, panel.y_scale);
        auto px = [&](double v) {
            const double a = to_axis(v, panel.x_scale);
            return x0 + (a - rx.lo) / (rx.hi - rx.lo) * pw;
        };
        auto py = [&](double v) {
            const double a = to_axis(v, panel.y_scale);
            return y0 + ph - (a - ry.lo) / (ry.hi - ry.lo) * ph;
        };

        // ticks: 5 per axis at even axis-coordinate spacing
        for (int t = 0; t <= 4; ++t) {
            const double fx = rx.lo + (rx.hi - rx.lo) * t / 4.0;
            const double gx = x0 + pw * t / 4.0;
            const double vx = panel.x_scale == AxisScale::Log ? std::pow(10.0, fx) : fx;
            out << "<line x1=\"" << num(gx) << "\" y1=\"" << num(y0 + ph)
                << "\" x2=\"" << num(gx) << "\" y2=\"" << num(y0 + ph + 4)
                << "\" stroke=\"#444444\"/>\n";
            out << "<text x=\"" << num(gx) << "\" y=\"" << num(y0 + ph + 16)
                << "\" font-family=\"sans-serif\" font-size=\"10\" "
                   "text-anchor=\"middle\">" << tick_label(vx) << "</text>\n";
            const double fy = ry.lo + (ry.hi - ry.lo) * t / 4.0;
            const double gy = y0 + ph - ph * t / 4.0;
            const double vy = panel.y_scale == AxisScale::Log ? std::pow(10.0, fy) : fy;
            out << "<line x1=\"" << num(x0 - 4) << "\" y1=\"" << num(gy) << "\" x2=\""
                << num(x0) << "\" y2=\"" << num(gy) << "\" stroke=\"#444444\"/>\n";
            out << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(gy + 3)
                << "\" font-family=\"sans-serif\" font-size=\"10\" "
                   "text-anchor=\"end\">" << tick_label(vy) << "</text>\n";
        }
        if (!panel.x_label.empty()) {
            out << "<text x=\"" << num(x0 + pw / 2) << "\" y=\"" << num(y0 + ph + 32)
                << "\" font-family=\"sans-serif\" font-size=\"11\" "
                   "text-anchor=\"middle\">" << panel.x_label << "</text>\n";
        }
        if (!panel.y_label.empty()) {
            out << "<text x=\"" << num(ox + 14) << "\" y=\"" << num(y0 + ph / 2)
                << "\" font-family=\"sans-serif\" font-size=\"11\" "
                   "text-anchor=\"middle\" transform=\"rotate(-90 " << num(ox + 14)
                << " " << num(y0 + ph / 2) << ")\">" << panel.y_label << "</text>\n";
        }

        int legend_row = 0;
        for (const auto& s : panel.series) {
            if (s.circles) {
                for (std::size_t i = 0; i < s.x.size();
                     i += std::size_t(std::max(1, s.circle_every))) {
                    const double cx = px(s.x[i]);
                    const double cy = py(s.y[i]);
                    if (!std::isfinite(cx) || !std::isfinite(cy)) continue;
                    if (cx < x0 - 0.5 || cx > x0 + pw + 0.5 || cy < y0 - 0.5 ||
                        cy > y0 + ph + 0.5) continue;
                    out << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
                        << "\" r=\"2.2\" fill=\"none\" stroke=\"" << s.color
                        << "\" stroke-width=\"1\"/>\n";
                }
            } else {
                out << "<polyline fill=\"none\" stroke=\"" << s.color
                    << "\" stroke-width=\"1.2\"";
                if (s.style == LineStyle::Dashed) out << " stroke-dasharray=\"6 3\"";
                if (s.style == LineStyle::Dotted) out << " stroke-dasharray=\"1.5 2.5\"";
                out << " points=\"";
                bool first = true;
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    const double cx = px(s.x[i]);
                    const double cy = py(s.y[i]);
                    if (!std::isfinite(cx) || !std::isfinite(cy)) continue;
                    const double cxc = std::clamp(cx, x0, x0 + pw);
                    const double cyc = std::clamp(cy, y0, y0 + ph);
                    if (!first) out << " ";
                    out << num(cxc) << "," << num(cyc);
                    first = false;
                }
                out << "\"/>\n";
            }
            if (!s.label.empty()) {
                const double lx = x0 + pw - 6;
                const double ly = y0 + 14 + 14 * legend_row++;
                out << "<text x=\"" << num(lx) << "\" y=\"" << num(ly)
                    << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\""
                    << s.color << "\" text-anchor=\"end\">" << s.label << "</text>\n";
            }
        }
        out << "</g>\n";
    }
    out << "</svg>\n";

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_figure: cannot open " + path);
    f << out.str();
}

}  // namespace fracto::svg
