#include "cvg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cvg/directions.hpp"
#include "cvg/errors.hpp"

namespace cvg {

namespace {

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

struct Frame {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    int px = 640;
    double margin = 40.0;

    double sx(double x) const {
        return margin + (x - min_x) / (max_x - min_x) * (px - 2 * margin);
    }
    double sy(double y) const {
        return px - margin - (y - min_y) / (max_y - min_y) * (px - 2 * margin);
    }
};

void expand(Frame& f, double x, double y, bool& first) {
    if (first) {
        f.min_x = f.max_x = x;
        f.min_y = f.max_y = y;
        first = false;
        return;
    }
    f.min_x = std::min(f.min_x, x);
    f.max_x = std::max(f.max_x, x);
    f.min_y = std::min(f.min_y, y);
    f.max_y = std::max(f.max_y, y);
}

void finish_frame(Frame& f) {
    double w = f.max_x - f.min_x, h = f.max_y - f.min_y;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    // equal aspect with 5% padding
    const double half = 0.5 * std::max(w, h) * 1.05;
    const double cx = 0.5 * (f.min_x + f.max_x), cy = 0.5 * (f.min_y + f.max_y);
    f.min_x = cx - half;
    f.max_x = cx + half;
    f.min_y = cy - half;
    f.max_y = cy + half;
}

}  // namespace

std::vector<Vec> body_outline(const ConvexBody& body, int segments) {
    if (body.dim() != 2) throw ConfigError("body_outline: 2-d only");
    std::vector<Vec> out;
    out.reserve(segments);
    const Vec c = body.interior_point();
    for (const Vec& u : circle_directions(segments)) out.push_back(radial_boundary(body, c, u));
    return out;
}

std::vector<Vec> polygon_outline(const VPolytope& p) {
    if (p.dim() != 2) throw ConfigError("polygon_outline: 2-d only");
    std::vector<Vec> verts = p.vertices();
    const Vec c = p.centroid();
    std::sort(verts.begin(), verts.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
    });
    return verts;
}

std::string svg_overlay(const std::vector<OverlayLayer>& layers, int size_px) {
    if (layers.empty()) throw ConfigError("svg_overlay: no layers");
    Frame f;
    f.px = size_px;
    bool first = true;
    for (const OverlayLayer& layer : layers)
        for (const Vec& v : layer.outline) {
            if (v.size() != 2) throw ConfigError("svg_overlay: layers must be 2-d");
            expand(f, v[0], v[1], first);
        }
    if (first) throw ConfigError("svg_overlay: layers are empty");
    finish_frame(f);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
       << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
    os << "<rect width=\"" << size_px << "\" height=\"" << size_px << "\" fill=\"white\"/>\n";
    for (const OverlayLayer& layer : layers) {
        os << "<polygon fill=\"none\" stroke=\"" << layer.color
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < layer.outline.size(); ++i) {
            if (i) os << " ";
            os << fmt(f.sx(layer.outline[i][0])) << "," << fmt(f.sy(layer.outline[i][1]));
        }
        os << "\"/>\n";
    }
    double ty = 20.0;
    for (const OverlayLayer& layer : layers) {
        os << "<text x=\"12\" y=\"" << fmt(ty) << "\" font-family=\"monospace\" font-size=\"13\""
           << " fill=\"" << layer.color << "\">" << layer.label << "</text>\n";
        ty += 16.0;
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_scaling_plot(const ScalingResult& result, int size_px) {
    if (result.points.size() < 2) throw ConfigError("svg_scaling_plot: need at least two points");
    Frame f;
    f.px = size_px;
    bool first = true;
    for (const ScalingPoint& p : result.points)
        expand(f, std::log10(static_cast<double>(p.n)), std::log10(p.ds), first);
    // pad 8% each side, keep independent axes
    {
        double w = std::max(f.max_x - f.min_x, 1e-9), h = std::max(f.max_y - f.min_y, 1e-9);
        f.min_x -= 0.08 * w;
        f.max_x += 0.08 * w;
        f.min_y -= 0.08 * h;
        f.max_y += 0.08 * h;
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
       << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
    os << "<rect width=\"" << size_px << "\" height=\"" << size_px << "\" fill=\"white\"/>\n";
    os << "<rect x=\"" << fmt(f.margin) << "\" y=\"" << fmt(f.margin) << "\" width=\""
       << fmt(size_px - 2 * f.margin) << "\" height=\"" << fmt(size_px - 2 * f.margin)
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    // fitted line in natural-log space: log ds = slope * log n + intercept
    const double ln10 = std::log(10.0);
    auto fit_y = [&](double x10) { return (result.slope * (x10 * ln10) + result.intercept) / ln10; };
    os << "<line x1=\"" << fmt(f.sx(f.min_x)) << "\" y1=\"" << fmt(f.sy(fit_y(f.min_x)))
       << "\" x2=\"" << fmt(f.sx(f.max_x)) << "\" y2=\"" << fmt(f.sy(fit_y(f.max_x)))
       << "\" stroke=\"steelblue\" stroke-width=\"1.2\"/>\n";

    for (const ScalingPoint& p : result.points) {
        os << "<circle cx=\"" << fmt(f.sx(std::log10(static_cast<double>(p.n)))) << "\" cy=\""
           << fmt(f.sy(std::log10(p.ds))) << "\" r=\"3.5\" fill=\"crimson\"/>\n";
    }

    char slope_text[96];
    std::snprintf(slope_text, sizeof(slope_text), "d=%d  slope=%.4f", result.dim, result.slope);
    os << "<text x=\"" << fmt(f.margin + 8) << "\" y=\"" << fmt(f.margin - 10)
       << "\" font-family=\"monospace\" font-size=\"14\">" << slope_text << "</text>\n";
    os << "<text x=\"" << fmt(size_px / 2.0 - 30) << "\" y=\"" << fmt(size_px - 10.0)
       << "\" font-family=\"monospace\" font-size=\"12\">log10 n</text>\n";
    os << "<text x=\"10\" y=\"" << fmt(size_px / 2.0)
       << "\" font-family=\"monospace\" font-size=\"12\">log10 dS</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace cvg
