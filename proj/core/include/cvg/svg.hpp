#pragma once

#include <string>
#include <vector>

#include "cvg/body.hpp"
#include "cvg/polytope.hpp"
#include "cvg/verify.hpp"

namespace cvg {

/* One closed polyline in body coordinates (d = 2). */
struct OverlayLayer {
    std::vector<Vec> outline;
    std::string color;
    std::string label;
};

/* Closed outline of a 2-d body by radial boundary sampling from its
   interior point. */
std::vector<Vec> body_outline(const ConvexBody& body, int segments = 256);

/* Vertices of a 2-d polytope ordered counterclockwise around the centroid. */
std::vector<Vec> polygon_outline(const VPolytope& p);

/* Deterministic overlay figure: fixed canvas, fixed decimal formatting, a
   legend naming each layer.  Throws ConfigError on non-2-d layers. */
std::string svg_overlay(const std::vector<OverlayLayer>& layers, int size_px = 640);

/* Log-log scatter of a scaling study with the fitted line and the slope
   printed in the corner. */
std::string svg_scaling_plot(const ScalingResult& result, int size_px = 640);

}  // namespace cvg
