#pragma once

#include <functional>

#include "cvg/vec.hpp"

namespace cvg {

// Minimize a scalar function over the unit sphere S^{d-1}.
// Multi-start coordinate descent in tangent directions with golden-section
// line searches over rotation angles.  Deterministic for a fixed seed.

struct SphereMinOptions {
    int starts = 16;
    double angle_tol = 1e-9;       // stop when the trust angle drops below this
    double initial_angle = 0.6;    // radians
    int max_rounds = 200;
    std::uint64_t seed = 0;
};

struct SphereMinResult {
    Vec point;      // unit vector
    double value = 0.0;
    int evaluations = 0;
};

SphereMinResult minimize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                   const SphereMinOptions& opt = {});

// Same machinery with caller-supplied starting directions (each is normalized).
SphereMinResult minimize_on_sphere_from(const std::vector<Vec>& starts,
                                        const std::function<double(const Vec&)>& f,
                                        const SphereMinOptions& opt = {});

// Golden-section minimization of a unimodal 1-D function on [a, b].
double golden_section(const std::function<double(double)>& f, double a, double b,
                      double tol, int max_iter = 200);

}  // namespace cvg
