#pragma once

// Shared helpers for the test binaries: short vector literals, an oracle
// wrapper that hides every exact hook (forces Monte Carlo paths), and small
// numeric utilities used as independent cross-checks.

#include <cmath>
#include <functional>
#include <vector>

#include "cvg/body.hpp"
#include "cvg/vec.hpp"

namespace tutil {

inline cvg::Vec v2(double x, double y) {
    cvg::Vec v(2);
    v << x, y;
    return v;
}

inline cvg::Vec v3(double x, double y, double z) {
    cvg::Vec v(3);
    v << x, y, z;
    return v;
}

/* Forwards the oracle interface of a body while reporting "no exact hooks",
   so generic algorithms exercise their sampling fallbacks. */
class Opaque final : public cvg::ConvexBody {
public:
    explicit Opaque(cvg::BodyPtr base) : base_(std::move(base)) {}

    int dim() const override { return base_->dim(); }
    bool contains(const cvg::Vec& x) const override { return base_->contains(x); }
    double support(const cvg::Vec& u) const override { return base_->support(u); }
    cvg::Vec support_point(const cvg::Vec& u) const override { return base_->support_point(u); }
    cvg::Vec interior_point() const override { return base_->interior_point(); }
    double interior_margin() const override { return base_->interior_margin(); }
    cvg::BoundingBall bounding_ball() const override { return base_->bounding_ball(); }

private:
    cvg::BodyPtr base_;
};

/* Area of the unit-disk cap {x : <x,u> >= c}, c in [-1,1]. */
inline double disk_cap_area(double c) {
    return std::acos(c) - c * std::sqrt(std::max(0.0, 1.0 - c * c));
}

/* Invert a strictly decreasing function on [lo, hi] by plain bisection. */
inline double invert_decreasing(const std::function<double(double)>& f, double target, double lo,
                                double hi, double tol = 1e-13) {
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/* Exact overshoot of the unit disk for a point at distance rho >= 1. */
inline double disk_overshoot(double rho) {
    return std::sqrt(rho * rho - 1.0) - std::acos(1.0 / rho);
}

}  // namespace tutil
