#pragma once

#include <memory>
#include <optional>

#include "cvg/errors.hpp"
#include "cvg/types.hpp"
#include "cvg/vec.hpp"

namespace cvg {

/* Oracle interface for a full-dimensional compact convex body in R^d.

   Concrete bodies additionally expose closed-form fast paths (volume,
   halfspace cuts, hyperplane sections, moments, overshoot) through the
   optional hooks; generic algorithms use them when available and fall back
   to seeded Monte Carlo otherwise. */
class ConvexBody {
public:
    virtual ~ConvexBody() = default;

    virtual int dim() const = 0;
    virtual bool contains(const Vec& x) const = 0;
    // Support function h_K(u) = max_{x in K} <x,u> for unit u.
    virtual double support(const Vec& u) const = 0;
    // A boundary point attaining the support value in direction u.
    virtual Vec support_point(const Vec& u) const = 0;
    virtual Vec interior_point() const = 0;
    // Radius of some ball around interior_point() contained in the body.
    virtual double interior_margin() const = 0;
    virtual BoundingBall bounding_ball() const = 0;

    // ---- optional exact fast paths ------------------------------------

    virtual std::optional<double> exact_volume() const { return std::nullopt; }

    // vol_d(K intersect {<a,x> <= c}) for unit a.
    virtual std::optional<double> exact_halfspace_volume(const Vec& /*a*/, double /*c*/) const {
        return std::nullopt;
    }

    // vol_{d-1}(K intersect {<a,x> = c}) for unit a.
    virtual std::optional<double> exact_section_volume(const Vec& /*a*/, double /*c*/) const {
        return std::nullopt;
    }

    // Centroid / raw second moment about the given origin.
    virtual std::optional<InertiaData> exact_inertia(const Vec& /*origin*/) const {
        return std::nullopt;
    }

    // vol_d(conv({x} union K) \ K) for x outside K, when a closed form exists.
    virtual std::optional<double> exact_overshoot(const Vec& /*x*/) const { return std::nullopt; }
};

using BodyPtr = std::shared_ptr<const ConvexBody>;

/* Euclidean ball. */
class Ball final : public ConvexBody {
public:
    Ball(Vec center, double radius);

    int dim() const override { return static_cast<int>(center_.size()); }
    bool contains(const Vec& x) const override {
        return (x - center_).norm() <= radius_ * (1.0 + 1e-12);
    }
    double support(const Vec& u) const override { return center_.dot(u) + radius_; }
    Vec support_point(const Vec& u) const override { return center_ + radius_ * u; }
    Vec interior_point() const override { return center_; }
    double interior_margin() const override { return radius_; }
    BoundingBall bounding_ball() const override { return {center_, radius_}; }

    std::optional<double> exact_volume() const override;
    std::optional<double> exact_halfspace_volume(const Vec& a, double c) const override;
    std::optional<double> exact_section_volume(const Vec& a, double c) const override;
    std::optional<InertiaData> exact_inertia(const Vec& origin) const override;
    std::optional<double> exact_overshoot(const Vec& x) const override;

    const Vec& center() const { return center_; }
    double radius() const { return radius_; }

private:
    Vec center_;
    double radius_;
};

/* Image {center + A s : |s| <= 1} of the unit ball under an invertible A.
   Constructed from a positive-definite shape matrix or any invertible map. */
class Ellipsoid final : public ConvexBody {
public:
    Ellipsoid(Vec center, Mat map);

    int dim() const override { return static_cast<int>(center_.size()); }
    bool contains(const Vec& x) const override {
        return (inv_map_ * (x - center_)).norm() <= 1.0 + 1e-12;
    }
    double support(const Vec& u) const override {
        return center_.dot(u) + (map_.transpose() * u).norm();
    }
    Vec support_point(const Vec& u) const override {
        Vec w = map_.transpose() * u;
        return center_ + map_ * (w / w.norm());
    }
    Vec interior_point() const override { return center_; }
    double interior_margin() const override { return sigma_min_; }
    BoundingBall bounding_ball() const override { return {center_, sigma_max_}; }

    std::optional<double> exact_volume() const override;
    std::optional<double> exact_halfspace_volume(const Vec& a, double c) const override;
    std::optional<double> exact_section_volume(const Vec& a, double c) const override;
    std::optional<InertiaData> exact_inertia(const Vec& origin) const override;
    std::optional<double> exact_overshoot(const Vec& x) const override;

    const Vec& center() const { return center_; }
    const Mat& map() const { return map_; }

private:
    Vec center_;
    Mat map_, inv_map_;
    double abs_det_, sigma_min_, sigma_max_;
};

/* T(K) + v for a base oracle body.  Exact hooks forward to the base when it
   has them; otherwise generic algorithms fall back to sampling. */
class AffineImage final : public ConvexBody {
public:
    AffineImage(BodyPtr base, Mat map, Vec shift);

    int dim() const override { return static_cast<int>(shift_.size()); }
    bool contains(const Vec& x) const override {
        return base_->contains(inv_map_ * (x - shift_));
    }
    double support(const Vec& u) const override;
    Vec support_point(const Vec& u) const override;
    Vec interior_point() const override { return map_ * base_->interior_point() + shift_; }
    double interior_margin() const override { return sigma_min_ * base_->interior_margin(); }
    BoundingBall bounding_ball() const override;

    std::optional<double> exact_volume() const override;
    std::optional<double> exact_halfspace_volume(const Vec& a, double c) const override;
    std::optional<double> exact_section_volume(const Vec& a, double c) const override;
    std::optional<InertiaData> exact_inertia(const Vec& origin) const override;
    std::optional<double> exact_overshoot(const Vec& x) const override;

    const BodyPtr& base() const { return base_; }
    const Mat& map() const { return map_; }
    const Vec& shift() const { return shift_; }

private:
    BodyPtr base_;
    Mat map_, inv_map_;
    Vec shift_;
    double abs_det_, sigma_min_, sigma_max_;
};

/* Boundary point along `direction` from `from` (an interior point):
   exponential bracket on the membership predicate, then bisection to
   absolute tolerance tol * scale.  The returned point is inside the body,
   within tolerance of the boundary. */
Vec radial_boundary(const ConvexBody& body, const Vec& from, const Vec& direction,
                    double tol = 1e-12);

/* Closed-form volume of a spherical cap of height h (0 <= h <= 2r) of the
   d-ball of radius r.  d = 2 and 3 are closed forms; higher d integrates the
   section profile with adaptive Simpson to ~1e-14 relative. */
double ball_cap_volume(int d, double r, double h);

/* Closed-form overshoot vol([x,B] \ B) for the d-ball, x at distance
   `dist` >= r from the center; available for d = 2, 3. */
std::optional<double> ball_overshoot(int d, double r, double dist);

}  // namespace cvg
