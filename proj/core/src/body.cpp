#include "cvg/body.hpp"

#include <algorithm>
#include <cmath>

namespace cvg {

namespace {

/* integral of (1-z^2)^{(d-1)/2} dz over [a, 1], adaptive Simpson. */
double profile_integral(int d, double a, double b, double fa, double fm, double fb, double tol,
                        int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    auto f = [d](double z) { return std::pow(std::max(0.0, 1.0 - z * z), 0.5 * (d - 1)); };
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return profile_integral(d, a, m, fa, flm, fm, tol / 2, depth - 1) +
           profile_integral(d, m, b, fm, frm, fb, tol / 2, depth - 1);
}

}  // namespace

double ball_cap_volume(int d, double r, double h) {
    if (h <= 0.0) return 0.0;
    if (h >= 2.0 * r) return unit_ball_volume(d) * std::pow(r, d);
    double u = h / r;  // cap height of the unit ball
    if (d == 2) {
        // c < 0 for caps deeper than the center; clamp only guards rounding.
        double c = std::clamp(1.0 - u, -1.0, 1.0);
        double seg = std::acos(c) - c * std::sqrt(std::max(0.0, 1.0 - c * c));
        return r * r * seg;
    }
    if (d == 3) {
        return M_PI * h * h * (3.0 * r - h) / 3.0;
    }
    double a = 1.0 - u;
    auto f = [d](double z) { return std::pow(std::max(0.0, 1.0 - z * z), 0.5 * (d - 1)); };
    double integral =
        profile_integral(d, a, 1.0, f(a), f(0.5 * (a + 1.0)), 0.0, 1e-15, 40);
    return std::pow(r, d) * unit_ball_volume(d - 1) * integral;
}

std::optional<double> ball_overshoot(int d, double r, double dist) {
    double s = dist / r;
    if (s <= 1.0) return 0.0;
    if (d == 2) {
        // q - atan(q) with q = sqrt(s^2-1); the acos(1/s) form cancels
        // catastrophically just outside the boundary.
        double q = std::sqrt((s - 1.0) * (s + 1.0));
        double v;
        if (q < 0.05) {
            double q2 = q * q;
            v = q * q2 * (1.0 / 3.0 + q2 * (-1.0 / 5.0 + q2 * (1.0 / 7.0 - q2 / 9.0)));
        } else {
            v = q - std::atan(q);
        }
        return r * r * v;
    }
    if (d == 3) {
        double cone = (s * s - 1.0) * (s * s - 1.0) / (s * s * s);
        double a = 1.0 - 1.0 / s;
        double cap = a * a * (2.0 + 1.0 / s);
        return r * r * r * M_PI / 3.0 * (cone - cap);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- Ball

Ball::Ball(Vec center, double radius) : center_(std::move(center)), radius_(radius) {
    if (!(radius_ > 0.0)) throw DegenerateInput("Ball: radius must be positive");
}

std::optional<double> Ball::exact_volume() const {
    return unit_ball_volume(dim()) * std::pow(radius_, dim());
}

std::optional<double> Ball::exact_halfspace_volume(const Vec& a, double c) const {
    double tau = c - a.dot(center_);  // signed offset of the cut plane from the center
    if (tau <= -radius_) return 0.0;
    if (tau >= radius_) return *exact_volume();
    return *exact_volume() - ball_cap_volume(dim(), radius_, radius_ - tau);
}

std::optional<double> Ball::exact_section_volume(const Vec& a, double c) const {
    double tau = std::abs(c - a.dot(center_));
    if (tau >= radius_) return 0.0;
    double rho = std::sqrt(radius_ * radius_ - tau * tau);
    return unit_ball_volume(dim() - 1) * std::pow(rho, dim() - 1);
}

std::optional<InertiaData> Ball::exact_inertia(const Vec& origin) const {
    const int d = dim();
    double vol = *exact_volume();
    InertiaData data;
    data.centroid = center_;
    data.origin = origin;
    data.volume = vol;
    Vec off = center_ - origin;
    // integral of (x-origin)(x-origin)^T = vol * (r^2/(d+2) I + off off^T)
    data.second_moment =
        vol * (radius_ * radius_ / (d + 2) * Mat::Identity(d, d) + off * off.transpose());
    data.method = EstimateMethod::Exact;
    return data;
}

std::optional<double> Ball::exact_overshoot(const Vec& x) const {
    return ball_overshoot(dim(), radius_, (x - center_).norm());
}

// ------------------------------------------------------------ Ellipsoid

Ellipsoid::Ellipsoid(Vec center, Mat map) : center_(std::move(center)), map_(std::move(map)) {
    Eigen::JacobiSVD<Mat> svd(map_, Eigen::ComputeThinU | Eigen::ComputeThinV);
    sigma_min_ = svd.singularValues().minCoeff();
    sigma_max_ = svd.singularValues().maxCoeff();
    if (!(sigma_min_ > 0.0)) throw DegenerateInput("Ellipsoid: map must be invertible");
    inv_map_ = map_.inverse();
    abs_det_ = std::abs(map_.determinant());
}

std::optional<double> Ellipsoid::exact_volume() const {
    return abs_det_ * unit_ball_volume(dim());
}

std::optional<double> Ellipsoid::exact_halfspace_volume(const Vec& a, double c) const {
    // Pull the halfspace back to the unit ball: <a, center + A s> <= c.
    Vec w = map_.transpose() * a;
    double wn = w.norm();
    double tau = (c - a.dot(center_)) / wn;
    if (tau <= -1.0) return 0.0;
    if (tau >= 1.0) return *exact_volume();
    double unit = unit_ball_volume(dim()) - ball_cap_volume(dim(), 1.0, 1.0 - tau);
    return abs_det_ * unit;
}

std::optional<double> Ellipsoid::exact_section_volume(const Vec& a, double c) const {
    const int d = dim();
    Vec w = map_.transpose() * a;
    double wn = w.norm();
    double tau = std::abs(c - a.dot(center_)) / wn;
    if (tau >= 1.0) return 0.0;
    double rho = std::sqrt(1.0 - tau * tau);
    double unit_section = unit_ball_volume(d - 1) * std::pow(rho, d - 1);
    // (d-1)-volume scales by |det A| * |A^{-T} n| for a section with unit normal n.
    return abs_det_ / wn * unit_section;
}

std::optional<InertiaData> Ellipsoid::exact_inertia(const Vec& origin) const {
    const int d = dim();
    double vol = *exact_volume();
    InertiaData data;
    data.centroid = center_;
    data.origin = origin;
    data.volume = vol;
    Vec off = center_ - origin;
    data.second_moment =
        vol * (map_ * map_.transpose() / (d + 2) + off * off.transpose());
    data.method = EstimateMethod::Exact;
    return data;
}

std::optional<double> Ellipsoid::exact_overshoot(const Vec& x) const {
    // Overshoot is equivariant: vol([x,AK+v]\(AK+v)) = |det A| * vol([s,K]\K)
    // with s the preimage of x; the preimage body is the unit ball.
    Vec s = inv_map_ * (x - center_);
    auto base = ball_overshoot(dim(), 1.0, s.norm());
    if (!base) return std::nullopt;
    return abs_det_ * *base;
}

// ---------------------------------------------------------- AffineImage

AffineImage::AffineImage(BodyPtr base, Mat map, Vec shift)
    : base_(std::move(base)), map_(std::move(map)), shift_(std::move(shift)) {
    Eigen::JacobiSVD<Mat> svd(map_, Eigen::ComputeThinU | Eigen::ComputeThinV);
    sigma_min_ = svd.singularValues().minCoeff();
    sigma_max_ = svd.singularValues().maxCoeff();
    if (!(sigma_min_ > 0.0)) throw DegenerateInput("AffineImage: map must be invertible");
    inv_map_ = map_.inverse();
    abs_det_ = std::abs(map_.determinant());
}

double AffineImage::support(const Vec& u) const {
    Vec w = map_.transpose() * u;
    double wn = w.norm();
    return shift_.dot(u) + base_->support(w / wn) * wn;
}

Vec AffineImage::support_point(const Vec& u) const {
    Vec w = map_.transpose() * u;
    return map_ * base_->support_point(w / w.norm()) + shift_;
}

BoundingBall AffineImage::bounding_ball() const {
    BoundingBall bb = base_->bounding_ball();
    return {map_ * bb.center + shift_, sigma_max_ * bb.radius};
}

std::optional<double> AffineImage::exact_volume() const {
    auto v = base_->exact_volume();
    if (!v) return std::nullopt;
    return abs_det_ * *v;
}

std::optional<double> AffineImage::exact_halfspace_volume(const Vec& a, double c) const {
    Vec w = map_.transpose() * a;
    double wn = w.norm();
    auto v = base_->exact_halfspace_volume(w / wn, (c - a.dot(shift_)) / wn);
    if (!v) return std::nullopt;
    return abs_det_ * *v;
}

std::optional<double> AffineImage::exact_section_volume(const Vec& a, double c) const {
    Vec w = map_.transpose() * a;
    double wn = w.norm();
    auto v = base_->exact_section_volume(w / wn, (c - a.dot(shift_)) / wn);
    if (!v) return std::nullopt;
    return abs_det_ / wn * *v;
}

std::optional<InertiaData> AffineImage::exact_inertia(const Vec& origin) const {
    // Moments transform as x -> T y + (shift - origin), y over the base body.
    auto b = base_->exact_inertia(Vec::Zero(dim()));
    if (!b) return std::nullopt;
    double vol = abs_det_ * b->volume;
    Vec off = shift_ - origin;
    Vec first = abs_det_ * (map_ * (b->centroid * b->volume));  // integral of T y
    InertiaData data;
    data.origin = origin;
    data.volume = vol;
    data.centroid = map_ * b->centroid + shift_;
    data.second_moment = abs_det_ * (map_ * b->second_moment * map_.transpose()) +
                         first * off.transpose() + off * first.transpose() +
                         vol * off * off.transpose();
    data.method = b->method;
    return data;
}

std::optional<double> AffineImage::exact_overshoot(const Vec& x) const {
    auto v = base_->exact_overshoot(inv_map_ * (x - shift_));
    if (!v) return std::nullopt;
    return abs_det_ * *v;
}

// ------------------------------------------------------ radial_boundary

Vec radial_boundary(const ConvexBody& body, const Vec& from, const Vec& direction, double tol) {
    if (!body.contains(from))
        throw DegenerateInput("radial_boundary: ray origin must lie in the body");
    Vec u = unit(direction);
    BoundingBall bb = body.bounding_ball();
    double scale = bb.radius + (from - bb.center).norm();
    double lo = 0.0, hi = scale * 1e-3;
    // Exponential search for an outside point.
    while (body.contains(from + hi * u)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 4.0 * scale)
            throw NoBracket("radial_boundary: failed to exit the body along the ray");
    }
    while (hi - lo > tol * std::max(1.0, scale)) {
        double m = 0.5 * (lo + hi);
        (body.contains(from + m * u) ? lo : hi) = m;
    }
    return from + lo * u;
}

}  // namespace cvg
