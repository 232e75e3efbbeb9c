#include "cvg/illumination.hpp"

#include <algorithm>
#include <cmath>

#include "cvg/directions.hpp"
#include "cvg/errors.hpp"
#include "cvg/parallel.hpp"
#include "cvg/rng.hpp"

namespace cvg {

OvershootResult overshoot_polytope(const VPolytope& p, const Vec& x) {
    const int d = p.dim();
    OvershootResult res;
    double sum = 0.0;
    const auto& facets = p.facets();
    const auto& areas = p.facet_areas();
    for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
        double excess = facets[i].normal.dot(x) - facets[i].offset;
        if (excess > 0.0) {
            sum += excess * areas[i];
            res.active_facets.emplace_back(i, excess);
        }
    }
    res.value = VolumeEstimate::exact(sum / d);
    return res;
}

OvershootResult overshoot_polytope(const HPolytope& p, const Vec& x) {
    return overshoot_polytope(p.vform(), x);
}

std::vector<double> facet_areas(const VPolytope& p) {
    return p.facet_areas();
}

namespace {

BoundingBall cover_point_and_ball(const Vec& x, const BoundingBall& b) {
    Vec diff = x - b.center;
    double dist = diff.norm();
    if (dist <= b.radius) return b;
    double radius = 0.5 * (dist + b.radius);
    Vec center = b.center + diff * ((dist - radius) / dist);
    return {center, radius};
}

/* Does the ray x + s(y - x), s >= 1, meet the body?  The membership set
   along the ray is an interval, located by marching the chord of the
   bounding ball.  Steps bound the resolvable interval length; tangential
   misses contribute negligibly to the MC estimate. */
bool ray_reaches_body(const ConvexBody& body, const BoundingBall& bb, const Vec& x,
                      const Vec& y) {
    Vec dir = y - x;
    double a = dir.squaredNorm();
    if (a == 0.0) return body.contains(x);
    Vec rel = x - bb.center;
    double b = 2.0 * dir.dot(rel);
    double c = rel.squaredNorm() - bb.radius * bb.radius;
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return false;
    double sq = std::sqrt(disc);
    double s_lo = (-b - sq) / (2.0 * a);
    double s_hi = (-b + sq) / (2.0 * a);
    if (s_hi < 1.0) return false;
    s_lo = std::max(s_lo, 1.0);
    const int steps = 64;
    for (int i = 0; i <= steps; ++i) {
        double s = s_lo + (s_hi - s_lo) * i / steps;
        if (body.contains(x + s * dir)) return true;
    }
    return false;
}

}  // namespace

OvershootResult overshoot_oracle(const ConvexBody& body, const Vec& x, const MeasureOptions& opt) {
    BoundingBall body_ball = body.bounding_ball();
    BoundingBall region = cover_point_and_ball(x, body_ball);
    const int d = body.dim();
    double region_vol = unit_ball_volume(d) * std::pow(region.radius, d);

    const long long batch = 1 << 14;
    int nbatches = static_cast<int>((opt.samples + batch - 1) / batch);
    std::vector<long long> hits(nbatches, 0);
    parallel_batches(
        nbatches,
        [&](int bi) {
            RandomStream rs(derive_seed(opt.seed, "overshoot", static_cast<std::uint64_t>(bi)));
            long long n = std::min(batch, opt.samples - static_cast<long long>(bi) * batch);
            long long h = 0;
            for (long long i = 0; i < n; ++i) {
                Vec y = rs.ball_point(region.center, region.radius);
                if (body.contains(y)) continue;
                if (ray_reaches_body(body, body_ball, x, y)) ++h;
            }
            hits[bi] = h;
        },
        opt.threads);

    long long total_hits = 0;
    for (long long h : hits) total_hits += h;
    double p = static_cast<double>(total_hits) / opt.samples;
    double err = region_vol * std::sqrt(std::max(p * (1.0 - p), 1.0 / opt.samples) /
                                        static_cast<double>(opt.samples));
    OvershootResult res;
    res.value = VolumeEstimate::monte_carlo(region_vol * p, err, opt.samples, opt.seed);
    return res;
}

OvershootResult overshoot(const ConvexBody& body, const Vec& x, const MeasureOptions& opt) {
    if (opt.prefer_exact) {
        if (auto exact = body.exact_overshoot(x)) {
            OvershootResult res;
            res.value = VolumeEstimate::exact(*exact);
            if (auto vp = dynamic_cast<const VPolytope*>(&body)) return overshoot_polytope(*vp, x);
            if (auto hp = dynamic_cast<const HPolytope*>(&body)) return overshoot_polytope(*hp, x);
            return res;
        }
    }
    return overshoot_oracle(body, x, opt);
}

bool illumination_membership(const ConvexBody& body, double t, const Vec& x,
                             const MeasureOptions& opt) {
    return overshoot(body, x, opt).value.value <= t;
}

Vec illumination_boundary_point(const ConvexBody& body, double t, const Vec& origin, const Vec& u,
                                double tol, const MeasureOptions& opt) {
    if (t <= 0.0) throw ConfigError("illumination_boundary_point: t must be positive");
    Vec dir = unit(u);
    auto over = [&](double s) { return overshoot(body, origin + s * dir, opt).value.value; };
    if (over(0.0) > tol) throw GeometryError("illumination_boundary_point: origin not inside K");

    BoundingBall bb = body.bounding_ball();
    double s_exit = (origin - bb.center).norm() + bb.radius;
    double hi = s_exit;
    if (over(hi) < t) {
        hi = 8.0 * s_exit;  // one documented enlargement
        if (over(hi) < t)
            throw NoBracket("illumination_boundary_point: overshoot below t at enlarged bracket");
    }
    double lo = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        double v = over(mid);
        if (std::abs(v - t) <= tol) return origin + mid * dir;
        (v < t ? lo : hi) = mid;
    }
    return origin + 0.5 * (lo + hi) * dir;
}

VPolytope illumination_inner_polytope(const ConvexBody& body, double t, int m, const Vec& origin,
                                      std::uint64_t seed, const MeasureOptions& opt) {
    const int d = body.dim();
    Vec o = origin.size() == d ? origin : Vec(body.interior_point());
    std::vector<Vec> dirs = well_spread_directions(d, m, seed);
    std::vector<Vec> pts(dirs.size());
    double tol = std::max(1e-12, 1e-9 * t);
    parallel_batches(
        static_cast<int>(dirs.size()),
        [&](int i) { pts[i] = illumination_boundary_point(body, t, o, dirs[i], tol, opt); },
        opt.threads);
    return VPolytope(pts);
}

VolumeEstimate illumination_excess_volume(const ConvexBody& body, double t,
                                          const MeasureOptions& opt) {
    const int d = body.dim();

    // Balls and their affine images: K^t is the concentric ball whose
    // boundary overshoot equals t, so the excess is a closed form.
    if (auto ball = dynamic_cast<const Ball*>(&body)) {
        if (d <= 3) {
            double r = ball->radius();
            auto over = [&](double s) { return *ball_overshoot(d, r, s); };
            double lo = r, hi = 2.0 * r;
            while (over(hi) < t) hi *= 2.0;
            for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
                double mid = 0.5 * (lo + hi);
                (over(mid) < t ? lo : hi) = mid;
            }
            double rt = 0.5 * (lo + hi);
            double v = unit_ball_volume(d) * (std::pow(rt, d) - std::pow(r, d));
            return VolumeEstimate::exact(v);
        }
    }

    // Bodies with exact overshoot (polytopes, ellipsoids): dense inner
    // polytope of K^t from the centroid, exact hull volume minus vol(K).
    // The inner bias is one-sided; the half-budget convergence gap is
    // reported in std_error.
    if (body.exact_overshoot(body.interior_point()) && d <= 3) {
        int m = d == 2 ? 2048 : 3000;
        Vec o = body.interior_point();
        std::vector<Vec> dirs = well_spread_directions(d, m, 0x51CEu);
        std::vector<Vec> pts(dirs.size());
        double tol = std::max(1e-12, 1e-9 * t);
        parallel_batches(
            static_cast<int>(dirs.size()),
            [&](int i) { pts[i] = illumination_boundary_point(body, t, o, dirs[i], tol, opt); },
            opt.threads);
        double total = volume(body, opt).value;
        std::vector<Vec> half(pts.begin(), pts.begin() + m / 2);  // prefix-nested directions
        double v_half = VPolytope(half).volume();
        double v_full = VPolytope(pts).volume();
        double excess = std::max(0.0, v_full - total);
        VolumeEstimate e = VolumeEstimate::monte_carlo(excess, std::abs(v_full - v_half), m,
                                                       opt.seed);
        return e;
    }

    // Oracle fallback: sample the cover ball of an enlarged bounding ball and
    // count overshoot(x) <= t outside K.
    BoundingBall bb = body.bounding_ball();
    Vec probe = bb.center + bb.radius * Vec::Unit(d, 0);
    Vec far = illumination_boundary_point(body, t, body.interior_point(), probe - body.interior_point(),
                                          std::max(1e-10, 1e-6 * t), opt);
    double reach = (far - body.interior_point()).norm() + bb.radius;
    BoundingBall region{body.interior_point(), reach};
    double region_vol = unit_ball_volume(d) * std::pow(region.radius, d);
    RandomStream rs(derive_seed(opt.seed, "illum-excess", 0));
    long long hits = 0;
    long long n = std::max<long long>(1, opt.samples / 64);  // each hit needs an overshoot MC
    for (long long i = 0; i < n; ++i) {
        Vec y = rs.ball_point(region.center, region.radius);
        if (body.contains(y)) continue;
        if (overshoot(body, y, opt).value.value <= t) ++hits;
    }
    double p = static_cast<double>(hits) / n;
    double err = region_vol * std::sqrt(std::max(p * (1.0 - p), 1.0 / n) / static_cast<double>(n));
    return VolumeEstimate::monte_carlo(region_vol * p, err, n, opt.seed);
}

}  // namespace cvg
