#include "cvg/caps.hpp"

#include <algorithm>
#include <cmath>

#include "cvg/errors.hpp"
#include "cvg/rng.hpp"

namespace cvg {

namespace {

double body_scale(const ConvexBody& body) {
    BoundingBall bb = body.bounding_ball();
    return std::max(1.0, bb.center.norm() + bb.radius);
}

void check_supporting(const ConvexBody& body, const Vec& x, const Vec& n, double scale) {
    double h = body.support(n);
    if (std::abs(x.dot(n) - h) > 1e-6 * scale)
        throw NotSupporting("cap: anchor does not support the given normal");
}

}  // namespace

VolumeEstimate cap_volume(const ConvexBody& body, const Vec& x, const Vec& n, double depth,
                          const MeasureOptions& opt) {
    Vec u = unit(n);
    double scale = body_scale(body);
    check_supporting(body, x, u, scale);
    if (depth < 0.0) throw GeometryError("cap_volume: negative depth");
    double c = x.dot(u) - depth;
    // Upper cut {<u,y> >= c} == lower cut of -u at -c.
    return halfspace_volume(body, -u, -c, opt);
}

CutPlane solve_cut_offset(const ConvexBody& body, const Vec& u_in, double t,
                          const CapSolveOptions& opt) {
    Vec u = unit(u_in);
    double scale = body_scale(body);
    double hi = body.support(u);        // cut here -> volume 0
    double lo = -body.support(-u);      // cut here -> whole body
    if (!(hi > lo)) throw DegenerateInput("solve_cut_offset: zero width body");
    if (t < 0.0) throw GeometryError("solve_cut_offset: negative target");

    if (auto exact_total = body.exact_volume()) {
        if (t > *exact_total * (1.0 + 1e-12))
            throw TargetTooLarge("solve_cut_offset: target exceeds body volume");
        MeasureOptions mo;
        mo.prefer_exact = true;
        auto upper = [&](double c) {
            return *exact_total - *body.exact_halfspace_volume(u, c);
        };
        double a = lo, b = hi;
        int iter = 0;
        while (b - a > 1e-13 * scale && iter++ < opt.max_iter) {
            double m = 0.5 * (a + b);
            (upper(m) >= t ? a : b) = m;
        }
        double c = 0.5 * (a + b);
        return {c, VolumeEstimate::exact(upper(c))};
    }

    // Monte Carlo: one fixed sample set; read the offset off the order
    // statistics of the projections of the hits.
    BoundingBall bb = body.bounding_ball();
    const int d = body.dim();
    double ball_vol = unit_ball_volume(d) * std::pow(bb.radius, d);
    RandomStream rs(derive_seed(opt.seed, "cut_offset", 0));
    std::vector<double> proj;
    proj.reserve(static_cast<size_t>(opt.samples / 2));
    for (long long i = 0; i < opt.samples; ++i) {
        Vec x = rs.ball_point(bb.center, bb.radius);
        if (body.contains(x)) proj.push_back(u.dot(x));
    }
    if (proj.empty()) throw SolverStall("solve_cut_offset: no hits in body", ball_vol);
    std::sort(proj.begin(), proj.end(), std::greater<double>());
    double vol_est = ball_vol * static_cast<double>(proj.size()) / opt.samples;
    double p = t / ball_vol;
    double noise = ball_vol * std::sqrt(std::max(p * (1.0 - p), 1.0 / opt.samples) /
                                        static_cast<double>(opt.samples));
    if (noise > opt.tol_rel * std::max(t, 1e-300))
        throw SolverStall("solve_cut_offset: MC noise above tolerance", noise);
    if (t > vol_est + 3.0 * noise)
        throw TargetTooLarge("solve_cut_offset: target exceeds estimated volume");
    double k = p * opt.samples;  // wanted count above the cut
    auto idx = static_cast<size_t>(std::min<double>(std::max(k - 1.0, 0.0),
                                                    static_cast<double>(proj.size() - 1)));
    double c = proj[idx];
    long long above = static_cast<long long>(idx) + 1;
    double achieved = ball_vol * static_cast<double>(above) / opt.samples;
    return {c, VolumeEstimate::monte_carlo(achieved, noise, opt.samples, opt.seed)};
}

Cap solve_cap_depth(const ConvexBody& body, const Vec& x, const Vec& n, double t,
                    const CapSolveOptions& opt) {
    Vec u = unit(n);
    double scale = body_scale(body);
    check_supporting(body, x, u, scale);
    CutPlane cut = solve_cut_offset(body, u, t, opt);
    Cap cap;
    cap.anchor = x;
    cap.normal = u;
    cap.depth = std::max(0.0, x.dot(u) - cut.offset);
    cap.target = t;
    cap.achieved = cut.achieved;
    return cap;
}

bool cap_contains(const Cap& cap, const ConvexBody& body, const Vec& p) {
    double scale = std::max(1.0, cap.anchor.norm());
    if (!body.contains(p)) return false;
    return cap.normal.dot(p) > cap.cut_offset() + 1e-12 * scale;
}

}  // namespace cvg
