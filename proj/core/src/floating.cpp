#include "cvg/floating.hpp"

#include <algorithm>
#include <cmath>

#include "cvg/directions.hpp"
#include "cvg/optimize.hpp"

namespace cvg {

namespace {

/* Volume cut off beyond the hyperplane through x with normal u. */
double upper_cut_volume(const ConvexBody& body, double total, const Vec& u, double c,
                        const MeasureOptions& mo) {
    return std::max(0.0, total - halfspace_volume(body, u, c, mo).value);
}

}  // namespace

MinCapResult min_cap_through_point(const ConvexBody& body, const Vec& x, int direction_budget,
                                   int restarts, std::uint64_t seed, const CapSolveOptions& opt) {
    const int d = body.dim();
    MeasureOptions mo;
    mo.samples = opt.samples;
    mo.seed = opt.seed;
    mo.threads = opt.threads;
    double total = volume(body, mo).value;

    int evals = 0;
    auto objective = [&](const Vec& u) {
        ++evals;
        return upper_cut_volume(body, total, u, u.dot(x), mo);
    };

    std::vector<Vec> dirs = well_spread_directions(d, std::max(direction_budget, d + 1), seed);
    std::vector<std::pair<double, int>> ranked;
    ranked.reserve(dirs.size());
    for (int i = 0; i < static_cast<int>(dirs.size()); ++i)
        ranked.emplace_back(objective(dirs[i]), i);
    std::sort(ranked.begin(), ranked.end());

    std::vector<Vec> starts;
    for (int i = 0; i < std::min<int>(restarts, ranked.size()); ++i)
        starts.push_back(dirs[ranked[i].second]);

    SphereMinOptions smo;
    smo.angle_tol = 1e-10;
    smo.seed = seed;
    SphereMinResult best = minimize_on_sphere_from(starts, objective, smo);

    MinCapResult res;
    res.xi = best.point;
    res.volume = VolumeEstimate::exact(best.value);
    res.evaluations = evals;
    return res;
}

FloatMembership floating_membership(const FloatingQuery& q, const Vec& x) {
    FloatMembership out;
    MinCapResult mc = min_cap_through_point(*q.body, x, q.direction_budget, q.optimizer_restarts,
                                            q.seed, q.cap);
    out.min_cap = mc.volume.value;
    out.certificate = mc.xi;
    if (out.min_cap < q.t * (1.0 - q.tol_rel))
        out.verdict = FloatVerdict::Outside;
    else if (out.min_cap > q.t * (1.0 + q.tol_rel))
        out.verdict = FloatVerdict::Inside;
    else
        out.verdict = FloatVerdict::Boundary;
    return out;
}

HPolytope floating_outer_polytope(const FloatingQuery& q, int m, std::uint64_t seed) {
    const int d = q.body->dim();
    if (m < d + 1) throw ConfigError("floating_outer_polytope: need at least d+1 directions");
    std::vector<Vec> dirs = well_spread_directions(d, m, seed);
    std::vector<Vec> normals;
    std::vector<double> offsets;
    normals.reserve(m);
    offsets.reserve(m);
    for (const Vec& u : dirs) {
        CutPlane cut = solve_cut_offset(*q.body, u, q.t, q.cap);
        normals.push_back(u);
        offsets.push_back(cut.offset);
    }
    return HPolytope(normals, offsets);  // throws EmptyIntersection when K_t is gone
}

Report lemma27_ball_check(const ConvexBody& body, const std::string& label, int directions,
                          std::uint64_t seed, const MeasureOptions& opt) {
    const int d = body.dim();
    double vol = volume(body, opt).value;
    double r0 = std::pow(vol, 1.0 / d) / (24.0 * std::exp(5.0) * std::sqrt(M_PI));
    double level = vol / (4.0 * std::exp(4.0));

    std::vector<Vec> dirs = well_spread_directions(d, directions, seed);
    double min_cut = std::numeric_limits<double>::infinity();
    int argmin = 0;
    for (int i = 0; i < static_cast<int>(dirs.size()); ++i) {
        double cut = vol - halfspace_volume(body, dirs[i], r0, opt).value;
        if (cut < min_cut) {
            min_cut = cut;
            argmin = i;
        }
    }

    Report r = Report::make("Lemma2.7", label, d, level, min_cut, 0.0, seed);
    r.params["volume"] = vol;
    r.params["radius"] = r0;
    r.params["directions"] = directions;
    r.params["worst_direction"] = argmin;
    r.details = "min over directions of the volume cut beyond distance r0 vs vol/(4e^4)";
    return r;
}

}  // namespace cvg
