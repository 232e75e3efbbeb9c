#include "cvg/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cvg/directions.hpp"
#include "cvg/measure.hpp"
#include "cvg/optimize.hpp"
#include "cvg/rng.hpp"

namespace cvg {

namespace {

/* Solve the t-cut in direction n and package the cap anchored at the
   support point.  Candidate index feeds the sub-seed so Monte Carlo solves
   stay reproducible per candidate. */
Cap make_candidate_cap(const ConvexBody& body, const Vec& n, double t,
                       const CapSolveOptions& base_opt, std::uint64_t run_seed,
                       std::uint64_t candidate_index) {
    CapSolveOptions opt = base_opt;
    opt.seed = derive_seed(run_seed, "greedy-cut", candidate_index);
    CutPlane cut = solve_cut_offset(body, n, t, opt);
    Cap cap;
    cap.anchor = body.support_point(n);
    cap.normal = n;
    cap.depth = n.dot(cap.anchor) - cut.offset;
    cap.target = t;
    cap.achieved = cut.achieved;
    return cap;
}

bool cap_free_of(const Cap& cap, const ConvexBody& body, const std::vector<Vec>& vertices) {
    for (const Vec& v : vertices)
        if (cap_contains(cap, body, v)) return false;
    return true;
}

}  // namespace

GreedyResult greedy_inscribed(const ConvexBody& body, double t, std::uint64_t seed,
                              const GreedyLimits& limits, const CapSolveOptions& cap_opt) {
    const int d = body.dim();
    if (!(t > 0.0)) throw ConfigError("greedy_inscribed: cap volume must be positive");

    MeasureOptions vol_opt;
    vol_opt.seed = derive_seed(seed, "greedy-volume", 0);
    const double vol = volume(body, vol_opt).value;
    if (t > limits.threshold_frac * vol) {
        std::ostringstream os;
        os << "greedy_inscribed: t = " << t << " above admissible fraction "
           << limits.threshold_frac << " of vol = " << vol;
        throw TargetTooLarge(os.str());
    }

    GreedyRun run;
    run.t = t;
    run.seed = seed;
    run.rejection_streak_limit = limits.rejection_streak_limit;

    auto attempt = [&](const Vec& direction) -> bool {
        const auto idx = static_cast<std::uint64_t>(run.candidates_tried);
        ++run.candidates_tried;
        Vec n = direction / direction.norm();
        Cap cap = make_candidate_cap(body, n, t, cap_opt, seed, idx);
        if (!cap_free_of(cap, body, run.vertices)) return false;
        run.vertices.push_back(cap.anchor);
        run.caps.push_back(cap);
        return true;
    };

    /* Phase 1: random support directions until the rejection streak says the
       acceptable region has become hard to hit. */
    RandomStream dir_stream(derive_seed(seed, "greedy-dir", 0));
    run.terminated_by = GreedyStop::IterationCap;
    int streak = 0;
    while (run.candidates_tried < limits.max_candidates &&
           static_cast<int>(run.vertices.size()) < limits.max_vertices) {
        if (streak >= limits.rejection_streak_limit) {
            run.terminated_by = GreedyStop::Saturation;
            break;
        }
        if (attempt(dir_stream.sphere_direction(d)))
            streak = 0;
        else
            ++streak;
    }

    /* Phase 2: the streak rule is probabilistic, so chase leftover
       acceptance directions explicitly.  g(u) = h_P(u) - c_t(u) is negative
       exactly where the cap of volume t in direction u holds no vertex yet;
       once min g >= 0 every such cap is occupied and the floating body at
       level t lies inside the hull. */
    if (run.terminated_by == GreedyStop::Saturation) {
        const double slack = 1e-10 * body.bounding_ball().radius;
        for (int round = 0; round < limits.saturation_refine_rounds; ++round) {
            if (static_cast<int>(run.vertices.size()) >= limits.max_vertices ||
                run.candidates_tried >= limits.max_candidates) {
                run.terminated_by = GreedyStop::IterationCap;
                break;
            }
            CapSolveOptions probe_opt = cap_opt;
            probe_opt.seed = derive_seed(seed, "greedy-sat", static_cast<std::uint64_t>(round));
            auto g = [&](const Vec& u) {
                CutPlane cut = solve_cut_offset(body, u, t, probe_opt);
                double h = -std::numeric_limits<double>::infinity();
                for (const Vec& v : run.vertices) h = std::max(h, u.dot(v));
                return h - cut.offset;
            };
            SphereMinOptions search;
            search.starts = 16;
            search.angle_tol = 1e-6;
            search.max_rounds = 60;
            search.seed = derive_seed(seed, "greedy-sat-start", static_cast<std::uint64_t>(round));
            SphereMinResult best = minimize_on_sphere(d, g, search);
            if (best.value >= -slack) break;  // saturated for real
            if (attempt(best.point)) ++run.refine_accepts;
        }
    }

    if (static_cast<int>(run.vertices.size()) < d + 1)
        throw DegenerateInput("greedy_inscribed: fewer than d+1 accepted vertices");
    return {VPolytope(run.vertices), run};
}

HPolytope circumscribed_facets(const ConvexBody& body, const std::vector<Vec>& directions) {
    const int d = body.dim();
    if (static_cast<int>(directions.size()) < d + 1)
        throw ConfigError("circumscribed_facets: need at least d+1 directions");
    std::vector<Vec> normals;
    std::vector<double> offsets;
    normals.reserve(directions.size());
    offsets.reserve(directions.size());
    for (const Vec& u : directions) {
        const double len = u.norm();
        if (!(len > 0.0)) throw ConfigError("circumscribed_facets: zero direction");
        Vec n = u / len;
        normals.push_back(n);
        offsets.push_back(body.support(n));
    }
    if (!normals_positively_span(normals))
        throw UnboundedPolyhedron(
            "circumscribed_facets: directions do not positively span, tangent "
            "halfspaces leave a recession cone");
    return HPolytope(normals, offsets);
}

BallPolytopeResult ball_inscribed_polytope(int d, int n, BallConstruction mode,
                                           std::uint64_t seed) {
    if (n < d + 1) throw ConfigError("ball_inscribed_polytope: need at least d+1 vertices");

    auto finish = [](std::vector<Vec> pts) {
        VPolytope poly(pts);
        double min_offset = std::numeric_limits<double>::infinity();
        for (const auto& f : poly.facets()) min_offset = std::min(min_offset, f.offset);
        if (!(min_offset > 0.0))
            throw DegenerateInput("ball_inscribed_polytope: origin not interior to the hull");
        /* Vertices sit on the sphere, so the one-sided gap 1 - min facet
           distance is the exact Hausdorff distance to the ball. */
        return BallPolytopeResult{std::move(poly), 1.0 - min_offset};
    };

    switch (mode) {
        case BallConstruction::Regular:
            if (d != 2)
                throw ConfigError("ball_inscribed_polytope: regular mode is 2-d only");
            return finish(circle_directions(n));
        case BallConstruction::Fibonacci:
            if (d != 3)
                throw ConfigError("ball_inscribed_polytope: fibonacci mode is 3-d only");
            return finish(fibonacci_sphere(n));
        case BallConstruction::Random: {
            for (int attempt = 0; attempt < 64; ++attempt) {
                RandomStream rs(derive_seed(seed, "ball-poly", static_cast<std::uint64_t>(attempt)));
                std::vector<Vec> pts;
                pts.reserve(n);
                for (int i = 0; i < n; ++i) pts.push_back(rs.sphere_direction(d));
                try {
                    return finish(std::move(pts));
                } catch (const DegenerateInput&) {
                    continue;  // coplanar or hemisphere-confined draw; redraw
                }
            }
            throw DegenerateInput("ball_inscribed_polytope: no valid random draw in 64 attempts");
        }
    }
    throw ConfigError("ball_inscribed_polytope: unknown construction");
}

}  // namespace cvg
