#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cvg/body.hpp"
#include "cvg/caps.hpp"
#include "cvg/polytope.hpp"

namespace cvg {

/* Largest admissible cap fraction t / vol(K) for the inscribed greedy. */
inline double greedy_threshold_frac() { return 0.25 * std::exp(-5.0); }

struct GreedyLimits {
    int rejection_streak_limit = 200;
    long long max_candidates = 100'000;
    int max_vertices = 20'000;
    int saturation_refine_rounds = 64;  // post-streak acceptance-direction searches
    double threshold_frac = greedy_threshold_frac();
};

enum class GreedyStop { Saturation, IterationCap };

/* Audit record of one greedy run: accepted vertices with their caps, in
   acceptance order.  Every decision is re-checkable from the stored caps. */
struct GreedyRun {
    std::vector<Vec> vertices;
    std::vector<Cap> caps;
    double t = 0.0;
    int rejection_streak_limit = 0;
    GreedyStop terminated_by = GreedyStop::Saturation;
    long long candidates_tried = 0;
    int refine_accepts = 0;  // vertices added by the saturation search
    std::uint64_t seed = 0;
};

struct GreedyResult {
    VPolytope polytope;
    GreedyRun run;
};

/* Greedy inscribed polytope: boundary candidates from sampled support
   directions, each with the cap of volume t at its own direction; accept
   iff no prior vertex lies in the open cap.  After the rejection streak, a
   sphere search for remaining acceptance directions closes the gap between
   the probabilistic stopping rule and the exhaustion argument. */
GreedyResult greedy_inscribed(const ConvexBody& body, double t, std::uint64_t seed,
                              const GreedyLimits& limits = {}, const CapSolveOptions& cap = {});

/* Intersection of the supporting halfspaces for the given outward
   directions; contains the body.  Throws UnboundedPolyhedron when the
   directions do not positively span. */
HPolytope circumscribed_facets(const ConvexBody& body, const std::vector<Vec>& directions);

enum class BallConstruction { Regular, Fibonacci, Random };

struct BallPolytopeResult {
    VPolytope polytope;
    double hausdorff = 0.0;  // 1 - min facet-plane distance from the origin
};

/* Inscribed polytope of the unit ball with n vertices on the sphere.
   Regular is d = 2 only; Fibonacci is d = 3 only; Random works for any d
   and retries hemispherically-confined draws. */
BallPolytopeResult ball_inscribed_polytope(int d, int n, BallConstruction mode,
                                           std::uint64_t seed = 0);

}  // namespace cvg
