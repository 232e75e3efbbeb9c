#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cvg/body.hpp"
#include "cvg/measure.hpp"
#include "cvg/polytope.hpp"

namespace cvg {

/* Overshoot vol_d([x,K] \ K): zero inside K, convex in x. */
struct OvershootResult {
    VolumeEstimate value;
    // (facet index, <xi_i, x - x_i>) for the facets with positive excess;
    // filled on the exact facet-formula path.
    std::vector<std::pair<int, double>> active_facets;
};

/* Exact facet formula (1/d) sum_i max{0, <xi_i, x - x_i>} vol_{d-1}(F_i). */
OvershootResult overshoot_polytope(const VPolytope& p, const Vec& x);
OvershootResult overshoot_polytope(const HPolytope& p, const Vec& x);

/* Facet (d-1)-volumes in facet order. */
std::vector<double> facet_areas(const VPolytope& p);

/* Monte Carlo overshoot for oracle bodies: a sample y counts iff y is
   outside K and the ray from x through y reaches K at parameter >= 1. */
OvershootResult overshoot_oracle(const ConvexBody& body, const Vec& x,
                                 const MeasureOptions& opt = {});

/* Dispatch: exact hook (polytopes, balls/ellipsoids d <= 3) else MC. */
OvershootResult overshoot(const ConvexBody& body, const Vec& x, const MeasureOptions& opt = {});

/* x in K^t, i.e. overshoot(x) <= t (exact path preferred). */
bool illumination_membership(const ConvexBody& body, double t, const Vec& x,
                             const MeasureOptions& opt = {});

/* Point p on the ray origin + s * u with |overshoot(p) - t| <= tol.
   The overshoot is zero on K and nondecreasing beyond the boundary along
   the ray, so bisection applies; throws NoBracket when the level is not
   reached after one bracket enlargement. */
Vec illumination_boundary_point(const ConvexBody& body, double t, const Vec& origin, const Vec& u,
                                double tol = 1e-10, const MeasureOptions& opt = {});

/* Hull of m boundary points of K^t along well-spread rays from `origin`
   (defaults to the centroid when origin is empty). */
VPolytope illumination_inner_polytope(const ConvexBody& body, double t, int m, const Vec& origin,
                                      std::uint64_t seed, const MeasureOptions& opt = {});

/* vol_d(K^t \ K).  Closed form for balls, dense inner polytopes for
   polytopes (d <= 3), Monte Carlo fallback otherwise. */
VolumeEstimate illumination_excess_volume(const ConvexBody& body, double t,
                                          const MeasureOptions& opt = {});

}  // namespace cvg
