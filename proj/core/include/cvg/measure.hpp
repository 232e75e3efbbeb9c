#pragma once

#include <cstdint>

#include "cvg/body.hpp"
#include "cvg/polytope.hpp"
#include "cvg/types.hpp"

namespace cvg {

/* Estimation controls shared by the measure operations.  `samples` and
   `seed` drive the Monte Carlo fallback; exact paths ignore them.  Batches
   are accumulated in index order, so results do not depend on `threads`. */
struct MeasureOptions {
    long long samples = 1'000'000;
    std::uint64_t seed = 0;
    int threads = 0;
    bool prefer_exact = true;
};

/* Exact volume of a polytope via its simplex tiling. */
VolumeEstimate polytope_volume_exact(const VPolytope& p);

/* Hit-ratio Monte Carlo volume over the bounding ball. */
VolumeEstimate mc_volume(const ConvexBody& body, long long samples, std::uint64_t seed,
                         int threads = 0);

/* Volume with exact dispatch (closed forms / tilings) and MC fallback. */
VolumeEstimate volume(const ConvexBody& body, const MeasureOptions& opt = {});

/* vol_d(K intersect {<a,x> <= c}) for unit a; exact when the body has the
   hook, otherwise common-random-numbers MC (one fixed sample set per seed). */
VolumeEstimate halfspace_volume(const ConvexBody& body, const Vec& a, double c,
                                const MeasureOptions& opt = {});

/* vol_{d-1}(K intersect {x : <normal, x-point> = 0}); in-plane hit sampling
   as the fallback. */
VolumeEstimate section_volume(const ConvexBody& body, const Vec& point, const Vec& normal,
                              const MeasureOptions& opt = {});

/* Centroid and raw second moment about `origin`. */
InertiaData inertia(const ConvexBody& body, const Vec& origin, const MeasureOptions& opt = {});

/* vol(A symmetric-difference B); exact fast path when both are polytopes
   and one contains the other, otherwise MC over the covering ball. */
VolumeEstimate symmetric_difference(const ConvexBody& a, const ConvexBody& b,
                                    const MeasureOptions& opt = {});

}  // namespace cvg
