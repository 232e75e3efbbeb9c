#pragma once

#include "cvg/body.hpp"
#include "cvg/measure.hpp"

namespace cvg {

/* A cap K intersect {y : <normal,y> >= <normal,anchor> - depth} anchored at
   a boundary point supporting `normal`. */
struct Cap {
    Vec anchor;
    Vec normal;  // unit outward
    double depth = 0.0;
    double target = 0.0;  // requested cut volume
    VolumeEstimate achieved;

    double cut_offset() const { return normal.dot(anchor) - depth; }
};

struct CapSolveOptions {
    double tol_rel = 1e-9;  // achieved-volume tolerance (MC mode stalls above it)
    long long samples = 200'000;
    std::uint64_t seed = 0;
    int threads = 0;
    int max_iter = 200;
};

/* Volume cut off by the cap of given depth at anchor x with outer normal N.
   Throws NotSupporting unless <x,N> is within 1e-6 * scale of support(N). */
VolumeEstimate cap_volume(const ConvexBody& body, const Vec& x, const Vec& n, double depth,
                          const MeasureOptions& opt = {});

/* Cut plane offset c with vol(K intersect {<u,y> >= c}) = t.  Monotone
   bisection on the exact path; on the Monte Carlo path one fixed sample set
   per seed is drawn and the offset read off the order statistics (common
   random numbers, monotone by construction). */
struct CutPlane {
    double offset;
    VolumeEstimate achieved;
};
CutPlane solve_cut_offset(const ConvexBody& body, const Vec& u, double t,
                          const CapSolveOptions& opt = {});

/* Depth solve at a supporting anchor: Cap with achieved volume t. */
Cap solve_cap_depth(const ConvexBody& body, const Vec& x, const Vec& n, double t,
                    const CapSolveOptions& opt = {});

/* Open-cap membership test with the documented strictness margin
   1e-12 * scale: true iff p is in the body and strictly deeper than the cut
   plane.  Used by the greedy vertex selection audit. */
bool cap_contains(const Cap& cap, const ConvexBody& body, const Vec& p);

}  // namespace cvg
