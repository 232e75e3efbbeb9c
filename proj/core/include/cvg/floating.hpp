#pragma once

#include <cstdint>

#include "cvg/body.hpp"
#include "cvg/caps.hpp"
#include "cvg/polytope.hpp"
#include "cvg/report.hpp"

namespace cvg {

/* Query bundle for the floating body K_t: the level, search budgets, and
   the estimator controls shared by all sub-operations. */
struct FloatingQuery {
    BodyPtr body;
    double t = 0.0;
    int direction_budget = 64;   // sampled start directions for the sphere search
    int optimizer_restarts = 8;  // local descents launched from the best starts
    double tol_rel = 1e-3;       // verdict band around t
    std::uint64_t seed = 0;
    CapSolveOptions cap;
};

struct MinCapResult {
    Vec xi;  // direction of the smallest cut found
    VolumeEstimate volume;
    int evaluations = 0;
};

/* Smallest volume cut off by a halfspace through x: multi-start descent on
   the sphere over the sampled directions.  The result is an upper bound on
   the true infimum (search, not certification). */
MinCapResult min_cap_through_point(const ConvexBody& body, const Vec& x, int direction_budget,
                                   int restarts, std::uint64_t seed,
                                   const CapSolveOptions& opt = {});

enum class FloatVerdict { Inside, Outside, Boundary };

struct FloatMembership {
    FloatVerdict verdict = FloatVerdict::Boundary;
    double min_cap = 0.0;  // smallest cut volume found through x
    Vec certificate;       // cutting direction (meaningful for Outside)
};

/* Outside iff a cut below t(1 - tol_rel) is found (certificate direction);
   Inside iff the searched minimum exceeds t(1 + tol_rel); Boundary in the
   band.  Inside is relative to the search budget. */
FloatMembership floating_membership(const FloatingQuery& q, const Vec& x);

/* Intersection of the m halfspaces cutting volume exactly t along
   well-spread directions; contains K_t by construction.  Propagates
   EmptyIntersection when the truncated intersection is infeasible. */
HPolytope floating_outer_polytope(const FloatingQuery& q, int m, std::uint64_t seed);

/* Inscribed-ball check for isotropic centered bodies: every hyperplane at
   distance vol^{1/d}/(24 e^5 sqrt(pi)) from the origin cuts off more than
   vol/(4 e^4).  The report records the minimal margin over the sampled
   directions. */
Report lemma27_ball_check(const ConvexBody& body, const std::string& label, int directions,
                          std::uint64_t seed, const MeasureOptions& opt = {});

}  // namespace cvg
