#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvg/approx.hpp"
#include "cvg/body.hpp"
#include "cvg/caps.hpp"
#include "cvg/measure.hpp"
#include "cvg/report.hpp"

namespace cvg {

/* Grid controls for the lemma runners: corpus dimensions, random hulls per
   dimension on top of the named bodies, and directions per body. */
struct LemmaGridOptions {
    std::vector<int> dims = {2, 3};
    int random_bodies = 4;
    int directions = 5;
    long long samples = 200'000;
    std::uint64_t seed = 0;
};

struct Theorem21Options {
    int outer_directions = 512;      // facets of the outer floating proxy Q
    int sandwich_directions = 2000;  // support-dominance sample size
    double sandwich_slack = 1e-6;
    GreedyLimits limits;
    CapSolveOptions cap;
    long long samples = 400'000;  // Monte Carlo fallback budget
    std::uint64_t seed = 0;
};

/* The greedy construction plus its four a-posteriori checks (vertex
   membership, support dominance over the floating proxy, the facet-count
   bound, the excess-volume consequence), bundled into one report whose
   binding sub-check decides pass/fail. */
struct Theorem21Result {
    Report report;
    GreedyResult greedy;
};

Theorem21Result verify_theorem21(const BodyPtr& body, const std::string& label, double t,
                                 const Theorem21Options& opt = {});

struct Theorem31Options {
    long long samples = 400'000;
    std::uint64_t seed = 0;
    int n_override = 0;  // 0 = smallest admissible facet count
};

/* Illumination-body comparison at level t.  Throws TargetTooLarge when t
   violates the volume precondition and WindowEmpty when no admissible facet
   count exists at this t. */
Report verify_theorem31(const BodyPtr& body, const std::string& label, double t,
                        const Theorem31Options& opt = {});

/* Same check, but an empty window becomes an explicit non-failing regime
   report instead of an exception. */
Report verify_theorem31_regime_aware(const BodyPtr& body, const std::string& label, double t,
                                     const Theorem31Options& opt = {});

/* Lemma runners keyed by claim id: Lemma2.2i, Lemma2.2ii, Lemma2.3,
   Lemma2.5, Lemma2.6, Lemma2.7.  One report per corpus body. */
std::vector<Report> verify_lemma(const std::string& claim, const LemmaGridOptions& opt = {});

/* Hausdorff-distance sweep: regular n-gons for 3 <= n <= n_max_2d against
   (64/7) pi n^-2, fibonacci sphere hulls against (64/7) pi / n. */
std::vector<Report> verify_hausdorff_bound(int n_max_2d = 512,
                                           std::vector<int> n_grid_3d = {50, 100, 200});

struct ScalingPoint {
    int n = 0;
    double ds = 0.0;  // symmetric-difference distance to the ball
};

struct ScalingResult {
    int dim = 0;
    std::vector<ScalingPoint> points;
    double slope = 0.0;      // least-squares slope of log ds vs log n
    double intercept = 0.0;
    Report report;
};

/* Inscribed-polytope approximation order for the unit ball: regular
   polygons (d = 2, slope window -2 +- 0.02) or fibonacci hulls (d = 3,
   window [-1.3, -0.7]). */
ScalingResult scaling_study(int d, const std::vector<int>& n_grid, std::uint64_t seed = 0);

/* Stable-order claim registry backing `verify --claim` and the
   completeness test. */
const std::vector<std::string>& claim_registry();
bool claim_known(const std::string& claim);

/* Desk-scale default grid for one claim id, or "all" in registry order. */
std::vector<Report> run_claim(const std::string& claim, std::uint64_t seed = 0);

}  // namespace cvg
