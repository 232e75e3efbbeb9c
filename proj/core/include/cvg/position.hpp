#pragma once

#include <string>

#include "cvg/body.hpp"
#include "cvg/measure.hpp"
#include "cvg/report.hpp"

namespace cvg {

/* Type-aware affine maps: polytopes map their vertices, balls become
   ellipsoids, H-forms transform their constraints, generic oracles are
   wrapped in AffineImage.  Exactness of the volumetrics is preserved for
   the concrete types. */
BodyPtr apply_linear(const BodyPtr& body, const Mat& t);
BodyPtr translate_body(const BodyPtr& body, const Vec& v);

/* Body translated so its centroid (exact for polytopes, MC otherwise) is at
   the origin. */
BodyPtr center_at_centroid(const BodyPtr& body, const MeasureOptions& opt = {});

/* Result of the one-shot isotropic normalization T = (det M)^{1/2d} M^{-1/2}
   applied to a centered body, where M is the raw second-moment matrix.  The
   transformed second moment is (det M)^{1/d} * Identity analytically; the
   residual is re-measured from the transformed body. */
struct IsotropicResult {
    BodyPtr body;
    Mat transform;            // det = 1
    Vec translated_centroid;  // measured centroid of the input
    double isotropy_constant = 0.0;
    double residual = 0.0;  // max off-diagonal magnitude / mean diagonal
};

/* Requires the centroid at the origin and M positive definite; throws
   IllConditioned when the moment eigenvalue ratio exceeds 1e12. */
IsotropicResult isotropic_transform(const BodyPtr& centered, const MeasureOptions& opt = {});

/* Convenience: center, then normalize. */
IsotropicResult isotropic_body(const BodyPtr& body, const MeasureOptions& opt = {});

/* Centroid-hyperplane diagnostics in direction xi:
     - both halfspace volume fractions at the centroid hyperplane within
       [(d/(d+1))^d, 1-(d/(d+1))^d] (and so within the weaker 1/e bounds);
     - max section over parallel hyperplanes <= e * central section.
   The report carries the binding inequality; all measured quantities are in
   the details string. */
Report grunbaum_ratios(const ConvexBody& body, const std::string& label, const Vec& xi,
                       const MeasureOptions& opt = {});

/* Max of the (unimodal) section profile along xi: coarse grid plus golden
   refinement around the best node. */
double max_parallel_section(const ConvexBody& body, const Vec& xi, const MeasureOptions& opt = {});

/* Width functional: smallest s >= 0 with
   central section >= e * section at distance s beyond the centroid. */
struct ThetaResult {
    Vec xi;
    double theta = 0.0;
    double central_section = 0.0;
};

/* Assumes the centroid at the origin.  Sections along xi are unimodal
   (Brunn-Minkowski), so the first crossing lies on the decreasing branch and
   bisection applies; if no crossing exists inside the body the width beyond
   the centroid is returned. */
ThetaResult theta(const ConvexBody& centered, const Vec& xi, double tol = 1e-9,
                  const MeasureOptions& opt = {});

}  // namespace cvg
