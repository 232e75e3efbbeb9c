#pragma once

#include <vector>

#include "cvg/vec.hpp"

namespace cvg {

struct HullFacet {
    std::vector<int> vertices;  // indices into the *input* point list
    Vec normal;                 // unit outward normal
    double offset;              // <normal, x> <= offset on the hull
};

struct HullData {
    std::vector<int> vertex_ids;    // hull vertices, ascending input order
    std::vector<HullFacet> facets;  // merged (non-simplicial where coplanar)
};

/* Convex hull of full-dimensional point sets in R^d, d in {2,3,4}.

   Internally runs an incremental simplicial hull on copies perturbed by a
   deterministic 1e-12-relative jitter (general position without symbolic
   machinery), then re-derives planes from the unperturbed coordinates,
   merges coplanar simplicial facets, and keeps exactly the points whose
   active constraint normals have rank d.  Throws DegenerateInput when the
   points are affinely dependent. */
HullData compute_hull(const std::vector<Vec>& points);

}  // namespace cvg
