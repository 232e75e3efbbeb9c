#pragma once

#include <memory>
#include <vector>

#include "cvg/body.hpp"
#include "cvg/hull.hpp"

namespace cvg {

struct Halfspace {
    Vec normal;     // unit length
    double offset;  // <normal, x> <= offset
};

namespace detail {
/* Shared immutable representation: canonical vertices, merged facets
   (indices into the vertex list), a simplex decomposition from the exact
   centroid, facet areas, and cached scalar data.  Built once per polytope. */
struct PolyData {
    std::vector<Vec> vertices;
    std::vector<HullFacet> facets;  // facet.vertices index into `vertices`
    std::vector<Mat> simplices;     // d x (d+1) vertex columns, exact tiling
    std::vector<double> facet_areas;
    Vec centroid;  // exact volumetric centroid
    double volume = 0.0;
    double scale = 1.0;
    double interior_margin = 0.0;  // min facet slack at the centroid
    BoundingBall bounding_ball;
};
std::shared_ptr<const PolyData> build_poly_data(const std::vector<Vec>& points);
}  // namespace detail

/* Vertex-represented convex polytope, d in {2,3,4}.  Construction runs the
   hull canonicalization (dedup, coplanar merge, vertex rank filter), so the
   stored vertex list is always irredundant and facets carry exact planes. */
class VPolytope final : public ConvexBody {
public:
    explicit VPolytope(const std::vector<Vec>& points)
        : data_(detail::build_poly_data(points)) {}
    explicit VPolytope(std::shared_ptr<const detail::PolyData> data) : data_(std::move(data)) {}

    int dim() const override { return static_cast<int>(data_->vertices[0].size()); }
    bool contains(const Vec& x) const override;
    double support(const Vec& u) const override;
    Vec support_point(const Vec& u) const override;
    Vec interior_point() const override { return data_->centroid; }
    double interior_margin() const override { return data_->interior_margin; }
    BoundingBall bounding_ball() const override { return data_->bounding_ball; }

    std::optional<double> exact_volume() const override { return data_->volume; }
    std::optional<double> exact_halfspace_volume(const Vec& a, double c) const override;
    std::optional<double> exact_section_volume(const Vec& a, double c) const override;
    std::optional<InertiaData> exact_inertia(const Vec& origin) const override;
    std::optional<double> exact_overshoot(const Vec& x) const override;

    const std::vector<Vec>& vertices() const { return data_->vertices; }
    const std::vector<HullFacet>& facets() const { return data_->facets; }
    const std::vector<Mat>& simplices() const { return data_->simplices; }
    const std::vector<double>& facet_areas() const { return data_->facet_areas; }
    double volume() const { return data_->volume; }
    const Vec& centroid() const { return data_->centroid; }
    double scale() const { return data_->scale; }

    /* Facet vertex indices ordered as a convex cycle (d = 3 only). */
    std::vector<int> facet_cycle(int facet_index) const;

    std::shared_ptr<const detail::PolyData> data() const { return data_; }

private:
    std::shared_ptr<const detail::PolyData> data_;
};

/* Halfspace-represented convex polytope.  Constraints are normalized on
   input; construction enumerates the vertex set (halfplane clipping for
   d = 2, facet-subset intersection for d = 3,4), so every HPolytope also
   carries its exact V-form.  Throws UnboundedPolyhedron / EmptyIntersection
   / DegenerateInput for improper inputs. */
class HPolytope final : public ConvexBody {
public:
    HPolytope(const std::vector<Vec>& normals, const std::vector<double>& offsets);
    explicit HPolytope(const VPolytope& v);

    int dim() const override { return static_cast<int>(constraints_[0].normal.size()); }
    bool contains(const Vec& x) const override;
    double support(const Vec& u) const override { return vform().support(u); }
    Vec support_point(const Vec& u) const override { return vform().support_point(u); }
    Vec interior_point() const override { return vform().interior_point(); }
    double interior_margin() const override { return vform().interior_margin(); }
    BoundingBall bounding_ball() const override { return vform().bounding_ball(); }

    std::optional<double> exact_volume() const override { return vform().exact_volume(); }
    std::optional<double> exact_halfspace_volume(const Vec& a, double c) const override {
        return vform().exact_halfspace_volume(a, c);
    }
    std::optional<double> exact_section_volume(const Vec& a, double c) const override {
        return vform().exact_section_volume(a, c);
    }
    std::optional<InertiaData> exact_inertia(const Vec& origin) const override {
        return vform().exact_inertia(origin);
    }
    std::optional<double> exact_overshoot(const Vec& x) const override;

    const std::vector<Halfspace>& constraints() const { return constraints_; }
    const VPolytope& vform() const { return vform_; }

    /* Positive interior certificate: min constraint slack at the vertex
       centroid (positive iff the interior is nonempty for bounded P). */
    double interior_radius() const;

private:
    std::vector<Halfspace> constraints_;
    VPolytope vform_;
};

struct HullPair {
    VPolytope vpoly;
    HPolytope hpoly;
};

/* Hull of a finite point set; returns matched V- and H-forms. */
HullPair convex_hull(const std::vector<Vec>& points);

/* Vertex enumeration of an H-polytope (canonicalized V-form). */
VPolytope hpoly_vertices(const HPolytope& h);

/* True iff the normal set positively spans R^d (0 strictly inside the hull
   of the normals) — the exact boundedness criterion for H-polyhedra. */
bool normals_positively_span(const std::vector<Vec>& normals);

}  // namespace cvg
