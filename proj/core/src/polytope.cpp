#include "cvg/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cvg/errors.hpp"

namespace cvg {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/* Volume of a full-dimensional simplex given as d x (d+1) vertex columns. */
double simplex_volume(const Mat& s) {
    const int d = static_cast<int>(s.rows());
    Mat e(d, d);
    for (int j = 0; j < d; ++j) e.col(j) = s.col(j + 1) - s.col(0);
    return std::abs(e.determinant()) / factorial(d);
}

/* k-volume of a k-simplex embedded in R^m (k+1 vertex columns). */
double embedded_simplex_volume(const Mat& s) {
    const int k = static_cast<int>(s.cols()) - 1;
    Mat e(s.rows(), k);
    for (int j = 0; j < k; ++j) e.col(j) = s.col(j + 1) - s.col(0);
    return std::sqrt(std::max(0.0, (e.transpose() * e).determinant())) / factorial(k);
}

std::vector<int> angular_order(const std::vector<Vec>& pts) {
    Vec mean = Vec::Zero(2);
    for (const Vec& p : pts) mean += p;
    mean /= static_cast<double>(pts.size());
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::atan2(pts[a][1] - mean[1], pts[a][0] - mean[0]) <
               std::atan2(pts[b][1] - mean[1], pts[b][0] - mean[0]);
    });
    return order;
}

/* Tiling of the hull of a full-dimensional point set in R^k by k-simplices.
   k = 1: segment; k = 2: angular fan; k >= 3: hull recursion over facets. */
std::vector<Mat> decompose_full_dim(const std::vector<Vec>& pts, int k) {
    std::vector<Mat> out;
    if (k == 1) {
        double lo = pts[0][0], hi = pts[0][0];
        for (const Vec& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        Mat s(1, 2);
        s(0, 0) = lo;
        s(0, 1) = hi;
        out.push_back(s);
        return out;
    }
    if (k == 2) {
        std::vector<int> order = angular_order(pts);
        for (size_t i = 1; i + 1 < order.size(); ++i) {
            Mat s(2, 3);
            s.col(0) = pts[order[0]];
            s.col(1) = pts[order[i]];
            s.col(2) = pts[order[i + 1]];
            out.push_back(s);
        }
        return out;
    }
    HullData hull = compute_hull(pts);
    Vec apex = Vec::Zero(k);
    for (int id : hull.vertex_ids) apex += pts[id];
    apex /= static_cast<double>(hull.vertex_ids.size());
    for (const auto& f : hull.facets) {
        // Decompose the facet in its own plane, then cone to the apex.
        Mat basis = tangent_basis(f.normal);
        const Vec& origin = pts[f.vertices[0]];
        std::vector<Vec> coords;
        coords.reserve(f.vertices.size());
        for (int id : f.vertices) coords.push_back(basis.transpose() * (pts[id] - origin));
        for (const Mat& fs : decompose_full_dim(coords, k - 1)) {
            Mat s(k, k + 1);
            s.col(0) = apex;
            for (int j = 0; j < k; ++j) s.col(j + 1) = origin + basis * fs.col(j);
            out.push_back(s);
        }
    }
    return out;
}

/* Facet decomposition into (d-1)-simplices embedded in R^d. */
std::vector<Mat> facet_simplices(const std::vector<Vec>& verts, const HullFacet& f) {
    const int d = static_cast<int>(verts[0].size());
    std::vector<Mat> out;
    if (static_cast<int>(f.vertices.size()) == d) {
        Mat s(d, d);
        for (int j = 0; j < d; ++j) s.col(j) = verts[f.vertices[j]];
        out.push_back(s);
        return out;
    }
    Mat basis = tangent_basis(f.normal);
    const Vec& origin = verts[f.vertices[0]];
    std::vector<Vec> coords;
    coords.reserve(f.vertices.size());
    for (int id : f.vertices) coords.push_back(basis.transpose() * (verts[id] - origin));
    for (const Mat& fs : decompose_full_dim(coords, d - 1)) {
        Mat s(d, d);
        for (int j = 0; j < d; ++j) s.col(j) = origin + basis * fs.col(j);
        out.push_back(s);
    }
    return out;
}

/* Exact volume of {x in S : <a,x> <= c} for a d-simplex S.  Single-vertex
   cases use the corner product formula; mixed splits fall back to tiling
   the clipped piece. */
double clipped_simplex_volume(const Mat& s, const Vec& a, double c) {
    const int d = static_cast<int>(s.rows());
    const int nv = d + 1;
    double vol = simplex_volume(s);
    if (vol == 0.0) return 0.0;
    Eigen::VectorXd f(nv);
    double fmax = 0.0;
    for (int i = 0; i < nv; ++i) {
        f[i] = a.dot(s.col(i)) - c;
        fmax = std::max(fmax, std::abs(f[i]));
    }
    const double tol = 1e-12 * (fmax + 1e-300);
    std::vector<int> pos, neg;
    for (int i = 0; i < nv; ++i) {
        if (f[i] > tol) pos.push_back(i);
        else if (f[i] < -tol) neg.push_back(i);
    }
    if (pos.empty()) return vol;
    if (neg.empty()) return 0.0;

    auto corner_fraction = [&](int i, const std::vector<int>& others_strict) {
        double frac = 1.0;
        for (int j = 0; j < nv; ++j) {
            if (j == i) continue;
            bool strict = std::find(others_strict.begin(), others_strict.end(), j) !=
                          others_strict.end();
            if (strict) frac *= f[i] / (f[i] - f[j]);
            // on-plane vertices contribute factor 1 (crossing at the vertex)
        }
        return frac;
    };
    if (neg.size() == 1) return vol * corner_fraction(neg[0], pos);
    if (pos.size() == 1) return vol * (1.0 - corner_fraction(pos[0], neg));

    // Mixed split (possible for d >= 3): tile the kept piece directly.
    std::vector<Vec> piece;
    for (int i = 0; i < nv; ++i)
        if (f[i] <= tol) piece.push_back(s.col(i));
    for (int i : neg) {
        for (int j : pos) {
            double t = f[i] / (f[i] - f[j]);
            piece.push_back(s.col(i) + t * (s.col(j) - s.col(i)));
        }
    }
    try {
        double v = 0.0;
        for (const Mat& ps : decompose_full_dim(piece, d)) v += simplex_volume(ps);
        return v;
    } catch (const DegenerateInput&) {
        return 0.0;  // piece is numerically flat
    }
}

/* (d-1)-volume of S intersect {<a,x> = c}.  Counted only when the simplex
   has a strictly positive vertex, so tiling facets lying inside the cut
   plane are attributed to exactly one side. */
double simplex_section_volume(const Mat& s, const Vec& a, double c) {
    const int d = static_cast<int>(s.rows());
    const int nv = d + 1;
    Eigen::VectorXd f(nv);
    double fmax = 0.0;
    for (int i = 0; i < nv; ++i) {
        f[i] = a.dot(s.col(i)) - c;
        fmax = std::max(fmax, std::abs(f[i]));
    }
    const double tol = 1e-12 * (fmax + 1e-300);
    bool any_pos = false, any_neg = false;
    for (int i = 0; i < nv; ++i) {
        if (f[i] > tol) any_pos = true;
        if (f[i] < -tol) any_neg = true;
    }
    if (!any_pos) return 0.0;
    std::vector<Vec> pts;
    for (int i = 0; i < nv; ++i)
        if (std::abs(f[i]) <= tol) pts.push_back(s.col(i));
    for (int i = 0; i < nv; ++i) {
        if (f[i] >= -tol) continue;
        for (int j = 0; j < nv; ++j) {
            if (f[j] <= tol) continue;
            double t = f[i] / (f[i] - f[j]);
            pts.push_back(s.col(i) + t * (s.col(j) - s.col(i)));
        }
    }
    (void)any_neg;
    if (static_cast<int>(pts.size()) < d) return 0.0;
    Mat basis = tangent_basis(a);
    std::vector<Vec> coords;
    coords.reserve(pts.size());
    for (const Vec& p : pts) coords.push_back(basis.transpose() * (p - pts[0]));
    if (d == 2) {
        double lo = coords[0][0], hi = coords[0][0];
        for (const Vec& q : coords) {
            lo = std::min(lo, q[0]);
            hi = std::max(hi, q[0]);
        }
        return hi - lo;
    }
    try {
        double v = 0.0;
        for (const Mat& ps : decompose_full_dim(coords, d - 1)) v += embedded_simplex_volume(ps);
        return v;
    } catch (const DegenerateInput&) {
        return 0.0;
    }
}

}  // namespace

namespace detail {

std::shared_ptr<const PolyData> build_poly_data(const std::vector<Vec>& points) {
    HullData hull = compute_hull(points);
    auto data = std::make_shared<PolyData>();
    const int d = static_cast<int>(points[0].size());

    std::vector<int> remap(points.size(), -1);
    for (size_t k = 0; k < hull.vertex_ids.size(); ++k) {
        remap[hull.vertex_ids[k]] = static_cast<int>(k);
        data->vertices.push_back(points[hull.vertex_ids[k]]);
    }
    for (auto& f : hull.facets) {
        HullFacet g;
        g.normal = f.normal;
        g.offset = f.offset;
        for (int id : f.vertices) g.vertices.push_back(remap[id]);
        data->facets.push_back(std::move(g));
    }

    data->scale = 1.0;
    for (const Vec& v : data->vertices)
        data->scale = std::max(data->scale, v.lpNorm<Eigen::Infinity>());

    // Tile from the vertex mean (strictly interior), then locate the exact
    // centroid from the tiling.
    Vec apex = Vec::Zero(d);
    for (const Vec& v : data->vertices) apex += v;
    apex /= static_cast<double>(data->vertices.size());

    Vec weighted = Vec::Zero(d);
    for (size_t fi = 0; fi < data->facets.size(); ++fi) {
        double area = 0.0;
        for (const Mat& fs : facet_simplices(data->vertices, data->facets[fi])) {
            area += embedded_simplex_volume(fs);
            Mat s(d, d + 1);
            s.col(0) = apex;
            for (int j = 0; j < d; ++j) s.col(j + 1) = fs.col(j);
            double vol = simplex_volume(s);
            if (vol <= 0.0) continue;
            Vec cg = Vec::Zero(d);
            for (int j = 0; j <= d; ++j) cg += s.col(j);
            cg /= static_cast<double>(d + 1);
            data->simplices.push_back(s);
            data->volume += vol;
            weighted += vol * cg;
        }
        data->facet_areas.push_back(area);
    }
    if (!(data->volume > 0.0))
        throw DegenerateInput("polytope: zero volume after decomposition");
    data->centroid = weighted / data->volume;

    data->interior_margin = 1e300;
    for (const auto& f : data->facets)
        data->interior_margin =
            std::min(data->interior_margin, f.offset - f.normal.dot(data->centroid));

    double r = 0.0;
    for (const Vec& v : data->vertices) r = std::max(r, (v - data->centroid).norm());
    data->bounding_ball = {data->centroid, r};
    return data;
}

}  // namespace detail

// ------------------------------------------------------------ VPolytope

bool VPolytope::contains(const Vec& x) const {
    const double tol = 1e-12 * std::max(1.0, data_->scale);
    for (const auto& f : data_->facets)
        if (f.normal.dot(x) > f.offset + tol) return false;
    return true;
}

double VPolytope::support(const Vec& u) const {
    double best = -1e300;
    for (const Vec& v : data_->vertices) best = std::max(best, v.dot(u));
    return best;
}

Vec VPolytope::support_point(const Vec& u) const {
    int best = 0;
    double bestval = data_->vertices[0].dot(u);
    for (size_t i = 1; i < data_->vertices.size(); ++i) {
        double val = data_->vertices[i].dot(u);
        if (val > bestval) {
            bestval = val;
            best = static_cast<int>(i);
        }
    }
    return data_->vertices[best];
}

std::optional<double> VPolytope::exact_halfspace_volume(const Vec& a, double c) const {
    double v = 0.0;
    for (const Mat& s : data_->simplices) v += clipped_simplex_volume(s, a, c);
    return v;
}

std::optional<double> VPolytope::exact_section_volume(const Vec& a, double c) const {
    double v = 0.0;
    for (const Mat& s : data_->simplices) v += simplex_section_volume(s, a, c);
    return v;
}

std::optional<InertiaData> VPolytope::exact_inertia(const Vec& origin) const {
    const int d = dim();
    InertiaData data;
    data.origin = origin;
    data.volume = data_->volume;
    data.centroid = data_->centroid;
    Mat m = Mat::Zero(d, d);
    for (const Mat& s : data_->simplices) {
        double vol = simplex_volume(s);
        Mat vv = Mat::Zero(d, d);
        Vec sum = Vec::Zero(d);
        for (int j = 0; j <= d; ++j) {
            Vec w = s.col(j) - origin;
            vv += w * w.transpose();
            sum += w;
        }
        m += vol / ((d + 1.0) * (d + 2.0)) * (vv + sum * sum.transpose());
    }
    data.second_moment = m;
    data.method = EstimateMethod::Exact;
    return data;
}

std::optional<double> VPolytope::exact_overshoot(const Vec& x) const {
    const int d = dim();
    double acc = 0.0;
    for (size_t fi = 0; fi < data_->facets.size(); ++fi) {
        double excess = data_->facets[fi].normal.dot(x) - data_->facets[fi].offset;
        if (excess > 0.0) acc += excess * data_->facet_areas[fi];
    }
    return acc / d;
}

std::vector<int> VPolytope::facet_cycle(int facet_index) const {
    if (dim() != 3) throw GeometryError("facet_cycle: only defined for d = 3");
    const auto& f = data_->facets[facet_index];
    Mat basis = tangent_basis(f.normal);
    const Vec& origin = data_->vertices[f.vertices[0]];
    std::vector<Vec> coords;
    coords.reserve(f.vertices.size());
    for (int id : f.vertices) coords.push_back(basis.transpose() * (data_->vertices[id] - origin));
    std::vector<int> order = angular_order(coords);
    std::vector<int> cycle;
    cycle.reserve(order.size());
    for (int k : order) cycle.push_back(f.vertices[k]);
    // Orient the cycle so that the right-hand rule matches the outward normal.
    if (cycle.size() >= 3) {
        Vec e1 = data_->vertices[cycle[1]] - data_->vertices[cycle[0]];
        Vec e2 = data_->vertices[cycle[2]] - data_->vertices[cycle[1]];
        Vec cr(3);
        cr << e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
            e1[0] * e2[1] - e1[1] * e2[0];
        if (cr.dot(f.normal) < 0.0) std::reverse(cycle.begin(), cycle.end());
    }
    return cycle;
}

// ------------------------------------------------------------ HPolytope

namespace {

std::vector<Halfspace> normalize_constraints(const std::vector<Vec>& normals,
                                             const std::vector<double>& offsets) {
    if (normals.empty() || normals.size() != offsets.size())
        throw DegenerateInput("HPolytope: normals/offsets size mismatch");
    std::vector<Halfspace> hs;
    hs.reserve(normals.size());
    for (size_t i = 0; i < normals.size(); ++i) {
        double n = normals[i].norm();
        if (!(n > 0.0)) throw DegenerateInput("HPolytope: zero normal");
        hs.push_back({normals[i] / n, offsets[i] / n});
    }
    return hs;
}

/* d = 2: incremental halfplane clipping of a large box.  Vertices landing on
   the box boundary signal a recession direction. */
std::vector<Vec> clip_halfplanes(const std::vector<Halfspace>& hs) {
    double w = 1.0;
    for (const auto& h : hs) w = std::max(w, std::abs(h.offset));
    w *= 1e6;
    std::vector<Vec> poly;
    for (auto [x, y] : {std::pair{-w, -w}, {w, -w}, {w, w}, {-w, w}}) {
        Vec v(2);
        v << x, y;
        poly.push_back(v);
    }
    for (const auto& h : hs) {
        std::vector<Vec> next;
        for (size_t i = 0; i < poly.size(); ++i) {
            const Vec& p = poly[i];
            const Vec& q = poly[(i + 1) % poly.size()];
            double fp = h.normal.dot(p) - h.offset;
            double fq = h.normal.dot(q) - h.offset;
            if (fp <= 0.0) next.push_back(p);
            if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0))
                next.push_back(p + (fp / (fp - fq)) * (q - p));
        }
        poly = std::move(next);
        if (poly.size() < 3) throw EmptyIntersection("HPolytope: empty interior");
    }
    for (const Vec& v : poly)
        if (v.lpNorm<Eigen::Infinity>() >= w * (1.0 - 1e-9))
            throw UnboundedPolyhedron("HPolytope: recession direction detected");
    // Clipping interpolates across box-scale segments and compounds rounding
    // (~1e-10 abs); snap each vertex onto its two defining constraints.
    double bscale = 1.0;
    for (const auto& h : hs) bscale = std::max(bscale, std::abs(h.offset));
    for (Vec& v : poly) {
        int i0 = -1, i1 = -1;
        double r0 = 1e300, r1 = 1e300;
        for (size_t i = 0; i < hs.size(); ++i) {
            double r = std::abs(hs[i].normal.dot(v) - hs[i].offset);
            if (r < r0) {
                r1 = r0;
                i1 = i0;
                r0 = r;
                i0 = static_cast<int>(i);
            } else if (r < r1) {
                r1 = r;
                i1 = static_cast<int>(i);
            }
        }
        if (i1 < 0 || r1 > 1e-6 * bscale) continue;
        Mat A(2, 2);
        A.row(0) = hs[i0].normal.transpose();
        A.row(1) = hs[i1].normal.transpose();
        Eigen::ColPivHouseholderQR<Mat> qr(A);
        if (qr.rank() < 2) continue;
        Vec b(2);
        b << hs[i0].offset, hs[i1].offset;
        Vec x = qr.solve(b);
        if ((x - v).lpNorm<Eigen::Infinity>() <= 1e-5 * bscale) v = x;
    }
    return poly;
}

/* d >= 3: facet-subset intersection with feasibility filtering. */
std::vector<Vec> enumerate_by_subsets(const std::vector<Halfspace>& hs, int d) {
    const int m = static_cast<int>(hs.size());
    double bscale = 1.0;
    for (const auto& h : hs) bscale = std::max(bscale, std::abs(h.offset));
    const double feas_tol = 1e-9 * bscale;
    std::vector<Vec> verts;
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    Mat A(d, d);
    Vec b(d);
    while (true) {
        for (int k = 0; k < d; ++k) {
            A.row(k) = hs[idx[k]].normal.transpose();
            b[k] = hs[idx[k]].offset;
        }
        Eigen::ColPivHouseholderQR<Mat> qr(A);
        if (qr.rank() == d) {
            Vec x = qr.solve(b);
            if (x.lpNorm<Eigen::Infinity>() < 1e12) {
                bool ok = true;
                for (const auto& h : hs) {
                    if (h.normal.dot(x) > h.offset + feas_tol) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    bool dup = false;
                    for (const Vec& v : verts) {
                        if ((v - x).lpNorm<Eigen::Infinity>() <= 1e-9 * std::max(1.0, bscale)) {
                            dup = true;
                            break;
                        }
                    }
                    if (!dup) verts.push_back(x);
                }
            }
        }
        // next d-combination of {0..m-1}
        int k = d - 1;
        while (k >= 0 && idx[k] == m - d + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (verts.empty()) throw EmptyIntersection("HPolytope: no feasible vertex");
    return verts;
}

VPolytope enumerate_vertices(const std::vector<Halfspace>& hs) {
    const int d = static_cast<int>(hs[0].normal.size());
    std::vector<Vec> normals;
    normals.reserve(hs.size());
    for (const auto& h : hs) normals.push_back(h.normal);
    if (!normals_positively_span(normals))
        throw UnboundedPolyhedron("HPolytope: constraint normals do not positively span");
    std::vector<Vec> verts = (d == 2) ? clip_halfplanes(hs) : enumerate_by_subsets(hs, d);
    if (static_cast<int>(verts.size()) < d + 1)
        throw DegenerateInput("HPolytope: feasible set has empty interior");
    return VPolytope(verts);
}

}  // namespace

bool normals_positively_span(const std::vector<Vec>& normals) {
    const int d = static_cast<int>(normals[0].size());
    if (static_cast<int>(normals.size()) < d + 1) return false;
    try {
        HullData hull = compute_hull(normals);
        for (const auto& f : hull.facets)
            if (f.offset < 1e-9) return false;  // origin not strictly inside
        return true;
    } catch (const DegenerateInput&) {
        return false;
    }
}

HPolytope::HPolytope(const std::vector<Vec>& normals, const std::vector<double>& offsets)
    : constraints_(normalize_constraints(normals, offsets)),
      vform_(enumerate_vertices(constraints_)) {}

HPolytope::HPolytope(const VPolytope& v) : constraints_(), vform_(v) {
    for (const auto& f : v.facets()) constraints_.push_back({f.normal, f.offset});
}

bool HPolytope::contains(const Vec& x) const {
    double bscale = 1.0;
    for (const auto& h : constraints_) bscale = std::max(bscale, std::abs(h.offset));
    const double tol = 1e-12 * bscale;
    for (const auto& h : constraints_)
        if (h.normal.dot(x) > h.offset + tol) return false;
    return true;
}

std::optional<double> HPolytope::exact_overshoot(const Vec& x) const {
    return vform_.exact_overshoot(x);
}

double HPolytope::interior_radius() const {
    const Vec& c = vform_.centroid();
    double r = 1e300;
    for (const auto& h : constraints_) r = std::min(r, h.offset - h.normal.dot(c));
    return r;
}

HullPair convex_hull(const std::vector<Vec>& points) {
    VPolytope v(points);
    return {v, HPolytope(v)};
}

VPolytope hpoly_vertices(const HPolytope& h) { return h.vform(); }

}  // namespace cvg
