#include "cvg/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cvg/errors.hpp"
#include "cvg/rng.hpp"

namespace cvg {

namespace {

struct SimpFacet {
    std::vector<int> verts;  // d indices, sorted
    Vec normal;
    double offset;
    bool alive = true;
};

/* Plane through d points: unit normal from the SVD kernel of the edge
   matrix, offset = mean projection. */
void facet_plane(const std::vector<Vec>& pts, const std::vector<int>& ids, Vec& normal,
                 double& offset) {
    const int d = static_cast<int>(pts[ids[0]].size());
    Mat edges(static_cast<int>(ids.size()) - 1, d);
    for (size_t k = 1; k < ids.size(); ++k)
        edges.row(static_cast<int>(k - 1)) = (pts[ids[k]] - pts[ids[0]]).transpose();
    Eigen::JacobiSVD<Mat> svd(edges, Eigen::ComputeFullV);
    normal = svd.matrixV().col(d - 1);
    offset = 0.0;
    for (int id : ids) offset += normal.dot(pts[id]);
    offset /= static_cast<double>(ids.size());
}

/* Best-fit plane through an arbitrary point set (used after merging):
   normal = smallest principal direction of the centered coordinates. */
void fit_plane(const std::vector<Vec>& pts, const std::vector<int>& ids, Vec& normal,
               double& offset) {
    const int d = static_cast<int>(pts[ids[0]].size());
    Vec mean = Vec::Zero(d);
    for (int id : ids) mean += pts[id];
    mean /= static_cast<double>(ids.size());
    Mat centered(static_cast<int>(ids.size()), d);
    for (size_t k = 0; k < ids.size(); ++k)
        centered.row(static_cast<int>(k)) = (pts[ids[k]] - mean).transpose();
    Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeFullV);
    normal = svd.matrixV().col(d - 1);
    offset = normal.dot(mean);
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

HullData compute_hull(const std::vector<Vec>& input) {
    if (input.empty()) throw DegenerateInput("convex_hull: no points");
    const int d = static_cast<int>(input[0].size());
    if (d < 2 || d > 4) throw DegenerateInput("convex_hull: dimension must be 2..4");

    double scale = 1.0;
    for (const Vec& p : input) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
    const double dedup_tol = 1e-9 * scale;

    // Deduplicate near-identical inputs, keeping first occurrences.
    std::vector<int> rep;  // representative input indices
    for (int i = 0; i < static_cast<int>(input.size()); ++i) {
        bool dup = false;
        for (int j : rep) {
            if ((input[i] - input[j]).lpNorm<Eigen::Infinity>() <= dedup_tol) {
                dup = true;
                break;
            }
        }
        if (!dup) rep.push_back(i);
    }
    const int n = static_cast<int>(rep.size());
    if (n < d + 1) throw DegenerateInput("convex_hull: fewer than d+1 distinct points");

    // Deterministic jitter: hash of the representative slot, 1e-12 relative.
    std::vector<Vec> pts(n);
    {
        const double amp = 1e-12 * scale;
        for (int i = 0; i < n; ++i) {
            RandomStream rs(derive_seed(0x5EEDBA5Eull, "hull-jitter", i));
            pts[i] = input[rep[i]];
            for (int k = 0; k < d; ++k) pts[i][k] += rs.uniform(-amp, amp);
        }
    }

    // Initial simplex: greedy max-residual points (Gram-Schmidt residual).
    std::vector<int> simplex;
    std::vector<char> used(n, 0);
    {
        int first = 0;
        for (int i = 1; i < n; ++i)
            if (pts[i][0] < pts[first][0]) first = i;
        simplex.push_back(first);
        used[first] = 1;
        Mat basis(d, 0);
        for (int step = 0; step < d; ++step) {
            int best = -1;
            double best_res = 0.0;
            for (int i = 0; i < n; ++i) {
                if (used[i]) continue;
                Vec r = pts[i] - pts[simplex[0]];
                if (basis.cols() > 0) r -= basis * (basis.transpose() * r);
                double res = r.norm();
                if (res > best_res) {
                    best_res = res;
                    best = i;
                }
            }
            if (best < 0 || best_res <= 1e-9 * scale)
                throw DegenerateInput("convex_hull: points are affinely dependent (rank < d)");
            Vec r = pts[best] - pts[simplex[0]];
            if (basis.cols() > 0) r -= basis * (basis.transpose() * r);
            basis.conservativeResize(d, basis.cols() + 1);
            basis.col(basis.cols() - 1) = r / r.norm();
            simplex.push_back(best);
            used[best] = 1;
        }
    }

    Vec interior = Vec::Zero(d);
    for (int id : simplex) interior += pts[id];
    interior /= static_cast<double>(simplex.size());

    // Seed facets: the d+1 faces of the initial simplex.
    std::vector<SimpFacet> facets;
    for (int skip = 0; skip <= d; ++skip) {
        SimpFacet f;
        for (int k = 0; k <= d; ++k)
            if (k != skip) f.verts.push_back(simplex[k]);
        std::sort(f.verts.begin(), f.verts.end());
        facet_plane(pts, f.verts, f.normal, f.offset);
        if (f.normal.dot(interior) > f.offset) {
            f.normal = -f.normal;
            f.offset = -f.offset;
        }
        facets.push_back(std::move(f));
    }

    // Deterministically shuffled insertion order for the remaining points.
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (!used[i]) order.push_back(i);
    {
        RandomStream rs(derive_seed(0x5EEDBA5Eull, "hull-order", n));
        for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) {
            int j = static_cast<int>(rs.next_u64() % static_cast<std::uint64_t>(i + 1));
            std::swap(order[i], order[j]);
        }
    }

    const double eps_vis = 1e-13 * scale;
    std::vector<int> visible;
    for (int p : order) {
        visible.clear();
        for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
            if (!facets[fi].alive) continue;
            if (facets[fi].normal.dot(pts[p]) > facets[fi].offset + eps_vis)
                visible.push_back(fi);
        }
        if (visible.empty()) continue;  // interior or on the current hull

        // Horizon = ridges that occur exactly once among visible facets.
        std::map<std::vector<int>, int> ridge_count;
        for (int fi : visible) {
            const auto& vs = facets[fi].verts;
            for (size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t k = 0; k < vs.size(); ++k)
                    if (k != skip) ridge.push_back(vs[k]);
                ++ridge_count[ridge];
            }
        }
        for (int fi : visible) facets[fi].alive = false;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            SimpFacet f;
            f.verts = ridge;
            f.verts.push_back(p);
            std::sort(f.verts.begin(), f.verts.end());
            facet_plane(pts, f.verts, f.normal, f.offset);
            if (f.normal.dot(interior) > f.offset) {
                f.normal = -f.normal;
                f.offset = -f.offset;
            }
            facets.push_back(std::move(f));
        }
    }

    // ---- canonicalization on the unperturbed coordinates ----

    std::vector<int> alive;
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi)
        if (facets[fi].alive) alive.push_back(fi);

    // Merge coplanar facets linked through shared ridges.
    DisjointSet groups(static_cast<int>(alive.size()));
    {
        std::map<std::vector<int>, std::vector<int>> ridge_facets;
        for (int ai = 0; ai < static_cast<int>(alive.size()); ++ai) {
            const auto& vs = facets[alive[ai]].verts;
            for (size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t k = 0; k < vs.size(); ++k)
                    if (k != skip) ridge.push_back(vs[k]);
                ridge_facets[ridge].push_back(ai);
            }
        }
        const double merge_tol = 1e-8;
        for (const auto& [ridge, fs] : ridge_facets) {
            for (size_t a = 0; a + 1 < fs.size(); ++a) {
                for (size_t b = a + 1; b < fs.size(); ++b) {
                    const Vec& na = facets[alive[fs[a]]].normal;
                    const Vec& nb = facets[alive[fs[b]]].normal;
                    if ((na - nb).norm() < merge_tol) groups.unite(static_cast<int>(fs[a]), static_cast<int>(fs[b]));
                }
            }
        }
    }

    std::map<int, std::vector<int>> merged;  // group root -> member facet slots
    for (int ai = 0; ai < static_cast<int>(alive.size()); ++ai)
        merged[groups.find(ai)].push_back(ai);

    // Candidate vertices and overall interior point in original coordinates.
    std::vector<int> candidates;
    {
        std::vector<char> seen(n, 0);
        for (int fi : alive)
            for (int v : facets[fi].verts)
                if (!seen[v]) {
                    seen[v] = 1;
                    candidates.push_back(v);
                }
        std::sort(candidates.begin(), candidates.end());
    }
    Vec center = Vec::Zero(d);
    for (int v : candidates) center += input[rep[v]];
    center /= static_cast<double>(candidates.size());

    const double on_tol = 1e-9 * std::max(1.0, scale);
    std::vector<HullFacet> out_facets;
    for (const auto& [root, members] : merged) {
        std::vector<int> vs;
        for (int ai : members)
            for (int v : facets[alive[ai]].verts) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

        HullFacet f;
        std::vector<Vec> orig(n);  // lazy view: only slots we touch are read
        for (int v : vs) orig[v] = input[rep[v]];
        fit_plane(orig, vs, f.normal, f.offset);
        if (f.normal.dot(center) > f.offset) {
            f.normal = -f.normal;
            f.offset = -f.offset;
        }
        for (int v : vs) f.vertices.push_back(rep[v]);
        std::sort(f.vertices.begin(), f.vertices.end());
        out_facets.push_back(std::move(f));
    }

    // Ridge chains can break at sliver simplices (their fitted normals are
    // noise), leaving one geometric facet split across groups.  A fragment's
    // own fitted plane can tilt arbitrarily (2-point fits tilt by coordinate
    // noise over the fragment's spread), so plane-vs-plane comparison is not
    // reliable; instead absorb any group whose vertices all lie on another
    // group's plane within the membership tolerance, and refit on the union.
    {
        auto refit = [&](HullFacet& g) {
            std::sort(g.vertices.begin(), g.vertices.end());
            g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
            fit_plane(input, g.vertices, g.normal, g.offset);
            if (g.normal.dot(center) > g.offset) {
                g.normal = -g.normal;
                g.offset = -g.offset;
            }
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t a = 0; a < out_facets.size() && !changed; ++a) {
                for (size_t b = 0; b < out_facets.size(); ++b) {
                    if (a == b) continue;
                    // the larger vertex set gives the better-determined plane
                    if (out_facets[b].vertices.size() < out_facets[a].vertices.size()) continue;
                    const HullFacet& host = out_facets[b];
                    bool coplanar = true;
                    for (int id : out_facets[a].vertices) {
                        if (std::abs(host.normal.dot(input[id]) - host.offset) > on_tol) {
                            coplanar = false;
                            break;
                        }
                    }
                    if (!coplanar) continue;
                    out_facets[b].vertices.insert(out_facets[b].vertices.end(),
                                                  out_facets[a].vertices.begin(),
                                                  out_facets[a].vertices.end());
                    refit(out_facets[b]);
                    out_facets.erase(out_facets.begin() + static_cast<long>(a));
                    changed = true;
                    break;
                }
            }
        }
    }

    // Keep candidates whose active facet normals span R^d (true vertices).
    std::vector<int> kept;
    for (int v : candidates) {
        const Vec& x = input[rep[v]];
        Mat active(0, d);
        for (const auto& f : out_facets) {
            if (std::abs(f.normal.dot(x) - f.offset) <= on_tol) {
                active.conservativeResize(active.rows() + 1, d);
                active.row(active.rows() - 1) = f.normal.transpose();
            }
        }
        if (active.rows() < d) continue;
        Eigen::JacobiSVD<Mat> svd(active);
        if (svd.singularValues()(d - 1) > 1e-6) kept.push_back(rep[v]);
    }
    std::sort(kept.begin(), kept.end());
    if (static_cast<int>(kept.size()) < d + 1)
        throw DegenerateInput("convex_hull: canonicalization left fewer than d+1 vertices");

    // Rebuild facet membership from the kept vertices only.
    for (auto& f : out_facets) {
        std::vector<int> vs;
        for (int id : kept)
            if (std::abs(f.normal.dot(input[id]) - f.offset) <= on_tol) vs.push_back(id);
        f.vertices = std::move(vs);
        if (static_cast<int>(f.vertices.size()) < d)
            throw GeometryError("convex_hull: inconsistent facet after canonicalization");
    }

    // Sanity: every input point must satisfy every constraint.
    for (const Vec& p : input) {
        for (const auto& f : out_facets) {
            if (f.normal.dot(p) > f.offset + 8.0 * on_tol)
                throw GeometryError("convex_hull: constraint violated by an input point");
        }
    }

    HullData data;
    data.vertex_ids = std::move(kept);
    data.facets = std::move(out_facets);
    return data;
}

}  // namespace cvg
