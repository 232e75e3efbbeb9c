#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>

#include "cvg/corpus.hpp"
#include "cvg/directions.hpp"
#include "cvg/hull.hpp"
#include "cvg/polytope.hpp"
#include "cvg/rng.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cvg;
using tutil::v2;
using tutil::v3;

namespace {

/* Independent 2-d hull: gift wrapping from the lowest point.  O(n h), no
   shared code with the library implementation. */
std::vector<int> gift_wrap(const std::vector<Vec>& pts) {
    int start = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][1] < pts[start][1] ||
            (pts[i][1] == pts[start][1] && pts[i][0] < pts[start][0]))
            start = static_cast<int>(i);
    }
    std::vector<int> hull;
    int cur = start;
    do {
        hull.push_back(cur);
        int next = (cur + 1) % static_cast<int>(pts.size());
        for (int cand = 0; cand < static_cast<int>(pts.size()); ++cand) {
            if (cand == cur) continue;
            Vec a = pts[next] - pts[cur], b = pts[cand] - pts[cur];
            double cross = a[0] * b[1] - a[1] * b[0];
            if (cross < 0.0 || (cross == 0.0 && b.norm() > a.norm())) next = cand;
        }
        cur = next;
    } while (cur != start && hull.size() <= pts.size());
    return hull;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::vector<Vec> random_cloud(int d, int n, std::uint64_t seed) {
    RandomStream rs(seed);
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) pts.push_back(rs.ball_point(Vec::Zero(d), 1.0));
    return pts;
}

}  // namespace

TEST_CASE("2-d hull matches gift wrapping on random clouds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto pts = random_cloud(2, 40, 1000 + seed);
        auto data = compute_hull(pts);
        auto oracle = as_set(gift_wrap(pts));
        CHECK(as_set(data.vertex_ids) == oracle);
    }
}

TEST_CASE("hull is idempotent on its own vertices") {
    for (int d : {2, 3, 4}) {
        auto pts = random_cloud(d, 60, 7 + d);
        VPolytope p(pts);
        VPolytope q(p.vertices());
        CHECK(q.vertices().size() == p.vertices().size());
        CHECK(q.volume() == doctest::Approx(p.volume()).epsilon(1e-12));
    }
}

TEST_CASE("points on a circle are all hull vertices") {
    auto dirs = circle_directions(100, 0.123);
    VPolytope p(dirs);
    CHECK(p.vertices().size() == 100);
    CHECK(p.volume() == doctest::Approx(50.0 * std::sin(2.0 * M_PI / 100.0)).epsilon(1e-12));
}

TEST_CASE("named polytopes have their textbook volumes") {
    CHECK(make_named_body("cube3")->exact_volume().value() == doctest::Approx(8.0).epsilon(1e-13));
    CHECK(make_named_body("cross3")->exact_volume().value() ==
          doctest::Approx(8.0 / 6.0).epsilon(1e-13));
    CHECK(make_named_body("cube4")->exact_volume().value() == doctest::Approx(16.0).epsilon(1e-13));
    CHECK(make_named_body("cross4")->exact_volume().value() ==
          doctest::Approx(16.0 / 24.0).epsilon(1e-13));
    CHECK(make_named_body("triangle")->exact_volume().value() ==
          doctest::Approx(0.5).epsilon(1e-14));
    // unit-volume cube built directly from vertices
    std::vector<Vec> side1;
    for (int m = 0; m < 8; ++m)
        side1.push_back(v3((m & 1) ? 0.5 : -0.5, (m & 2) ? 0.5 : -0.5, (m & 4) ? 0.5 : -0.5));
    CHECK(VPolytope(side1).volume() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("regular n-gon volumes across the acceptance range") {
    for (int n = 3; n <= 64; ++n) {
        VPolytope p(circle_directions(n));
        double want = 0.5 * n * std::sin(2.0 * M_PI / n);
        CHECK(std::abs(p.volume() - want) <= 1e-10 * want);
    }
}

TEST_CASE("H and V forms round trip") {
    auto cube = std::static_pointer_cast<const VPolytope>(make_named_body("cube3"));
    HPolytope h(*cube);
    CHECK(h.constraints().size() == 6);
    CHECK(h.vform().vertices().size() == 8);
    CHECK(h.vform().volume() == doctest::Approx(8.0).epsilon(1e-12));

    // rebuild from raw constraint data
    std::vector<Vec> normals;
    std::vector<double> offsets;
    for (const auto& c : h.constraints()) {
        normals.push_back(c.normal);
        offsets.push_back(c.offset);
    }
    HPolytope h2(normals, offsets);
    CHECK(h2.vform().vertices().size() == 8);
    CHECK(h2.vform().volume() == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("random round trips preserve volume and vertex count") {
    for (int d : {2, 3}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            VPolytope p(random_cloud(d, 30, 400 + 10 * d + seed));
            HPolytope h(p);
            CHECK(h.vform().vertices().size() == p.vertices().size());
            CHECK(h.vform().volume() == doctest::Approx(p.volume()).epsilon(1e-9));
            // every original vertex satisfies every constraint
            for (const auto& v : p.vertices())
                for (const auto& c : h.constraints())
                    CHECK(c.normal.dot(v) <= c.offset + 1e-9);
        }
    }
}

TEST_CASE("octahedron central section has area 2") {
    auto cross = make_named_body("cross3");
    auto sec = cross->exact_section_volume(v3(0, 0, 1), 0.0);
    REQUIRE(sec.has_value());
    CHECK(*sec == doctest::Approx(2.0).epsilon(1e-12));
    // shifted section shrinks quadratically: area(z) = 2(1-|z|)^2
    CHECK(cross->exact_section_volume(v3(0, 0, 1), 0.5).value() ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("halfspace volumes of the cube are linear in the offset") {
    auto cube = make_named_body("cube3");
    Vec u = v3(1, 0, 0);
    for (double c : {-0.5, 0.0, 0.25, 0.9}) {
        CHECK(cube->exact_halfspace_volume(u, c).value() ==
              doctest::Approx(4.0 * (c + 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("cube inertia about its center") {
    auto cube = std::static_pointer_cast<const VPolytope>(make_named_body("cube3"));
    auto inert = cube->exact_inertia(Vec::Zero(3));
    REQUIRE(inert.has_value());
    // int_{-1}^{1} x^2 dx = 2/3 per axis, times the 4.0 cross-sectional area
    for (int i = 0; i < 3; ++i) {
        CHECK(inert->second_moment(i, i) == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(std::abs(inert->second_moment(i, j)) < 1e-12);
    }
    CHECK(inert->centroid.norm() < 1e-13);
    CHECK(inert->volume == doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("simplex tiling sums to the volume") {
    for (int d : {2, 3, 4}) {
        VPolytope p(random_cloud(d, 25, 90 + d));
        double sum = 0.0;
        for (const auto& s : p.simplices()) {
            Mat edges(d, d);
            for (int j = 0; j < d; ++j) edges.col(j) = s.col(j + 1) - s.col(0);
            double fact = 1.0;
            for (int k = 2; k <= d; ++k) fact *= k;
            sum += std::abs(edges.determinant()) / fact;
        }
        CHECK(sum == doctest::Approx(p.volume()).epsilon(1e-12));
    }
}

TEST_CASE("cube facet areas and interior margin") {
    auto cube = std::static_pointer_cast<const VPolytope>(make_named_body("cube3"));
    REQUIRE(cube->facets().size() == 6);
    for (double a : cube->facet_areas()) CHECK(a == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(cube->interior_margin() == doctest::Approx(1.0).epsilon(1e-12));
    // facet planes really support the body
    for (const auto& f : cube->facets()) {
        CHECK(cube->support(f.normal) == doctest::Approx(f.offset).epsilon(1e-12));
        for (int idx : f.vertices)
            CHECK(f.normal.dot(cube->vertices()[idx]) == doctest::Approx(f.offset).epsilon(1e-12));
    }
}

TEST_CASE("facet cycles walk each 3-d facet boundary") {
    auto cube = std::static_pointer_cast<const VPolytope>(make_named_body("cube3"));
    for (int f = 0; f < 6; ++f) {
        auto cycle = cube->facet_cycle(f);
        REQUIRE(cycle.size() == 4);
        // consecutive cycle vertices differ in exactly one coordinate
        for (size_t i = 0; i < 4; ++i) {
            Vec a = cube->vertices()[cycle[i]];
            Vec b = cube->vertices()[cycle[(i + 1) % 4]];
            CHECK((a - b).cwiseAbs().maxCoeff() == doctest::Approx(2.0).epsilon(1e-12));
            CHECK((a - b).norm() == doctest::Approx(2.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("contains/support coherence on random polytopes") {
    RandomStream rs(55);
    for (int d : {2, 3, 4}) {
        VPolytope p(random_cloud(d, 20, 700 + d));
        for (int i = 0; i < 50; ++i) {
            Vec u = rs.sphere_direction(d);
            Vec sp = p.support_point(u);
            CHECK(p.contains(sp));
            CHECK(sp.dot(u) == doctest::Approx(p.support(u)).epsilon(1e-12));
            // anything strictly past the support plane is outside
            CHECK(!p.contains((sp + 0.01 * u).eval()));
        }
    }
}

TEST_CASE("degenerate and unbounded inputs throw") {
    std::vector<Vec> line = {v2(0, 0), v2(1, 1), v2(2, 2), v2(3, 3)};
    CHECK_THROWS_AS(VPolytope{line}, DegenerateInput);

    std::vector<Vec> normals = {v2(1, 0), v2(0, 1)};  // open quadrant
    std::vector<double> offsets = {1.0, 1.0};
    CHECK_THROWS_AS(HPolytope(normals, offsets), UnboundedPolyhedron);

    std::vector<Vec> clash = {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)};
    std::vector<double> off_empty = {-2.0, -2.0, 1.0, 1.0};  // x <= -2 and -x <= -2
    CHECK_THROWS_AS(HPolytope(clash, off_empty), EmptyIntersection);
}

TEST_CASE("normals_positively_span detects recession directions") {
    std::vector<Vec> full = {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)};
    CHECK(normals_positively_span(full));
    std::vector<Vec> half = {v2(1, 0), v2(0, 1), v2(-1, 1)};  // all upper-ish
    CHECK(!normals_positively_span(half));
}

TEST_CASE("hpoly_vertices and convex_hull agree") {
    auto pts = random_cloud(3, 40, 31);
    auto pair = convex_hull(pts);
    CHECK(pair.vpoly.volume() == doctest::Approx(pair.hpoly.vform().volume()).epsilon(1e-12));
    VPolytope back = hpoly_vertices(pair.hpoly);
    CHECK(back.vertices().size() == pair.vpoly.vertices().size());
}

TEST_CASE("interior_radius is positive for solid bodies") {
    auto cube = std::static_pointer_cast<const VPolytope>(make_named_body("cube3"));
    HPolytope h(*cube);
    CHECK(h.interior_radius() == doctest::Approx(1.0).epsilon(1e-12));
}
