#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "cvg/approx.hpp"
#include "cvg/caps.hpp"
#include "cvg/corpus.hpp"
#include "cvg/directions.hpp"
#include "cvg/measure.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cvg;
using tutil::v2;
using tutil::v3;

TEST_CASE("greedy on the disk: boundary vertices, saturation, audit trail") {
    auto disk = make_named_body("disk");
    double t = 1e-3 * M_PI;
    GreedyResult res = greedy_inscribed(*disk, t, 1);

    CHECK(res.run.terminated_by == GreedyStop::Saturation);
    CHECK(res.run.t == doctest::Approx(t));
    size_t n = res.polytope.vertices().size();
    CHECK(n >= 15);
    CHECK(n <= 60);
    for (const auto& v : res.polytope.vertices())
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-9));

    // stored caps replay the acceptance audit: no earlier vertex may lie in a
    // later vertex's cap
    REQUIRE(res.run.caps.size() == res.run.vertices.size());
    for (size_t k = 0; k < res.run.caps.size(); ++k) {
        const Cap& cap = res.run.caps[k];
        CHECK(cap.achieved.value == doctest::Approx(t).epsilon(1e-7));
        for (size_t j = 0; j < k; ++j)
            CHECK(res.run.vertices[j].dot(cap.normal) <= cap.cut_offset() + 1e-9);
    }
}

TEST_CASE("greedy on the square saturates at the four corners") {
    auto square = make_named_body("square");
    GreedyResult res = greedy_inscribed(*square, 4e-3, 3);
    CHECK(res.run.terminated_by == GreedyStop::Saturation);
    REQUIRE(res.polytope.vertices().size() == 4);
    for (const auto& v : res.polytope.vertices()) {
        CHECK(std::abs(v[0]) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(v[1]) == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(res.polytope.volume() == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("greedy is deterministic in the seed") {
    auto disk = make_named_body("disk");
    GreedyResult a = greedy_inscribed(*disk, 2e-3, 11);
    GreedyResult b = greedy_inscribed(*disk, 2e-3, 11);
    REQUIRE(a.run.vertices.size() == b.run.vertices.size());
    for (size_t i = 0; i < a.run.vertices.size(); ++i)
        CHECK((a.run.vertices[i] - b.run.vertices[i]).norm() == 0.0);
    GreedyResult c = greedy_inscribed(*disk, 2e-3, 12);
    CHECK(a.run.candidates_tried != c.run.candidates_tried);
}

TEST_CASE("greedy rejects oversized and nonsense levels") {
    auto disk = make_named_body("disk");
    CHECK_THROWS_AS(greedy_inscribed(*disk, 0.3 * M_PI, 1), TargetTooLarge);
    CHECK_THROWS_AS(greedy_inscribed(*disk, 0.0, 1), ConfigError);
    CHECK_THROWS_AS(greedy_inscribed(*disk, -1.0, 1), ConfigError);
}

TEST_CASE("greedy works on a 3-d body") {
    auto ball = make_named_body("ball3");
    double vol = 4.0 * M_PI / 3.0;
    // stay under the admissible fraction e^{-5}/4 ~ 1.68e-3
    GreedyResult res = greedy_inscribed(*ball, 1e-3 * vol, 5);
    CHECK(res.polytope.dim() == 3);
    CHECK(res.polytope.vertices().size() >= 10);
    for (const auto& v : res.polytope.vertices())
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.polytope.volume() < vol);
    CHECK(res.polytope.volume() > 0.5 * vol);
}

TEST_CASE("circumscribed facets reproduce the axis-aligned boxes") {
    auto square = make_named_body("square");
    std::vector<Vec> axes2 = {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)};
    HPolytope boxed = circumscribed_facets(*square, axes2);
    CHECK(boxed.vform().volume() == doctest::Approx(4.0).epsilon(1e-12));

    auto cube = make_named_body("cube3");
    std::vector<Vec> axes3;
    for (int i = 0; i < 3; ++i)
        for (double s : {1.0, -1.0}) {
            Vec v = Vec::Zero(3);
            v[i] = s;
            axes3.push_back(v);
        }
    CHECK(circumscribed_facets(*cube, axes3).vform().volume() ==
          doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("circumscribed m-gon around the disk has volume m tan(pi/m)") {
    auto disk = make_named_body("disk");
    for (int m : {3, 5, 8, 16, 64}) {
        HPolytope p = circumscribed_facets(*disk, circle_directions(m));
        CHECK(p.vform().volume() == doctest::Approx(m * std::tan(M_PI / m)).epsilon(1e-11));
        // tangency: every constraint sits at the support value 1
        for (const auto& c : p.constraints()) CHECK(c.offset == doctest::Approx(1.0));
    }
}

TEST_CASE("circumscribed facets refuse insufficient direction sets") {
    auto disk = make_named_body("disk");
    std::vector<Vec> hemisphere = {v2(1, 0), v2(0, 1), unit(v2(1, 1))};
    CHECK_THROWS_AS(circumscribed_facets(*disk, hemisphere), UnboundedPolyhedron);
    std::vector<Vec> too_few = {v2(1, 0)};
    CHECK_THROWS_AS(circumscribed_facets(*disk, too_few), ConfigError);
}

TEST_CASE("regular inscribed n-gon distances: 1 - cos(pi/n)") {
    auto r3 = ball_inscribed_polytope(2, 3, BallConstruction::Regular);
    CHECK(r3.hausdorff == doctest::Approx(0.5).epsilon(1e-12));
    auto r8 = ball_inscribed_polytope(2, 8, BallConstruction::Regular);
    CHECK(r8.hausdorff == doctest::Approx(1.0 - std::cos(M_PI / 8.0)).epsilon(1e-12));
    CHECK(r8.polytope.vertices().size() == 8);
}

TEST_CASE("fibonacci sphere hulls approximate the 2-sphere") {
    auto f100 = ball_inscribed_polytope(3, 100, BallConstruction::Fibonacci);
    CHECK(f100.polytope.vertices().size() == 100);
    CHECK(f100.hausdorff > 0.0);
    CHECK(f100.hausdorff < (64.0 / 7.0) * M_PI / 100.0);
    // more points, closer hull
    auto f200 = ball_inscribed_polytope(3, 200, BallConstruction::Fibonacci);
    CHECK(f200.hausdorff < f100.hausdorff);
}

TEST_CASE("random sphere hulls are valid bodies with interior origin") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto res = ball_inscribed_polytope(3, 40, BallConstruction::Random, seed);
        CHECK(res.polytope.contains(Vec::Zero(3)));
        CHECK(res.hausdorff > 0.0);
        CHECK(res.hausdorff < 1.0);
        for (const auto& v : res.polytope.vertices())
            CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hausdorff field equals one minus the minimal facet offset") {
    auto res = ball_inscribed_polytope(2, 17, BallConstruction::Regular);
    double min_off = 1e300;
    HPolytope h(res.polytope);
    for (const auto& c : h.constraints()) min_off = std::min(min_off, c.offset);
    CHECK(res.hausdorff == doctest::Approx(1.0 - min_off).epsilon(1e-12));
}

TEST_CASE("threshold guard matches the documented quarter e^-5 fraction") {
    CHECK(greedy_threshold_frac() == doctest::Approx(0.25 * std::exp(-5.0)).epsilon(1e-15));
    auto disk = make_named_body("disk");
    // just below the threshold still runs
    double t_ok = 0.99 * greedy_threshold_frac() * M_PI;
    GreedyResult res = greedy_inscribed(*disk, t_ok, 2);
    CHECK(res.polytope.vertices().size() >= 3);
}
