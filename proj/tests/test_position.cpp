#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cvg/corpus.hpp"
#include "cvg/directions.hpp"
#include "cvg/measure.hpp"
#include "cvg/position.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cvg;
using tutil::v2;
using tutil::v3;

TEST_CASE("centering moves the centroid to the origin exactly for polytopes") {
    auto tri = make_named_body("triangle");
    auto centered = center_at_centroid(tri);
    auto data = inertia(*centered, Vec::Zero(2));
    CHECK(data.centroid.norm() < 1e-13);
    CHECK(volume(*centered).value == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("rectangle normalizes to diag(1/2, 2) up to axis sign") {
    VPolytope rect({v2(2, .5), v2(-2, .5), v2(2, -.5), v2(-2, -.5)});
    auto iso = isotropic_transform(center_at_centroid(std::make_shared<VPolytope>(rect)));
    CHECK(std::abs(std::abs(iso.transform(0, 0)) - 0.5) < 1e-9);
    CHECK(std::abs(std::abs(iso.transform(1, 1)) - 2.0) < 1e-9);
    CHECK(std::abs(iso.transform(0, 1)) < 1e-9);
    CHECK(std::abs(iso.transform(1, 0)) < 1e-9);
    CHECK(iso.transform.determinant() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("isotropic position on random polytopes: det 1, diagonal moments") {
    for (int d : {2, 3}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto body = random_hull_body(d, 500 * d + seed);
            auto iso = isotropic_body(body);
            CHECK(std::abs(iso.transform.determinant() - 1.0) <= 1e-12);
            CHECK(iso.residual <= 1e-9);
            // the re-measured moment matrix is isotropic: check directly
            auto data = inertia(*iso.body, Vec::Zero(d));
            double mean_diag = data.second_moment.trace() / d;
            for (int i = 0; i < d; ++i) {
                CHECK(data.second_moment(i, i) == doctest::Approx(mean_diag).epsilon(1e-8));
                for (int j = 0; j < d; ++j)
                    if (i != j)
                        CHECK(std::abs(data.second_moment(i, j)) <= 1e-9 * mean_diag);
            }
            CHECK(iso.isotropy_constant > 0.0);
        }
    }
}

TEST_CASE("ball is already isotropic: transform is the identity") {
    auto ball = make_named_body("ball3");
    auto iso = isotropic_body(ball);
    CHECK((iso.transform - Mat::Identity(3, 3)).norm() < 1e-9);
}

TEST_CASE("volume is preserved by the det-1 normalization") {
    auto body = random_hull_body(2, 99);
    double before = volume(*body).value;
    auto iso = isotropic_body(body);
    CHECK(volume(*iso.body).value == doctest::Approx(before).epsilon(1e-10));
}

TEST_CASE("extreme anisotropy raises IllConditioned") {
    VPolytope sliver({v2(1e7, 1), v2(-1e7, 1), v2(1e7, -1), v2(-1e7, -1)});
    CHECK_THROWS_AS(isotropic_body(std::make_shared<VPolytope>(sliver)), IllConditioned);
}

TEST_CASE("grunbaum ratios: triangle centroid cut reproduces 4/9") {
    auto tri = make_named_body("triangle");  // (0,0),(1,0),(0,1)
    // the centroid hyperplane normal to e_y cuts 4/9 above, 5/9 below
    double above = 0.5 - halfspace_volume(*tri, v2(0, 1), 1.0 / 3.0).value;
    CHECK(above == doctest::Approx(0.5 * 4.0 / 9.0).epsilon(1e-9));

    Report rep = grunbaum_ratios(*tri, "triangle", v2(0, 1));
    CHECK(rep.pass);
    CHECK(rep.params.at("fraction_minus") == doctest::Approx(5.0 / 9.0).epsilon(1e-9));
    CHECK(rep.params.at("fraction_plus") == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
    // (d/(d+1))^d = 4/9 exactly in the plane: the equality case binds
    CHECK(rep.params.at("grunbaum_bound") == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("grunbaum ratios hold on a small random sweep") {
    for (int d : {2, 3}) {
        double bound = std::pow(d / (d + 1.0), d);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto body = random_hull_body(d, 7700 + seed);
            for (const Vec& xi : well_spread_directions(d, 3, seed)) {
                Report rep = grunbaum_ratios(*body, "rand", xi);
                CHECK(rep.pass);
                CHECK(rep.params.at("fraction_minus") >= bound - 5e-3);
                CHECK(rep.params.at("fraction_plus") <= 1.0 - bound + 5e-3);
            }
        }
    }
}

TEST_CASE("max parallel section of the triangle sits at the base") {
    auto tri = make_named_body("triangle");
    // sections normal to e_y have length 1-y: the max is the base, length 1
    CHECK(max_parallel_section(*tri, v2(0, 1)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("theta of the square along an axis is the full half-width") {
    auto square = center_at_centroid(make_named_body("square"));
    auto res = theta(*square, v2(1, 0));
    CHECK(res.central_section == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(res.theta == doctest::Approx(1.0).epsilon(1e-9));  // profile never decays
}

TEST_CASE("theta of the disk hits the 1/e crossing exactly") {
    auto disk = make_named_body("disk");
    auto res = theta(*disk, v2(0, 1));
    CHECK(res.central_section == doctest::Approx(2.0).epsilon(1e-12));
    // 2*sqrt(1-s^2) = 2/e at s = sqrt(1 - e^-2)
    CHECK(res.theta == doctest::Approx(std::sqrt(1.0 - std::exp(-2.0))).epsilon(1e-7));
}

TEST_CASE("theta of the 3-ball") {
    auto ball = make_named_body("ball3");
    auto res = theta(*ball, v3(0, 0, 1));
    CHECK(res.central_section == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(res.theta == doctest::Approx(std::sqrt(1.0 - std::exp(-1.0))).epsilon(1e-7));
}
