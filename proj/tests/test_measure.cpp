#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cvg/corpus.hpp"
#include "cvg/measure.hpp"
#include "cvg/rng.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cvg;
using tutil::Opaque;
using tutil::v2;
using tutil::v3;

// Note: a Ball is its own bounding ball, so sampling it would hit every
// draw (zero variance); these cases need bodies with a strict gap.
TEST_CASE("mc_volume of the square matches the area within 3 sigma") {
    auto sq = make_named_body("square");
    auto est = mc_volume(*sq, 1'000'000, 42);
    CHECK(est.method == EstimateMethod::MonteCarlo);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.value - 4.0) <= 3.0 * est.std_error);
    // announced error matches binomial theory over the sampling domain
    BoundingBall bb = sq->bounding_ball();
    double vb = unit_ball_volume(2) * bb.radius * bb.radius;
    double p = 4.0 / vb;
    double predicted = vb * std::sqrt(p * (1 - p) / 1'000'000.0);
    CHECK(est.std_error == doctest::Approx(predicted).epsilon(0.2));
}

TEST_CASE("mc_volume is bit-identical across thread counts") {
    auto cube = make_named_body("cube3");
    auto base = mc_volume(*cube, 400'000, 7, 1);
    for (int threads : {2, 3, 8}) {
        auto est = mc_volume(*cube, 400'000, 7, threads);
        CHECK(est.value == base.value);
        CHECK(est.std_error == base.std_error);
    }
    // and different seeds genuinely differ
    CHECK(mc_volume(*cube, 400'000, 8, 1).value != base.value);
}

TEST_CASE("volume dispatch prefers exact hooks") {
    auto cube = make_named_body("cube3");
    auto est = volume(*cube);
    CHECK(est.method == EstimateMethod::Exact);
    CHECK(est.value == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(est.std_error == 0.0);

    MeasureOptions no_exact;
    no_exact.prefer_exact = false;
    no_exact.samples = 500'000;
    no_exact.seed = 3;
    auto mc = volume(*cube, no_exact);
    CHECK(mc.method == EstimateMethod::MonteCarlo);
    CHECK(std::abs(mc.value - 8.0) <= 3.0 * mc.std_error);
}

TEST_CASE("halfspace_volume exact vs Monte Carlo on random polytopes") {
    MeasureOptions mco;
    mco.samples = 300'000;
    RandomStream rs(77);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        int d = 2 + static_cast<int>(seed % 2);
        auto poly = random_hull_body(d, 900 + seed);
        Opaque masked(poly);
        Vec u = rs.sphere_direction(d);
        double c = 0.3 * poly->support(u);  // a proper cut
        double want = halfspace_volume(*poly, u, c).value;  // exact path
        mco.seed = seed;
        auto est = halfspace_volume(masked, u, c, mco);
        CHECK(est.method == EstimateMethod::MonteCarlo);
        CHECK(std::abs(est.value - want) <= 3.0 * est.std_error + 1e-12);
    }
}

TEST_CASE("section_volume exact vs in-plane sampling") {
    auto cross = make_named_body("cross3");
    auto exact = section_volume(*cross, Vec::Zero(3), v3(0, 0, 1));
    CHECK(exact.method == EstimateMethod::Exact);
    CHECK(exact.value == doctest::Approx(2.0).epsilon(1e-12));

    Opaque masked(cross);
    MeasureOptions mco;
    mco.samples = 400'000;
    mco.seed = 12;
    auto mc = section_volume(masked, Vec::Zero(3), v3(0, 0, 1), mco);
    CHECK(mc.method == EstimateMethod::MonteCarlo);
    CHECK(std::abs(mc.value - 2.0) <= 3.0 * mc.std_error);
}

TEST_CASE("inertia of the unit disk") {
    Ball disk(v2(0, 0), 1.0);
    auto data = inertia(disk, Vec::Zero(2));
    CHECK(data.method == EstimateMethod::Exact);
    CHECK(data.second_moment(0, 0) == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    CHECK(data.second_moment(1, 1) == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    CHECK(std::abs(data.second_moment(0, 1)) < 1e-12);
    CHECK(data.centroid.norm() < 1e-12);

    // about a shifted origin the parallel-axis term appears
    auto shifted = inertia(disk, v2(1.0, 0.0));
    CHECK(shifted.second_moment(0, 0) == doctest::Approx(M_PI / 4.0 + M_PI).epsilon(1e-12));
}

TEST_CASE("inertia Monte Carlo fallback is close and deterministic") {
    auto tri = make_named_body("triangle");
    auto want = inertia(*tri, Vec::Zero(2));
    Opaque masked(tri);
    MeasureOptions mco;
    mco.samples = 600'000;
    mco.seed = 5;
    auto got1 = inertia(masked, Vec::Zero(2), mco);
    mco.threads = 4;
    auto got2 = inertia(masked, Vec::Zero(2), mco);
    CHECK(got1.method == EstimateMethod::MonteCarlo);
    CHECK((got1.second_moment - got2.second_moment).norm() == 0.0);  // thread independence
    CHECK((got1.second_moment - want.second_moment).norm() < 5e-3);
    CHECK((got1.centroid - want.centroid).norm() < 5e-3);
}

TEST_CASE("symmetric difference: inscribed square in the disk") {
    Ball disk(v2(0, 0), 1.0);
    VPolytope square({v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)});
    MeasureOptions mco;
    mco.samples = 1'000'000;
    mco.seed = 9;
    auto est = symmetric_difference(disk, square, mco);
    CHECK(std::abs(est.value - (M_PI - 2.0)) <= 3.0 * est.std_error + 1e-12);
}

TEST_CASE("symmetric difference exact path for nested polytopes") {
    auto cube = std::static_pointer_cast<const VPolytope>(make_named_body("cube3"));
    VPolytope half(std::vector<Vec>{v3(.5, .5, .5), v3(-.5, .5, .5), v3(.5, -.5, .5),
                                    v3(.5, .5, -.5), v3(-.5, -.5, .5), v3(-.5, .5, -.5),
                                    v3(.5, -.5, -.5), v3(-.5, -.5, -.5)});
    auto est = symmetric_difference(*cube, half);
    CHECK(est.method == EstimateMethod::Exact);
    CHECK(est.value == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("halfspace cut volumes are monotone in the offset") {
    auto body = random_hull_body(3, 1234);
    Vec u = unit(v3(1.0, -0.5, 0.3));
    double prev = -1.0;
    for (double c = -1.0; c <= 1.0; c += 0.25) {
        double vol = halfspace_volume(*body, u, c).value;
        CHECK(vol >= prev - 1e-12);
        prev = vol;
    }
}
