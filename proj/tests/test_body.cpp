#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cvg/body.hpp"
#include "cvg/rng.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cvg;
using tutil::v2;
using tutil::v3;

namespace {

/* Independent d=2 cap area: r^2*acos(1-h/r) - (r-h)*sqrt(2rh - h^2). */
double disk_cap_by_height(double r, double h) {
    return r * r * std::acos(1.0 - h / r) - (r - h) * std::sqrt(std::max(0.0, 2 * r * h - h * h));
}

/* Independent d=3 cap volume: pi*h^2*(3r-h)/3. */
double ball3_cap_by_height(double r, double h) {
    return M_PI * h * h * (3.0 * r - h) / 3.0;
}

}  // namespace

TEST_CASE("ball oracle pieces agree with each other") {
    Ball b(v2(0.5, -1.0), 2.0);
    RandomStream rs(3);
    for (int i = 0; i < 200; ++i) {
        Vec u = rs.sphere_direction(2);
        Vec p = b.support_point(u);
        CHECK(b.contains(p));
        CHECK(p.dot(u) == doctest::Approx(b.support(u)).epsilon(1e-12));
        // support point is extreme: nothing deeper in direction u
        Vec q = b.interior_point() + 0.99 * 2.0 * rs.sphere_direction(2);
        CHECK(q.dot(u) <= b.support(u) + 1e-12);
    }
    CHECK(*b.exact_volume() == doctest::Approx(M_PI * 4.0).epsilon(1e-14));
}

TEST_CASE("ball halfspace volume: center cut gives half") {
    Ball b(v2(0.0, 0.0), 1.5);
    Vec u = v2(1.0, 0.0);
    CHECK(*b.exact_halfspace_volume(u, 0.0) ==
          doctest::Approx(M_PI * 1.5 * 1.5 / 2.0).epsilon(1e-13));
    // full and empty cuts
    CHECK(*b.exact_halfspace_volume(u, 1.5) == doctest::Approx(M_PI * 2.25).epsilon(1e-13));
    CHECK(*b.exact_halfspace_volume(u, -1.5) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("ball_cap_volume matches closed forms in d=2,3") {
    for (double r : {0.5, 1.0, 2.0}) {
        for (double frac : {0.05, 0.3, 0.7, 1.0, 1.6}) {
            double h = frac * r;
            CHECK(ball_cap_volume(2, r, h) ==
                  doctest::Approx(disk_cap_by_height(r, h)).epsilon(1e-12));
            CHECK(ball_cap_volume(3, r, h) ==
                  doctest::Approx(ball3_cap_by_height(r, h)).epsilon(1e-12));
        }
        CHECK(ball_cap_volume(2, r, 2 * r) == doctest::Approx(M_PI * r * r).epsilon(1e-12));
        CHECK(ball_cap_volume(3, r, 2 * r) ==
              doctest::Approx(4.0 * M_PI * r * r * r / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("ball_cap_volume d=4 against an independent quadrature") {
    // slice area at height z is kappa_3 * (1-z^2)^{3/2}; integrate over the cap
    auto profile = [](double z) { return unit_ball_volume(3) * std::pow(1.0 - z * z, 1.5); };
    for (double h : {0.2, 0.5, 1.0}) {
        const int n = 20'000;
        double lo = 1.0 - h, sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double z0 = lo + h * i / n, z1 = lo + h * (i + 1) / n;
            double zm = 0.5 * (z0 + z1);
            sum += h / n * (profile(z0) + 4.0 * profile(zm) + profile(z1)) / 6.0;
        }
        CHECK(ball_cap_volume(4, 1.0, h) == doctest::Approx(sum).epsilon(1e-8));
    }
}

TEST_CASE("ball_overshoot closed form (d=2) and consistency (d=3)") {
    for (double rho : {1.001, 1.1, 2.0, 5.0}) {
        auto v = ball_overshoot(2, 1.0, rho);
        REQUIRE(v.has_value());
        CHECK(*v == doctest::Approx(tutil::disk_overshoot(rho)).epsilon(1e-12));
    }
    // scaling covariance: radius r scales volumes by r^d
    auto a = ball_overshoot(3, 1.0, 1.4);
    auto b = ball_overshoot(3, 2.0, 2.8);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(8.0 * *a).epsilon(1e-12));
    // at the boundary the overshoot vanishes
    CHECK(*ball_overshoot(3, 1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ball_overshoot(2, 1.0, 1.0 + 1e-9).value() > 0.0);
}

TEST_CASE("ball exact_overshoot hook matches the free function") {
    Ball b2(v2(1.0, 2.0), 0.5);
    Vec x = v2(1.0 + 0.9, 2.0);  // distance 0.9 from center, radius 0.5
    auto hook = b2.exact_overshoot(x);
    REQUIRE(hook.has_value());
    CHECK(*hook == doctest::Approx(*ball_overshoot(2, 0.5, 0.9)).epsilon(1e-12));
    Ball b3(v3(0, 0, 0), 1.0);
    auto hook3 = b3.exact_overshoot(v3(0, 0, 1.7));
    REQUIRE(hook3.has_value());
    CHECK(*hook3 == doctest::Approx(*ball_overshoot(3, 1.0, 1.7)).epsilon(1e-12));
}

TEST_CASE("radial_boundary lands on the boundary, inside") {
    Ball b(v2(0, 0), 1.0);
    Vec p = radial_boundary(b, v2(0, 0), v2(1.0, 0.0));
    CHECK(b.contains(p));
    CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-10));
    // off-center start, skew direction
    Vec q = radial_boundary(b, v2(0.3, -0.2), v2(-1.0, 2.0));
    CHECK(b.contains(q));
    CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ellipsoid agrees with the ball it maps") {
    Mat a(2, 2);
    a << 2.0, 0.3, 0.0, 0.5;
    Vec c = v2(1.0, -1.0);
    Ellipsoid e(c, a);
    CHECK(*e.exact_volume() == doctest::Approx(M_PI * std::abs(2.0 * 0.5)).epsilon(1e-13));
    RandomStream rs(8);
    for (int i = 0; i < 100; ++i) {
        Vec s = rs.sphere_direction(2);
        CHECK(e.contains(c + a * (0.999 * s)));
        Vec u = rs.sphere_direction(2);
        // support via the mapped-ball formula
        CHECK(e.support(u) == doctest::Approx(c.dot(u) + (a.transpose() * u).norm()).epsilon(1e-12));
        Vec p = e.support_point(u);
        CHECK(p.dot(u) == doctest::Approx(e.support(u)).epsilon(1e-12));
    }
    // halfspace through the center cuts half the volume
    CHECK(*e.exact_halfspace_volume(v2(0, 1), -1.0) ==
          doctest::Approx(M_PI * 0.5).epsilon(1e-12));
}

TEST_CASE("affine image covariance") {
    auto base = std::make_shared<Ball>(v2(0, 0), 1.0);
    Mat t(2, 2);
    t << 1.0, 0.5, 0.0, 2.0;  // det 2
    Vec shift = v2(3.0, -1.0);
    AffineImage img(base, t, shift);
    CHECK(*img.exact_volume() == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    RandomStream rs(21);
    for (int i = 0; i < 100; ++i) {
        Vec u = rs.sphere_direction(2);
        // h_{TK+v}(u) = |T^t u| h_K(T^t u / |T^t u|) + <v,u>
        Vec w = t.transpose() * u;
        double want = w.norm() * base->support((w / w.norm()).eval()) + shift.dot(u);
        CHECK(img.support(u) == doctest::Approx(want).epsilon(1e-12));
        Vec p = img.support_point(u);
        CHECK(img.contains(p));
        CHECK(p.dot(u) == doctest::Approx(img.support(u)).epsilon(1e-10));
        // membership transports through the map
        Vec y = rs.ball_point(Vec::Zero(2), 1.0);
        CHECK(img.contains((t * y + shift).eval()));
    }
}

TEST_CASE("affine inertia forwards exactly for a mapped ball") {
    auto base = std::make_shared<Ball>(v2(0, 0), 1.0);
    Mat t(2, 2);
    t << 2.0, 0.0, 0.0, 1.0;
    AffineImage img(base, t, v2(0, 0));
    auto inert = img.exact_inertia(v2(0, 0));
    REQUIRE(inert.has_value());
    // int x^2 over unit disk = pi/4; map scales x by 2: moment 2^2 * |det| * pi/4
    CHECK(inert->second_moment(0, 0) == doctest::Approx(4.0 * 2.0 * M_PI / 4.0).epsilon(1e-12));
    CHECK(inert->second_moment(1, 1) == doctest::Approx(2.0 * M_PI / 4.0).epsilon(1e-12));
    CHECK(std::abs(inert->second_moment(0, 1)) < 1e-12);
    CHECK(inert->centroid.norm() < 1e-12);
}

TEST_CASE("interior data is coherent") {
    Ball b(v3(1, 1, 1), 0.25);
    CHECK(b.contains(b.interior_point()));
    CHECK(b.interior_margin() == doctest::Approx(0.25));
    auto bb = b.bounding_ball();
    CHECK((bb.center - v3(1, 1, 1)).norm() < 1e-15);
    CHECK(bb.radius == doctest::Approx(0.25));
}
