#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "cvg/body.hpp"
#include "cvg/corpus.hpp"
#include "cvg/report.hpp"
#include "cvg/verify.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cvg;

TEST_CASE("report margin and pass convention") {
    Report r = Report::make("X", "b", 2, 1.0, 2.0, 0.0, 7);
    CHECK(r.margin == doctest::Approx(1.0));
    CHECK(r.pass);
    r.lhs = 2.5;
    r.refresh();
    CHECK(r.margin == doctest::Approx(-0.5));
    CHECK(!r.pass);
    r.tolerance = 0.6;
    r.refresh();
    CHECK(r.pass);  // within tolerance
}

TEST_CASE("format_double round-trips exactly") {
    for (double x : {0.1, 1.0 / 3.0, M_PI, 1e-300, 6.02e23, -0.0, 123456789.123456789}) {
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("csv serialization carries one row per report") {
    std::vector<Report> rs = {Report::make("A", "b1", 2, 0.0, 1.0, 0.0, 1),
                              Report::make("B", "b2", 3, 2.0, 1.0, 0.0, 2)};
    std::string csv = reports_to_csv(rs);
    CHECK(csv.find(report_csv_header()) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
    CHECK(csv.find("A") != std::string::npos);
    CHECK(csv.find("FAIL") == std::string::npos);  // csv stores pass as a field, not text
    std::string md = reports_to_markdown(rs);
    CHECK(md.find("1 failures") != std::string::npos);
}

TEST_CASE("claim registry is complete and queryable") {
    const auto& reg = claim_registry();
    std::set<std::string> names(reg.begin(), reg.end());
    std::set<std::string> want = {"Lemma2.2i", "Lemma2.2ii", "Lemma2.3", "Lemma2.5",
                                  "Lemma2.6",  "Lemma2.7",   "Thm2.1",   "Thm3.1",
                                  "Eq3.2",     "Scaling1.1"};
    CHECK(names == want);
    for (const auto& c : reg) CHECK(claim_known(c));
    CHECK(!claim_known("Lemma9.9"));
    CHECK(!claim_known("all"));  // "all" is a CLI alias, not a claim
}

TEST_CASE("lemma runners pass on a reduced grid") {
    LemmaGridOptions small;
    small.dims = {2};
    small.random_bodies = 2;
    small.directions = 2;
    for (const std::string claim : {"Lemma2.2i", "Lemma2.2ii", "Lemma2.5", "Lemma2.6"}) {
        auto reports = verify_lemma(claim, small);
        CHECK(reports.size() >= 5);  // named trio + 2 random hulls
        for (const auto& r : reports) {
            CHECK(r.claim == claim);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("hausdorff sweep reports both families") {
    auto reports = verify_hausdorff_bound(64, {50});
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CHECK(r.claim == "Eq3.2");
        CHECK(r.pass);
    }
    CHECK(reports[0].body == "ball2-regular");
    CHECK(reports[1].body == "ball3-fibonacci");
    // worst case for n-gons is the smallest n; the ratio is still below 1
    CHECK(reports[0].lhs > 0.1);
    CHECK(reports[0].lhs < 1.0);
}

TEST_CASE("scaling study recovers the square-law for polygons") {
    auto res = scaling_study(2, {8, 16, 32, 64});
    CHECK(res.dim == 2);
    REQUIRE(res.points.size() == 4);
    CHECK(res.slope == doctest::Approx(-2.0).epsilon(0.02));
    CHECK(res.report.pass);
    // symmetric differences shrink monotonically
    for (size_t i = 1; i < res.points.size(); ++i)
        CHECK(res.points[i].ds < res.points[i - 1].ds);
}

TEST_CASE("theorem 2.1 verifier passes on the disk at reduced budgets") {
    Theorem21Options opt;
    opt.outer_directions = 128;
    opt.sandwich_directions = 200;
    opt.seed = 2;
    auto res = verify_theorem21(make_named_body("disk"), "disk", 1e-3 * M_PI, opt);
    CHECK(res.report.pass);
    CHECK(res.report.claim == "Thm2.1");
    CHECK(res.report.params.at("n") == doctest::Approx(res.greedy.polytope.vertices().size()));
    CHECK(res.report.params.at("n") <= res.report.params.at("count_bound"));
    CHECK(res.report.params.at("vertex_defect") <= 1e-9);
    CHECK(res.report.params.at("sandwich_worst") >= -1e-6);
    CHECK(res.report.details.find("binding=") != std::string::npos);
}

TEST_CASE("theorem 3.1 in-window run on the disk") {
    double t = *ball_overshoot(2, 1.0, 1.0 + 1e-5);
    Theorem31Options opt;
    opt.seed = 1;
    Report rep = verify_theorem31_regime_aware(make_named_body("disk"), "disk", t, opt);
    CHECK(rep.pass);
    CHECK(rep.params.at("n_lo") == doctest::Approx(std::sqrt(128.0 * M_PI / 7.0)).epsilon(1e-12));
    CHECK(rep.params.at("n") >= rep.params.at("n_lo") - 1e-9);
    CHECK(rep.params.at("n") <= rep.params.at("n_hi") + 1e-9);
    CHECK(rep.params.at("c1") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.params.at("c2") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.lhs > 0.0);
    CHECK(rep.lhs <= rep.rhs + rep.tolerance);
}

TEST_CASE("theorem 3.1 window regimes on the square") {
    auto square = make_named_body("square");
    // small t: admissible interval is empty ((8+2t)/(64e t) cannot reach n_lo)
    CHECK_THROWS_AS(verify_theorem31(square, "square", 1e-4), WindowEmpty);
    Report rep = verify_theorem31_regime_aware(square, "square", 1e-4);
    CHECK(rep.pass);
    CHECK(rep.details.find("WindowEmpty") != std::string::npos);
    CHECK(rep.lhs == 0.0);
    CHECK(rep.rhs == 0.0);
    // oversized t violates the volume precondition before any window logic
    CHECK_THROWS_AS(verify_theorem31(square, "square", 0.5), TargetTooLarge);
    CHECK_THROWS_AS(verify_theorem31(square, "square", -1.0), ConfigError);
}

TEST_CASE("run_claim dispatches known ids and rejects junk") {
    auto reports = run_claim("Eq3.2");
    CHECK(reports.size() == 2);
    for (const auto& r : reports) CHECK(r.pass);
    CHECK_THROWS_AS(run_claim("NotAClaim"), ConfigError);
}
