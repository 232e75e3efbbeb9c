#include "cvg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cvg/corpus.hpp"
#include "cvg/directions.hpp"
#include "cvg/floating.hpp"
#include "cvg/illumination.hpp"
#include "cvg/optimize.hpp"
#include "cvg/polytope.hpp"
#include "cvg/position.hpp"
#include "cvg/rng.hpp"

namespace cvg {

namespace {

/* Signed radial slack of x relative to the body, in units of the bounding
   radius: negative inside, positive outside. */
double radial_excess(const ConvexBody& body, const Vec& x) {
    const Vec c = body.interior_point();
    const double scale = std::max(body.bounding_ball().radius, 1e-300);
    Vec r = x - c;
    const double len = r.norm();
    if (len < 1e-14 * scale) return -1.0;
    Vec b = radial_boundary(body, c, r);
    return (len - (b - c).norm()) / scale;
}

/* vol(K \ Q) with the exact paths preferred: Q inside K gives a volume
   difference, polytope K gives an exact H-form intersection, anything else
   falls back to seeded sampling over K's bounding ball. */
VolumeEstimate volume_outside(const ConvexBody& k, const HPolytope& q, long long samples,
                              std::uint64_t seed) {
    bool q_inside = true;
    for (const Vec& v : q.vform().vertices()) {
        if (radial_excess(k, v) > 1e-9) {
            q_inside = false;
            break;
        }
    }
    MeasureOptions mo;
    mo.samples = samples;
    mo.seed = seed;
    VolumeEstimate vol_k = volume(k, mo);
    if (q_inside) {
        VolumeEstimate r = vol_k;
        r.value = std::max(0.0, vol_k.value - q.vform().volume());
        return r;
    }

    const HPolytope* kh = dynamic_cast<const HPolytope*>(&k);
    HPolytope converted = [&]() -> HPolytope {
        if (kh) return *kh;
        if (auto kv = dynamic_cast<const VPolytope*>(&k)) return HPolytope(*kv);
        // placeholder, unused on the sampling path
        return q;
    }();
    if (kh || dynamic_cast<const VPolytope*>(&k)) {
        std::vector<Vec> normals;
        std::vector<double> offsets;
        for (const Halfspace& h : converted.constraints()) {
            normals.push_back(h.normal);
            offsets.push_back(h.offset);
        }
        for (const Halfspace& h : q.constraints()) {
            normals.push_back(h.normal);
            offsets.push_back(h.offset);
        }
        double inter = 0.0;
        try {
            inter = HPolytope(normals, offsets).vform().volume();
        } catch (const EmptyIntersection&) {
            inter = 0.0;
        }
        return VolumeEstimate::exact(std::max(0.0, vol_k.value - inter));
    }

    BoundingBall bb = k.bounding_ball();
    RandomStream rs(derive_seed(seed, "vol-outside", 0));
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        Vec x = rs.ball_point(bb.center, bb.radius);
        if (k.contains(x) && !q.contains(x)) ++hits;
    }
    const double ball = unit_ball_volume(k.dim()) * std::pow(bb.radius, k.dim());
    const double p = static_cast<double>(hits) / samples;
    return VolumeEstimate::monte_carlo(ball * p,
                                       ball * std::sqrt(std::max(p * (1 - p), 1.0 / samples) /
                                                        samples),
                                       samples, seed);
}

struct SubCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tol = 0.0;
    double slack() const { return rhs - lhs + tol; }
};

/* Fold sub-inequalities into one report: the binding entry (minimal slack)
   provides lhs/rhs/tolerance, so the folded pass equals the conjunction. */
Report fold_checks(const std::string& claim, const std::string& label, int dim,
                   const std::vector<SubCheck>& checks, std::uint64_t seed) {
    const SubCheck* binding = &checks.front();
    for (const SubCheck& c : checks)
        if (c.slack() < binding->slack()) binding = &c;
    Report r = Report::make(claim, label, dim, binding->lhs, binding->rhs, binding->tol, seed);
    std::ostringstream os;
    os << "binding=" << binding->name;
    for (const SubCheck& c : checks) os << ";" << c.name << (c.slack() >= 0.0 ? "=ok" : "=FAIL");
    r.details = os.str();
    return r;
}

}  // namespace

// --------------------------------------------------------------------------
// Theorem 2.1

Theorem21Result verify_theorem21(const BodyPtr& body, const std::string& label, double t,
                                 const Theorem21Options& opt) {
    const int d = body->dim();
    GreedyLimits limits = opt.limits;
    CapSolveOptions cap = opt.cap;
    cap.samples = std::max(cap.samples, opt.samples / 4);
    GreedyResult greedy =
        greedy_inscribed(*body, t, derive_seed(opt.seed, "thm21-greedy", 0), limits, cap);
    const VPolytope& p = greedy.polytope;
    const auto n = static_cast<double>(greedy.run.vertices.size());

    // (a) every accepted vertex lies in K (radial slack at bounding scale).
    double vertex_defect = 0.0;
    for (const Vec& v : greedy.run.vertices)
        vertex_defect = std::max(vertex_defect, radial_excess(*body, v));

    // (b) support dominance against the matched-budget outer proxy: for each
    // sampled direction the exact t-cut offset c(v) satisfies
    // h_{K_t}(v) <= c(v), so h_P(v) >= c(v) - slack is a one-sided
    // strengthening of the K_t < P_n sandwich.
    double sandwich_worst = std::numeric_limits<double>::infinity();
    {
        std::vector<Vec> dirs =
            well_spread_directions(d, opt.sandwich_directions, derive_seed(opt.seed, "thm21-sw", 0));
        CapSolveOptions cut_opt = cap;
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            cut_opt.seed = derive_seed(opt.seed, "thm21-sw-cut", i);
            const double c = solve_cut_offset(*body, dirs[i], t, cut_opt).offset;
            const double hp = p.support(dirs[i]);
            sandwich_worst = std::min(sandwich_worst, hp - c);
        }
    }

    // (c), (d): excess volumes against the m-facet outer floating polytope Q.
    // Q contains K_t, so vol(K\Q) <= vol(K\K_t) and both checks below only
    // strengthen the theorem's inequalities.
    FloatingQuery query;
    query.body = body;
    query.t = t;
    query.seed = derive_seed(opt.seed, "thm21-outer", 0);
    query.cap = cap;
    HPolytope outer = floating_outer_polytope(query, opt.outer_directions, query.seed);
    VolumeEstimate k_minus_q =
        volume_outside(*body, outer, opt.samples, derive_seed(opt.seed, "thm21-kq", 0));

    MeasureOptions mo;
    mo.samples = opt.samples;
    mo.seed = derive_seed(opt.seed, "thm21-vol", 0);
    VolumeEstimate vol_k = volume(*body, mo);
    const double k_minus_p = std::max(0.0, vol_k.value - p.volume());

    const double count_bound =
        std::exp(16.0 * d) * k_minus_q.value / (t * unit_ball_volume(d));

    std::vector<SubCheck> checks;
    checks.push_back({"vertices_in_K", vertex_defect, 0.0, 1e-9});
    checks.push_back({"support_dominance", 0.0, sandwich_worst, opt.sandwich_slack});
    checks.push_back({"facet_count", n, count_bound, 0.0});
    checks.push_back({"volume_excess", k_minus_p,
                      k_minus_q.value + 3.0 * (k_minus_q.std_error + vol_k.std_error), 0.0});

    Report r = fold_checks("Thm2.1", label, d, checks, opt.seed);
    r.params["t"] = t;
    r.params["n"] = n;
    r.params["count_bound"] = count_bound;
    r.params["vertex_defect"] = vertex_defect;
    r.params["sandwich_worst"] = sandwich_worst;
    r.params["vol_k_minus_p"] = k_minus_p;
    r.params["vol_k_minus_q"] = k_minus_q.value;
    r.params["outer_facets"] = static_cast<double>(opt.outer_directions);
    r.params["refine_accepts"] = static_cast<double>(greedy.run.refine_accepts);
    return {std::move(r), std::move(greedy)};
}

// --------------------------------------------------------------------------
// Theorem 3.1

namespace {

struct Thm31Context {
    int d = 0;
    double vol = 0.0;
    double c1 = 0.0;  // (1/c1) B inside K
    double c2 = 0.0;  // K inside c2 B
    double threshold = 0.0;
    VolumeEstimate excess;
    double n_lo = 0.0;
    double n_hi = 0.0;
    int n_min_admissible = 0;
    int n_max_admissible = -1;
    bool window_empty() const { return n_min_admissible > n_max_admissible; }
};

/* Radii of the centered sandwich balls via support extrema; exact for
   polytopes (vertex norms / facet offsets), closed form for balls, sphere
   search otherwise. */
void sandwich_constants(const ConvexBody& body, double& c1, double& c2) {
    const int d = body.dim();
    double min_h = 0.0, max_h = 0.0;
    if (const auto* hp = dynamic_cast<const HPolytope*>(&body)) {
        min_h = std::numeric_limits<double>::infinity();
        for (const Halfspace& h : hp->constraints()) min_h = std::min(min_h, h.offset);
        max_h = 0.0;
        for (const Vec& v : hp->vform().vertices()) max_h = std::max(max_h, v.norm());
    } else if (const auto* vp = dynamic_cast<const VPolytope*>(&body)) {
        min_h = std::numeric_limits<double>::infinity();
        for (const auto& f : vp->facets()) min_h = std::min(min_h, f.offset);
        max_h = 0.0;
        for (const Vec& v : vp->vertices()) max_h = std::max(max_h, v.norm());
    } else if (const auto* ball = dynamic_cast<const Ball*>(&body)) {
        const double dist = ball->center().norm();
        min_h = ball->radius() - dist;
        max_h = ball->radius() + dist;
    } else {
        SphereMinOptions so;
        so.starts = 32;
        so.seed = 0x5A5Du;
        min_h = minimize_on_sphere(d, [&](const Vec& u) { return body.support(u); }, so).value;
        max_h = -minimize_on_sphere(d, [&](const Vec& u) { return -body.support(u); }, so).value;
    }
    if (!(min_h > 0.0))
        throw GeometryError("theorem31: the origin must be interior to the body");
    c1 = 1.0 / min_h;
    c2 = max_h;
}

Thm31Context thm31_context(const BodyPtr& body, double t, const Theorem31Options& opt) {
    Thm31Context ctx;
    ctx.d = body->dim();
    if (!(t > 0.0)) throw ConfigError("theorem31: t must be positive");
    sandwich_constants(*body, ctx.c1, ctx.c2);

    MeasureOptions mo;
    mo.samples = opt.samples;
    mo.seed = derive_seed(opt.seed, "thm31-vol", 0);
    ctx.vol = volume(*body, mo).value;
    ctx.threshold = std::pow(5.0 * ctx.c1 * ctx.c2, -(ctx.d + 1)) * ctx.vol;
    if (t > ctx.threshold) {
        std::ostringstream os;
        os << "theorem31: t = " << t << " above the admissible level " << ctx.threshold
           << " (c1 = " << ctx.c1 << ", c2 = " << ctx.c2 << ")";
        throw TargetTooLarge(os.str());
    }

    MeasureOptions excess_opt = mo;
    excess_opt.seed = derive_seed(opt.seed, "thm31-excess", 0);
    ctx.excess = illumination_excess_volume(*body, t, excess_opt);

    ctx.n_lo = std::pow(128.0 * M_PI / 7.0, 0.5 * (ctx.d - 1));
    ctx.n_hi = ctx.excess.value / (32.0 * M_E * ctx.d * t);
    ctx.n_min_admissible = static_cast<int>(std::ceil(ctx.n_lo - 1e-9));
    ctx.n_max_admissible = static_cast<int>(std::floor(ctx.n_hi + 1e-9));
    return ctx;
}

std::string window_message(const Thm31Context& ctx, double t) {
    std::ostringstream os;
    os << "admissible facet window [" << ctx.n_lo << ", " << ctx.n_hi << "] at t = " << t
       << " (excess = " << ctx.excess.value << ") contains no integer";
    return os.str();
}

Report thm31_finish(const BodyPtr& body, const std::string& label, double t,
                    const Theorem31Options& opt, const Thm31Context& ctx) {
    int n = opt.n_override > 0 ? opt.n_override : ctx.n_min_admissible;
    if (n < ctx.n_min_admissible || n > ctx.n_max_admissible) {
        std::ostringstream os;
        os << "theorem31: requested n = " << n << " outside the admissible window ["
           << ctx.n_min_admissible << ", " << ctx.n_max_admissible << "]";
        throw ConfigError(os.str());
    }

    std::vector<Vec> dirs = well_spread_directions(ctx.d, n, derive_seed(opt.seed, "thm31-dirs", 0));
    HPolytope pn = circumscribed_facets(*body, dirs);
    MeasureOptions mo;
    mo.samples = opt.samples;
    mo.seed = derive_seed(opt.seed, "thm31-pvol", 0);
    VolumeEstimate vol_k = volume(*body, mo);
    const double pn_excess = std::max(0.0, pn.vform().volume() - vol_k.value);

    const double factor =
        1e7 * ctx.d * ctx.d * std::pow(ctx.c1 * ctx.c2, 2.0 + 1.0 / (ctx.d - 1.0));
    const double rhs = factor * pn_excess;
    const double tol = 3.0 * (ctx.excess.std_error + factor * vol_k.std_error);

    Report r = Report::make("Thm3.1", label, ctx.d, ctx.excess.value, rhs, tol, opt.seed);
    r.params["t"] = t;
    r.params["c1"] = ctx.c1;
    r.params["c2"] = ctx.c2;
    r.params["threshold"] = ctx.threshold;
    r.params["n"] = static_cast<double>(n);
    r.params["n_lo"] = ctx.n_lo;
    r.params["n_hi"] = ctx.n_hi;
    r.params["excess"] = ctx.excess.value;
    r.params["pn_excess"] = pn_excess;
    r.params["factor"] = factor;
    r.details = "vol(K^t\\K) vs 1e7 d^2 (c1 c2)^{2+1/(d-1)} vol(Pn\\K)";
    return r;
}

}  // namespace

Report verify_theorem31(const BodyPtr& body, const std::string& label, double t,
                        const Theorem31Options& opt) {
    Thm31Context ctx = thm31_context(body, t, opt);
    if (ctx.window_empty()) throw WindowEmpty("theorem31: " + window_message(ctx, t));
    return thm31_finish(body, label, t, opt, ctx);
}

Report verify_theorem31_regime_aware(const BodyPtr& body, const std::string& label, double t,
                                     const Theorem31Options& opt) {
    Thm31Context ctx = thm31_context(body, t, opt);
    if (!ctx.window_empty()) return thm31_finish(body, label, t, opt, ctx);
    Report r = Report::make("Thm3.1", label, ctx.d, 0.0, 0.0, 0.0, opt.seed);
    r.params["t"] = t;
    r.params["c1"] = ctx.c1;
    r.params["c2"] = ctx.c2;
    r.params["threshold"] = ctx.threshold;
    r.params["n_lo"] = ctx.n_lo;
    r.params["n_hi"] = ctx.n_hi;
    r.params["excess"] = ctx.excess.value;
    r.details = "WindowEmpty: " + window_message(ctx, t) +
                "; regime report, hypothesis unmet, no inequality checked";
    return r;
}

// --------------------------------------------------------------------------
// Lemma grid runners

namespace {

std::vector<CorpusEntry> grid_corpus(const LemmaGridOptions& opt) {
    std::vector<CorpusEntry> all;
    for (int d : opt.dims) {
        auto part = default_corpus(d, opt.random_bodies,
                                   derive_seed(opt.seed, "grid-corpus", static_cast<std::uint64_t>(d)));
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

MeasureOptions grid_measure(const LemmaGridOptions& opt, std::string_view tag, std::uint64_t idx) {
    MeasureOptions mo;
    mo.samples = opt.samples;
    mo.seed = derive_seed(opt.seed, tag, idx);
    return mo;
}

std::vector<Report> run_lemma22i(const LemmaGridOptions& opt) {
    std::vector<Report> out;
    auto corpus = grid_corpus(opt);
    for (std::size_t bi = 0; bi < corpus.size(); ++bi) {
        const ConvexBody& k = *corpus[bi].body;
        const int d = k.dim();
        MeasureOptions mo = grid_measure(opt, "l22i", bi);
        InertiaData in = inertia(k, Vec::Zero(d), mo);
        const double bound = std::pow(static_cast<double>(d) / (d + 1), d);
        RandomStream rs(derive_seed(opt.seed, "l22i-dir", bi));
        double worst_min = 1.0, worst_max = 0.0;
        for (int j = 0; j < opt.directions; ++j) {
            Vec u = rs.sphere_direction(d);
            const double f =
                halfspace_volume(k, u, u.dot(in.centroid), mo).value / in.volume;
            worst_min = std::min(worst_min, std::min(f, 1.0 - f));
            worst_max = std::max(worst_max, std::max(f, 1.0 - f));
        }
        Report r = Report::make("Lemma2.2i", corpus[bi].label, d, bound, worst_min, 5e-3,
                                opt.seed);
        r.params["fraction_min"] = worst_min;
        r.params["fraction_max"] = worst_max;
        r.params["bound"] = bound;
        r.params["directions"] = opt.directions;
        r.details = "centroid halfspace fractions vs (d/(d+1))^d; implies the 1/e bounds";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> run_lemma22ii(const LemmaGridOptions& opt) {
    std::vector<Report> out;
    auto corpus = grid_corpus(opt);
    for (std::size_t bi = 0; bi < corpus.size(); ++bi) {
        const ConvexBody& k = *corpus[bi].body;
        const int d = k.dim();
        MeasureOptions mo = grid_measure(opt, "l22ii", bi);
        InertiaData in = inertia(k, Vec::Zero(d), mo);
        RandomStream rs(derive_seed(opt.seed, "l22ii-dir", bi));
        double worst_ratio = 0.0;
        for (int j = 0; j < opt.directions; ++j) {
            Vec u = rs.sphere_direction(d);
            const double central = section_volume(k, in.centroid, u, mo).value;
            const double peak = max_parallel_section(k, u, mo);
            worst_ratio = std::max(worst_ratio, peak / central);
        }
        Report r = Report::make("Lemma2.2ii", corpus[bi].label, d, worst_ratio, M_E, 5e-3,
                                opt.seed);
        r.params["max_ratio"] = worst_ratio;
        r.params["directions"] = opt.directions;
        r.details = "max parallel section vs e * central section";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> run_lemma23(const LemmaGridOptions& opt) {
    std::vector<Report> out;
    auto corpus = grid_corpus(opt);
    for (std::size_t bi = 0; bi < corpus.size(); ++bi) {
        const int d = corpus[bi].body->dim();
        MeasureOptions mo = grid_measure(opt, "l23", bi);
        BodyPtr centered = center_at_centroid(corpus[bi].body, mo);
        const double vol = volume(*centered, mo).value;
        const double lower = vol / (2.0 * std::pow(M_E, 3));
        const double upper = M_E * vol;
        RandomStream rs(derive_seed(opt.seed, "l23-dir", bi));
        double worst = std::numeric_limits<double>::infinity();
        double worst_prod = 0.0;
        for (int j = 0; j < opt.directions; ++j) {
            Vec u = rs.sphere_direction(d);
            ThetaResult th = theta(*centered, u, 1e-9, mo);
            const double prod = th.theta * th.central_section;
            const double slack = std::min(prod - lower, upper - prod);
            if (slack < worst) {
                worst = slack;
                worst_prod = prod;
            }
        }
        Report r = Report::make("Lemma2.3", corpus[bi].label, d, 0.0, worst, 1e-6 * vol,
                                opt.seed);
        r.params["volume"] = vol;
        r.params["lower"] = lower;
        r.params["upper"] = upper;
        r.params["binding_product"] = worst_prod;
        r.params["directions"] = opt.directions;
        r.details = "theta * central section inside [vol/(2e^3), e vol]";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> run_lemma25(const LemmaGridOptions& opt) {
    std::vector<Report> out;
    auto corpus = grid_corpus(opt);
    for (std::size_t bi = 0; bi < corpus.size(); ++bi) {
        const int d = corpus[bi].body->dim();
        MeasureOptions mo = grid_measure(opt, "l25", bi);
        IsotropicResult iso = isotropic_body(corpus[bi].body, mo);
        const double vol = volume(*iso.body, mo).value;
        InertiaData in = inertia(*iso.body, Vec::Zero(d), mo);
        const double m2 = in.second_moment.trace() / d;
        const double vol3 = vol * vol * vol;
        const double lower = vol3 / (24.0 * std::pow(M_E, 10));
        const double upper = 6.0 * std::pow(M_E, 3) * vol3;
        RandomStream rs(derive_seed(opt.seed, "l25-dir", bi));
        double worst = std::numeric_limits<double>::infinity();
        double worst_prod = 0.0;
        for (int j = 0; j < opt.directions; ++j) {
            Vec u = rs.sphere_direction(d);
            const double sec = section_volume(*iso.body, Vec::Zero(d), u, mo).value;
            const double prod = sec * sec * m2;
            const double slack = std::min(prod - lower, upper - prod);
            if (slack < worst) {
                worst = slack;
                worst_prod = prod;
            }
        }
        Report r = Report::make("Lemma2.5", corpus[bi].label, d, 0.0, worst, 1e-9 * vol3,
                                opt.seed);
        r.params["volume"] = vol;
        r.params["second_moment_mean"] = m2;
        r.params["lower"] = lower;
        r.params["upper"] = upper;
        r.params["binding_product"] = worst_prod;
        r.params["isotropy_residual"] = iso.residual;
        r.details = "central section^2 * mean second moment inside the vol^3 bracket";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> run_lemma26(const LemmaGridOptions& opt) {
    std::vector<Report> out;
    auto corpus = grid_corpus(opt);
    for (std::size_t bi = 0; bi < corpus.size(); ++bi) {
        const int d = corpus[bi].body->dim();
        MeasureOptions mo = grid_measure(opt, "l26", bi);
        BodyPtr centered = center_at_centroid(corpus[bi].body, mo);
        InertiaData in = inertia(*centered, Vec::Zero(d), mo);
        const double m2 = in.second_moment.trace() / d;
        const double vol = in.volume;
        const double bound = std::pow(d, 2.0 / d) / (d + 2) *
                             std::pow(unit_sphere_area(d), -2.0 / d) *
                             std::pow(vol, (d + 2.0) / d);
        Report r = Report::make("Lemma2.6", corpus[bi].label, d, bound, m2,
                                1e-9 * (std::abs(bound) + std::abs(m2)), opt.seed);
        r.params["volume"] = vol;
        r.params["second_moment_mean"] = m2;
        r.params["bound"] = bound;
        r.details = "mean second moment vs the isoperimetric-normalized volume power "
                    "(equality at the centered ball)";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> run_lemma27(const LemmaGridOptions& opt) {
    std::vector<Report> out;
    auto corpus = grid_corpus(opt);
    for (std::size_t bi = 0; bi < corpus.size(); ++bi) {
        MeasureOptions mo = grid_measure(opt, "l27", bi);
        IsotropicResult iso = isotropic_body(corpus[bi].body, mo);
        out.push_back(lemma27_ball_check(*iso.body, corpus[bi].label,
                                         std::max(opt.directions, 16),
                                         derive_seed(opt.seed, "l27-dir", bi), mo));
    }
    return out;
}

}  // namespace

std::vector<Report> verify_lemma(const std::string& claim, const LemmaGridOptions& opt) {
    if (claim == "Lemma2.2i") return run_lemma22i(opt);
    if (claim == "Lemma2.2ii") return run_lemma22ii(opt);
    if (claim == "Lemma2.3") return run_lemma23(opt);
    if (claim == "Lemma2.5") return run_lemma25(opt);
    if (claim == "Lemma2.6") return run_lemma26(opt);
    if (claim == "Lemma2.7") return run_lemma27(opt);
    throw ConfigError("verify_lemma: unknown claim " + claim);
}

// --------------------------------------------------------------------------
// Hausdorff bound and scaling

std::vector<Report> verify_hausdorff_bound(int n_max_2d, std::vector<int> n_grid_3d) {
    std::vector<Report> out;
    {
        double worst_ratio = 0.0;
        int worst_n = 0;
        double closed_form_dev = 0.0;
        for (int n = 3; n <= n_max_2d; ++n) {
            auto res = ball_inscribed_polytope(2, n, BallConstruction::Regular);
            const double bound = (64.0 / 7.0) * M_PI / (static_cast<double>(n) * n);
            const double ratio = res.hausdorff / bound;
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_n = n;
            }
            closed_form_dev =
                std::max(closed_form_dev, std::abs(res.hausdorff - (1.0 - std::cos(M_PI / n))));
        }
        Report r = Report::make("Eq3.2", "ball2-regular", 2, worst_ratio, 1.0, 0.0, 0);
        r.params["n_min"] = 3;
        r.params["n_max"] = n_max_2d;
        r.params["worst_n"] = worst_n;
        r.params["closed_form_dev"] = closed_form_dev;
        r.details = "exact d_H of regular n-gons vs (64/7) pi n^-2";
        out.push_back(std::move(r));
    }
    {
        double worst_ratio = 0.0;
        int worst_n = 0;
        for (int n : n_grid_3d) {
            auto res = ball_inscribed_polytope(3, n, BallConstruction::Fibonacci);
            const double bound = (64.0 / 7.0) * M_PI / n;
            const double ratio = res.hausdorff / bound;
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_n = n;
            }
        }
        Report r = Report::make("Eq3.2", "ball3-fibonacci", 3, worst_ratio, 1.0, 0.0, 0);
        r.params["worst_n"] = worst_n;
        r.params["grid_size"] = static_cast<double>(n_grid_3d.size());
        r.details = "exact d_H of fibonacci hulls vs (64/7) pi n^-1";
        out.push_back(std::move(r));
    }
    return out;
}

ScalingResult scaling_study(int d, const std::vector<int>& n_grid, std::uint64_t seed) {
    if (d != 2 && d != 3) throw ConfigError("scaling_study: d must be 2 or 3");
    if (n_grid.size() < 2) throw ConfigError("scaling_study: need at least two grid points");

    ScalingResult sr;
    sr.dim = d;
    const double ball_vol = unit_ball_volume(d);
    for (int n : n_grid) {
        auto res = ball_inscribed_polytope(
            d, n, d == 2 ? BallConstruction::Regular : BallConstruction::Fibonacci, seed);
        const double ds = std::max(ball_vol - res.polytope.volume(), 1e-300);
        sr.points.push_back({n, ds});
    }

    // least squares on (log n, log ds)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(sr.points.size());
    for (const ScalingPoint& p : sr.points) {
        const double x = std::log(static_cast<double>(p.n)), y = std::log(p.ds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    sr.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    sr.intercept = (sy - sr.slope * sx) / m;

    std::string label = "ball" + std::to_string(d);
    if (d == 2) {
        Report r = Report::make("Scaling1.1", label, d, std::abs(sr.slope + 2.0), 0.02, 0.0, seed);
        r.params["slope"] = sr.slope;
        r.params["intercept"] = sr.intercept;
        r.params["grid_size"] = m;
        r.details = "log-log slope of the inscribed n-gon volume defect vs the exact order -2";
        sr.report = std::move(r);
    } else {
        const double margin = std::min(sr.slope - (-1.3), -0.7 - sr.slope);
        Report r = Report::make("Scaling1.1", label, d, 0.0, margin, 0.0, seed);
        r.params["slope"] = sr.slope;
        r.params["intercept"] = sr.intercept;
        r.params["grid_size"] = m;
        r.details = "log-log slope of fibonacci hull volume defect inside [-1.3, -0.7]";
        sr.report = std::move(r);
    }
    return sr;
}

// --------------------------------------------------------------------------
// Registry

const std::vector<std::string>& claim_registry() {
    static const std::vector<std::string> reg = {
        "Lemma2.2i", "Lemma2.2ii", "Lemma2.3", "Lemma2.5", "Lemma2.6",
        "Lemma2.7",  "Thm2.1",     "Thm3.1",   "Eq3.2",    "Scaling1.1"};
    return reg;
}

bool claim_known(const std::string& claim) {
    const auto& reg = claim_registry();
    return std::find(reg.begin(), reg.end(), claim) != reg.end();
}

std::vector<Report> run_claim(const std::string& claim, std::uint64_t seed) {
    if (claim == "all") {
        std::vector<Report> out;
        for (const std::string& c : claim_registry()) {
            auto part = run_claim(c, seed);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (!claim_known(claim)) throw ConfigError("unknown claim: " + claim);

    if (claim.rfind("Lemma", 0) == 0) {
        LemmaGridOptions grid;
        grid.seed = seed;
        if (claim == "Lemma2.7") grid.directions = 500;
        if (claim == "Lemma2.2ii" || claim == "Lemma2.3") grid.directions = 3;
        return verify_lemma(claim, grid);
    }
    if (claim == "Thm2.1") {
        std::vector<Report> out;
        Theorem21Options opt;
        opt.seed = derive_seed(seed, "claim-thm21", 0);
        BodyPtr disk = make_named_body("disk");
        out.push_back(verify_theorem21(disk, "disk", 1e-3 * M_PI, opt).report);
        opt.seed = derive_seed(seed, "claim-thm21", 1);
        BodyPtr square = make_named_body("square");
        out.push_back(verify_theorem21(square, "square", 1e-3 * 4.0, opt).report);
        return out;
    }
    if (claim == "Thm3.1") {
        std::vector<Report> out;
        Theorem31Options opt;
        // Balls: pick the level from a boundary offset epsilon so that the
        // facet window is provably nonempty; K^t of the ball is the ball of
        // radius 1 + epsilon, making every quantity closed-form.
        opt.seed = derive_seed(seed, "claim-thm31", 0);
        out.push_back(verify_theorem31_regime_aware(make_named_body("ball2"), "ball2",
                                                    *ball_overshoot(2, 1.0, 1.0 + 1e-5), opt));
        opt.seed = derive_seed(seed, "claim-thm31", 1);
        out.push_back(verify_theorem31_regime_aware(make_named_body("ball3"), "ball3",
                                                    *ball_overshoot(3, 1.0, 1.0 + 4e-4), opt));
        // The square's window is empty at every admissible t; this is the
        // documented regime report.
        opt.seed = derive_seed(seed, "claim-thm31", 2);
        out.push_back(
            verify_theorem31_regime_aware(make_named_body("square"), "square", 1e-4, opt));
        return out;
    }
    if (claim == "Eq3.2") return verify_hausdorff_bound();
    if (claim == "Scaling1.1") {
        std::vector<Report> out;
        out.push_back(scaling_study(2, {8, 16, 32, 64, 128}, seed).report);
        out.push_back(scaling_study(3, {32, 64, 128, 256, 512, 1024}, seed).report);
        return out;
    }
    throw ConfigError("unknown claim: " + claim);  // unreachable
}

}  // namespace cvg
