#include "cvg/position.hpp"

#include <cmath>

#include "cvg/errors.hpp"
#include "cvg/optimize.hpp"
#include "cvg/polytope.hpp"

namespace cvg {

BodyPtr apply_linear(const BodyPtr& body, const Mat& t) {
    const int d = body->dim();
    if (auto ball = std::dynamic_pointer_cast<const Ball>(body))
        return std::make_shared<Ellipsoid>(t * ball->center(), ball->radius() * t);
    if (auto ell = std::dynamic_pointer_cast<const Ellipsoid>(body))
        return std::make_shared<Ellipsoid>(t * ell->center(), t * ell->map());
    if (auto vp = std::dynamic_pointer_cast<const VPolytope>(body)) {
        std::vector<Vec> pts;
        pts.reserve(vp->vertices().size());
        for (const Vec& v : vp->vertices()) pts.push_back(t * v);
        return std::make_shared<VPolytope>(pts);
    }
    if (auto hp = std::dynamic_pointer_cast<const HPolytope>(body)) {
        Mat tinv_t = t.inverse().transpose();
        std::vector<Vec> normals;
        std::vector<double> offsets;
        for (const Halfspace& h : hp->constraints()) {
            normals.push_back(tinv_t * h.normal);  // constructor renormalizes
            offsets.push_back(h.offset);
        }
        return std::make_shared<HPolytope>(normals, offsets);
    }
    if (auto aff = std::dynamic_pointer_cast<const AffineImage>(body))
        return std::make_shared<AffineImage>(aff->base(), t * aff->map(), t * aff->shift());
    return std::make_shared<AffineImage>(body, t, Vec::Zero(d));
}

BodyPtr translate_body(const BodyPtr& body, const Vec& v) {
    if (auto ball = std::dynamic_pointer_cast<const Ball>(body))
        return std::make_shared<Ball>(ball->center() + v, ball->radius());
    if (auto ell = std::dynamic_pointer_cast<const Ellipsoid>(body))
        return std::make_shared<Ellipsoid>(ell->center() + v, ell->map());
    if (auto vp = std::dynamic_pointer_cast<const VPolytope>(body)) {
        std::vector<Vec> pts;
        pts.reserve(vp->vertices().size());
        for (const Vec& p : vp->vertices()) pts.push_back(p + v);
        return std::make_shared<VPolytope>(pts);
    }
    if (auto hp = std::dynamic_pointer_cast<const HPolytope>(body)) {
        std::vector<Vec> normals;
        std::vector<double> offsets;
        for (const Halfspace& h : hp->constraints()) {
            normals.push_back(h.normal);
            offsets.push_back(h.offset + h.normal.dot(v));
        }
        return std::make_shared<HPolytope>(normals, offsets);
    }
    if (auto aff = std::dynamic_pointer_cast<const AffineImage>(body))
        return std::make_shared<AffineImage>(aff->base(), aff->map(), aff->shift() + v);
    return std::make_shared<AffineImage>(body, Mat::Identity(body->dim(), body->dim()), v);
}

BodyPtr center_at_centroid(const BodyPtr& body, const MeasureOptions& opt) {
    InertiaData in = inertia(*body, Vec::Zero(body->dim()), opt);
    return translate_body(body, -in.centroid);
}

IsotropicResult isotropic_transform(const BodyPtr& centered, const MeasureOptions& opt) {
    const int d = centered->dim();
    InertiaData in = inertia(*centered, Vec::Zero(d), opt);
    Mat m = 0.5 * (in.second_moment + in.second_moment.transpose());

    Eigen::SelfAdjointEigenSolver<Mat> eig(m);
    Vec lam = eig.eigenvalues();
    if (lam.minCoeff() <= 0.0)
        throw DegenerateInput("isotropic_transform: second-moment matrix not positive definite");
    if (lam.maxCoeff() / lam.minCoeff() > 1e12)
        throw IllConditioned("isotropic_transform: moment eigenvalue ratio exceeds 1e12");

    double log_det = lam.array().log().sum();
    double scale = std::exp(log_det / (2.0 * d));  // (det M)^{1/2d}
    Mat inv_sqrt = eig.eigenvectors() * lam.cwiseSqrt().cwiseInverse().asDiagonal() *
                   eig.eigenvectors().transpose();
    Mat t = scale * inv_sqrt;

    IsotropicResult res;
    res.transform = t;
    res.translated_centroid = in.centroid;
    res.body = apply_linear(centered, t);

    InertiaData check = inertia(*res.body, Vec::Zero(d), opt);
    Mat mm = 0.5 * (check.second_moment + check.second_moment.transpose());
    double diag_mean = mm.trace() / d;
    double max_off = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) max_off = std::max(max_off, std::abs(mm(i, j)));
    res.isotropy_constant = diag_mean;
    res.residual = diag_mean > 0.0 ? max_off / diag_mean : max_off;
    return res;
}

IsotropicResult isotropic_body(const BodyPtr& body, const MeasureOptions& opt) {
    return isotropic_transform(center_at_centroid(body, opt), opt);
}

double max_parallel_section(const ConvexBody& body, const Vec& xi, const MeasureOptions& opt) {
    double lo = -body.support(-xi) + 1e-12;
    double hi = body.support(xi) - 1e-12;
    const int grid = 65;
    double best = -1.0, best_s = 0.0;
    for (int i = 0; i < grid; ++i) {
        double s = lo + (hi - lo) * i / (grid - 1);
        double v = section_volume(body, s * xi, xi, opt).value;
        if (v > best) {
            best = v;
            best_s = s;
        }
    }
    double step = (hi - lo) / (grid - 1);
    double a = std::max(lo, best_s - step), b = std::min(hi, best_s + step);
    double s_star = golden_section(
        [&](double s) { return -section_volume(body, s * xi, xi, opt).value; }, a, b,
        1e-6 * std::max(1.0, hi - lo));
    return std::max(best, section_volume(body, s_star * xi, xi, opt).value);
}

Report grunbaum_ratios(const ConvexBody& body, const std::string& label, const Vec& xi,
                       const MeasureOptions& opt) {
    const int d = body.dim();
    Vec u = unit(xi);
    InertiaData in = inertia(body, Vec::Zero(d), opt);
    double vol = in.volume;
    double cg_offset = in.centroid.dot(u);

    double lower_fraction = halfspace_volume(body, u, cg_offset, opt).value / vol;
    double upper_fraction = 1.0 - lower_fraction;
    double grunbaum = std::pow(1.0 - 1.0 / (d + 1), d);

    double central = section_volume(body, in.centroid, u, opt).value;
    double max_section = max_parallel_section(body, u, opt);

    // Constraint slacks, all normalized to volume fractions / section ratios.
    struct Constraint {
        const char* name;
        double lhs, rhs;
    };
    double fmin = std::min(lower_fraction, upper_fraction);
    double fmax = std::max(lower_fraction, upper_fraction);
    Constraint cons[] = {
        {"fraction_lower", grunbaum, fmin},
        {"fraction_upper", fmax, 1.0 - grunbaum},
        {"fraction_lower_e", 1.0 / M_E, fmin},
        {"fraction_upper_e", fmax, 1.0 - 1.0 / M_E},
        {"max_section", max_section / central, M_E},
    };
    const Constraint* binding = &cons[0];
    for (const Constraint& c : cons)
        if (c.rhs - c.lhs < binding->rhs - binding->lhs) binding = &c;

    Report r = Report::make("Lemma2.2", label, d, binding->lhs, binding->rhs, 5e-3, opt.seed);
    r.params["fraction_minus"] = lower_fraction;
    r.params["fraction_plus"] = upper_fraction;
    r.params["grunbaum_bound"] = grunbaum;
    r.params["central_section"] = central;
    r.params["max_section"] = max_section;
    r.details = std::string("binding=") + binding->name;
    return r;
}

ThetaResult theta(const ConvexBody& centered, const Vec& xi, double tol,
                  const MeasureOptions& opt) {
    Vec u = unit(xi);
    double width = centered.support(u);
    if (width <= 0.0) throw DegenerateInput("theta: centroid not interior along xi");

    ThetaResult res;
    res.xi = u;
    res.central_section = section_volume(centered, Vec::Zero(centered.dim()), u, opt).value;
    if (res.central_section <= 0.0) throw SectionNoise("theta: vanishing central section");
    double target = res.central_section / M_E;

    auto sect = [&](double s) { return section_volume(centered, s * u, u, opt).value; };

    // Sections are unimodal, so {s : f(s) <= target} is terminal in [0,width].
    double hi_val = sect(width * (1.0 - 1e-12));
    if (hi_val > target) {
        res.theta = width;
        return res;
    }
    double a = 0.0, b = width;
    while (b - a > tol) {
        double mid = 0.5 * (a + b);
        (sect(mid) > target ? a : b) = mid;
    }
    res.theta = 0.5 * (a + b);
    return res;
}

}  // namespace cvg
