#include "cvg/optimize.hpp"

#include <cmath>

#include "cvg/directions.hpp"

namespace cvg {

double golden_section(const std::function<double(double)>& f, double a, double b,
                      double tol, int max_iter) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int iter = 0;
    while (b - a > tol && iter++ < max_iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

namespace {

SphereMinResult descend(Vec u, const std::function<double(const Vec&)>& f,
                        const SphereMinOptions& opt) {
    int evals = 0;
    auto eval = [&](const Vec& x) {
        ++evals;
        return f(x);
    };
    double fu = eval(u);
    double angle = opt.initial_angle;
    for (int round = 0; round < opt.max_rounds && angle > opt.angle_tol; ++round) {
        Mat T = tangent_basis(u);
        bool improved = false;
        for (int i = 0; i < T.cols(); ++i) {
            Vec t = T.col(i);
            auto along = [&](double th) { return eval(std::cos(th) * u + std::sin(th) * t); };
            double th = golden_section(along, -angle, angle, angle * 1e-4, 80);
            Vec cand = std::cos(th) * u + std::sin(th) * t;
            cand.normalize();
            double fc = eval(cand);
            if (fc < fu - 1e-15 * std::abs(fu)) {
                u = cand;
                fu = fc;
                improved = true;
                // tangent frame is stale once we move; rebuild next pass
                T = tangent_basis(u);
            }
        }
        if (!improved) angle *= 0.35;
    }
    return {u, fu, evals};
}

}  // namespace

SphereMinResult minimize_on_sphere_from(const std::vector<Vec>& starts,
                                        const std::function<double(const Vec&)>& f,
                                        const SphereMinOptions& opt) {
    SphereMinResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (const Vec& s : starts) {
        SphereMinResult r = descend(unit(s), f, opt);
        best.evaluations += r.evaluations;
        if (r.value < best.value) {
            best.value = r.value;
            best.point = r.point;
        }
    }
    return best;
}

SphereMinResult minimize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                   const SphereMinOptions& opt) {
    std::vector<Vec> starts = well_spread_directions(dim, opt.starts, opt.seed);
    return minimize_on_sphere_from(starts, f, opt);
}

}  // namespace cvg
