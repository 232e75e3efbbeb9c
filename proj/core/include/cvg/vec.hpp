#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace cvg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/* Volume of the d-dimensional unit ball, via the two-step recurrence
   v_d = (2*pi/d) * v_{d-2} with v_0 = 1, v_1 = 2.  Avoids Gamma-function
   evaluation and is exact to rounding for the dimensions we care about. */
inline double unit_ball_volume(int d) {
    double v = (d % 2 == 0) ? 1.0 : 2.0;
    for (int k = (d % 2 == 0) ? 2 : 3; k <= d; k += 2)
        v *= 2.0 * M_PI / k;
    return v;
}

/* Surface area of the unit sphere boundary of B_2^d: d * v_d. */
inline double unit_sphere_area(int d) {
    return d * unit_ball_volume(d);
}

inline Vec unit(const Vec& v) {
    double n = v.norm();
    return v / n;
}

/* Orthonormal basis of the hyperplane orthogonal to unit vector n
   (columns of the returned d x (d-1) matrix). */
inline Mat tangent_basis(const Vec& n) {
    const int d = static_cast<int>(n.size());
    Eigen::HouseholderQR<Mat> qr(n);
    Mat q = qr.householderQ();
    Mat basis(d, d - 1);
    // First column of q is +-n; the rest span its orthogonal complement.
    for (int j = 1; j < d; ++j) basis.col(j - 1) = q.col(j);
    return basis;
}

}  // namespace cvg
