#pragma once

#include <cstdint>
#include <vector>

#include "cvg/vec.hpp"

namespace cvg {

/* Prefix-nested, well-spread unit directions.

   d = 2: golden-angle sequence theta_j = 2*pi*frac(j*phi) (low discrepancy,
          and any prefix of a longer sequence is the shorter sequence).
   d >= 3: greedy farthest-point ordering of a seeded uniform pool; prefixes
          are nested by construction and asymptotically well spread.

   Used wherever direction budgets must be comparable across sizes (outer
   floating polytopes, optimizer starts, verification sweeps). */
std::vector<Vec> well_spread_directions(int d, int m, std::uint64_t seed);

/* Equally spaced angles on the circle, optional phase; exact trapezoid-grade
   quadrature nodes for d = 2 radial integrals. */
std::vector<Vec> circle_directions(int m, double phase = 0.0);

/* Spherical Fibonacci point set on S^2 (d = 3). */
std::vector<Vec> fibonacci_sphere(int n);

}  // namespace cvg
