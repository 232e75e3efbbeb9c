#include "cvg/directions.hpp"

#include <algorithm>
#include <cmath>

#include "cvg/rng.hpp"

namespace cvg {

std::vector<Vec> circle_directions(int m, double phase) {
    std::vector<Vec> dirs;
    dirs.reserve(m);
    for (int j = 0; j < m; ++j) {
        double a = phase + 2.0 * M_PI * j / m;
        Vec v(2);
        v << std::cos(a), std::sin(a);
        dirs.push_back(v);
    }
    return dirs;
}

std::vector<Vec> fibonacci_sphere(int n) {
    // Standard latitude/longitude spiral: z stratified, longitude by golden angle.
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<Vec> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double a = ga * i;
        Vec v(3);
        v << r * std::cos(a), r * std::sin(a), z;
        pts.push_back(v);
    }
    return pts;
}

std::vector<Vec> well_spread_directions(int d, int m, std::uint64_t seed) {
    if (d == 2) {
        // Golden-angle sequence; seed only rotates the whole set.
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        RandomStream rs(derive_seed(seed, "dirs2", 0));
        double phase = rs.uniform(0.0, 2.0 * M_PI);
        std::vector<Vec> dirs;
        dirs.reserve(m);
        for (int j = 0; j < m; ++j) {
            double a = phase + 2.0 * M_PI * std::fmod(phi * j, 1.0);
            Vec v(2);
            v << std::cos(a), std::sin(a);
            dirs.push_back(v);
        }
        return dirs;
    }
    // Greedy max-min ordering of a seeded pool, started from the pool point
    // closest to the first axis for determinism.
    int pool_size = std::max(4 * m, 512);
    RandomStream rs(derive_seed(seed, "dirpool", static_cast<std::uint64_t>(d)));
    std::vector<Vec> pool;
    pool.reserve(pool_size);
    for (int i = 0; i < pool_size; ++i) pool.push_back(rs.sphere_direction(d));

    std::vector<char> taken(pool_size, 0);
    std::vector<double> min_d2(pool_size, 1e300);
    std::vector<Vec> out;
    out.reserve(m);
    int first = 0;
    double best = -2.0;
    for (int i = 0; i < pool_size; ++i) {
        if (pool[i][0] > best) {
            best = pool[i][0];
            first = i;
        }
    }
    int cur = first;
    for (int k = 0; k < m && k < pool_size; ++k) {
        taken[cur] = 1;
        out.push_back(pool[cur]);
        int next = -1;
        double next_d2 = -1.0;
        for (int i = 0; i < pool_size; ++i) {
            if (taken[i]) continue;
            double d2 = (pool[i] - pool[cur]).squaredNorm();
            if (d2 < min_d2[i]) min_d2[i] = d2;
            if (min_d2[i] > next_d2) {
                next_d2 = min_d2[i];
                next = i;
            }
        }
        if (next < 0) break;
        cur = next;
    }
    return out;
}

}  // namespace cvg
