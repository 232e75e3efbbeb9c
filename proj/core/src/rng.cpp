#include "cvg/rng.hpp"

#include <cmath>

namespace cvg {

namespace {
std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t index) {
    std::uint64_t s = root ^ fnv1a(tag);
    (void)splitmix64(s);
    s ^= 0x9E3779B97F4A7C15ull * (index + 1);
    std::uint64_t out = splitmix64(s);
    return out ? out : 0x2545F4914F6CDD1Dull;  // keep streams away from the 0 fixed point
}

double RandomStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Vec RandomStream::sphere_direction(int d) {
    Vec v(d);
    double n2 = 0.0;
    do {
        for (int i = 0; i < d; ++i) v[i] = gaussian();
        n2 = v.squaredNorm();
    } while (n2 < 1e-200);
    return v / std::sqrt(n2);
}

Vec RandomStream::ball_point(const Vec& center, double radius) {
    const int d = static_cast<int>(center.size());
    Vec dir = sphere_direction(d);
    double r = radius * std::pow(uniform(), 1.0 / d);
    return center + r * dir;
}

}  // namespace cvg
