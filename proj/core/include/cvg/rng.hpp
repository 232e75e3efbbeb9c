#pragma once

#include <cstdint>
#include <string_view>

#include "cvg/vec.hpp"

namespace cvg {

/* splitmix64 finalizer.  All randomness in the library flows through this
   generator so that results are reproducible bit-for-bit across platforms
   and independent of std:: distribution internals. */
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/* Deterministic sub-seed derivation: mixes a root seed with an operation
   tag and a batch index.  Batches of a Monte Carlo run draw from
   independent streams, so a run can be parallelized over batches without
   changing any drawn number. */
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t index);

/* Sequential pseudo-random stream.  Not thread safe; use one per batch. */
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (explicit formula; keeps a spare).
    double gaussian();

    // Uniform direction on the unit sphere in R^d.
    Vec sphere_direction(int d);

    // Uniform point in the ball of given center and radius.
    Vec ball_point(const Vec& center, double radius);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cvg
