#pragma once

#include <cstdint>
#include <string>

#include "cvg/vec.hpp"

namespace cvg {

enum class EstimateMethod { Exact, MonteCarlo };

inline const char* to_string(EstimateMethod m) {
    return m == EstimateMethod::Exact ? "exact" : "montecarlo";
}

/* A volume (or area) value together with its provenance.  Exact results
   carry std_error = 0; Monte Carlo results carry the binomial standard
   error at value scale and the sample count that produced them. */
struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long long samples = 0;
    EstimateMethod method = EstimateMethod::Exact;
    std::uint64_t seed = 0;

    static VolumeEstimate exact(double v) {
        VolumeEstimate e;
        e.value = v;
        e.method = EstimateMethod::Exact;
        return e;
    }
    static VolumeEstimate monte_carlo(double v, double err, long long n, std::uint64_t seed) {
        VolumeEstimate e;
        e.value = v;
        e.std_error = err;
        e.samples = n;
        e.method = EstimateMethod::MonteCarlo;
        e.seed = seed;
        return e;
    }
};

/* First and second moments of a body: centroid, raw second moment matrix
   about a stated origin, and the volume they were normalized with. */
struct InertiaData {
    Vec centroid;
    Mat second_moment;  // integral of (x-origin)(x-origin)^T over the body
    Vec origin;
    double volume = 0.0;
    EstimateMethod method = EstimateMethod::Exact;
};

struct BoundingBall {
    Vec center;
    double radius = 0.0;
};

}  // namespace cvg
