#pragma once

#include <stdexcept>
#include <string>

namespace cvg {

/* Geometry / solver error taxonomy.  Each class corresponds to one of the
   documented failure modes of the library operations; the CLI maps them to
   exit code 3 (numeric) or 2 (configuration). */

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input affinely dependent / no full-dimensional interior.
struct DegenerateInput : GeometryError {
    using GeometryError::GeometryError;
};

// Constraint normals do not positively span; polyhedron has a recession direction.
struct UnboundedPolyhedron : GeometryError {
    using GeometryError::GeometryError;
};

// A bracketing step failed to enclose the requested level.
struct NoBracket : GeometryError {
    using GeometryError::GeometryError;
};

// Anchor point does not support the given normal direction.
struct NotSupporting : GeometryError {
    using GeometryError::GeometryError;
};

// Requested cut volume exceeds what the body can provide.
struct TargetTooLarge : GeometryError {
    using GeometryError::GeometryError;
};

// Monte Carlo noise floor exceeds the requested solve tolerance.
struct SolverStall : GeometryError {
    double noise_estimate = 0.0;
    SolverStall(const std::string& msg, double noise)
        : GeometryError(msg), noise_estimate(noise) {}
};

// Halfspace intersection is empty (e.g. floating body vanished at this level).
struct EmptyIntersection : GeometryError {
    using GeometryError::GeometryError;
};

// Moment matrix (or similar) numerically rank-deficient.
struct IllConditioned : GeometryError {
    using GeometryError::GeometryError;
};

// Section estimate too noisy to drive a scan.
struct SectionNoise : GeometryError {
    using GeometryError::GeometryError;
};

// Admissible facet-count interval of the circumscribed comparison is empty.
// Reported as a regime, not as a claim failure.
struct WindowEmpty : GeometryError {
    using GeometryError::GeometryError;
};

// Bad user-facing configuration (CLI / body files).  Exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cvg
