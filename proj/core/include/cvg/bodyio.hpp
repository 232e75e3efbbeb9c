#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "cvg/approx.hpp"
#include "cvg/body.hpp"
#include "cvg/caps.hpp"
#include "cvg/illumination.hpp"
#include "cvg/polytope.hpp"

namespace cvg {

/* JSON body specification:
     {"type": "ball",      "center": [..], "radius": r}
     {"type": "ellipsoid", "center": [..], "map": [[..],..]}
     {"type": "vpoly",     "vertices": [[..],..]}
     {"type": "hpoly",     "normals": [[..],..], "offsets": [..]}
     {"type": "affine",    "base": {..}, "map": [[..],..], "shift": [..]}
   Unknown or missing fields raise ConfigError. */
nlohmann::json body_to_json(const BodyPtr& body);
BodyPtr body_from_json(const nlohmann::json& spec);

BodyPtr load_body_file(const std::string& path);
void save_body_file(const BodyPtr& body, const std::string& path);

nlohmann::json cap_to_json(const Cap& cap);
nlohmann::json volume_estimate_to_json(const VolumeEstimate& est);
nlohmann::json overshoot_to_json(const OvershootResult& res);

/* Full audit record of a greedy run: every vertex with its cap and the
   termination data, sufficient to re-check each acceptance decision. */
nlohmann::json greedy_run_to_json(const GreedyRun& run);

std::string volume_estimate_csv_header();
std::string volume_estimate_csv_row(const VolumeEstimate& est);

/* OFF export for d = 3 polytopes (oriented facet cycles); the reader only
   consumes the vertex block and rebuilds the hull. */
std::string to_off(const VPolytope& p);
VPolytope off_to_polytope(const std::string& text);

/* Headerless CSV vertex dump, one row per vertex. */
std::string vertices_to_csv(const VPolytope& p);
std::vector<Vec> csv_to_points(const std::string& text);

}  // namespace cvg
