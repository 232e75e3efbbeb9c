#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvg/body.hpp"

namespace cvg {

struct CorpusEntry {
    std::string label;
    BodyPtr body;
};

/* Named reference bodies:
     ball{d}          unit ball (disk = ball2)
     cube{d}          [-1,1]^d
     cross{d}         conv{+-e_i}
     simplex{d}       regular simplex inscribed in the unit sphere, centroid 0
     triangle         (0,0),(1,0),(0,1)
     square           [-1,1]^2
   Throws ConfigError for unknown names. */
BodyPtr make_named_body(const std::string& name);

/* Hull of 10..40 uniform points in the unit ball; retries derived seeds on
   degenerate draws. */
BodyPtr random_hull_body(int dim, std::uint64_t seed);

/* ball / cube / simplex / cross plus `random_count` random hulls. */
std::vector<CorpusEntry> default_corpus(int dim, int random_count = 4, std::uint64_t seed = 0);

}  // namespace cvg
