#include "cvg/corpus.hpp"

#include <cmath>

#include "cvg/errors.hpp"
#include "cvg/polytope.hpp"
#include "cvg/rng.hpp"

namespace cvg {

namespace {

std::vector<Vec> cube_vertices(int d) {
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(1) << d);
    for (int mask = 0; mask < (1 << d); ++mask) {
        Vec v(d);
        for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? 1.0 : -1.0;
        pts.push_back(v);
    }
    return pts;
}

std::vector<Vec> cross_vertices(int d) {
    std::vector<Vec> pts;
    for (int i = 0; i < d; ++i) {
        Vec v = Vec::Zero(d);
        v[i] = 1.0;
        pts.push_back(v);
        pts.push_back(-v);
    }
    return pts;
}

/* Regular simplex with centroid 0 and vertices on the unit sphere: project
   the d+1 standard basis vectors of R^{d+1} onto the hyperplane of zero sum
   and express them in an orthonormal basis of that hyperplane. */
std::vector<Vec> regular_simplex_vertices(int d) {
    Mat corners = Mat::Identity(d + 1, d + 1);
    Vec mean = Vec::Constant(d + 1, 1.0 / (d + 1));
    Vec ones = Vec::Constant(d + 1, 1.0);
    Eigen::HouseholderQR<Mat> qr(ones);
    Mat q = qr.householderQ();  // col 0 ~ ones
    std::vector<Vec> pts;
    for (int i = 0; i <= d; ++i) {
        Vec shifted = corners.col(i) - mean;
        Vec local(d);
        for (int j = 1; j <= d; ++j) local[j - 1] = q.col(j).dot(shifted);
        pts.push_back(local / local.norm());
    }
    return pts;
}

int parse_dim_suffix(const std::string& name, const std::string& prefix) {
    if (name.size() != prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0) return 0;
    int d = name.back() - '0';
    return (d >= 2 && d <= 4) ? d : 0;
}

}  // namespace

BodyPtr make_named_body(const std::string& name) {
    if (name == "triangle") {
        Vec a(2), b(2), c(2);
        a << 0, 0;
        b << 1, 0;
        c << 0, 1;
        return std::make_shared<VPolytope>(std::vector<Vec>{a, b, c});
    }
    if (name == "square") return make_named_body("cube2");
    if (name == "disk") return make_named_body("ball2");
    if (int d = parse_dim_suffix(name, "ball"); d > 0)
        return std::make_shared<Ball>(Vec::Zero(d), 1.0);
    if (int d = parse_dim_suffix(name, "cube"); d > 0)
        return std::make_shared<VPolytope>(cube_vertices(d));
    if (int d = parse_dim_suffix(name, "cross"); d > 0)
        return std::make_shared<VPolytope>(cross_vertices(d));
    if (int d = parse_dim_suffix(name, "simplex"); d > 0)
        return std::make_shared<VPolytope>(regular_simplex_vertices(d));
    throw ConfigError("unknown body name: " + name);
}

BodyPtr random_hull_body(int dim, std::uint64_t seed) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        RandomStream rs(derive_seed(seed, "corpus-hull", static_cast<std::uint64_t>(attempt)));
        int npts = 10 + static_cast<int>(rs.next_u64() % 31);
        std::vector<Vec> pts;
        pts.reserve(npts);
        for (int i = 0; i < npts; ++i) pts.push_back(rs.ball_point(Vec::Zero(dim), 1.0));
        try {
            return std::make_shared<VPolytope>(pts);
        } catch (const DegenerateInput&) {
            continue;
        }
    }
    throw DegenerateInput("random_hull_body: no full-dimensional draw in 32 attempts");
}

std::vector<CorpusEntry> default_corpus(int dim, int random_count, std::uint64_t seed) {
    std::string suffix = std::to_string(dim);
    std::vector<CorpusEntry> out;
    out.push_back({"ball" + suffix, make_named_body("ball" + suffix)});
    out.push_back({"cube" + suffix, make_named_body("cube" + suffix)});
    out.push_back({"simplex" + suffix, make_named_body("simplex" + suffix)});
    out.push_back({"cross" + suffix, make_named_body("cross" + suffix)});
    for (int i = 0; i < random_count; ++i) {
        std::uint64_t s = derive_seed(seed, "corpus-rand", static_cast<std::uint64_t>(i));
        out.push_back({"rand" + suffix + "-" + std::to_string(i), random_hull_body(dim, s)});
    }
    return out;
}

}  // namespace cvg
