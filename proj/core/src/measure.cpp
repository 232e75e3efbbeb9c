#include "cvg/measure.hpp"

#include <atomic>
#include <cmath>
#include <vector>

#include "cvg/errors.hpp"
#include "cvg/parallel.hpp"
#include "cvg/rng.hpp"

namespace cvg {

namespace {

constexpr long long kBatchSize = 1 << 16;

/* Generic predicate-counting MC over a sampling ball.  Batches own their
   derived seeds; counts are reduced in batch order for thread invariance. */
template <class Pred>
VolumeEstimate mc_hit_ratio(const BoundingBall& domain, long long samples, std::uint64_t seed,
                            std::string_view tag, int threads, Pred&& inside) {
    const int d = static_cast<int>(domain.center.size());
    const int nbatches = static_cast<int>((samples + kBatchSize - 1) / kBatchSize);
    std::vector<long long> hits(nbatches, 0);
    std::vector<long long> count(nbatches, 0);
    parallel_batches(
        nbatches,
        [&](int b) {
            RandomStream rs(derive_seed(seed, tag, static_cast<std::uint64_t>(b)));
            long long n = std::min<long long>(kBatchSize, samples - b * kBatchSize);
            long long h = 0;
            for (long long i = 0; i < n; ++i) {
                Vec x = rs.ball_point(domain.center, domain.radius);
                if (inside(x)) ++h;
            }
            hits[b] = h;
            count[b] = n;
        },
        threads);
    long long total_hits = 0, total = 0;
    for (int b = 0; b < nbatches; ++b) {
        total_hits += hits[b];
        total += count[b];
    }
    double ball_vol = unit_ball_volume(d) * std::pow(domain.radius, d);
    double p = total > 0 ? static_cast<double>(total_hits) / total : 0.0;
    double value = p * ball_vol;
    double err = total > 0 ? ball_vol * std::sqrt(p * (1.0 - p) / total) : 0.0;
    return VolumeEstimate::monte_carlo(value, err, total, seed);
}

}  // namespace

VolumeEstimate polytope_volume_exact(const VPolytope& p) {
    return VolumeEstimate::exact(p.volume());
}

VolumeEstimate mc_volume(const ConvexBody& body, long long samples, std::uint64_t seed,
                         int threads) {
    return mc_hit_ratio(body.bounding_ball(), samples, seed, "mc_volume", threads,
                        [&](const Vec& x) { return body.contains(x); });
}

VolumeEstimate volume(const ConvexBody& body, const MeasureOptions& opt) {
    if (opt.prefer_exact) {
        if (auto v = body.exact_volume()) return VolumeEstimate::exact(*v);
    }
    return mc_volume(body, opt.samples, opt.seed, opt.threads);
}

VolumeEstimate halfspace_volume(const ConvexBody& body, const Vec& a, double c,
                                const MeasureOptions& opt) {
    Vec u = unit(a);
    double cu = c / a.norm();
    if (opt.prefer_exact) {
        if (auto v = body.exact_halfspace_volume(u, cu)) return VolumeEstimate::exact(*v);
    }
    return mc_hit_ratio(body.bounding_ball(), opt.samples, opt.seed, "halfspace_volume",
                        opt.threads,
                        [&](const Vec& x) { return u.dot(x) <= cu && body.contains(x); });
}

VolumeEstimate section_volume(const ConvexBody& body, const Vec& point, const Vec& normal,
                              const MeasureOptions& opt) {
    const int d = body.dim();
    Vec n = unit(normal);
    double c = n.dot(point);
    if (opt.prefer_exact) {
        if (auto v = body.exact_section_volume(n, c)) return VolumeEstimate::exact(*v);
    }
    // In-plane hit sampling: a (d-1)-ball certainly covering the section.
    BoundingBall bb = body.bounding_ball();
    Mat basis = tangent_basis(n);
    Vec plane_center = bb.center + (c - n.dot(bb.center)) * n;
    double radius = bb.radius;  // section of the bounding ball is smaller; fine as cover
    const int nbatches = static_cast<int>((opt.samples + kBatchSize - 1) / kBatchSize);
    std::vector<long long> hits(nbatches, 0), count(nbatches, 0);
    parallel_batches(
        nbatches,
        [&](int b) {
            RandomStream rs(derive_seed(opt.seed, "section_volume", static_cast<std::uint64_t>(b)));
            long long nsamp = std::min<long long>(kBatchSize, opt.samples - b * kBatchSize);
            long long h = 0;
            Vec origin = Vec::Zero(d - 1);
            for (long long i = 0; i < nsamp; ++i) {
                Vec y = rs.ball_point(origin, radius);
                if (body.contains(plane_center + basis * y)) ++h;
            }
            hits[b] = h;
            count[b] = nsamp;
        },
        opt.threads);
    long long th = 0, tc = 0;
    for (int b = 0; b < nbatches; ++b) {
        th += hits[b];
        tc += count[b];
    }
    double disk = unit_ball_volume(d - 1) * std::pow(radius, d - 1);
    double p = tc > 0 ? static_cast<double>(th) / tc : 0.0;
    return VolumeEstimate::monte_carlo(p * disk, disk * std::sqrt(p * (1.0 - p) / std::max<long long>(tc, 1)), tc,
                                       opt.seed);
}

InertiaData inertia(const ConvexBody& body, const Vec& origin, const MeasureOptions& opt) {
    if (opt.prefer_exact) {
        if (auto m = body.exact_inertia(origin)) return *m;
    }
    const int d = body.dim();
    BoundingBall bb = body.bounding_ball();
    const int nbatches = static_cast<int>((opt.samples + kBatchSize - 1) / kBatchSize);
    std::vector<Mat> moment(nbatches, Mat::Zero(d, d));
    std::vector<Vec> first(nbatches, Vec::Zero(d));
    std::vector<long long> hits(nbatches, 0), count(nbatches, 0);
    parallel_batches(
        nbatches,
        [&](int b) {
            RandomStream rs(derive_seed(opt.seed, "inertia", static_cast<std::uint64_t>(b)));
            long long nsamp = std::min<long long>(kBatchSize, opt.samples - b * kBatchSize);
            for (long long i = 0; i < nsamp; ++i) {
                Vec x = rs.ball_point(bb.center, bb.radius);
                if (!body.contains(x)) continue;
                Vec w = x - origin;
                moment[b] += w * w.transpose();
                first[b] += x;
                ++hits[b];
            }
            count[b] = nsamp;
        },
        opt.threads);
    Mat m = Mat::Zero(d, d);
    Vec f = Vec::Zero(d);
    long long th = 0, tc = 0;
    for (int b = 0; b < nbatches; ++b) {
        m += moment[b];
        f += first[b];
        th += hits[b];
        tc += count[b];
    }
    if (th == 0) throw SectionNoise("inertia: no Monte Carlo hits in the body");
    double ball_vol = unit_ball_volume(d) * std::pow(bb.radius, d);
    double vol = ball_vol * static_cast<double>(th) / tc;
    InertiaData data;
    data.origin = origin;
    data.centroid = f / static_cast<double>(th);
    data.second_moment = m * (ball_vol / tc);
    data.volume = vol;
    data.method = EstimateMethod::MonteCarlo;
    return data;
}

VolumeEstimate symmetric_difference(const ConvexBody& a, const ConvexBody& b,
                                    const MeasureOptions& opt) {
    // Exact fast path: nested polytopes.
    const auto* pa = dynamic_cast<const VPolytope*>(&a);
    const auto* pb = dynamic_cast<const VPolytope*>(&b);
    if (opt.prefer_exact && pa && pb) {
        auto contains_all = [](const VPolytope& outer, const VPolytope& inner) {
            for (const Vec& v : inner.vertices())
                if (!outer.contains(v)) return false;
            return true;
        };
        if (contains_all(*pa, *pb)) return VolumeEstimate::exact(pa->volume() - pb->volume());
        if (contains_all(*pb, *pa)) return VolumeEstimate::exact(pb->volume() - pa->volume());
    }
    BoundingBall ba = a.bounding_ball();
    BoundingBall bb = b.bounding_ball();
    // Smallest simple cover of both balls.
    Vec axis = bb.center - ba.center;
    double dist = axis.norm();
    BoundingBall cover;
    if (dist + bb.radius <= ba.radius) cover = ba;
    else if (dist + ba.radius <= bb.radius) cover = bb;
    else {
        double r = 0.5 * (dist + ba.radius + bb.radius);
        Vec dir = dist > 0 ? Vec(axis / dist) : Vec(Vec::Zero(ba.center.size()));
        cover = {ba.center + (r - ba.radius) * dir, r};
    }
    return mc_hit_ratio(cover, opt.samples, opt.seed, "symmetric_difference", opt.threads,
                        [&](const Vec& x) { return a.contains(x) != b.contains(x); });
}

}  // namespace cvg
