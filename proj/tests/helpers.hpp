#pragma once

// Shared generators and oracles for the test suites.

#include <random>
#include <vector>

#include "fracdim/geometry.hpp"

namespace testutil {

using namespace fracdim;

inline Point dy_point(long long xn, std::uint32_t xe, long long yn, std::uint32_t ye) {
    return exact_point(Dyadic(BigInt(xn), xe), Dyadic(BigInt(yn), ye));
}

/// Random dyadic coordinate i / 2^6 within [0, 1].
inline Dyadic random_coord(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, 64);
    return Dyadic(BigInt(d(rng)), 6);
}

/// Random primitive: point, segment, triangle, axis rectangle or diamond,
/// all with dyadic coordinates in the unit square.
inline ConvexPrimitive random_primitive(std::mt19937& rng) {
    std::uniform_int_distribution<int> shape(0, 4);
    auto pt = [&] { return exact_point(random_coord(rng), random_coord(rng)); };
    switch (shape(rng)) {
        case 0:
            return make_point(pt());
        case 1: {
            for (;;) {
                Point a = pt();
                Point b = pt();
                if (a.x.compare(b.x) != 0 || a.y.compare(b.y) != 0) {
                    return make_segment(a, b);
                }
            }
        }
        case 2: {
            for (;;) {
                Point a = pt(), b = pt(), c = pt();
                Scalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
                Scalar zero(Dyadic(0));
                int s = cross.compare(zero);
                if (s == 0) continue;
                if (s < 0) std::swap(b, c);
                return make_polygon({a, b, c});
            }
        }
        case 3: {
            for (;;) {
                Dyadic x0 = random_coord(rng), x1 = random_coord(rng);
                Dyadic y0 = random_coord(rng), y1 = random_coord(rng);
                if (!(x0 < x1) || !(y0 < y1)) continue;
                return make_polygon({exact_point(x0, y0), exact_point(x1, y0),
                                     exact_point(x1, y1), exact_point(x0, y1)});
            }
        }
        default: {
            std::uniform_int_distribution<int> cd(8, 56);
            std::uniform_int_distribution<int> rd(1, 8);
            Dyadic cx(BigInt(cd(rng)), 6);
            Dyadic cy(BigInt(cd(rng)), 6);
            Dyadic r(BigInt(rd(rng)), 6);
            return make_polygon({exact_point(cx + r, cy), exact_point(cx, cy + r),
                                 exact_point(cx - r, cy), exact_point(cx, cy - r)});
        }
    }
}

/// Sample points of a primitive: vertices, edge subdivisions, interior lattice.
inline std::vector<Point> sample_hull(const ConvexPrimitive& prim, int density) {
    std::vector<Point> samples = prim.vertices();
    const auto& vs = prim.vertices();
    const std::size_t n = vs.size();
    const std::size_t edges = n == 1 ? 0 : (n == 2 ? 1 : n);
    std::uint32_t elog = 0;
    while ((1 << elog) < density) ++elog;
    for (std::size_t i = 0; i < edges; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % n];
        for (int t = 1; t < (1 << elog); ++t) {
            Scalar tt(Dyadic(BigInt(t), elog));
            samples.push_back(Point{a.x + (b.x - a.x) * tt, a.y + (b.y - a.y) * tt});
        }
    }
    if (n >= 3) {
        // lattice at spacing 2^-elog over the bounding box
        GeoSet tmp{"tmp", std::nullopt, {prim}};
        auto [lo, hi] = bounding_box(tmp);
        Dyadic step(BigInt(1), elog);
        for (Dyadic x = lo.x.dyadic(); x <= hi.x.dyadic(); x = x + step) {
            for (Dyadic y = lo.y.dyadic(); y <= hi.y.dyadic(); y = y + step) {
                Point p = exact_point(x, y);
                if (point_in_convex(p, prim)) samples.push_back(p);
            }
        }
    }
    return samples;
}

/// Dense-sampling intersection oracle: true iff some sample of one hull lies
/// in the other. Never reports true for disjoint hulls.
inline bool sampled_intersects(const ConvexPrimitive& a, const ConvexPrimitive& b,
                               int density = 32) {
    for (const Point& p : sample_hull(a, density)) {
        if (point_in_convex(p, b)) return true;
    }
    for (const Point& p : sample_hull(b, density)) {
        if (point_in_convex(p, a)) return true;
    }
    return false;
}

}  // namespace testutil
