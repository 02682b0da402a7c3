#include "fracdim/geometry.hpp"

#include "fracdim/detail/hull.hpp"

namespace fracdim {

namespace {

// cross(b - a, c - a), computed in the primitive's own mode
Scalar cross3(const Point& a, const Point& b, const Point& c) {
    Scalar abx = b.x - a.x;
    Scalar aby = b.y - a.y;
    Scalar acx = c.x - a.x;
    Scalar acy = c.y - a.y;
    return abx * acy - aby * acx;
}

bool points_equal(const Point& a, const Point& b) {
    return a.x.compare(b.x) == 0 && a.y.compare(b.y) == 0;
}

}  // namespace

ConvexPrimitive::ConvexPrimitive(std::vector<Point> vertices)
    : verts_(std::move(vertices)), mode_(NumMode::exact) {
    if (verts_.empty()) {
        throw ValidationError("primitive needs at least one vertex");
    }
    mode_ = verts_[0].mode();
    for (const Point& p : verts_) {
        if (p.mode() != mode_) {
            throw ValidationError("primitive mixes exact and approx coordinates");
        }
    }
    const std::size_t n = verts_.size();
    if (n == 1) return;

    for (std::size_t i = 0; i < n; ++i) {
        if (points_equal(verts_[i], verts_[(i + 1) % n])) {
            if (n == 2 && i == 1) continue;  // segment wrap: only a-b matters
            throw ValidationError("repeated consecutive vertices");
        }
    }
    if (n == 2) return;

    // every edge must be a supporting line: all vertices left of or on it
    const Scalar zero = mode_ == NumMode::exact ? Scalar(Dyadic()) : Scalar::approx(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = verts_[i];
        const Point& b = verts_[(i + 1) % n];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + 1) % n) continue;
            if (cross3(a, b, verts_[j]).compare(zero) < 0) {
                throw ValidationError(
                    "vertices are not a counterclockwise convex sequence");
            }
        }
    }
}

PrimitiveKind ConvexPrimitive::kind() const {
    switch (verts_.size()) {
        case 1: return PrimitiveKind::point;
        case 2: return PrimitiveKind::segment;
        default: return PrimitiveKind::polygon;
    }
}

NumMode GeoSet::mode() const {
    if (primitives.empty()) return NumMode::exact;
    NumMode m = primitives[0].mode();
    for (const ConvexPrimitive& p : primitives) {
        if (p.mode() != m) throw ModeError("set mixes exact and approx primitives");
    }
    return m;
}

Scalar convex_area(const ConvexPrimitive& p) {
    const auto& vs = p.vertices();
    if (vs.size() < 3) {
        return p.mode() == NumMode::exact ? Scalar(Dyadic()) : Scalar::approx(0.0);
    }
    Scalar doubled = p.mode() == NumMode::exact ? Scalar(Dyadic()) : Scalar::approx(0.0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        doubled = doubled + (a.x * b.y - b.x * a.y);
    }
    return doubled.half();
}

std::pair<Point, Point> bounding_box(const GeoSet& g) {
    if (g.empty()) throw EmptyInputError("bounding box of an empty set");
    g.mode();  // reject mixed sets
    Point lo = g.primitives[0].vertex(0);
    Point hi = lo;
    for (const ConvexPrimitive& prim : g.primitives) {
        for (const Point& p : prim.vertices()) {
            if (p.x.compare(lo.x) < 0) lo.x = p.x;
            if (p.x.compare(hi.x) > 0) hi.x = p.x;
            if (p.y.compare(lo.y) < 0) lo.y = p.y;
            if (p.y.compare(hi.y) > 0) hi.y = p.y;
        }
    }
    return {lo, hi};
}

bool convex_intersects(const ConvexPrimitive& a, const ConvexPrimitive& b) {
    if (a.mode() != b.mode()) {
        throw ModeError("intersection of primitives in different modes");
    }
    if (a.mode() == NumMode::exact) {
        auto ha = detail::prepare_hull<detail::DyadicOps>(a);
        auto hb = detail::prepare_hull<detail::DyadicOps>(b);
        return detail::hulls_intersect(ha, hb);
    }
    auto ha = detail::prepare_hull<detail::DoubleOps>(a);
    auto hb = detail::prepare_hull<detail::DoubleOps>(b);
    return detail::hulls_intersect(ha, hb);
}

bool point_in_convex(const Point& p, const ConvexPrimitive& prim) {
    if (p.mode() != prim.mode()) {
        throw ModeError("point and primitive are in different modes");
    }
    if (prim.mode() == NumMode::exact) {
        auto h = detail::prepare_hull<detail::DyadicOps>(prim);
        return detail::point_in_hull(h, detail::Vec2<Dyadic>{p.x.dyadic(), p.y.dyadic()});
    }
    auto h = detail::prepare_hull<detail::DoubleOps>(prim);
    return detail::point_in_hull(h, detail::Vec2<double>{p.x.to_double(), p.y.to_double()});
}

Scalar total_primitive_area(const GeoSet& g) {
    if (g.empty()) return Scalar(Dyadic());
    Scalar sum = g.mode() == NumMode::exact ? Scalar(Dyadic()) : Scalar::approx(0.0);
    for (const ConvexPrimitive& p : g.primitives) sum = sum + convex_area(p);
    return sum;
}

ConvexPrimitive make_point(Point p) {
    return ConvexPrimitive(std::vector<Point>{std::move(p)});
}

ConvexPrimitive make_segment(Point a, Point b) {
    return ConvexPrimitive(std::vector<Point>{std::move(a), std::move(b)});
}

ConvexPrimitive make_polygon(std::vector<Point> vertices) {
    if (vertices.size() < 3) {
        throw ValidationError("polygon needs at least three vertices");
    }
    return ConvexPrimitive(std::move(vertices));
}

}  // namespace fracdim
