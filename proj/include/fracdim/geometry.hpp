#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracdim/dyadic.hpp"

namespace fracdim {

struct Point {
    Scalar x;
    Scalar y;

    NumMode mode() const { return common_mode(x, y); }
};

inline Point exact_point(Dyadic x, Dyadic y) {
    return Point{Scalar(std::move(x)), Scalar(std::move(y))};
}
inline Point approx_point(double x, double y) {
    return Point{Scalar::approx(x), Scalar::approx(y)};
}

enum class PrimitiveKind { point, segment, polygon };

/// A closed convex set given by its vertices: one vertex is a point, two a
/// segment, three or more a convex polygon in counterclockwise order
/// (collinear vertices permitted). The set is always the closed convex hull.
///
/// Construction validates: uniform scalar mode, no repeated consecutive
/// vertices, and for polygons that every edge is a supporting line with all
/// vertices on its left (which rejects clockwise and self-wrapping input).
class ConvexPrimitive {
public:
    explicit ConvexPrimitive(std::vector<Point> vertices);

    PrimitiveKind kind() const;
    std::size_t size() const { return verts_.size(); }
    NumMode mode() const { return mode_; }
    const std::vector<Point>& vertices() const { return verts_; }
    const Point& vertex(std::size_t i) const { return verts_[i]; }

private:
    std::vector<Point> verts_;
    NumMode mode_;
};

/// A named union of closed convex primitives.
struct GeoSet {
    std::string name;
    std::optional<unsigned> stage;
    std::vector<ConvexPrimitive> primitives;

    bool empty() const { return primitives.empty(); }
    /// Shared scalar mode of all primitives; ModeError on a mixed set,
    /// exact for the empty set.
    NumMode mode() const;
};

/// Shoelace area of the closed hull; zero for points and segments. Exact in
/// exact mode.
Scalar convex_area(const ConvexPrimitive& p);

/// Componentwise min/max over all vertices. EmptyInputError on an empty set.
std::pair<Point, Point> bounding_box(const GeoSet& g);

/// True iff the two closed hulls share at least one point. Separating-axis
/// test over edge normals of both hulls; degenerate hulls additionally use
/// their edge directions as axes. Exact in exact mode, kApproxTol-banded in
/// approx mode.
bool convex_intersects(const ConvexPrimitive& a, const ConvexPrimitive& b);

/// Closed-hull membership test for a single point.
bool point_in_convex(const Point& p, const ConvexPrimitive& prim);

/// Sum of primitive areas. Equals the set area when primitive interiors are
/// pairwise disjoint, which all generators in this library guarantee.
Scalar total_primitive_area(const GeoSet& g);

/// Convenience builders.
ConvexPrimitive make_point(Point p);
ConvexPrimitive make_segment(Point a, Point b);
ConvexPrimitive make_polygon(std::vector<Point> vertices);

}  // namespace fracdim
