#pragma once

// Separating-axis machinery shared by the intersection predicate and the
// mesh counters. Everything is templated on an Ops policy so that the exact
// (Dyadic) and approximate (double) modes run the same code path.
//
// Axis set: edge normals of both hulls, plus edge directions for hulls with
// zero area (points, segments, collinear "polygons"). Normals alone are a
// complete axis set for convex polygons with interior; flat hulls need their
// direction to separate collinear cases; the bounding-box axes (always
// tested first) settle point-versus-point. Extra axes never produce a false
// separation, since any axis with disjoint vertex projections genuinely
// separates the hulls.

#include <array>
#include <vector>

#include "fracdim/geometry.hpp"

namespace fracdim::detail {

template <class S>
struct Vec2 {
    S x;
    S y;
};

struct DyadicOps {
    using S = Dyadic;
    static constexpr bool is_exact = true;
    static S zero() { return Dyadic(); }
    static S from_scalar(const Scalar& s) { return s.dyadic(); }
    static S sub(const S& a, const S& b) { return a - b; }
    static S add(const S& a, const S& b) { return a + b; }
    static S mul(const S& a, const S& b) { return a * b; }
    static int cmp(const S& a, const S& b) { return a.compare(b); }
    // predicate compare: identical in exact mode
    static int cmp_pred(const S& a, const S& b) { return a.compare(b); }
};

struct DoubleOps {
    using S = double;
    static constexpr bool is_exact = false;
    static S zero() { return 0.0; }
    static S from_scalar(const Scalar& s) { return s.to_double(); }
    static S sub(S a, S b) { return a - b; }
    static S add(S a, S b) { return a + b; }
    static S mul(S a, S b) { return a * b; }
    static int cmp(S a, S b) { return a < b ? -1 : (a > b ? 1 : 0); }
    static int cmp_pred(S a, S b) {
        double diff = a - b;
        if (diff < -kApproxTol) return -1;
        if (diff > kApproxTol) return 1;
        return 0;
    }
};

template <class Ops>
struct HullView {
    using S = typename Ops::S;
    std::vector<Vec2<S>> verts;
    std::vector<Vec2<S>> axes;                 // normals, plus directions when flat
    std::vector<std::array<S, 2>> self_range;  // hull projection interval per axis
    S lo_x, lo_y, hi_x, hi_y;                  // bounding box
    std::array<S, 2> range_ne;                 // interval of x - y (ne-diagonal normal)
    std::array<S, 2> range_nw;                 // interval of x + y (nw-diagonal normal)
    bool flat = false;
};

template <class Ops>
typename Ops::S dot(const Vec2<typename Ops::S>& a, const Vec2<typename Ops::S>& b) {
    return Ops::add(Ops::mul(a.x, b.x), Ops::mul(a.y, b.y));
}

template <class Ops>
HullView<Ops> prepare_hull(const ConvexPrimitive& prim) {
    using S = typename Ops::S;
    HullView<Ops> h;
    const auto& vs = prim.vertices();
    h.verts.reserve(vs.size());
    for (const Point& p : vs) {
        h.verts.push_back(Vec2<S>{Ops::from_scalar(p.x), Ops::from_scalar(p.y)});
    }

    h.lo_x = h.hi_x = h.verts[0].x;
    h.lo_y = h.hi_y = h.verts[0].y;
    S ne_lo = Ops::sub(h.verts[0].x, h.verts[0].y);
    S ne_hi = ne_lo;
    S nw_lo = Ops::add(h.verts[0].x, h.verts[0].y);
    S nw_hi = nw_lo;
    for (std::size_t i = 1; i < h.verts.size(); ++i) {
        const auto& v = h.verts[i];
        if (Ops::cmp(v.x, h.lo_x) < 0) h.lo_x = v.x;
        if (Ops::cmp(v.x, h.hi_x) > 0) h.hi_x = v.x;
        if (Ops::cmp(v.y, h.lo_y) < 0) h.lo_y = v.y;
        if (Ops::cmp(v.y, h.hi_y) > 0) h.hi_y = v.y;
        S ne = Ops::sub(v.x, v.y);
        if (Ops::cmp(ne, ne_lo) < 0) ne_lo = ne;
        if (Ops::cmp(ne, ne_hi) > 0) ne_hi = ne;
        S nw = Ops::add(v.x, v.y);
        if (Ops::cmp(nw, nw_lo) < 0) nw_lo = nw;
        if (Ops::cmp(nw, nw_hi) > 0) nw_hi = nw;
    }
    h.range_ne = {ne_lo, ne_hi};
    h.range_nw = {nw_lo, nw_hi};

    const std::size_t n = h.verts.size();
    if (n == 1) return h;

    // signed area (doubled) to detect flat hulls
    if (n == 2) {
        h.flat = true;
    } else {
        S doubled_area = Ops::zero();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = h.verts[i];
            const auto& b = h.verts[(i + 1) % n];
            doubled_area = Ops::add(doubled_area,
                                    Ops::sub(Ops::mul(a.x, b.y), Ops::mul(b.x, a.y)));
        }
        h.flat = Ops::cmp_pred(doubled_area, Ops::zero()) == 0;
    }

    const std::size_t edge_count = n == 2 ? 1 : n;
    for (std::size_t i = 0; i < edge_count; ++i) {
        const auto& a = h.verts[i];
        const auto& b = h.verts[(i + 1) % n];
        Vec2<S> dir{Ops::sub(b.x, a.x), Ops::sub(b.y, a.y)};
        Vec2<S> normal{Ops::sub(a.y, b.y), dir.x};  // (-dy, dx)
        h.axes.push_back(normal);
        if (h.flat) h.axes.push_back(dir);
    }

    h.self_range.reserve(h.axes.size());
    for (const auto& axis : h.axes) {
        S lo = dot<Ops>(axis, h.verts[0]);
        S hi = lo;
        for (std::size_t i = 1; i < n; ++i) {
            S p = dot<Ops>(axis, h.verts[i]);
            if (Ops::cmp(p, lo) < 0) lo = p;
            if (Ops::cmp(p, hi) > 0) hi = p;
        }
        h.self_range.push_back({lo, hi});
    }
    return h;
}

/// Closed-interval overlap (touching counts); predicate semantics.
template <class Ops>
bool intervals_meet(const typename Ops::S& alo, const typename Ops::S& ahi,
                    const typename Ops::S& blo, const typename Ops::S& bhi) {
    return Ops::cmp_pred(ahi, blo) >= 0 && Ops::cmp_pred(bhi, alo) >= 0;
}

template <class Ops>
bool axis_separates(const HullView<Ops>& owner, std::size_t axis_index,
                    const HullView<Ops>& other) {
    using S = typename Ops::S;
    const auto& axis = owner.axes[axis_index];
    S lo = dot<Ops>(axis, other.verts[0]);
    S hi = lo;
    for (std::size_t i = 1; i < other.verts.size(); ++i) {
        S p = dot<Ops>(axis, other.verts[i]);
        if (Ops::cmp(p, lo) < 0) lo = p;
        if (Ops::cmp(p, hi) > 0) hi = p;
    }
    const auto& self = owner.self_range[axis_index];
    return !intervals_meet<Ops>(self[0], self[1], lo, hi);
}

template <class Ops>
bool hulls_intersect(const HullView<Ops>& a, const HullView<Ops>& b) {
    if (!intervals_meet<Ops>(a.lo_x, a.hi_x, b.lo_x, b.hi_x)) return false;
    if (!intervals_meet<Ops>(a.lo_y, a.hi_y, b.lo_y, b.hi_y)) return false;
    for (std::size_t i = 0; i < a.axes.size(); ++i) {
        if (axis_separates(a, i, b)) return false;
    }
    for (std::size_t i = 0; i < b.axes.size(); ++i) {
        if (axis_separates(b, i, a)) return false;
    }
    return true;
}

template <class Ops>
bool point_in_hull(const HullView<Ops>& h, const Vec2<typename Ops::S>& p) {
    using S = typename Ops::S;
    if (Ops::cmp_pred(p.x, h.lo_x) < 0 || Ops::cmp_pred(p.x, h.hi_x) > 0) return false;
    if (Ops::cmp_pred(p.y, h.lo_y) < 0 || Ops::cmp_pred(p.y, h.hi_y) > 0) return false;
    for (std::size_t i = 0; i < h.axes.size(); ++i) {
        S proj = dot<Ops>(h.axes[i], p);
        const auto& r = h.self_range[i];
        if (Ops::cmp_pred(proj, r[0]) < 0 || Ops::cmp_pred(proj, r[1]) > 0) return false;
    }
    return true;
}

}  // namespace fracdim::detail
