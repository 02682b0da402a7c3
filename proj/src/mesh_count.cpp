#include "fracdim/mesh_count.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <span>
#include <unordered_set>
#include <vector>

#include "fracdim/detail/eps.hpp"
#include "fracdim/detail/hull.hpp"

namespace fracdim {

namespace {

using detail::DoubleOps;
using detail::DyadicOps;
using detail::Eps;
using detail::HullView;
using detail::Vec2;

constexpr std::int64_t kMaxCellsPerAxis = std::int64_t(1) << 26;

// grid-line snapping tolerance for approx-mode index math; exact incidences
// survive the double rounding, offsets beyond 1e-9 never snap
constexpr double kGridSnap = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::int64_t checked_index(const BigInt& v) {
    static const BigInt lo = -(BigInt(1) << 62);
    static const BigInt hi = BigInt(1) << 62;
    if (v < lo || v > hi) throw ResourceError("cell index out of range");
    return v.convert_to<std::int64_t>();
}

template <class Ops>
struct IndexMath;

template <>
struct IndexMath<DyadicOps> {
    static std::int64_t floor_idx(const Dyadic& num, const Dyadic& delta) {
        return checked_index(Dyadic::floor_quotient(num, delta));
    }
    static std::int64_t ceil_idx(const Dyadic& num, const Dyadic& delta) {
        return checked_index(Dyadic::ceil_quotient(num, delta));
    }
    static bool on_grid(const Dyadic& num, const Dyadic& delta, std::int64_t idx) {
        return num == delta * Dyadic(idx);
    }
};

template <>
struct IndexMath<DoubleOps> {
    static double snapped(double q) {
        double r = std::nearbyint(q);
        return std::fabs(q - r) <= kGridSnap ? r : q;
    }
    static std::int64_t floor_idx(double num, double delta) {
        double q = snapped(num / delta);
        double f = std::floor(q);
        if (std::fabs(f) > 4.6e18) throw ResourceError("cell index out of range");
        return static_cast<std::int64_t>(f);
    }
    static std::int64_t ceil_idx(double num, double delta) {
        double q = snapped(num / delta);
        double c = std::ceil(q);
        if (std::fabs(c) > 4.6e18) throw ResourceError("cell index out of range");
        return static_cast<std::int64_t>(c);
    }
    static bool on_grid(double num, double delta, std::int64_t idx) {
        return snapped(num / delta) == static_cast<double>(idx);
    }
};

template <class Ops>
struct GridView {
    using S = typename Ops::S;
    S delta;
    S ox, oy;
    CellMode cells = CellMode::closed;
    Diagonal diagonal = Diagonal::ne;
};

template <class Ops>
GridView<Ops> grid_view(const MeshSpec& spec) {
    GridView<Ops> g;
    g.delta = Ops::from_scalar(spec.delta);
    g.ox = Ops::from_scalar(spec.offset.x);
    g.oy = Ops::from_scalar(spec.offset.y);
    g.cells = spec.cells;
    g.diagonal = spec.diagonal;
    return g;
}

template <class Ops>
std::pair<std::int64_t, std::int64_t> axis_range(const typename Ops::S& lo,
                                                 const typename Ops::S& hi,
                                                 const typename Ops::S& offset,
                                                 const typename Ops::S& delta,
                                                 CellMode cells) {
    using IM = IndexMath<Ops>;
    typename Ops::S a = Ops::sub(lo, offset);
    typename Ops::S b = Ops::sub(hi, offset);
    std::int64_t m0, m1;
    if (cells == CellMode::closed) {
        m0 = IM::ceil_idx(a, delta) - 1;
        m1 = IM::floor_idx(b, delta);
    } else {
        m0 = IM::floor_idx(a, delta);
        m1 = IM::floor_idx(b, delta);
    }
    if (m1 - m0 + 1 > kMaxCellsPerAxis) {
        throw ResourceError("candidate cell range exceeds the per-axis cap");
    }
    return {m0, m1};
}

// ---- closed-mode cell and triangle predicates ------------------------------

template <class Ops>
bool hull_meets_cell(const HullView<Ops>& h, const typename Ops::S& xa,
                     const typename Ops::S& ya, const typename Ops::S& xb,
                     const typename Ops::S& yb) {
    using detail::intervals_meet;
    if (!intervals_meet<Ops>(h.lo_x, h.hi_x, xa, xb)) return false;
    if (!intervals_meet<Ops>(h.lo_y, h.hi_y, ya, yb)) return false;
    using S = typename Ops::S;
    for (std::size_t i = 0; i < h.axes.size(); ++i) {
        const auto& axis = h.axes[i];
        S pxa = Ops::mul(axis.x, xa);
        S pxb = Ops::mul(axis.x, xb);
        S pya = Ops::mul(axis.y, ya);
        S pyb = Ops::mul(axis.y, yb);
        bool xasc = Ops::cmp(pxa, pxb) <= 0;
        bool yasc = Ops::cmp(pya, pyb) <= 0;
        S lo = Ops::add(xasc ? pxa : pxb, yasc ? pya : pyb);
        S hi = Ops::add(xasc ? pxb : pxa, yasc ? pyb : pya);
        const auto& self = h.self_range[i];
        if (!intervals_meet<Ops>(self[0], self[1], lo, hi)) return false;
    }
    return true;
}

template <class Ops>
bool hull_meets_tri(const HullView<Ops>& h, const typename Ops::S& xa,
                    const typename Ops::S& ya, const typename Ops::S& xb,
                    const typename Ops::S& yb, Diagonal diag, Half half) {
    using detail::intervals_meet;
    using S = typename Ops::S;
    // triangle bounding box equals the cell box for every half
    if (!intervals_meet<Ops>(h.lo_x, h.hi_x, xa, xb)) return false;
    if (!intervals_meet<Ops>(h.lo_y, h.hi_y, ya, yb)) return false;

    // diagonal axis
    if (diag == Diagonal::ne) {
        S d_lo = Ops::sub(xa, yb);
        S d_mid = Ops::sub(xa, ya);
        S d_hi = Ops::sub(xb, ya);
        if (half == Half::lower) {
            if (!intervals_meet<Ops>(h.range_ne[0], h.range_ne[1], d_mid, d_hi)) return false;
        } else {
            if (!intervals_meet<Ops>(h.range_ne[0], h.range_ne[1], d_lo, d_mid)) return false;
        }
    } else {
        S d_lo = Ops::add(xa, ya);
        S d_mid = Ops::add(xb, ya);
        S d_hi = Ops::add(xb, yb);
        if (half == Half::lower) {
            if (!intervals_meet<Ops>(h.range_nw[0], h.range_nw[1], d_lo, d_mid)) return false;
        } else {
            if (!intervals_meet<Ops>(h.range_nw[0], h.range_nw[1], d_mid, d_hi)) return false;
        }
    }

    for (std::size_t i = 0; i < h.axes.size(); ++i) {
        const auto& axis = h.axes[i];
        S pxa = Ops::mul(axis.x, xa);
        S pxb = Ops::mul(axis.x, xb);
        S pya = Ops::mul(axis.y, ya);
        S pyb = Ops::mul(axis.y, yb);
        S p0, p1, p2;
        if (diag == Diagonal::ne) {
            if (half == Half::lower) {  // (xa,ya) (xb,ya) (xb,yb)
                p0 = Ops::add(pxa, pya);
                p1 = Ops::add(pxb, pya);
                p2 = Ops::add(pxb, pyb);
            } else {  // (xa,ya) (xb,yb) (xa,yb)
                p0 = Ops::add(pxa, pya);
                p1 = Ops::add(pxb, pyb);
                p2 = Ops::add(pxa, pyb);
            }
        } else {
            if (half == Half::lower) {  // (xa,ya) (xb,ya) (xa,yb)
                p0 = Ops::add(pxa, pya);
                p1 = Ops::add(pxb, pya);
                p2 = Ops::add(pxa, pyb);
            } else {  // (xb,ya) (xb,yb) (xa,yb)
                p0 = Ops::add(pxb, pya);
                p1 = Ops::add(pxb, pyb);
                p2 = Ops::add(pxa, pyb);
            }
        }
        S lo = p0, hi = p0;
        if (Ops::cmp(p1, lo) < 0) lo = p1;
        if (Ops::cmp(p1, hi) > 0) hi = p1;
        if (Ops::cmp(p2, lo) < 0) lo = p2;
        if (Ops::cmp(p2, hi) > 0) hi = p2;
        const auto& self = h.self_range[i];
        if (!intervals_meet<Ops>(self[0], self[1], lo, hi)) return false;
    }
    return true;
}

// ---- half-open predicates via eps-shrunk closed regions --------------------

enum class RegionShape { square, lower, upper };

template <class Ops>
struct EpsRegion {
    // at most 5 vertices (the nw lower half-open region is a pentagon)
    std::array<Vec2<Eps<Ops>>, 5> v;
    std::size_t n = 0;
};

template <class Ops>
EpsRegion<Ops> halfopen_region(const typename Ops::S& xa, const typename Ops::S& ya,
                               const typename Ops::S& xb, const typename Ops::S& yb,
                               Diagonal diag, RegionShape shape) {
    using S = typename Ops::S;
    const S zero = Ops::zero();
    const S m1v = Ops::sub(zero, S(1));
    const S m2v = Ops::sub(zero, S(2));
    const S p1v = S(1);
    const S p2v = S(2);
    auto vert = [](const S& x, const S& ex, const S& y, const S& ey) {
        return Vec2<Eps<Ops>>{Eps<Ops>{x, ex}, Eps<Ops>{y, ey}};
    };
    EpsRegion<Ops> r;
    if (shape == RegionShape::square) {
        r.v = {vert(xa, zero, ya, zero), vert(xb, m1v, ya, zero), vert(xb, m1v, yb, m1v),
               vert(xa, zero, yb, m1v), vert(xa, zero, ya, zero)};
        r.n = 4;
    } else if (diag == Diagonal::ne) {
        if (shape == RegionShape::lower) {
            r.v = {vert(xa, zero, ya, zero), vert(xb, m1v, ya, zero),
                   vert(xb, m1v, yb, m1v), vert(xa, zero, ya, zero),
                   vert(xa, zero, ya, zero)};
            r.n = 3;
        } else {
            r.v = {vert(xa, zero, ya, p1v), vert(xb, m2v, yb, m1v),
                   vert(xa, zero, yb, m1v), vert(xa, zero, ya, zero),
                   vert(xa, zero, ya, zero)};
            r.n = 3;
        }
    } else {
        if (shape == RegionShape::lower) {
            r.v = {vert(xa, zero, ya, zero), vert(xb, m1v, ya, zero),
                   vert(xb, m1v, ya, p1v), vert(xa, p1v, yb, m1v),
                   vert(xa, zero, yb, m1v)};
            r.n = 5;
        } else {
            r.v = {vert(xb, m1v, ya, p2v), vert(xb, m1v, yb, m1v),
                   vert(xa, p2v, yb, m1v), vert(xa, zero, ya, zero),
                   vert(xa, zero, ya, zero)};
            r.n = 3;
        }
    }
    return r;
}

template <class Ops>
bool eps_intervals_meet(const Eps<Ops>& alo, const Eps<Ops>& ahi, const Eps<Ops>& blo,
                        const Eps<Ops>& bhi) {
    return detail::eps_cmp_pred(ahi, blo) >= 0 && detail::eps_cmp_pred(bhi, alo) >= 0;
}

template <class Ops>
bool hull_meets_halfopen(const HullView<Ops>& h, const typename Ops::S& xa,
                         const typename Ops::S& ya, const typename Ops::S& xb,
                         const typename Ops::S& yb, Diagonal diag, RegionShape shape) {
    using E = Eps<Ops>;
    EpsRegion<Ops> r = halfopen_region<Ops>(xa, ya, xb, yb, diag, shape);

    auto region_interval = [&](auto&& proj) {
        E lo = proj(r.v[0]);
        E hi = lo;
        for (std::size_t i = 1; i < r.n; ++i) {
            E p = proj(r.v[i]);
            if (detail::eps_cmp(p, lo) < 0) lo = p;
            if (detail::eps_cmp(p, hi) > 0) hi = p;
        }
        return std::pair<E, E>{lo, hi};
    };

    // x and y axes
    auto [rxlo, rxhi] = region_interval([](const Vec2<E>& v) { return v.x; });
    if (!eps_intervals_meet<Ops>(E::from(h.lo_x), E::from(h.hi_x), rxlo, rxhi)) return false;
    auto [rylo, ryhi] = region_interval([](const Vec2<E>& v) { return v.y; });
    if (!eps_intervals_meet<Ops>(E::from(h.lo_y), E::from(h.hi_y), rylo, ryhi)) return false;

    // diagonal axis for the triangular shapes
    if (shape != RegionShape::square) {
        if (diag == Diagonal::ne) {
            auto [dlo, dhi] = region_interval([](const Vec2<E>& v) {
                return E{Ops::sub(v.x.v, v.y.v), Ops::sub(v.x.e, v.y.e)};
            });
            if (!eps_intervals_meet<Ops>(E::from(h.range_ne[0]), E::from(h.range_ne[1]), dlo,
                                         dhi)) {
                return false;
            }
        } else {
            auto [dlo, dhi] = region_interval([](const Vec2<E>& v) {
                return E{Ops::add(v.x.v, v.y.v), Ops::add(v.x.e, v.y.e)};
            });
            if (!eps_intervals_meet<Ops>(E::from(h.range_nw[0]), E::from(h.range_nw[1]), dlo,
                                         dhi)) {
                return false;
            }
        }
    }

    // hull axes against the eps region
    for (std::size_t i = 0; i < h.axes.size(); ++i) {
        const auto& axis = h.axes[i];
        auto proj = [&](const Vec2<E>& v) {
            return detail::eps_add(detail::eps_scale<Ops>(axis.x, v.x),
                                   detail::eps_scale<Ops>(axis.y, v.y));
        };
        E lo = proj(r.v[0]);
        E hi = lo;
        for (std::size_t j = 1; j < r.n; ++j) {
            E p = proj(r.v[j]);
            if (detail::eps_cmp(p, lo) < 0) lo = p;
            if (detail::eps_cmp(p, hi) > 0) hi = p;
        }
        const auto& self = h.self_range[i];
        if (!eps_intervals_meet<Ops>(E::from(self[0]), E::from(self[1]), lo, hi)) {
            return false;
        }
    }
    return true;
}

// ---- the counting loop -----------------------------------------------------

using KeySet = std::unordered_set<CellKey, CellKeyHash>;

template <class Ops>
void count_primitive(const ConvexPrimitive& prim, const GridView<Ops>& grid, MeshKind kind,
                     KeySet& hits) {
    using S = typename Ops::S;
    HullView<Ops> h = detail::prepare_hull<Ops>(prim);
    auto [m0, m1] = axis_range<Ops>(h.lo_x, h.hi_x, grid.ox, grid.delta, grid.cells);
    auto [n0, n1] = axis_range<Ops>(h.lo_y, h.hi_y, grid.oy, grid.delta, grid.cells);

    std::vector<S> xs;
    xs.reserve(static_cast<std::size_t>(m1 - m0 + 2));
    for (std::int64_t m = m0; m <= m1 + 1; ++m) {
        xs.push_back(Ops::add(grid.ox, Ops::mul(S(static_cast<long long>(m)), grid.delta)));
    }
    std::vector<S> ys;
    ys.reserve(static_cast<std::size_t>(n1 - n0 + 2));
    for (std::int64_t n = n0; n <= n1 + 1; ++n) {
        ys.push_back(Ops::add(grid.oy, Ops::mul(S(static_cast<long long>(n)), grid.delta)));
    }

    for (std::int64_t n = n0; n <= n1; ++n) {
        const S& ya = ys[static_cast<std::size_t>(n - n0)];
        const S& yb = ys[static_cast<std::size_t>(n - n0 + 1)];
        for (std::int64_t m = m0; m <= m1; ++m) {
            const S& xa = xs[static_cast<std::size_t>(m - m0)];
            const S& xb = xs[static_cast<std::size_t>(m - m0 + 1)];
            if (kind == MeshKind::square) {
                bool hit = grid.cells == CellMode::closed
                               ? hull_meets_cell(h, xa, ya, xb, yb)
                               : hull_meets_halfopen(h, xa, ya, xb, yb, grid.diagonal,
                                                     RegionShape::square);
                if (hit) hits.insert(CellKey{m, n, Half::none});
            } else {
                if (grid.cells == CellMode::closed) {
                    if (hull_meets_tri(h, xa, ya, xb, yb, grid.diagonal, Half::lower)) {
                        hits.insert(CellKey{m, n, Half::lower});
                    }
                    if (hull_meets_tri(h, xa, ya, xb, yb, grid.diagonal, Half::upper)) {
                        hits.insert(CellKey{m, n, Half::upper});
                    }
                } else {
                    if (hull_meets_halfopen(h, xa, ya, xb, yb, grid.diagonal,
                                            RegionShape::lower)) {
                        hits.insert(CellKey{m, n, Half::lower});
                    }
                    if (hull_meets_halfopen(h, xa, ya, xb, yb, grid.diagonal,
                                            RegionShape::upper)) {
                        hits.insert(CellKey{m, n, Half::upper});
                    }
                }
            }
        }
    }
}

template <class Ops>
std::uint64_t count_all(const GeoSet& g, const MeshSpec& spec, MeshKind kind,
                        unsigned workers) {
    GridView<Ops> grid = grid_view<Ops>(spec);
    const auto& prims = g.primitives;

    if (workers <= 1 || prims.size() <= 1) {
        KeySet hits;
        for (const ConvexPrimitive& p : prims) count_primitive(p, grid, kind, hits);
        return hits.size();
    }

    unsigned n_workers = std::min<unsigned>(workers, static_cast<unsigned>(prims.size()));
    std::vector<std::future<KeySet>> futures;
    futures.reserve(n_workers);
    std::size_t chunk = (prims.size() + n_workers - 1) / n_workers;
    for (unsigned w = 0; w < n_workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(prims.size(), begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            KeySet local;
            for (std::size_t i = begin; i < end; ++i) {
                count_primitive(prims[i], grid, kind, local);
            }
            return local;
        }));
    }
    KeySet hits;
    for (auto& f : futures) {
        KeySet local = f.get();
        hits.merge(local);
    }
    return hits.size();
}

NumMode resolve_mode(const GeoSet& g, const MeshSpec& spec, bool require_exact) {
    bool exact = g.mode() == NumMode::exact && spec.delta.is_exact() &&
                 spec.offset.x.is_exact() && spec.offset.y.is_exact();
    if (!exact && require_exact) {
        throw ModeError("exact counting requires a dyadic delta, offset and set");
    }
    return exact ? NumMode::exact : NumMode::approx;
}

void validate_spec(const MeshSpec& spec) {
    bool positive = spec.delta.is_exact() ? spec.delta.dyadic().is_positive()
                                          : spec.delta.to_double() > 0.0;
    if (!positive) throw ValidationError("mesh delta must be positive");
}

CountRecord count_mesh(const GeoSet& g, const MeshSpec& spec, MeshKind kind,
                       const CountOptions& opts) {
    if (g.empty()) throw EmptyInputError("counting an empty set");
    validate_spec(spec);
    NumMode mode = resolve_mode(g, spec, opts.require_exact);
    std::uint64_t count = mode == NumMode::exact
                              ? count_all<DyadicOps>(g, spec, kind, opts.workers)
                              : count_all<DoubleOps>(g, spec, kind, opts.workers);
    return CountRecord{kind, spec.delta, count};
}

// ---- sampling oracle -------------------------------------------------------

template <class Ops>
void oracle_cells_for_point(const Vec2<typename Ops::S>& p, const GridView<Ops>& grid,
                            MeshKind kind, KeySet& keys) {
    using S = typename Ops::S;
    using IM = IndexMath<Ops>;
    S rel_x = Ops::sub(p.x, grid.ox);
    S rel_y = Ops::sub(p.y, grid.oy);
    std::int64_t mf = IM::floor_idx(rel_x, grid.delta);
    std::int64_t nf = IM::floor_idx(rel_y, grid.delta);
    bool on_x = IM::on_grid(rel_x, grid.delta, mf);
    bool on_y = IM::on_grid(rel_y, grid.delta, nf);

    for (int dm = on_x ? -1 : 0; dm <= 0; ++dm) {
        for (int dn = on_y ? -1 : 0; dn <= 0; ++dn) {
            std::int64_t m = mf + dm;
            std::int64_t n = nf + dn;
            if (kind == MeshKind::square) {
                keys.insert(CellKey{m, n, Half::none});
                continue;
            }
            S xa = Ops::add(grid.ox, Ops::mul(S(static_cast<long long>(m)), grid.delta));
            S ya = Ops::add(grid.oy, Ops::mul(S(static_cast<long long>(n)), grid.delta));
            S u = Ops::sub(p.x, xa);
            S v = Ops::sub(p.y, ya);
            int side;
            if (grid.diagonal == Diagonal::ne) {
                side = Ops::cmp_pred(u, v);  // u > v: below the diagonal
            } else {
                side = Ops::cmp_pred(grid.delta, Ops::add(u, v));  // u+v < delta: lower-left
            }
            if (side >= 0) keys.insert(CellKey{m, n, Half::lower});
            if (side <= 0) keys.insert(CellKey{m, n, Half::upper});
        }
    }
}

template <class Ops>
std::uint64_t oracle_count(const GeoSet& g, const MeshSpec& spec, MeshKind kind,
                           unsigned density) {
    using S = typename Ops::S;
    GridView<Ops> grid = grid_view<Ops>(spec);
    const unsigned d_pow = std::bit_ceil(density);
    const unsigned d_log = static_cast<unsigned>(std::countr_zero(d_pow));

    KeySet keys;
    for (const ConvexPrimitive& prim : g.primitives) {
        HullView<Ops> h = detail::prepare_hull<Ops>(prim);
        std::vector<Vec2<S>> samples = h.verts;

        const std::size_t n = h.verts.size();
        const std::size_t edge_count = n == 1 ? 0 : (n == 2 ? 1 : n);
        for (std::size_t i = 0; i < edge_count; ++i) {
            const Vec2<S>& a = h.verts[i];
            const Vec2<S>& b = h.verts[(i + 1) % n];
            double dx = 0.0, dy = 0.0;
            if constexpr (Ops::is_exact) {
                dx = (b.x - a.x).to_double();
                dy = (b.y - a.y).to_double();
            } else {
                dx = b.x - a.x;
                dy = b.y - a.y;
            }
            double elen = std::hypot(dx, dy);
            std::uint64_t steps = std::bit_ceil(std::max<std::uint64_t>(
                1, static_cast<std::uint64_t>(std::ceil(elen * d_pow))));
            unsigned steps_log = static_cast<unsigned>(std::countr_zero(steps));
            for (std::uint64_t i_t = 1; i_t < steps; ++i_t) {
                if constexpr (Ops::is_exact) {
                    Dyadic t(BigInt(i_t), steps_log);
                    samples.push_back(Vec2<S>{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
                } else {
                    double t = static_cast<double>(i_t) / static_cast<double>(steps);
                    samples.push_back(Vec2<S>{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
                }
            }
        }

        if (n >= 3 && !h.flat) {
            // global lattice at spacing 1/d_pow, restricted to the hull
            if constexpr (Ops::is_exact) {
                Dyadic step(BigInt(1), d_log);
                std::int64_t i0 = checked_index(Dyadic::ceil_quotient(h.lo_x, step));
                std::int64_t i1 = checked_index(Dyadic::floor_quotient(h.hi_x, step));
                std::int64_t j0 = checked_index(Dyadic::ceil_quotient(h.lo_y, step));
                std::int64_t j1 = checked_index(Dyadic::floor_quotient(h.hi_y, step));
                for (std::int64_t i = i0; i <= i1; ++i) {
                    for (std::int64_t j = j0; j <= j1; ++j) {
                        Vec2<S> p{Dyadic(BigInt(i), d_log), Dyadic(BigInt(j), d_log)};
                        if (detail::point_in_hull(h, p)) samples.push_back(p);
                    }
                }
            } else {
                double step = 1.0 / d_pow;
                std::int64_t i0 = static_cast<std::int64_t>(std::ceil(h.lo_x / step - 1e-9));
                std::int64_t i1 = static_cast<std::int64_t>(std::floor(h.hi_x / step + 1e-9));
                std::int64_t j0 = static_cast<std::int64_t>(std::ceil(h.lo_y / step - 1e-9));
                std::int64_t j1 = static_cast<std::int64_t>(std::floor(h.hi_y / step + 1e-9));
                for (std::int64_t i = i0; i <= i1; ++i) {
                    for (std::int64_t j = j0; j <= j1; ++j) {
                        Vec2<S> p{i * step, j * step};
                        if (detail::point_in_hull(h, p)) samples.push_back(p);
                    }
                }
            }
        }

        for (const Vec2<S>& p : samples) oracle_cells_for_point(p, grid, kind, keys);
    }
    return keys.size();
}

}  // namespace

std::string_view mesh_kind_name(MeshKind kind) {
    return kind == MeshKind::square ? "square" : "triangle";
}

std::size_t CellKeyHash::operator()(const CellKey& k) const {
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(k.m));
    h = splitmix64(h ^ static_cast<std::uint64_t>(k.n));
    h = splitmix64(h ^ static_cast<std::uint64_t>(k.half));
    return static_cast<std::size_t>(h);
}

std::uint64_t CandidateCells::size() const {
    return static_cast<std::uint64_t>(m1_ - m0_ + 1) * static_cast<std::uint64_t>(n1_ - n0_ + 1);
}

CandidateCells enumerate_candidate_cells(const std::pair<Point, Point>& bbox,
                                         const MeshSpec& spec) {
    validate_spec(spec);
    bool exact = bbox.first.mode() == NumMode::exact && bbox.second.mode() == NumMode::exact &&
                 spec.delta.is_exact() && spec.offset.x.is_exact() && spec.offset.y.is_exact();
    if (exact) {
        auto [m0, m1] = axis_range<DyadicOps>(bbox.first.x.dyadic(), bbox.second.x.dyadic(),
                                              spec.offset.x.dyadic(), spec.delta.dyadic(),
                                              spec.cells);
        auto [n0, n1] = axis_range<DyadicOps>(bbox.first.y.dyadic(), bbox.second.y.dyadic(),
                                              spec.offset.y.dyadic(), spec.delta.dyadic(),
                                              spec.cells);
        return CandidateCells(m0, m1, n0, n1);
    }
    auto [m0, m1] = axis_range<DoubleOps>(bbox.first.x.to_double(), bbox.second.x.to_double(),
                                          spec.offset.x.to_double(), spec.delta.to_double(),
                                          spec.cells);
    auto [n0, n1] = axis_range<DoubleOps>(bbox.first.y.to_double(), bbox.second.y.to_double(),
                                          spec.offset.y.to_double(), spec.delta.to_double(),
                                          spec.cells);
    return CandidateCells(m0, m1, n0, n1);
}

CountRecord count_square_mesh(const GeoSet& g, const MeshSpec& spec, const CountOptions& opts) {
    return count_mesh(g, spec, MeshKind::square, opts);
}

CountRecord count_triangle_mesh(const GeoSet& g, const MeshSpec& spec,
                                const CountOptions& opts) {
    return count_mesh(g, spec, MeshKind::triangle, opts);
}

CountRecord sampling_oracle_count(const GeoSet& g, const MeshSpec& spec, MeshKind kind,
                                  unsigned density_per_unit) {
    if (g.empty()) throw EmptyInputError("sampling an empty set");
    if (density_per_unit < 1) throw ValidationError("oracle density must be at least 1");
    validate_spec(spec);
    NumMode mode = resolve_mode(g, spec, false);
    std::uint64_t count = mode == NumMode::exact
                              ? oracle_count<DyadicOps>(g, spec, kind, density_per_unit)
                              : oracle_count<DoubleOps>(g, spec, kind, density_per_unit);
    return CountRecord{kind, spec.delta, count};
}

}  // namespace fracdim
