#include "fracdim/spiral.hpp"

#include <algorithm>
#include <sstream>

namespace fracdim {

namespace {

const std::array<std::string_view, 8> kCompassNames = {"NE", "E", "SE", "S",
                                                       "SW", "W", "NW", "N"};

// integer direction vectors, clockwise from NE
const std::array<std::pair<int, int>, 8> kCompassVec = {
    std::pair{1, 1},  {1, 0},  {1, -1}, {0, -1},
    std::pair{-1, -1}, {-1, 0}, {-1, 1}, {0, 1}};

Point midpoint(const Point& a, const Point& b) {
    return Point{(a.x + b.x).half(), (a.y + b.y).half()};
}

Dyadic dot_int(const Point& p, std::pair<int, int> d) {
    Dyadic x = p.x.dyadic();
    Dyadic y = p.y.dyadic();
    return x * Dyadic(d.first) + y * Dyadic(d.second);
}

ConvexPrimitive unit_square() {
    return make_polygon({exact_point(Dyadic(0), Dyadic(0)), exact_point(Dyadic(1), Dyadic(0)),
                         exact_point(Dyadic(1), Dyadic(1)), exact_point(Dyadic(0), Dyadic(1))});
}

// lexicographic (x, y) compare on exact points
int point_cmp(const Point& a, const Point& b) {
    int c = a.x.dyadic().compare(b.x.dyadic());
    if (c != 0) return c;
    return a.y.dyadic().compare(b.y.dyadic());
}

bool primitive_less(const ConvexPrimitive& a, const ConvexPrimitive& b) {
    auto key = [](const ConvexPrimitive& p) {
        std::vector<Point> v = p.vertices();
        std::sort(v.begin(), v.end(),
                  [](const Point& l, const Point& r) { return point_cmp(l, r) < 0; });
        return v;
    };
    std::vector<Point> ka = key(a);
    std::vector<Point> kb = key(b);
    for (std::size_t i = 0; i < std::min(ka.size(), kb.size()); ++i) {
        int c = point_cmp(ka[i], kb[i]);
        if (c != 0) return c < 0;
    }
    return ka.size() < kb.size();
}

// a right isoceles triangle plus the index of its right-angle vertex
struct RightTri {
    std::array<Point, 3> v;
    int right = 0;
};

// median split through the hypotenuse midpoint; children are again right
// isoceles with half the squared leg length
std::pair<RightTri, RightTri> bisect(const RightTri& t) {
    int r = t.right;
    int a = (r + 2) % 3;  // hypotenuse endpoints, in parent cyclic order a -> r -> b
    int b = (r + 1) % 3;
    Point m = midpoint(t.v[a], t.v[b]);
    RightTri left{{t.v[a], t.v[r], m}, 2};
    RightTri right_child{{m, t.v[r], t.v[b]}, 0};
    return {left, right_child};
}

ConvexPrimitive tri_to_primitive(const RightTri& t) {
    return make_polygon({t.v[0], t.v[1], t.v[2]});
}

}  // namespace

std::string_view compass_name(Compass c) {
    return kCompassNames[static_cast<std::size_t>(c)];
}

Compass removal_direction(unsigned k) {
    if (k == 0) throw DomainError("stage index must be at least 1");
    return static_cast<Compass>((k - 1) % 8);
}

ConvexPrimitive inscribed_square(const ConvexPrimitive& sq) {
    const auto& v = sq.vertices();
    if (v.size() != 4) throw ValidationError("inscribed square needs a 4-vertex square");
    std::array<Point, 4> e;  // edge vectors
    for (int i = 0; i < 4; ++i) {
        e[i] = Point{v[(i + 1) % 4].x - v[i].x, v[(i + 1) % 4].y - v[i].y};
    }
    auto dot = [](const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; };
    Scalar side2 = dot(e[0], e[0]);
    Scalar zero = side2 - side2;
    for (int i = 0; i < 4; ++i) {
        if (dot(e[i], e[i]).compare(side2) != 0) {
            throw ValidationError("sides have unequal length: not a square");
        }
        if (dot(e[i], e[(i + 1) % 4]).compare(zero) != 0) {
            throw ValidationError("corners are not right angles: not a square");
        }
    }
    std::vector<Point> mids;
    mids.reserve(4);
    for (int i = 0; i < 4; ++i) mids.push_back(midpoint(v[i], v[(i + 1) % 4]));
    return make_polygon(std::move(mids));
}

BradleyStages bradley_stage(unsigned k, unsigned depth_cap) {
    if (k > depth_cap) {
        throw ResourceError("stage " + std::to_string(k) + " exceeds depth cap " +
                            std::to_string(depth_cap));
    }
    BradleyStages out;
    ConvexPrimitive square = unit_square();
    std::vector<ConvexPrimitive> kept_all;

    for (unsigned j = 1; j <= k; ++j) {
        ConvexPrimitive inner = inscribed_square(square);
        Compass dir = removal_direction(j);
        auto dv = kCompassVec[static_cast<std::size_t>(dir)];

        const auto& sv = square.vertices();
        const auto& mv = inner.vertices();  // mv[i] = midpoint of edge i -> i+1

        // the removed corner is the unique vertex extremal in the removal direction
        int best = 0;
        Dyadic best_dot = dot_int(sv[0], dv);
        for (int i = 1; i < 4; ++i) {
            Dyadic d = dot_int(sv[i], dv);
            if (d > best_dot) {
                best_dot = d;
                best = i;
            }
        }

        auto corner_tri = [&](int i) {
            // midpoint before the corner, the corner, midpoint after: ccw
            return make_polygon({mv[(i + 3) % 4], sv[i], mv[i]});
        };

        StageTrace trace{j,
                         square,
                         inner,
                         corner_tri(best),
                         {},
                         dir,
                         std::nullopt,
                         {}};
        for (int step = 1; step <= 3; ++step) {
            trace.kept_triangles.push_back(corner_tri((best + step) % 4));
        }

        Point hyp_a = mv[(best + 3) % 4];
        Point hyp_b = mv[best];
        trace.kept_boundary.push_back(make_segment(hyp_a, hyp_b));
        if (j >= 2) {
            // of the two legs, the one lying inside the previously removed
            // triangle's closed hull is the boundary that goes away
            const ConvexPrimitive& prev_removed = out.traces.back().removed_triangle;
            ConvexPrimitive leg_a = make_segment(hyp_a, sv[best]);
            ConvexPrimitive leg_b = make_segment(sv[best], hyp_b);
            bool a_shared = point_in_convex(hyp_a, prev_removed) &&
                            point_in_convex(sv[best], prev_removed);
            trace.removed_boundary = a_shared ? leg_a : leg_b;
            trace.kept_boundary.push_back(a_shared ? leg_b : leg_a);
        }

        kept_all.insert(kept_all.end(), trace.kept_triangles.begin(),
                        trace.kept_triangles.end());
        out.traces.push_back(std::move(trace));
        square = inner;
    }

    out.set.name = "bradley_s" + std::to_string(k);
    out.set.stage = k;
    out.set.primitives.push_back(square);
    out.set.primitives.insert(out.set.primitives.end(), kept_all.begin(), kept_all.end());
    return out;
}

std::vector<ConvexPrimitive> construction_decomposition(unsigned k, unsigned depth_cap) {
    if (k == 0) throw DomainError("decomposition starts at stage 1");
    if (k > depth_cap) {
        throw ResourceError("stage " + std::to_string(k) + " exceeds depth cap " +
                            std::to_string(depth_cap));
    }
    BradleyStages stages = bradley_stage(k, depth_cap);

    std::vector<ConvexPrimitive> out;
    out.reserve((static_cast<std::size_t>(3) << k) + 1);

    // inner square N_k cut by its diagonals into four triangles around the center
    const auto& nk = stages.set.primitives[0].vertices();
    Point center = midpoint(nk[0], nk[2]);
    std::vector<ConvexPrimitive> group;
    for (int i = 0; i < 4; ++i) {
        group.push_back(make_polygon({nk[i], nk[(i + 1) % 4], center}));
    }
    std::sort(group.begin(), group.end(), primitive_less);
    out.insert(out.end(), group.begin(), group.end());

    // each kept stage-j triangle, bisected k - j times
    for (const StageTrace& trace : stages.traces) {
        group.clear();
        for (const ConvexPrimitive& keep : trace.kept_triangles) {
            const auto& v = keep.vertices();
            RightTri root{{v[0], v[1], v[2]}, 1};  // right angle at the square corner
            std::vector<RightTri> todo{root};
            for (unsigned split = trace.k; split < k; ++split) {
                std::vector<RightTri> next;
                next.reserve(todo.size() * 2);
                for (const RightTri& t : todo) {
                    auto [l, r] = bisect(t);
                    next.push_back(l);
                    next.push_back(r);
                }
                todo = std::move(next);
            }
            for (const RightTri& t : todo) group.push_back(tri_to_primitive(t));
        }
        std::sort(group.begin(), group.end(), primitive_less);
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

std::string stage_trace_report(std::span<const StageTrace> traces) {
    std::ostringstream os;
    auto emit_prim = [&](const char* label, const ConvexPrimitive& p) {
        os << "  " << label;
        if (p.size() >= 3) os << " poly " << p.size();
        else if (p.size() == 2) os << " seg";
        else os << " point";
        for (const Point& pt : p.vertices()) {
            os << " " << pt.x.str() << " " << pt.y.str();
        }
        os << "\n";
    };
    for (const StageTrace& t : traces) {
        os << "stage " << t.k << "\n";
        os << "  direction " << compass_name(t.removed_direction) << "\n";
        emit_prim("square_before", t.square_before);
        emit_prim("square_after", t.square_after);
        emit_prim("removed", t.removed_triangle);
        for (const ConvexPrimitive& keep : t.kept_triangles) emit_prim("kept", keep);
        if (t.removed_boundary) {
            emit_prim("removed_boundary", *t.removed_boundary);
        } else {
            os << "  removed_boundary -\n";
        }
        for (const ConvexPrimitive& seg : t.kept_boundary) emit_prim("kept_boundary", seg);
    }
    return os.str();
}

}  // namespace fracdim
