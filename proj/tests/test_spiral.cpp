#include <doctest.h>

#include "fracdim/spiral.hpp"
#include "helpers.hpp"

using namespace fracdim;
using namespace testutil;

TEST_SUITE_BEGIN("spiral");

namespace {

// equality of two polygons up to starting vertex (orientation preserved)
bool cyclic_equal(const ConvexPrimitive& a, const std::vector<Point>& expect) {
    const auto& av = a.vertices();
    if (av.size() != expect.size()) return false;
    const std::size_t n = av.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) {
            const Point& p = av[(i + shift) % n];
            all = p.x.dyadic() == expect[i].x.dyadic() && p.y.dyadic() == expect[i].y.dyadic();
        }
        if (all) return true;
    }
    return false;
}

Dyadic leg_squared(const ConvexPrimitive& tri, int corner) {
    const auto& v = tri.vertices();
    Scalar dx = v[(corner + 1) % 3].x - v[corner].x;
    Scalar dy = v[(corner + 1) % 3].y - v[corner].y;
    return (dx * dx + dy * dy).dyadic();
}

}  // namespace

TEST_CASE("removal direction follows the clockwise eighth-turns") {
    CHECK(removal_direction(1) == Compass::NE);
    CHECK(removal_direction(2) == Compass::E);
    CHECK(removal_direction(3) == Compass::SE);
    CHECK(removal_direction(5) == Compass::SW);
    CHECK_THROWS_AS(removal_direction(0), DomainError);
    for (unsigned k = 1; k <= 64; ++k) {
        CHECK(removal_direction(k) == removal_direction(k + 8));  // period 8
        bool diagonal = removal_direction(k) == Compass::NE ||
                        removal_direction(k) == Compass::SE ||
                        removal_direction(k) == Compass::SW ||
                        removal_direction(k) == Compass::NW;
        CHECK(diagonal == (k % 2 == 1));  // diagonal and cardinal tags alternate
    }
}

TEST_CASE("inscribed square of the unit square is the midpoint diamond") {
    ConvexPrimitive n0 = make_polygon({dy_point(0, 0, 0, 0), dy_point(1, 0, 0, 0),
                                       dy_point(1, 0, 1, 0), dy_point(0, 0, 1, 0)});
    ConvexPrimitive n1 = inscribed_square(n0);
    CHECK(cyclic_equal(n1, {dy_point(1, 1, 0, 0), dy_point(1, 0, 1, 1), dy_point(1, 1, 1, 0),
                            dy_point(0, 0, 1, 1)}));
    ConvexPrimitive n2 = inscribed_square(n1);
    CHECK(cyclic_equal(n2, {dy_point(1, 2, 1, 2), dy_point(3, 2, 1, 2), dy_point(3, 2, 3, 2),
                            dy_point(1, 2, 3, 2)}));
}

TEST_CASE("inscribed square halves the area of random dyadic squares") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> d(-32, 32);
    int built = 0;
    while (built < 200) {
        Dyadic px(BigInt(d(rng)), 5), py(BigInt(d(rng)), 5);
        Dyadic ux(BigInt(d(rng)), 5), uy(BigInt(d(rng)), 5);
        if (ux.is_zero() && uy.is_zero()) continue;
        // square from base point p and edge vector u: p, p+u, p+u+perp(u), p+perp(u)
        Point p0 = exact_point(px, py);
        Point p1 = exact_point(px + ux, py + uy);
        Point p2 = exact_point(px + ux - uy, py + uy + ux);
        Point p3 = exact_point(px - uy, py + ux);
        ConvexPrimitive sq = make_polygon({p0, p1, p2, p3});
        ConvexPrimitive in = inscribed_square(sq);
        CHECK(convex_area(in).dyadic() == convex_area(sq).half().dyadic());
        ++built;
    }
}

TEST_CASE("inscribed square rejects non-squares") {
    CHECK_THROWS_AS(inscribed_square(make_polygon({dy_point(0, 0, 0, 0), dy_point(2, 0, 0, 0),
                                                   dy_point(2, 0, 1, 0), dy_point(0, 0, 1, 0)})),
                    ValidationError);  // rectangle
    CHECK_THROWS_AS(inscribed_square(make_polygon({dy_point(0, 0, 0, 0), dy_point(1, 0, 0, 0),
                                                   dy_point(0, 0, 1, 0)})),
                    ValidationError);  // triangle
    CHECK_THROWS_AS(inscribed_square(make_polygon(
                        {dy_point(0, 0, 0, 0), dy_point(2, 0, 1, 0), dy_point(0, 0, 2, 0),
                         dy_point(-2, 0, 1, 0)})),
                    ValidationError);  // rhombus, equal sides but no right angle
}

TEST_CASE("stage zero is the closed unit square") {
    BradleyStages s0 = bradley_stage(0);
    REQUIRE(s0.set.primitives.size() == 1);
    CHECK(s0.traces.empty());
    CHECK(convex_area(s0.set.primitives[0]).dyadic() == Dyadic(1));
}

TEST_CASE("stage one matches the hand construction") {
    BradleyStages s1 = bradley_stage(1);
    REQUIRE(s1.set.primitives.size() == 4);
    CHECK(total_primitive_area(s1.set).dyadic() == Dyadic(7, 3));  // 7/8
    REQUIRE(s1.traces.size() == 1);
    const StageTrace& t = s1.traces[0];
    CHECK(t.removed_direction == Compass::NE);
    CHECK(cyclic_equal(t.removed_triangle, {dy_point(1, 0, 1, 1), dy_point(1, 0, 1, 0),
                                            dy_point(1, 1, 1, 0)}));
    CHECK_FALSE(t.removed_boundary.has_value());
    REQUIRE(t.kept_boundary.size() == 1);  // only the hypotenuse survives
    CHECK(t.kept_boundary[0].size() == 2);
}

TEST_CASE("stage three counts and exact area") {
    BradleyStages s3 = bradley_stage(3);
    CHECK(s3.set.primitives.size() == 10);
    CHECK(total_primitive_area(s3.set).dyadic() == Dyadic(25, 5));  // 25/32
}

TEST_CASE("primitive count and area follow the closed forms up to depth 16") {
    for (unsigned k = 0; k <= 16; ++k) {
        BradleyStages s = bradley_stage(k);
        CHECK(s.set.primitives.size() == 3 * k + 1);
        if (k >= 1) {
            Dyadic expected = Dyadic(3, 2) + Dyadic(BigInt(1), k + 2);
            CHECK(total_primitive_area(s.set).dyadic() == expected);
        }
    }
}

TEST_CASE("stage traces carry the construction bookkeeping") {
    BradleyStages s = bradley_stage(10);
    for (const StageTrace& t : s.traces) {
        // leg length squared of every stage-k triangle is exactly 2^-(k+1)
        Dyadic expected(BigInt(1), t.k + 1);
        CHECK(leg_squared(t.removed_triangle, 0) == expected);
        for (const ConvexPrimitive& keep : t.kept_triangles) {
            CHECK(leg_squared(keep, 0) == expected);
        }
        // removed + kept partition the frame between consecutive squares
        Scalar frame = convex_area(t.square_before) - convex_area(t.square_after);
        Scalar parts = convex_area(t.removed_triangle);
        for (const ConvexPrimitive& keep : t.kept_triangles) parts = parts + convex_area(keep);
        CHECK(frame.dyadic() == parts.dyadic());
        CHECK(convex_area(t.square_after).dyadic() ==
              convex_area(t.square_before).half().dyadic());

        if (t.k == 1) {
            CHECK_FALSE(t.removed_boundary.has_value());
            CHECK(t.kept_boundary.size() == 1);
        } else {
            REQUIRE(t.removed_boundary.has_value());
            CHECK(t.kept_boundary.size() == 2);
            // the removed leg lies inside the previous removed triangle
            const ConvexPrimitive& prev = s.traces[t.k - 2].removed_triangle;
            for (const Point& p : t.removed_boundary->vertices()) {
                CHECK(point_in_convex(p, prev));
            }
        }
        // every kept boundary segment stays inside the stage set
        GeoSet stage_set = bradley_stage(t.k).set;
        for (const ConvexPrimitive& seg : t.kept_boundary) {
            for (const Point& p : seg.vertices()) {
                bool inside = false;
                for (const ConvexPrimitive& prim : stage_set.primitives) {
                    if (point_in_convex(p, prim)) {
                        inside = true;
                        break;
                    }
                }
                CHECK(inside);
            }
        }
    }
}

TEST_CASE("nesting: stage k+1 primitives stay inside the previous inner square") {
    for (unsigned k = 0; k < 8; ++k) {
        BradleyStages cur = bradley_stage(k + 1);
        ConvexPrimitive nk = bradley_stage(k).set.primitives[0];
        // primitives born at stage k+1: the new inner square and the last 3 kept
        std::vector<const ConvexPrimitive*> born{&cur.set.primitives[0]};
        for (std::size_t i = cur.set.primitives.size() - 3; i < cur.set.primitives.size(); ++i) {
            born.push_back(&cur.set.primitives[i]);
        }
        for (const ConvexPrimitive* prim : born) {
            for (const Point& p : prim->vertices()) {
                CHECK(point_in_convex(p, nk));
            }
        }
    }
}

TEST_CASE("depth cap raises a resource error") {
    CHECK_THROWS_AS(bradley_stage(25), ResourceError);
    CHECK_THROWS_AS(bradley_stage(9, 8), ResourceError);
    CHECK_THROWS_AS(construction_decomposition(25), ResourceError);
}

TEST_CASE("decomposition counts: 7 at stage 1, 49 at stage 4") {
    CHECK(construction_decomposition(1).size() == 7);
    CHECK(construction_decomposition(4).size() == 49);
    CHECK_THROWS_AS(construction_decomposition(0), DomainError);
}

TEST_CASE("decomposition at stage 1 sums to the stage area") {
    auto tris = construction_decomposition(1);
    Scalar sum(Dyadic(0));
    for (const ConvexPrimitive& t : tris) sum = sum + convex_area(t);
    CHECK(sum.dyadic() == Dyadic(7, 3));  // 7/8
}

TEST_CASE("decomposition triangles have the uniform leg length") {
    for (unsigned k : {1u, 2u, 3u, 5u, 8u}) {
        auto tris = construction_decomposition(k);
        CHECK(tris.size() == (std::size_t(3) << k) + 1);
        Dyadic expected(BigInt(1), k + 1);
        for (const ConvexPrimitive& t : tris) {
            const auto& v = t.vertices();
            REQUIRE(v.size() == 3);
            // exactly one corner is the right angle; legs there have the
            // expected squared length and the dot product vanishes
            bool found_right = false;
            for (int c = 0; c < 3 && !found_right; ++c) {
                Scalar ax = v[(c + 1) % 3].x - v[c].x;
                Scalar ay = v[(c + 1) % 3].y - v[c].y;
                Scalar bx = v[(c + 2) % 3].x - v[c].x;
                Scalar by = v[(c + 2) % 3].y - v[c].y;
                if ((ax * bx + ay * by).dyadic().is_zero()) {
                    CHECK((ax * ax + ay * ay).dyadic() == expected);
                    CHECK((bx * bx + by * by).dyadic() == expected);
                    found_right = true;
                }
            }
            CHECK(found_right);
        }
    }
}

TEST_CASE("decomposition pieces tile the stage set") {
    for (unsigned k : {1u, 3u, 6u}) {
        BradleyStages stage = bradley_stage(k);
        auto tris = construction_decomposition(k);
        Scalar sum(Dyadic(0));
        for (const ConvexPrimitive& t : tris) {
            sum = sum + convex_area(t);
            // every piece sits inside one stage primitive (convexity makes
            // vertex containment sufficient)
            bool inside_one = false;
            for (const ConvexPrimitive& prim : stage.set.primitives) {
                bool all = true;
                for (const Point& p : t.vertices()) {
                    if (!point_in_convex(p, prim)) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    inside_one = true;
                    break;
                }
            }
            CHECK(inside_one);
        }
        // total area equals the set area, so interiors cannot overlap
        CHECK(sum.dyadic() == total_primitive_area(stage.set).dyadic());
    }
}

TEST_CASE("trace report is deterministic text") {
    BradleyStages s = bradley_stage(2);
    std::string report = stage_trace_report(s.traces);
    CHECK(report == stage_trace_report(bradley_stage(2).traces));
    CHECK(report.find("stage 1") != std::string::npos);
    CHECK(report.find("direction NE") != std::string::npos);
    CHECK(report.find("direction E") != std::string::npos);
    CHECK(report.find("removed_boundary seg") != std::string::npos);
}

TEST_SUITE_END();
