#include <doctest.h>

#include <cmath>

#include "fracdim/prefractal.hpp"
#include "helpers.hpp"

using namespace fracdim;
using namespace testutil;

TEST_SUITE_BEGIN("prefractal");

TEST_CASE("sierpinski counts and exact scale") {
    PrefractalSpec spec;
    spec.kind = PrefractalKind::sierpinski;
    spec.depth = 0;
    CHECK(reference_prefractal(spec).primitives.size() == 1);
    spec.depth = 3;
    GeoSet d3 = reference_prefractal(spec);
    CHECK(d3.primitives.size() == 27);
    CHECK(d3.mode() == NumMode::exact);
    // total area scales by (3/4)^d
    Scalar sum(Dyadic(0));
    for (const ConvexPrimitive& t : d3.primitives) sum = sum + convex_area(t);
    CHECK(sum.dyadic() == Dyadic(27, 7));  // (1/2) * (3/4)^3 = 27/128
}

TEST_CASE("cantor dust: 16 squares of side 1/9 at depth 2") {
    PrefractalSpec spec;
    spec.kind = PrefractalKind::cantor_dust;
    spec.depth = 2;
    GeoSet dust = reference_prefractal(spec);
    REQUIRE(dust.primitives.size() == 16);
    CHECK(dust.mode() == NumMode::approx);
    for (const ConvexPrimitive& sq : dust.primitives) {
        const auto& v = sq.vertices();
        double side = v[1].x.to_double() - v[0].x.to_double();
        CHECK(std::abs(side - 1.0 / 9.0) < 1e-15);
    }
}

TEST_CASE("koch polyline has 4^d segments inside the unit square") {
    PrefractalSpec spec;
    spec.kind = PrefractalKind::koch;
    spec.depth = 3;
    GeoSet koch = reference_prefractal(spec);
    CHECK(koch.primitives.size() == 64);
    CHECK(koch.mode() == NumMode::approx);
    for (const ConvexPrimitive& seg : koch.primitives) {
        for (const Point& p : seg.vertices()) {
            CHECK(p.x.to_double() >= -1e-12);
            CHECK(p.x.to_double() <= 1.0 + 1e-12);
            CHECK(p.y.to_double() >= -1e-12);
            CHECK(p.y.to_double() <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("filled square and segment singletons") {
    PrefractalSpec spec;
    spec.kind = PrefractalKind::filled_square;
    GeoSet fs = reference_prefractal(spec);
    REQUIRE(fs.primitives.size() == 1);
    CHECK(convex_area(fs.primitives[0]).dyadic() == Dyadic(1));

    spec.kind = PrefractalKind::segment;
    GeoSet seg = reference_prefractal(spec);
    REQUIRE(seg.primitives.size() == 1);
    CHECK(seg.primitives[0].kind() == PrimitiveKind::segment);
}

TEST_CASE("bradley kind delegates to the construction") {
    PrefractalSpec spec;
    spec.kind = PrefractalKind::bradley;
    spec.depth = 4;
    CHECK(reference_prefractal(spec).primitives.size() == 13);
}

TEST_CASE("kind names round trip and unknown names fail") {
    for (const char* name :
         {"bradley", "sierpinski", "koch", "cantor-dust", "filled-square", "segment"}) {
        auto kind = parse_prefractal_kind(name);
        REQUIRE(kind.has_value());
        CHECK(prefractal_kind_name(*kind) == name);
    }
    CHECK_FALSE(parse_prefractal_kind("mandelbrot").has_value());
}

TEST_CASE("depth caps and the primitive budget") {
    PrefractalSpec spec;
    spec.kind = PrefractalKind::sierpinski;
    spec.depth = 25;
    CHECK_THROWS_AS(reference_prefractal(spec), ResourceError);
    spec.depth = 20;  // within the depth cap but over the primitive budget
    CHECK_THROWS_AS(reference_prefractal(spec), ResourceError);
}

TEST_SUITE_END();
