#include <doctest.h>

#include <sstream>

#include "fracdim/fracgeo.hpp"
#include "helpers.hpp"

using namespace fracdim;
using namespace testutil;

TEST_SUITE_BEGIN("fracgeo");

TEST_CASE("write then read restores the set exactly") {
    std::mt19937 rng(404);
    GeoSet set;
    set.name = "round_trip";
    set.stage = 3;
    for (int i = 0; i < 20; ++i) set.primitives.push_back(random_primitive(rng));

    std::ostringstream out;
    write_fracgeo(out, set);
    std::istringstream in(out.str());
    GeoSet back = read_fracgeo(in, "twice");

    REQUIRE(back.name == set.name);
    REQUIRE(back.stage == set.stage);
    REQUIRE(back.primitives.size() == set.primitives.size());
    for (std::size_t i = 0; i < set.primitives.size(); ++i) {
        const auto& a = set.primitives[i].vertices();
        const auto& b = back.primitives[i].vertices();
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(a[j].x.dyadic() == b[j].x.dyadic());
            CHECK(a[j].y.dyadic() == b[j].y.dyadic());
        }
    }
}

TEST_CASE("decimal coordinates load the whole set in approx mode") {
    std::istringstream in(
        "fracgeo v1\n"
        "set m stage -\n"
        "point 1/2^1 0.25\n"
        "seg 0 0 1 0\n");
    GeoSet set = read_fracgeo(in, "mixed");
    CHECK(set.mode() == NumMode::approx);
    CHECK(set.primitives[0].vertex(0).x.to_double() == 0.5);
    CHECK_FALSE(set.stage.has_value());
}

TEST_CASE("strict parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_fracgeo(in, "bad");
            FAIL("expected a ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error("fracgeo v2\nset a stage -\n", 1);
    expect_error("fracgeo v1\nset a b c d\n", 2);
    expect_error("fracgeo v1\nset a stage -\ncircle 0 0 1\n", 3);
    expect_error("fracgeo v1\nset a stage -\npoint 0\n", 3);
    expect_error("fracgeo v1\nset a stage -\npoint 0 1/3\n", 3);
    expect_error("fracgeo v1\nset a stage -\npoly 2 0 0 1 1\n", 3);
    expect_error("fracgeo v1\nset a stage -\nseg 0 0 1 0\n\nseg 0 0 1 0\n", 4);
    // clockwise polygon rejected at its own line
    expect_error("fracgeo v1\nset a stage -\npoly 3 0 0 0 1 1 0\n", 3);
}

TEST_CASE("writer refuses unnameable sets") {
    GeoSet set;
    set.name = "two words";
    set.primitives.push_back(make_point(dy_point(0, 0, 0, 0)));
    std::ostringstream out;
    CHECK_THROWS_AS(write_fracgeo(out, set), ValidationError);
}

TEST_CASE("stage dash round trip") {
    GeoSet set;
    set.name = "nostage";
    set.primitives.push_back(make_point(dy_point(1, 2, 1, 2)));
    std::ostringstream out;
    write_fracgeo(out, set);
    CHECK(out.str() == "fracgeo v1\nset nostage stage -\npoint 1/2^2 1/2^2\n");
}

TEST_SUITE_END();
