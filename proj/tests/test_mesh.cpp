#include <doctest.h>

#include "fracdim/mesh_count.hpp"
#include "fracdim/prefractal.hpp"
#include "helpers.hpp"

using namespace fracdim;
using namespace testutil;

TEST_SUITE_BEGIN("mesh");

namespace {

MeshSpec dyadic_spec(long long num, std::uint32_t exp) {
    return MeshSpec(Scalar(Dyadic(BigInt(num), exp)));
}

GeoSet filled_square() {
    PrefractalSpec spec;
    spec.kind = PrefractalKind::filled_square;
    return reference_prefractal(spec);
}

GeoSet single(ConvexPrimitive p, const char* name = "single") {
    return GeoSet{name, std::nullopt, {std::move(p)}};
}

GeoSet translated(const GeoSet& g, const Dyadic& dx, const Dyadic& dy) {
    GeoSet out;
    out.name = g.name;
    out.stage = g.stage;
    for (const ConvexPrimitive& prim : g.primitives) {
        std::vector<Point> pts;
        for (const Point& p : prim.vertices()) {
            pts.push_back(exact_point(p.x.dyadic() + dx, p.y.dyadic() + dy));
        }
        out.primitives.emplace_back(std::move(pts));
    }
    return out;
}

GeoSet to_approx(const GeoSet& g) {
    GeoSet out;
    out.name = g.name;
    out.stage = g.stage;
    for (const ConvexPrimitive& prim : g.primitives) {
        std::vector<Point> pts;
        for (const Point& p : prim.vertices()) {
            pts.push_back(approx_point(p.x.to_double(), p.y.to_double()));
        }
        out.primitives.emplace_back(std::move(pts));
    }
    return out;
}

GeoSet random_set(std::mt19937& rng, int max_prims = 4) {
    std::uniform_int_distribution<int> n(1, max_prims);
    GeoSet g{"random", std::nullopt, {}};
    int count = n(rng);
    for (int i = 0; i < count; ++i) g.primitives.push_back(random_primitive(rng));
    return g;
}

}  // namespace

TEST_CASE("candidate cells for the unit box at delta one half") {
    auto bbox = std::pair<Point, Point>{dy_point(0, 0, 0, 0), dy_point(1, 0, 1, 0)};

    MeshSpec closed = dyadic_spec(1, 1);
    CandidateCells cells = enumerate_candidate_cells(bbox, closed);
    CHECK(cells.size() == 16);
    CHECK(cells.m_begin() == -1);
    CHECK(cells.m_end() == 3);

    MeshSpec halfopen = dyadic_spec(1, 1);
    halfopen.cells = CellMode::half_open;
    CandidateCells ho = enumerate_candidate_cells(bbox, halfopen);
    CHECK(ho.size() == 9);
    CHECK(ho.m_begin() == 0);
    CHECK(ho.m_end() == 3);

    auto point_box = std::pair<Point, Point>{dy_point(1, 2, 1, 2), dy_point(1, 2, 1, 2)};
    CandidateCells degenerate = enumerate_candidate_cells(point_box, closed);
    CHECK(degenerate.size() == 1);
    CHECK((*degenerate.begin()).m == 0);

    MeshSpec bad(Scalar(Dyadic(0)));
    CHECK_THROWS_AS(enumerate_candidate_cells(bbox, bad), ValidationError);

    // iteration yields each key exactly once
    std::size_t seen = 0;
    for (CellKey key : cells) {
        (void)key;
        ++seen;
    }
    CHECK(seen == 16);
}

TEST_CASE("square counts: hand values") {
    CHECK(count_square_mesh(filled_square(), dyadic_spec(1, 1)).count == 16);
    CHECK(count_square_mesh(single(make_point(dy_point(1, 1, 1, 1))), dyadic_spec(1, 1)).count ==
          4);  // grid corner point belongs to 4 closed cells

    MeshSpec ho = dyadic_spec(1, 1);
    ho.cells = CellMode::half_open;
    CHECK(count_square_mesh(filled_square(), ho).count == 9);
    CHECK(count_square_mesh(single(make_point(dy_point(1, 1, 1, 1))), ho).count == 1);
}

TEST_CASE("triangle counts: hand values") {
    MeshSpec unit(Scalar(Dyadic(1)));
    // point on the cell diagonal touches both closed halves
    CHECK(count_triangle_mesh(single(make_point(dy_point(1, 2, 1, 2))), unit).count == 2);
    // strictly below the diagonal: one half
    CHECK(count_triangle_mesh(single(make_point(dy_point(1, 1, 1, 2))), unit).count == 1);
    // segment crossing the diagonal: both halves
    CHECK(count_triangle_mesh(
              single(make_segment(dy_point(1, 2, 3, 2), dy_point(3, 2, 1, 2))), unit)
              .count == 2);

    // half-open: the diagonal belongs to the lower half only
    MeshSpec unit_ho(Scalar(Dyadic(1)));
    unit_ho.cells = CellMode::half_open;
    CHECK(count_triangle_mesh(single(make_point(dy_point(1, 2, 1, 2))), unit_ho).count == 1);

    // nw diagonal: point on the anti-diagonal of its cell
    MeshSpec unit_nw(Scalar(Dyadic(1)));
    unit_nw.diagonal = Diagonal::nw;
    CHECK(count_triangle_mesh(single(make_point(dy_point(1, 2, 1, 2))), unit_nw).count == 2);
}

TEST_CASE("triangle count of the filled unit square at delta one half") {
    // 32 candidate triangles; the two outer corner halves that meet the
    // square only through their far cells miss it, giving 30
    CountRecord t = count_triangle_mesh(filled_square(), dyadic_spec(1, 1));
    CHECK(t.count == 30);
    // saturated sampling oracle reproduces the exact value
    CHECK(sampling_oracle_count(filled_square(), dyadic_spec(1, 1), MeshKind::triangle, 64)
              .count == 30);
}

TEST_CASE("spiral stage one at delta one quarter, cross-checked by sampling") {
    GeoSet s1 = bradley_stage(1).set;
    MeshSpec spec = dyadic_spec(1, 2);
    CountRecord n = count_square_mesh(s1, spec);
    CHECK(n.count == 33);  // 36 candidate-grid cells minus 3 beyond the removed corner
    std::uint64_t prev = 0;
    for (unsigned density : {4u, 16u, 64u}) {
        std::uint64_t oracle = sampling_oracle_count(s1, spec, MeshKind::square, density).count;
        CHECK(oracle <= n.count);
        CHECK(oracle >= prev);
        prev = oracle;
    }
    CHECK(prev == n.count);
}

TEST_CASE("oracle densities stabilize on the stage-two spiral") {
    GeoSet s2 = bradley_stage(2).set;
    MeshSpec spec = dyadic_spec(1, 3);
    CountRecord exact = count_triangle_mesh(s2, spec);
    std::uint64_t prev = 0;
    for (unsigned density : {4u, 16u, 64u}) {
        std::uint64_t oracle =
            sampling_oracle_count(s2, spec, MeshKind::triangle, density).count;
        CHECK(oracle <= exact.count);
        CHECK(oracle >= prev);
        prev = oracle;
    }
    CHECK(prev == exact.count);
}

TEST_CASE("oracle lower-bounds the exact count on random sets") {
    std::mt19937 rng(602214);
    for (int i = 0; i < 40; ++i) {
        GeoSet g = random_set(rng);
        MeshSpec spec = dyadic_spec(1, 3);
        for (MeshKind kind : {MeshKind::square, MeshKind::triangle}) {
            std::uint64_t exact = (kind == MeshKind::square ? count_square_mesh(g, spec)
                                                            : count_triangle_mesh(g, spec))
                                      .count;
            CHECK(sampling_oracle_count(g, spec, kind, 1).count <= exact);
            CHECK(sampling_oracle_count(g, spec, kind, 16).count <= exact);
        }
    }
}

TEST_CASE("mesh inequality on a mixed corpus") {
    std::mt19937 rng(271828);
    std::vector<GeoSet> corpus;
    corpus.push_back(filled_square());
    corpus.push_back(bradley_stage(3).set);
    for (int i = 0; i < 12; ++i) corpus.push_back(random_set(rng));
    for (const GeoSet& g : corpus) {
        for (std::uint32_t j = 1; j <= 5; ++j) {
            for (Diagonal diag : {Diagonal::ne, Diagonal::nw}) {
                MeshSpec spec = dyadic_spec(1, j);
                spec.diagonal = diag;
                std::uint64_t n = count_square_mesh(g, spec).count;
                std::uint64_t t = count_triangle_mesh(g, spec).count;
                CHECK(n <= t);
                CHECK(t <= 2 * n);
                CHECK(n >= 1);  // nonempty input
            }
        }
    }
}

TEST_CASE("monotonicity and subadditivity") {
    std::mt19937 rng(857);
    for (int i = 0; i < 25; ++i) {
        GeoSet a = random_set(rng, 3);
        GeoSet b = random_set(rng, 3);
        GeoSet both{"union", std::nullopt, a.primitives};
        both.primitives.insert(both.primitives.end(), b.primitives.begin(),
                               b.primitives.end());
        MeshSpec spec = dyadic_spec(1, 3);
        for (MeshKind kind : {MeshKind::square, MeshKind::triangle}) {
            auto count = [&](const GeoSet& g) {
                return (kind == MeshKind::square ? count_square_mesh(g, spec)
                                                 : count_triangle_mesh(g, spec))
                    .count;
            };
            std::uint64_t ca = count(a);
            std::uint64_t cb = count(b);
            std::uint64_t cu = count(both);
            CHECK(ca <= cu);       // monotone in the primitive list
            CHECK(cu <= ca + cb);  // subadditive
        }
    }
}

TEST_CASE("grid translation invariance") {
    std::mt19937 rng(3141);
    for (int i = 0; i < 20; ++i) {
        GeoSet g = random_set(rng);
        MeshSpec spec = dyadic_spec(1, 3);
        Dyadic dx(BigInt(5), 4), dy(BigInt(-3), 5);

        // shifting set and offset together changes nothing
        MeshSpec shifted = spec;
        shifted.offset = exact_point(dx, dy);
        GeoSet gs = translated(g, dx, dy);
        CHECK(count_square_mesh(g, spec).count == count_square_mesh(gs, shifted).count);
        CHECK(count_triangle_mesh(g, spec).count == count_triangle_mesh(gs, shifted).count);

        // shifting the set by an integer multiple of delta changes nothing
        Dyadic step(BigInt(3), 3);  // 3 * delta
        GeoSet gi = translated(g, step, -step);
        CHECK(count_square_mesh(g, spec).count == count_square_mesh(gi, spec).count);
        CHECK(count_triangle_mesh(g, spec).count == count_triangle_mesh(gi, spec).count);
    }
}

TEST_CASE("closed mode dominates half-open mode") {
    std::mt19937 rng(1618);
    for (int i = 0; i < 25; ++i) {
        GeoSet g = random_set(rng);
        for (MeshKind kind : {MeshKind::square, MeshKind::triangle}) {
            for (Diagonal diag : {Diagonal::ne, Diagonal::nw}) {
                MeshSpec closed = dyadic_spec(1, 3);
                closed.diagonal = diag;
                MeshSpec ho = closed;
                ho.cells = CellMode::half_open;
                auto count = [&](const MeshSpec& s) {
                    return (kind == MeshKind::square ? count_square_mesh(g, s)
                                                     : count_triangle_mesh(g, s))
                        .count;
                };
                CHECK(count(ho) <= count(closed));
                CHECK(count(ho) >= 1);
            }
        }
    }
}

TEST_CASE("half-open triangles partition the half-open cell") {
    // fine lattice of sample points: each lies in exactly one half-open
    // triangle of its cell
    MeshSpec spec = dyadic_spec(1, 1);
    spec.cells = CellMode::half_open;
    for (Diagonal diag : {Diagonal::ne, Diagonal::nw}) {
        spec.diagonal = diag;
        for (int ix = 0; ix <= 16; ++ix) {
            for (int iy = 0; iy <= 16; ++iy) {
                GeoSet p = single(make_point(dy_point(ix, 4, iy, 4)));
                CHECK(count_triangle_mesh(p, spec).count == 1);
                CHECK(count_square_mesh(p, spec).count == 1);
            }
        }
    }
}

TEST_CASE("exact and approx counting agree on dyadic input") {
    std::mt19937 rng(112358);
    for (int i = 0; i < 25; ++i) {
        GeoSet g = random_set(rng);
        GeoSet ga = to_approx(g);
        MeshSpec exact_spec = dyadic_spec(1, 3);
        MeshSpec approx_spec(Scalar::approx(0.125));
        for (CellMode cells : {CellMode::closed, CellMode::half_open}) {
            exact_spec.cells = cells;
            approx_spec.cells = cells;
            CHECK(count_square_mesh(g, exact_spec).count ==
                  count_square_mesh(ga, approx_spec).count);
            CHECK(count_triangle_mesh(g, exact_spec).count ==
                  count_triangle_mesh(ga, approx_spec).count);
        }
    }
}

TEST_CASE("worker partitioning never changes the count") {
    GeoSet s4 = bradley_stage(4).set;
    MeshSpec spec = dyadic_spec(1, 5);
    CountOptions one;
    std::uint64_t base_n = count_square_mesh(s4, spec, one).count;
    std::uint64_t base_t = count_triangle_mesh(s4, spec, one).count;
    for (unsigned workers : {2u, 3u, 7u}) {
        CountOptions opts;
        opts.workers = workers;
        CHECK(count_square_mesh(s4, spec, opts).count == base_n);
        CHECK(count_triangle_mesh(s4, spec, opts).count == base_t);
    }
}

TEST_CASE("error paths") {
    GeoSet empty{"empty", std::nullopt, {}};
    CHECK_THROWS_AS(count_square_mesh(empty, dyadic_spec(1, 1)), EmptyInputError);
    CHECK_THROWS_AS(sampling_oracle_count(empty, dyadic_spec(1, 1), MeshKind::square, 4),
                    EmptyInputError);

    MeshSpec nonpos(Scalar(Dyadic(-1)));
    CHECK_THROWS_AS(count_square_mesh(filled_square(), nonpos), ValidationError);

    CHECK_THROWS_AS(sampling_oracle_count(filled_square(), dyadic_spec(1, 1),
                                          MeshKind::square, 0),
                    ValidationError);

    // a non-dyadic delta cannot run exactly
    MeshSpec irrational(Scalar::approx(0.3535533905932738));
    CountOptions strict;
    strict.require_exact = true;
    CHECK_THROWS_AS(count_square_mesh(filled_square(), irrational, strict), ModeError);
    // but counts fine in approx mode
    CHECK(count_square_mesh(filled_square(), irrational).count >= 9);
}

TEST_SUITE_END();
