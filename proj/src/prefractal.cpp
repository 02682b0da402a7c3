#include "fracdim/prefractal.hpp"

#include <cmath>
#include <utility>

namespace fracdim {

namespace {

constexpr double kMaxPrimitives = 1 << 26;  // memory guard, ~67M

void check_budget(const PrefractalSpec& spec, double primitive_count) {
    if (spec.depth > spec.depth_cap) {
        throw ResourceError("depth " + std::to_string(spec.depth) + " exceeds cap " +
                            std::to_string(spec.depth_cap));
    }
    if (primitive_count > kMaxPrimitives) {
        throw ResourceError("depth " + std::to_string(spec.depth) +
                            " would generate too many primitives");
    }
}

GeoSet sierpinski(const PrefractalSpec& spec) {
    check_budget(spec, std::pow(3.0, spec.depth));
    struct Tri {
        Point a, b, c;
    };
    std::vector<Tri> tris{{exact_point(Dyadic(0), Dyadic(0)), exact_point(Dyadic(1), Dyadic(0)),
                           exact_point(Dyadic(0), Dyadic(1))}};
    auto mid = [](const Point& p, const Point& q) {
        return Point{(p.x + q.x).half(), (p.y + q.y).half()};
    };
    for (unsigned d = 0; d < spec.depth; ++d) {
        std::vector<Tri> next;
        next.reserve(tris.size() * 3);
        for (const Tri& t : tris) {
            Point mab = mid(t.a, t.b);
            Point mbc = mid(t.b, t.c);
            Point mca = mid(t.c, t.a);
            next.push_back({t.a, mab, mca});
            next.push_back({mab, t.b, mbc});
            next.push_back({mca, mbc, t.c});
        }
        tris = std::move(next);
    }
    GeoSet set;
    set.name = "sierpinski_d" + std::to_string(spec.depth);
    set.stage = spec.depth;
    set.primitives.reserve(tris.size());
    for (const Tri& t : tris) set.primitives.push_back(make_polygon({t.a, t.b, t.c}));
    return set;
}

GeoSet koch(const PrefractalSpec& spec) {
    check_budget(spec, std::pow(4.0, spec.depth));
    struct P {
        double x, y;
    };
    std::vector<P> pts{{0.0, 0.0}, {1.0, 0.0}};
    const double s3 = std::sqrt(3.0) / 2.0;
    for (unsigned d = 0; d < spec.depth; ++d) {
        std::vector<P> next;
        next.reserve((pts.size() - 1) * 4 + 1);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            P p = pts[i];
            P q = pts[i + 1];
            double dx = (q.x - p.x) / 3.0;
            double dy = (q.y - p.y) / 3.0;
            P u{p.x + dx, p.y + dy};
            // peak: rotate the middle third by +60 degrees
            P peak{u.x + dx * 0.5 - dy * s3, u.y + dx * s3 + dy * 0.5};
            P w{p.x + 2.0 * dx, p.y + 2.0 * dy};
            next.push_back(p);
            next.push_back(u);
            next.push_back(peak);
            next.push_back(w);
        }
        next.push_back(pts.back());
        pts = std::move(next);
    }
    GeoSet set;
    set.name = "koch_d" + std::to_string(spec.depth);
    set.stage = spec.depth;
    set.primitives.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        set.primitives.push_back(
            make_segment(approx_point(pts[i].x, pts[i].y), approx_point(pts[i + 1].x, pts[i + 1].y)));
    }
    return set;
}

GeoSet cantor_dust(const PrefractalSpec& spec) {
    check_budget(spec, std::pow(4.0, spec.depth));
    std::vector<double> lefts{0.0};
    double width = 1.0;
    for (unsigned d = 0; d < spec.depth; ++d) {
        width /= 3.0;
        std::vector<double> next;
        next.reserve(lefts.size() * 2);
        for (double l : lefts) {
            next.push_back(l);
            next.push_back(l + 2.0 * width);
        }
        lefts = std::move(next);
    }
    GeoSet set;
    set.name = "cantor_dust_d" + std::to_string(spec.depth);
    set.stage = spec.depth;
    set.primitives.reserve(lefts.size() * lefts.size());
    for (double x : lefts) {
        for (double y : lefts) {
            set.primitives.push_back(make_polygon({approx_point(x, y),
                                                   approx_point(x + width, y),
                                                   approx_point(x + width, y + width),
                                                   approx_point(x, y + width)}));
        }
    }
    return set;
}

}  // namespace

std::optional<PrefractalKind> parse_prefractal_kind(const std::string& name) {
    if (name == "bradley") return PrefractalKind::bradley;
    if (name == "sierpinski") return PrefractalKind::sierpinski;
    if (name == "koch") return PrefractalKind::koch;
    if (name == "cantor-dust") return PrefractalKind::cantor_dust;
    if (name == "filled-square") return PrefractalKind::filled_square;
    if (name == "segment") return PrefractalKind::segment;
    return std::nullopt;
}

std::string_view prefractal_kind_name(PrefractalKind kind) {
    switch (kind) {
        case PrefractalKind::bradley: return "bradley";
        case PrefractalKind::sierpinski: return "sierpinski";
        case PrefractalKind::koch: return "koch";
        case PrefractalKind::cantor_dust: return "cantor-dust";
        case PrefractalKind::filled_square: return "filled-square";
        case PrefractalKind::segment: return "segment";
    }
    return "?";
}

GeoSet reference_prefractal(const PrefractalSpec& spec) {
    switch (spec.kind) {
        case PrefractalKind::bradley:
            return bradley_stage(spec.depth, spec.depth_cap).set;
        case PrefractalKind::sierpinski:
            return sierpinski(spec);
        case PrefractalKind::koch:
            return koch(spec);
        case PrefractalKind::cantor_dust:
            return cantor_dust(spec);
        case PrefractalKind::filled_square: {
            GeoSet set;
            set.name = "filled_square";
            set.primitives.push_back(make_polygon(
                {exact_point(Dyadic(0), Dyadic(0)), exact_point(Dyadic(1), Dyadic(0)),
                 exact_point(Dyadic(1), Dyadic(1)), exact_point(Dyadic(0), Dyadic(1))}));
            return set;
        }
        case PrefractalKind::segment: {
            GeoSet set;
            set.name = "unit_segment";
            set.primitives.push_back(make_segment(exact_point(Dyadic(0), Dyadic(0)),
                                                  exact_point(Dyadic(1), Dyadic(0))));
            return set;
        }
    }
    throw ValidationError("unknown prefractal kind");
}

}  // namespace fracdim
