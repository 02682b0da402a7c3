#include "fracdim/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracdim/svg_plot.hpp"

namespace fracdim {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string schedule_str(const Schedule& s) {
    std::ostringstream os;
    switch (s.kind) {
        case Schedule::Kind::dyadic:
            os << "dyadic(" << s.j0 << "," << s.j1 << ")";
            break;
        case Schedule::Kind::paper:
            os << "paper(" << s.j0 << "," << s.j1 << ")";
            break;
        case Schedule::Kind::linear:
            os << "linear(" << fmt17(s.d0) << "," << fmt17(s.d1) << "," << s.n << ")";
            break;
    }
    return os.str();
}

std::optional<double> min_feature_size(PrefractalKind kind, unsigned depth) {
    switch (kind) {
        case PrefractalKind::bradley:
            return std::exp2(-0.5 * (static_cast<double>(depth) + 1.0));
        case PrefractalKind::sierpinski:
            return std::exp2(-static_cast<double>(depth));
        case PrefractalKind::koch:
        case PrefractalKind::cantor_dust:
            return std::pow(3.0, -static_cast<double>(depth));
        case PrefractalKind::filled_square:
        case PrefractalKind::segment:
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

unsigned spiral_depth_for_delta(const Scalar& delta) {
    constexpr unsigned kSearchCap = 4096;
    if (delta.is_exact()) {
        const Dyadic& d = delta.dyadic();
        if (!d.is_positive()) throw ValidationError("delta must be positive");
        Dyadic target = (d * d).half().half();  // (delta / 2)^2
        for (unsigned k = 1; k <= kSearchCap; ++k) {
            if (Dyadic(BigInt(1), k + 1) <= target) return k;
        }
    } else {
        double d = delta.to_double();
        if (!(d > 0.0)) throw ValidationError("delta must be positive");
        for (unsigned k = 1; k <= kSearchCap; ++k) {
            if (std::exp2(-0.5 * (k + 1.0)) <= 0.5 * d * (1.0 + 1e-12)) return k;
        }
    }
    throw ResourceError("no construction stage resolves such a small delta");
}

void write_counts_csv(std::ostream& out, std::span<const CountRecord> records) {
    bool any_exact = false;
    for (const CountRecord& r : records) any_exact = any_exact || r.delta.is_exact();
    out << "mesh,delta,count";
    if (any_exact) out << ",delta_exact";
    out << "\n";
    for (const CountRecord& r : records) {
        out << mesh_kind_name(r.mesh) << "," << fmt17(r.delta.to_double()) << "," << r.count;
        if (any_exact) {
            out << ",";
            if (r.delta.is_exact()) out << r.delta.dyadic().str();
        }
        out << "\n";
    }
}

void write_counts_csv_file(const std::string& path, std::span<const CountRecord> records) {
    auto out = open_out(path);
    write_counts_csv(out, records);
}

std::vector<CountRecord> read_counts_csv(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(source, 1, "empty file");
    ++lineno;
    auto header = split_csv(line);
    bool with_exact = false;
    if (header == std::vector<std::string>{"mesh", "delta", "count"}) {
        with_exact = false;
    } else if (header == std::vector<std::string>{"mesh", "delta", "count", "delta_exact"}) {
        with_exact = true;
    } else {
        throw ParseError(source, lineno, "expected header 'mesh,delta,count[,delta_exact]'");
    }

    std::vector<CountRecord> records;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto cols = split_csv(line);
        if (cols.size() != (with_exact ? 4u : 3u)) {
            throw ParseError(source, lineno, "wrong number of columns");
        }
        CountRecord r;
        if (cols[0] == "square") {
            r.mesh = MeshKind::square;
        } else if (cols[0] == "triangle") {
            r.mesh = MeshKind::triangle;
        } else {
            throw ParseError(source, lineno, "unknown mesh '" + cols[0] + "'");
        }
        double d = 0.0;
        auto res = std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), d);
        if (res.ec != std::errc() || res.ptr != cols[1].data() + cols[1].size() || !(d > 0)) {
            throw ParseError(source, lineno, "bad delta '" + cols[1] + "'");
        }
        std::uint64_t count = 0;
        res = std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), count);
        if (res.ec != std::errc() || res.ptr != cols[2].data() + cols[2].size()) {
            throw ParseError(source, lineno, "bad count '" + cols[2] + "'");
        }
        r.count = count;
        if (with_exact && !cols[3].empty()) {
            auto exact = Dyadic::parse(cols[3]);
            if (!exact) throw ParseError(source, lineno, "bad delta_exact '" + cols[3] + "'");
            r.delta = Scalar(*exact);
        } else {
            r.delta = Scalar::approx(d);
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<CountRecord> read_counts_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_counts_csv(in, path);
}

void write_fit_csv(std::ostream& out, std::span<const MeshFit> fits) {
    out << "mesh,slope,intercept,r_squared,n_points\n";
    for (const MeshFit& f : fits) {
        out << mesh_kind_name(f.mesh) << "," << fmt17(f.fit.slope) << ","
            << fmt17(f.fit.intercept) << "," << fmt17(f.fit.r_squared) << "," << f.fit.n_points
            << "\n";
    }
}

void write_fit_csv_file(const std::string& path, std::span<const MeshFit> fits) {
    auto out = open_out(path);
    write_fit_csv(out, fits);
}

RatioReport run_ratio(double tolerance, unsigned k_max, bool literal_rule) {
    if (!literal_rule && !(tolerance > 0.0)) {
        throw ValidationError("tolerance must be positive");
    }
    if (k_max < 1) throw ValidationError("k_max must be at least 1");
    RatioReport rep;
    for (unsigned k = 1; k <= k_max; ++k) {
        double b = ratio_estimate(k);
        rep.rows.push_back(RatioRow{k, cover_count_formula(k), b});
        if (literal_rule ? b >= 2.0 : b - 2.0 <= tolerance) {
            rep.converged = true;
            rep.final_k = k;
            rep.final_value = b;
            return rep;
        }
    }
    rep.converged = false;
    rep.final_k = k_max;
    rep.final_value = rep.rows.back().ratio;
    return rep;
}

CompareResult run_compare(const CompareConfig& config) {
    if (config.out_dir.empty()) throw ValidationError("compare needs an output directory");

    std::vector<Scalar> deltas = make_schedule(config.schedule);

    std::optional<GeoSet> fixed;
    bool auto_depth = false;
    std::string label;
    if (config.source.path) {
        fixed = read_fracgeo_file(*config.source.path);
        label = fixed->name;
    } else if (config.source.kind) {
        if (*config.source.kind == PrefractalKind::bradley && !config.source.depth) {
            auto_depth = true;
            label = "bradley (depth per delta)";
        } else {
            PrefractalSpec spec;
            spec.kind = *config.source.kind;
            spec.depth = config.source.depth.value_or(0);
            fixed = reference_prefractal(spec);
            label = fixed->name;
        }
    } else {
        throw ValidationError("compare needs an input file or a fractal kind");
    }

    CompareResult result;
    std::vector<std::optional<unsigned>> depths;
    bool warned_mode = false;

    for (const Scalar& delta : deltas) {
        std::optional<GeoSet> generated;
        std::optional<unsigned> depth_used;
        if (auto_depth) {
            depth_used = spiral_depth_for_delta(delta);
            generated = bradley_stage(*depth_used).set;
        } else if (config.source.kind) {
            depth_used = config.source.depth.value_or(0);
        }
        const GeoSet& set = auto_depth ? *generated : *fixed;
        depths.push_back(depth_used);

        if (!warned_mode && set.mode() == NumMode::exact && !delta.is_exact()) {
            result.warnings.push_back(
                "non-dyadic delta in the schedule: those counts run in approx mode");
            warned_mode = true;
        }
        if (config.source.kind && depth_used && !auto_depth) {
            auto feature = min_feature_size(*config.source.kind, *depth_used);
            if (feature && delta.to_double() < 2.0 * *feature) {
                result.warnings.push_back("delta " + delta.str() +
                                          " is finer than the depth-" +
                                          std::to_string(*depth_used) +
                                          " construction resolves (feature size " +
                                          fmt17(*feature) + ")");
            }
        }

        MeshSpec spec(delta);
        spec.offset = config.offset;
        spec.cells = config.cells;
        spec.diagonal = config.diagonal;
        CountOptions opts;
        opts.workers = config.workers;
        CountRecord ns = count_square_mesh(set, spec, opts);
        CountRecord nt = count_triangle_mesh(set, spec, opts);
        if (!(ns.count <= nt.count && nt.count <= 2 * ns.count)) {
            result.inequality_ok = false;
        }
        result.square.records.push_back(std::move(ns));
        result.triangle.records.push_back(std::move(nt));
    }

    result.square.fit = fit_loglog(result.square.records);
    result.triangle.fit = fit_loglog(result.triangle.records);

    namespace fs = std::filesystem;
    fs::create_directories(config.out_dir);
    result.counts_csv_path = (fs::path(config.out_dir) / "counts.csv").string();
    result.fit_csv_path = (fs::path(config.out_dir) / "fit.csv").string();
    result.report_path = (fs::path(config.out_dir) / "report.txt").string();
    result.plot_path = (fs::path(config.out_dir) / "plot.svg").string();

    std::vector<CountRecord> all = result.square.records;
    all.insert(all.end(), result.triangle.records.begin(), result.triangle.records.end());
    write_counts_csv_file(result.counts_csv_path, all);

    std::vector<MeshFit> fits{{MeshKind::square, result.square.fit},
                              {MeshKind::triangle, result.triangle.fit}};
    write_fit_csv_file(result.fit_csv_path, fits);

    {
        auto out = open_out(result.report_path);
        out << "fracdim compare report\n\n";
        out << "input: " << label << "\n";
        out << "schedule: " << schedule_str(config.schedule) << " (" << deltas.size()
            << " deltas)\n";
        out << "cells: " << (config.cells == CellMode::closed ? "closed" : "half-open")
            << "  diagonal: " << (config.diagonal == Diagonal::ne ? "ne" : "nw")
            << "  offset: (" << config.offset.x.str() << ", " << config.offset.y.str()
            << ")\n\n";
        out << "delta,depth,N_square,T_triangle,check\n";
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            std::uint64_t n = result.square.records[i].count;
            std::uint64_t t = result.triangle.records[i].count;
            bool ok = n <= t && t <= 2 * n;
            out << deltas[i].str() << ",";
            if (depths[i]) {
                out << *depths[i];
            } else {
                out << "-";
            }
            out << "," << n << "," << t << "," << (ok ? "ok" : "VIOLATION") << "\n";
        }
        out << "\n";
        out << "fit square:   slope=" << fmt17(result.square.fit.slope)
            << " intercept=" << fmt17(result.square.fit.intercept)
            << " r_squared=" << fmt17(result.square.fit.r_squared)
            << " points=" << result.square.fit.n_points << "\n";
        out << "fit triangle: slope=" << fmt17(result.triangle.fit.slope)
            << " intercept=" << fmt17(result.triangle.fit.intercept)
            << " r_squared=" << fmt17(result.triangle.fit.r_squared)
            << " points=" << result.triangle.fit.n_points << "\n\n";
        out << "mesh inequality N <= T <= 2N: "
            << (result.inequality_ok ? "ok at every delta" : "VIOLATED") << "\n";
        if (result.warnings.empty()) {
            out << "warnings: none\n";
        } else {
            out << "warnings:\n";
            for (const std::string& w : result.warnings) out << "  - " << w << "\n";
        }
    }

    {
        auto out = open_out(result.plot_path);
        std::vector<PlotSeries> series(2);
        series[0].label = "square mesh: slope " + fmt4(result.square.fit.slope) + ", R² " +
                          fmt4(result.square.fit.r_squared);
        series[0].slope = result.square.fit.slope;
        series[0].intercept = result.square.fit.intercept;
        series[1].label = "triangle mesh: slope " + fmt4(result.triangle.fit.slope) +
                          ", R² " + fmt4(result.triangle.fit.r_squared);
        series[1].slope = result.triangle.fit.slope;
        series[1].intercept = result.triangle.fit.intercept;
        for (const CountRecord& r : result.square.records) {
            series[0].points.emplace_back(-std::log10(r.delta.to_double()),
                                          std::log10(static_cast<double>(r.count)));
        }
        for (const CountRecord& r : result.triangle.records) {
            series[1].points.emplace_back(-std::log10(r.delta.to_double()),
                                          std::log10(static_cast<double>(r.count)));
        }
        write_scatter_svg(out, series, "−log₁₀ δ", "log₁₀ count",
                          label);
    }

    return result;
}

GenerateResult run_generate(const PrefractalSpec& spec, const std::string& out_path,
                            const std::optional<std::string>& trace_path) {
    if (trace_path && spec.kind != PrefractalKind::bradley) {
        throw ValidationError("stage traces exist only for the bradley construction");
    }
    GenerateResult result;
    if (spec.kind == PrefractalKind::bradley) {
        BradleyStages stages = bradley_stage(spec.depth, spec.depth_cap);
        write_fracgeo_file(out_path, stages.set);
        result.primitive_count = stages.set.primitives.size();
        if (trace_path) {
            auto out = open_out(*trace_path);
            out << stage_trace_report(stages.traces);
        }
    } else {
        GeoSet set = reference_prefractal(spec);
        write_fracgeo_file(out_path, set);
        result.primitive_count = set.primitives.size();
    }
    result.out_path = out_path;
    return result;
}

DecomposeResult run_decompose(unsigned depth, const std::string& out_path) {
    std::vector<ConvexPrimitive> tris = construction_decomposition(depth);

    GeoSet set;
    set.name = "bradley_decomposition_s" + std::to_string(depth);
    set.stage = depth;
    set.primitives = tris;
    write_fracgeo_file(out_path, set);

    BigInt expected_count = cover_count_formula(depth);
    bool count_ok = BigInt(tris.size()) == expected_count;

    // exact total area must equal 3/4 + 2^-(depth+2)
    Dyadic area_sum;
    for (const ConvexPrimitive& t : tris) area_sum = area_sum + convex_area(t).dyadic();
    Dyadic expected_area = Dyadic(3, 2) + Dyadic(BigInt(1), depth + 2);
    bool area_ok = area_sum == expected_area;

    DecomposeResult result;
    result.out_path = out_path;
    result.triangle_count = tris.size();
    result.ok = count_ok && area_ok;
    result.message = std::to_string(tris.size()) + " triangles, area 3/4 + 2^-" +
                     std::to_string(depth + 2) + ", " + (result.ok ? "PASS" : "FAIL");
    return result;
}

CountRunResult run_count(const std::string& in_path, MeshKind mesh, const Schedule& schedule,
                         CellMode cells, Diagonal diagonal, const Point& offset,
                         const std::string& out_csv, unsigned workers) {
    GeoSet set = read_fracgeo_file(in_path);
    std::vector<Scalar> deltas = make_schedule(schedule);

    CountRunResult result;
    bool warned = false;
    for (const Scalar& delta : deltas) {
        if (!warned && set.mode() == NumMode::exact && !delta.is_exact()) {
            result.warnings.push_back(
                "non-dyadic delta in the schedule: those counts run in approx mode");
            warned = true;
        }
        MeshSpec spec(delta);
        spec.offset = offset;
        spec.cells = cells;
        spec.diagonal = diagonal;
        CountOptions opts;
        opts.workers = workers;
        result.records.push_back(mesh == MeshKind::square ? count_square_mesh(set, spec, opts)
                                                          : count_triangle_mesh(set, spec, opts));
    }
    write_counts_csv_file(out_csv, result.records);
    return result;
}

std::vector<MeshFit> run_estimate(const std::string& in_csv, const std::string& out_csv) {
    std::vector<CountRecord> records = read_counts_csv_file(in_csv);
    std::vector<CountRecord> square, triangle;
    for (const CountRecord& r : records) {
        (r.mesh == MeshKind::square ? square : triangle).push_back(r);
    }
    if (records.empty()) throw InsufficientDataError("counts file has no data rows");

    std::vector<MeshFit> fits;
    if (!square.empty()) fits.push_back(MeshFit{MeshKind::square, fit_loglog(square)});
    if (!triangle.empty()) fits.push_back(MeshFit{MeshKind::triangle, fit_loglog(triangle)});
    write_fit_csv_file(out_csv, fits);
    return fits;
}

}  // namespace fracdim
