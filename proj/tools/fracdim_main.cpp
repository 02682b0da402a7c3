// fracdim: box-counting dimension estimation on exact planar sets.
//
//   generate   write a prefractal as a fracgeo v1 file
//   decompose  write the construction-aligned triangle cover and verify it
//   count      mesh counts for one mesh kind over a delta schedule
//   estimate   log-log least-squares fit of a counts table
//   compare    both meshes, fits, report and plot in one run
//   ratio      closed-form cover-count ratio iteration

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "fracdim/pipeline.hpp"

namespace {

using namespace fracdim;

Schedule parse_schedule(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    auto as_unsigned = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw ValidationError("bad schedule number '" + s + "'");
        }
    };
    auto as_double = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ValidationError("bad schedule number '" + s + "'");
        }
    };

    if (parts.size() == 3 && parts[0] == "dyadic") {
        return Schedule::dyadic(as_unsigned(parts[1]), as_unsigned(parts[2]));
    }
    if (parts.size() == 3 && parts[0] == "paper") {
        return Schedule::paper(as_unsigned(parts[1]), as_unsigned(parts[2]));
    }
    if (parts.size() == 4 && parts[0] == "linear") {
        return Schedule::linear(as_double(parts[1]), as_double(parts[2]),
                                as_unsigned(parts[3]));
    }
    throw ValidationError(
        "schedule must be dyadic:J0:J1, paper:K0:K1 or linear:D0:D1:N, got '" + text + "'");
}

Point parse_offset(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ValidationError("offset must be 'X,Y', got '" + text + "'");
    }
    Scalar x = parse_scalar_token(text.substr(0, comma));
    Scalar y = parse_scalar_token(text.substr(comma + 1));
    if (x.mode() != y.mode()) {
        // one exact, one decimal: run the whole offset in approx mode
        return approx_point(x.to_double(), y.to_double());
    }
    return Point{x, y};
}

CellMode parse_cells(const std::string& text) {
    if (text == "closed") return CellMode::closed;
    if (text == "half-open") return CellMode::half_open;
    throw ValidationError("cells must be 'closed' or 'half-open'");
}

Diagonal parse_diagonal(const std::string& text) {
    if (text == "ne") return Diagonal::ne;
    if (text == "nw") return Diagonal::nw;
    throw ValidationError("diagonal must be 'ne' or 'nw'");
}

MeshKind parse_mesh(const std::string& text) {
    if (text == "square") return MeshKind::square;
    if (text == "triangle") return MeshKind::triangle;
    throw ValidationError("mesh must be 'square' or 'triangle'");
}

PrefractalKind parse_kind_or_throw(const std::string& text) {
    auto kind = parse_prefractal_kind(text);
    if (!kind) {
        throw ValidationError(
            "fractal must be one of bradley, sierpinski, koch, cantor-dust, "
            "filled-square, segment");
    }
    return *kind;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"box-counting dimension toolkit (square and triangle delta-meshes)"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a prefractal as a fracgeo v1 file");
    std::string gen_kind, gen_out, gen_trace;
    unsigned gen_depth = 0;
    gen->add_option("--fractal", gen_kind, "prefractal kind")->required();
    gen->add_option("--depth", gen_depth, "construction depth")->required();
    gen->add_option("--out", gen_out, "output path")->required();
    gen->add_option("--trace", gen_trace, "also write the per-stage trace (bradley only)");

    // decompose
    auto* dec = app.add_subcommand("decompose",
                                   "triangle cover of the spiral stage, with verification");
    unsigned dec_depth = 1;
    std::string dec_out;
    dec->add_option("--depth", dec_depth, "construction depth")->required();
    dec->add_option("--out", dec_out, "output path")->required();

    // count
    auto* cnt = app.add_subcommand("count", "mesh counts over a delta schedule");
    std::string cnt_in, cnt_mesh, cnt_schedule, cnt_out;
    std::string cnt_cells = "closed", cnt_diag = "ne", cnt_offset = "0,0";
    unsigned cnt_workers = 1;
    cnt->add_option("--in", cnt_in, "fracgeo input file")->required();
    cnt->add_option("--mesh", cnt_mesh, "square|triangle")->required();
    cnt->add_option("--schedule", cnt_schedule, "dyadic:J0:J1 | paper:K0:K1 | linear:D0:D1:N")
        ->required();
    cnt->add_option("--cells", cnt_cells, "closed|half-open");
    cnt->add_option("--diagonal", cnt_diag, "ne|nw");
    cnt->add_option("--offset", cnt_offset, "grid origin X,Y");
    cnt->add_option("--workers", cnt_workers, "parallel workers");
    cnt->add_option("--out", cnt_out, "output CSV")->required();

    // estimate
    auto* est = app.add_subcommand("estimate", "fit log10(count) against -log10(delta)");
    std::string est_in, est_out;
    est->add_option("--in", est_in, "counts CSV")->required();
    est->add_option("--out", est_out, "fit CSV")->required();

    // compare
    auto* cmp = app.add_subcommand("compare", "both meshes: counts, fits, report, plot");
    std::string cmp_in, cmp_kind, cmp_schedule, cmp_outdir;
    std::string cmp_cells = "closed", cmp_diag = "ne", cmp_offset = "0,0";
    unsigned cmp_workers = 1;
    int cmp_depth = -1;
    cmp->add_option("--in", cmp_in, "fracgeo input file");
    cmp->add_option("--fractal", cmp_kind, "generate this prefractal instead");
    cmp->add_option("--depth", cmp_depth,
                    "construction depth (bradley default: chosen per delta)");
    cmp->add_option("--schedule", cmp_schedule, "dyadic:J0:J1 | paper:K0:K1 | linear:D0:D1:N")
        ->required();
    cmp->add_option("--cells", cmp_cells, "closed|half-open");
    cmp->add_option("--diagonal", cmp_diag, "ne|nw");
    cmp->add_option("--offset", cmp_offset, "grid origin X,Y");
    cmp->add_option("--workers", cmp_workers, "parallel workers");
    cmp->add_option("--out-dir", cmp_outdir, "output directory")->required();

    // ratio
    auto* rat = app.add_subcommand("ratio", "cover-count ratio iteration");
    double rat_tol = 0.01;
    unsigned rat_kmax = 200;
    bool rat_literal = false;
    rat->add_option("--tol", rat_tol, "stop once the ratio is within tol of 2");
    rat->add_option("--k-max", rat_kmax, "iteration cap");
    rat->add_flag("--literal-paper", rat_literal, "stop at the first ratio >= 2 instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            PrefractalSpec spec;
            spec.kind = parse_kind_or_throw(gen_kind);
            spec.depth = gen_depth;
            std::optional<std::string> trace;
            if (!gen_trace.empty()) trace = gen_trace;
            GenerateResult r = run_generate(spec, gen_out, trace);
            std::cout << "wrote " << r.out_path << " (" << r.primitive_count
                      << " primitives)\n";
            return 0;
        }

        if (dec->parsed()) {
            DecomposeResult r = run_decompose(dec_depth, dec_out);
            std::cout << r.message << "\n";
            return r.ok ? 0 : 1;
        }

        if (cnt->parsed()) {
            CountRunResult r =
                run_count(cnt_in, parse_mesh(cnt_mesh), parse_schedule(cnt_schedule),
                          parse_cells(cnt_cells), parse_diagonal(cnt_diag),
                          parse_offset(cnt_offset), cnt_out, cnt_workers);
            print_warnings(r.warnings);
            std::cout << "wrote " << cnt_out << " (" << r.records.size() << " rows)\n";
            return 0;
        }

        if (est->parsed()) {
            std::vector<MeshFit> fits = run_estimate(est_in, est_out);
            for (const MeshFit& f : fits) {
                std::printf("%s: slope=%.17g intercept=%.17g r_squared=%.17g points=%d\n",
                            std::string(mesh_kind_name(f.mesh)).c_str(), f.fit.slope,
                            f.fit.intercept, f.fit.r_squared, f.fit.n_points);
            }
            return 0;
        }

        if (cmp->parsed()) {
            CompareConfig config;
            if (!cmp_in.empty()) {
                config.source.path = cmp_in;
            } else if (!cmp_kind.empty()) {
                config.source.kind = parse_kind_or_throw(cmp_kind);
            } else {
                throw ValidationError("compare needs --in or --fractal");
            }
            if (cmp_depth >= 0) config.source.depth = static_cast<unsigned>(cmp_depth);
            config.schedule = parse_schedule(cmp_schedule);
            config.cells = parse_cells(cmp_cells);
            config.diagonal = parse_diagonal(cmp_diag);
            config.offset = parse_offset(cmp_offset);
            config.workers = cmp_workers;
            config.out_dir = cmp_outdir;

            CompareResult r = run_compare(config);
            print_warnings(r.warnings);
            std::printf("square:   slope=%.17g r_squared=%.17g\n", r.square.fit.slope,
                        r.square.fit.r_squared);
            std::printf("triangle: slope=%.17g r_squared=%.17g\n", r.triangle.fit.slope,
                        r.triangle.fit.r_squared);
            std::printf("mesh inequality N <= T <= 2N: %s\n",
                        r.inequality_ok ? "ok" : "VIOLATED");
            std::cout << "outputs in " << cmp_outdir << "\n";
            return r.inequality_ok ? 0 : 1;
        }

        if (rat->parsed()) {
            RatioReport rep = run_ratio(rat_tol, rat_kmax, rat_literal);
            std::printf("k,cover_count,ratio_estimate\n");
            for (const RatioRow& row : rep.rows) {
                std::printf("%u,%s,%.17g\n", row.k, row.cover_count.str().c_str(), row.ratio);
            }
            if (!rep.converged) {
                std::fprintf(stderr, "did not converge within k_max=%u (last B=%.17g)\n",
                             rat_kmax, rep.final_value);
                return 1;
            }
            if (rat_literal) {
                std::printf("stopped (literal rule B >= 2): k=%u B=%.17g\n", rep.final_k,
                            rep.final_value);
            } else {
                std::printf("converged: k=%u B=%.17g (tolerance %.17g)\n", rep.final_k,
                            rep.final_value, rat_tol);
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
