#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fracdim/pipeline.hpp"

namespace py = pybind11;
using namespace fracdim;

namespace {

// delta arrives either as a float (approx) or as an exact dyadic string "n/2^e"
Scalar scalar_from_py(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        return parse_scalar_token(obj.cast<std::string>());
    }
    if (py::isinstance<py::int_>(obj)) {
        return Scalar(Dyadic(obj.cast<long long>()));
    }
    return Scalar::approx(obj.cast<double>());
}

MeshSpec spec_from_args(const py::object& delta, const std::string& cells,
                        const std::string& diagonal, std::pair<double, double> offset) {
    MeshSpec spec(scalar_from_py(delta));
    if (cells == "closed") {
        spec.cells = CellMode::closed;
    } else if (cells == "half-open") {
        spec.cells = CellMode::half_open;
    } else {
        throw ValidationError("cells must be 'closed' or 'half-open'");
    }
    if (diagonal == "ne") {
        spec.diagonal = Diagonal::ne;
    } else if (diagonal == "nw") {
        spec.diagonal = Diagonal::nw;
    } else {
        throw ValidationError("diagonal must be 'ne' or 'nw'");
    }
    if (offset.first != 0.0 || offset.second != 0.0) {
        spec.offset = approx_point(offset.first, offset.second);
    }
    return spec;
}

Schedule schedule_from_str(const std::string& text) {
    // dyadic:J0:J1 | paper:K0:K1 | linear:D0:D1:N, same grammar as the CLI
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
    if (parts.size() == 3 && parts[0] == "dyadic") {
        return Schedule::dyadic(std::stoul(parts[1]), std::stoul(parts[2]));
    }
    if (parts.size() == 3 && parts[0] == "paper") {
        return Schedule::paper(std::stoul(parts[1]), std::stoul(parts[2]));
    }
    if (parts.size() == 4 && parts[0] == "linear") {
        return Schedule::linear(std::stod(parts[1]), std::stod(parts[2]),
                                std::stoul(parts[3]));
    }
    throw ValidationError("bad schedule '" + text + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Box-counting dimension estimation with square and triangle delta-meshes";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "FracdimError", PyExc_ValueError);

    py::class_<GeoSet>(m, "GeoSet")
        .def_readonly("name", &GeoSet::name)
        .def_property_readonly("stage",
                               [](const GeoSet& g) -> py::object {
                                   if (g.stage) return py::int_(*g.stage);
                                   return py::none();
                               })
        .def("__len__", [](const GeoSet& g) { return g.primitives.size(); })
        .def("total_area",
             [](const GeoSet& g) { return total_primitive_area(g).to_double(); })
        .def("primitives",
             [](const GeoSet& g) {
                 py::list prims;
                 for (const ConvexPrimitive& p : g.primitives) {
                     py::list verts;
                     for (const Point& v : p.vertices()) {
                         verts.append(py::make_tuple(v.x.to_double(), v.y.to_double()));
                     }
                     prims.append(verts);
                 }
                 return prims;
             })
        .def("__repr__", [](const GeoSet& g) {
            std::ostringstream os;
            os << "GeoSet(name='" << g.name << "', primitives=" << g.primitives.size() << ")";
            return os.str();
        });

    py::class_<CountRecord>(m, "CountRecord")
        .def_property_readonly("mesh",
                               [](const CountRecord& r) {
                                   return std::string(mesh_kind_name(r.mesh));
                               })
        .def_property_readonly("delta",
                               [](const CountRecord& r) { return r.delta.to_double(); })
        .def_readonly("count", &CountRecord::count);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("slope", &FitResult::slope)
        .def_readonly("intercept", &FitResult::intercept)
        .def_readonly("r_squared", &FitResult::r_squared)
        .def_readonly("n_points", &FitResult::n_points)
        .def("__repr__", [](const FitResult& f) {
            std::ostringstream os;
            os << "FitResult(slope=" << f.slope << ", r_squared=" << f.r_squared << ")";
            return os.str();
        });

    m.def(
        "generate",
        [](const std::string& kind, unsigned depth) {
            auto parsed = parse_prefractal_kind(kind);
            if (!parsed) throw ValidationError("unknown fractal kind '" + kind + "'");
            PrefractalSpec spec;
            spec.kind = *parsed;
            spec.depth = depth;
            return reference_prefractal(spec);
        },
        py::arg("kind"), py::arg("depth"),
        "Generate a prefractal stage as a GeoSet");

    m.def(
        "bradley_stage_set",
        [](unsigned depth) { return bradley_stage(depth).set; }, py::arg("depth"));

    m.def(
        "stage_trace_report",
        [](unsigned depth) {
            BradleyStages stages = bradley_stage(depth);
            return stage_trace_report(stages.traces);
        },
        py::arg("depth"));

    m.def(
        "construction_decomposition_set",
        [](unsigned depth) {
            GeoSet set;
            set.name = "bradley_decomposition_s" + std::to_string(depth);
            set.stage = depth;
            set.primitives = construction_decomposition(depth);
            return set;
        },
        py::arg("depth"));

    m.def(
        "count_square_mesh",
        [](const GeoSet& g, const py::object& delta, const std::string& cells,
           const std::string& diagonal, std::pair<double, double> offset, unsigned workers) {
            CountOptions opts;
            opts.workers = workers;
            return count_square_mesh(g, spec_from_args(delta, cells, diagonal, offset), opts)
                .count;
        },
        py::arg("set"), py::arg("delta"), py::kw_only(), py::arg("cells") = "closed",
        py::arg("diagonal") = "ne", py::arg("offset") = std::pair<double, double>{0.0, 0.0},
        py::arg("workers") = 1);

    m.def(
        "count_triangle_mesh",
        [](const GeoSet& g, const py::object& delta, const std::string& cells,
           const std::string& diagonal, std::pair<double, double> offset, unsigned workers) {
            CountOptions opts;
            opts.workers = workers;
            return count_triangle_mesh(g, spec_from_args(delta, cells, diagonal, offset), opts)
                .count;
        },
        py::arg("set"), py::arg("delta"), py::kw_only(), py::arg("cells") = "closed",
        py::arg("diagonal") = "ne", py::arg("offset") = std::pair<double, double>{0.0, 0.0},
        py::arg("workers") = 1);

    m.def(
        "sampling_oracle_count",
        [](const GeoSet& g, const py::object& delta, const std::string& mesh,
           unsigned density) {
            MeshSpec spec(scalar_from_py(delta));
            MeshKind kind = mesh == "triangle" ? MeshKind::triangle : MeshKind::square;
            return sampling_oracle_count(g, spec, kind, density).count;
        },
        py::arg("set"), py::arg("delta"), py::arg("mesh") = "square",
        py::arg("density") = 16);

    m.def(
        "cover_count_formula",
        [](unsigned k) { return py::cast(cover_count_formula(k).str()); }, py::arg("k"),
        "3 * 2^k + 1 as a decimal string");

    m.def("ratio_estimate", &ratio_estimate, py::arg("k"));

    m.def(
        "converge_ratio",
        [](double tolerance, unsigned k_max, bool literal) {
            RatioConvergence c = converge_ratio(tolerance, k_max, literal);
            return py::make_tuple(c.k, c.value);
        },
        py::arg("tolerance"), py::arg("k_max") = 200, py::arg("literal") = false);

    m.def(
        "make_schedule",
        [](const std::string& text) {
            std::vector<double> out;
            for (const Scalar& s : make_schedule(schedule_from_str(text))) {
                out.push_back(s.to_double());
            }
            return out;
        },
        py::arg("schedule"));

    m.def(
        "fit_loglog",
        [](const std::vector<std::pair<double, std::uint64_t>>& points) {
            std::vector<CountRecord> records;
            records.reserve(points.size());
            for (auto [delta, count] : points) {
                records.push_back(CountRecord{MeshKind::square, Scalar::approx(delta), count});
            }
            return fit_loglog(records);
        },
        py::arg("points"), "Fit a list of (delta, count) pairs");

    m.def("read_fracgeo", &read_fracgeo_file, py::arg("path"));
    m.def("write_fracgeo", &write_fracgeo_file, py::arg("path"), py::arg("set"));

    m.def(
        "compare",
        [](const std::string& out_dir, const std::string& fractal, int depth,
           const std::string& schedule, const std::string& in_path, unsigned workers) {
            CompareConfig config;
            if (!in_path.empty()) {
                config.source.path = in_path;
            } else {
                auto kind = parse_prefractal_kind(fractal);
                if (!kind) throw ValidationError("unknown fractal kind '" + fractal + "'");
                config.source.kind = *kind;
            }
            if (depth >= 0) config.source.depth = static_cast<unsigned>(depth);
            config.schedule = schedule_from_str(schedule);
            config.out_dir = out_dir;
            config.workers = workers;
            CompareResult r = run_compare(config);
            py::dict out;
            out["square"] = r.square.fit;
            out["triangle"] = r.triangle.fit;
            out["inequality_ok"] = r.inequality_ok;
            out["counts_csv"] = r.counts_csv_path;
            out["fit_csv"] = r.fit_csv_path;
            out["report"] = r.report_path;
            out["plot"] = r.plot_path;
            return out;
        },
        py::arg("out_dir"), py::kw_only(), py::arg("fractal") = "bradley",
        py::arg("depth") = -1, py::arg("schedule") = "dyadic:2:6", py::arg("in_path") = "",
        py::arg("workers") = 1);
}
