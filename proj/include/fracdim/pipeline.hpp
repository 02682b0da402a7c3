#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracdim/estimate.hpp"
#include "fracdim/fracgeo.hpp"
#include "fracdim/prefractal.hpp"

namespace fracdim {

/// Where a pipeline run gets its set: a fracgeo file, or a generated
/// prefractal. A bradley source without a fixed depth picks the stage per
/// delta so that the finest construction feature is at most delta / 2.
struct SetSource {
    std::optional<std::string> path;
    std::optional<PrefractalKind> kind;
    std::optional<unsigned> depth;
};

/// Smallest stage k whose triangles have leg length at most delta / 2.
unsigned spiral_depth_for_delta(const Scalar& delta);

struct CompareConfig {
    SetSource source;
    Schedule schedule;
    CellMode cells = CellMode::closed;
    Diagonal diagonal = Diagonal::ne;
    Point offset{Scalar(Dyadic(0)), Scalar(Dyadic(0))};
    std::string out_dir;
    unsigned workers = 1;
};

struct MeshSeries {
    std::vector<CountRecord> records;
    FitResult fit;
};

struct CompareResult {
    MeshSeries square;
    MeshSeries triangle;
    bool inequality_ok = true;  // N <= T <= 2N at every delta
    std::vector<std::string> warnings;
    std::string counts_csv_path;
    std::string fit_csv_path;
    std::string report_path;
    std::string plot_path;
};

/// Counts both meshes over the schedule, fits both series, and writes
/// counts.csv, fit.csv, report.txt and plot.svg into the output directory.
/// All outputs are byte-deterministic for a fixed config.
CompareResult run_compare(const CompareConfig& config);

// ---- count tables ----------------------------------------------------------

/// Header `mesh,delta,count`; a `delta_exact` column is appended when any
/// delta is dyadic. Deltas are decimals with 17 significant digits.
void write_counts_csv(std::ostream& out, std::span<const CountRecord> records);
void write_counts_csv_file(const std::string& path, std::span<const CountRecord> records);
std::vector<CountRecord> read_counts_csv(std::istream& in, const std::string& source);
std::vector<CountRecord> read_counts_csv_file(const std::string& path);

struct MeshFit {
    MeshKind mesh;
    FitResult fit;
};

void write_fit_csv(std::ostream& out, std::span<const MeshFit> fits);
void write_fit_csv_file(const std::string& path, std::span<const MeshFit> fits);

// ---- the ratio iteration ---------------------------------------------------

struct RatioRow {
    unsigned k;
    BigInt cover_count;
    double ratio;
};

struct RatioReport {
    std::vector<RatioRow> rows;
    bool converged = false;
    unsigned final_k = 0;
    double final_value = 0.0;
};

/// Iterates the ratio estimate up to the stopping stage (threshold mode or
/// the literal first-B>=2 rule); a non-converged report keeps the full table.
RatioReport run_ratio(double tolerance, unsigned k_max, bool literal_rule);

// ---- single-step commands --------------------------------------------------

struct GenerateResult {
    std::string out_path;
    std::size_t primitive_count = 0;
};

GenerateResult run_generate(const PrefractalSpec& spec, const std::string& out_path,
                            const std::optional<std::string>& trace_path = std::nullopt);

struct DecomposeResult {
    std::string out_path;
    std::size_t triangle_count = 0;
    bool ok = false;
    std::string message;  // "<n> triangles, area 3/4 + 2^-<e>, PASS"
};

DecomposeResult run_decompose(unsigned depth, const std::string& out_path);

struct CountRunResult {
    std::vector<CountRecord> records;
    std::vector<std::string> warnings;
};

CountRunResult run_count(const std::string& in_path, MeshKind mesh, const Schedule& schedule,
                         CellMode cells, Diagonal diagonal, const Point& offset,
                         const std::string& out_csv, unsigned workers = 1);

std::vector<MeshFit> run_estimate(const std::string& in_csv, const std::string& out_csv);

}  // namespace fracdim
