#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracdim/geometry.hpp"

namespace fracdim {

enum class Compass { NE, E, SE, S, SW, W, NW, N };

std::string_view compass_name(Compass c);

/// Default cap on construction depth (memory bound for the decomposition).
constexpr unsigned kDefaultDepthCap = 24;

/// Corner removed at stage k: NE rotated clockwise by 45 degrees per stage,
/// period 8. Odd stages remove a diagonal corner (axis-aligned square), even
/// stages a cardinal corner (diamond). DomainError for k = 0.
Compass removal_direction(unsigned k);

/// The square whose vertices are the edge midpoints of the input square;
/// its area is exactly half the input's. ValidationError when the input is
/// not a square (four vertices, equal squared side lengths, right angles).
ConvexPrimitive inscribed_square(const ConvexPrimitive& sq);

/// Per-stage bookkeeping of the construction.
struct StageTrace {
    unsigned k = 0;
    ConvexPrimitive square_before;           // N_{k-1}
    ConvexPrimitive square_after;            // N_k
    ConvexPrimitive removed_triangle;        // T_k
    std::vector<ConvexPrimitive> kept_triangles;  // 3, cyclic order after the removed corner
    Compass removed_direction = Compass::NE;
    std::optional<ConvexPrimitive> removed_boundary;  // leg shared with T_{k-1}; absent at k=1
    std::vector<ConvexPrimitive> kept_boundary;       // hypotenuse (+ other leg for k >= 2)
};

struct BradleyStages {
    GeoSet set;                     // N_k first, then kept triangles stage by stage
    std::vector<StageTrace> traces;
};

/// Stage-k prefractal with all coordinates exact dyadic: 3k + 1 primitives,
/// the inner square plus three kept triangles per stage. ResourceError above
/// the depth cap.
BradleyStages bradley_stage(unsigned k, unsigned depth_cap = kDefaultDepthCap);

/// Exact cover of the stage-k set by 3 * 2^k + 1 right isoceles triangles of
/// squared leg length 2^-(k+1) with pairwise disjoint interiors: the inner
/// square cut by its diagonals, and every kept stage-j triangle bisected
/// k - j times through the hypotenuse midpoint. DomainError for k = 0.
std::vector<ConvexPrimitive> construction_decomposition(
    unsigned k, unsigned depth_cap = kDefaultDepthCap);

/// Plain-text trace report, one block per stage.
std::string stage_trace_report(std::span<const StageTrace> traces);

}  // namespace fracdim
