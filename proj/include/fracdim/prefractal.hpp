#pragma once

#include <optional>
#include <string>

#include "fracdim/geometry.hpp"
#include "fracdim/spiral.hpp"

namespace fracdim {

enum class PrefractalKind { bradley, sierpinski, koch, cantor_dust, filled_square, segment };

std::optional<PrefractalKind> parse_prefractal_kind(const std::string& name);
std::string_view prefractal_kind_name(PrefractalKind kind);

struct PrefractalSpec {
    PrefractalKind kind = PrefractalKind::bradley;
    unsigned depth = 0;
    unsigned depth_cap = kDefaultDepthCap;
};

/// Generate a prefractal stage.
///
///   bradley       3d + 1 primitives, exact dyadic
///   sierpinski    3^d closed triangles (corner subdivision, scale 2^-d), exact
///   koch          4^d segments of the standard polyline, approx (sqrt 3)
///   cantor-dust   4^d squares of side 3^-d, approx (thirds are not dyadic)
///   filled-square one closed unit square, exact
///   segment       one segment (0,0)-(1,0), exact
///
/// ResourceError above the depth cap or when the primitive count would not
/// fit in memory.
GeoSet reference_prefractal(const PrefractalSpec& spec);

}  // namespace fracdim
