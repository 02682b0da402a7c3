#pragma once

#include <iosfwd>
#include <string>

#include "fracdim/geometry.hpp"

namespace fracdim {

// fracgeo v1: line-oriented plain text.
//
//   fracgeo v1
//   set <name> stage <k|->
//   point <x> <y>
//   seg <x1> <y1> <x2> <y2>
//   poly <n> <x1> <y1> ... <xn> <yn>
//
// Coordinates are "<int>" or "<int>/2^<uint>" (exact) or decimal literals
// (approx). Parsing is strict: unknown directives, malformed coordinates and
// token-count mismatches are ParseErrors with line numbers. A file containing
// any decimal coordinate loads as one all-approx set.

GeoSet read_fracgeo(std::istream& in, const std::string& source_name = "<stream>");
GeoSet read_fracgeo_file(const std::string& path);

void write_fracgeo(std::ostream& out, const GeoSet& set);
void write_fracgeo_file(const std::string& path, const GeoSet& set);

/// Coordinate token serialization shared with the CSV emitters.
std::string scalar_token(const Scalar& s);
/// Strict single-coordinate parse; throws ValidationError on bad tokens.
Scalar parse_scalar_token(const std::string& token);

}  // namespace fracdim
