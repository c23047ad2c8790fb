#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "loopconv/grassmann.hpp"
#include "loopconv/hullgeom.hpp"
#include "loopconv/loops.hpp"
#include "loopconv/moment.hpp"

namespace loopconv {

/// printf("%.17g"): round-trips every double.
std::string format_double(double x);

/// {"n":..,"m":..,"coeffs":[[k, re_matrix, im_matrix], ...]} on one line,
/// matrices as row-major arrays of rows.
std::string loop_to_json(const LoopPoly& g);
/// Parses and validates; throws DomainError on malformed records or loops
/// that fail the LoopPoly invariants.
LoopPoly loop_from_json(std::string_view record);

void write_loops_jsonl(std::ostream& out, const std::vector<LoopPoly>& loops);
/// Blank lines are skipped.
std::vector<LoopPoly> read_loops_jsonl(std::istream& in);

/// Header energy,v1,...,vn then one row per point, LF line endings.
void write_delta_csv(std::ostream& out, const std::vector<DeltaPoint>& points, int n);
std::vector<DeltaPoint> read_delta_csv(std::istream& in);

/// {"dim":..,"extremes":[[..],..],"tol":..}
std::string hull_to_json(const HullModel& h);
HullModel hull_from_json(std::string_view text);

/// {"window":{"lo","hi","d"},"rep","n","basis":[[[re,im],..],..]} with one
/// inner array per basis column.
std::string grass_point_to_json(const GrassPoint& w);
GrassPoint grass_point_from_json(std::string_view text);

}  // namespace loopconv
