#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hilcov/simulate.hpp"
#include "hilcov/verify.hpp"
#include "hilcov/world.hpp"

namespace hilcov {

/// Parse a world description. The format is line-oriented:
///
///   # comment (blank lines allowed)
///   order 3
///   obstacles 110 23 (1,3)
///   default_order 2
///   regions 2:3 30:3
///
/// `order` must come first: obstacle cell coordinates "(i,j)" (the order-n
/// cell, converted to its digit string), region orders and the default order
/// are all validated against it. `obstacles` and `regions` lines may repeat
/// and accumulate. A resolution map is attached when `default_order` or
/// `regions` appears; with regions but no explicit default the default is
/// the world order. Throws ParseError with 1-based line/column of the
/// offending token.
World parse_world_file(std::istream& in);
World load_world_file(const std::string& path);

/// CSV with header `slot,t,rank,digits,x,y,event`; one row per trace step;
/// t, x and y are exact decimal expansions (dyadic rationals terminate).
std::string trace_to_csv(const Trace& trace);

/// Parse the CSV back into steps (the leaf schedule is not part of the CSV).
/// Throws ParseError on malformed rows.
std::vector<TraceStep> parse_trace_csv(const std::string& csv);

std::string coverage_report_to_json(const CoverageReport& report);
std::string campaign_report_to_json(const CampaignReport& report);

enum class MapVariant { standard, center, simplified };
MapVariant map_variant_from_string(const std::string& text);

/// Order-n curve figure: grid, node markers, polyline through the chosen
/// map's images. Deterministic output (fixed 6-decimal coordinates).
std::string curve_svg(int order, MapVariant variant);

/// Executed-walk figure: grid and schedule leaves, blocked cells shaded,
/// path polyline with maneuver steps highlighted. Deterministic output.
std::string trace_svg(const World& world, const Trace& trace);

}  // namespace hilcov
