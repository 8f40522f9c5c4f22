#pragma once

#include "hilcov/hilbert.hpp"

namespace hilcov {

/// Corner nodes are where the curve enters or leaves a sub-curve: the digit
/// string is some prefix followed by a maximal trailing run of 0s (entering)
/// or 3s (exiting).
enum class CornerKind { entering, exiting };

/// Classification tuple of a corner node. With the trailing run starting
/// after position p (1-based), the corner behaves like a top-level corner of
/// an effective order n_eff = n - p + 1 sub-curve; the evasive maneuver is
/// chosen from (e, q_p, m) where e = n_eff mod 2, q_p is the digit just
/// before the run and m is the run digit (0 or 3).
struct CornerClass {
  int p = 0;
  int n_eff = 0;
  int e = 0;
  std::uint8_t q_p = 0;
  std::uint8_t m = 0;
  CornerKind kind = CornerKind::entering;
};

enum class NodeRole { terminal, non_corner, corner };

struct Classification {
  NodeRole role = NodeRole::non_corner;
  CornerClass corner;  // meaningful only when role == corner
};

/// Classify a node of its own order. The all-0s and all-3s nodes (curve
/// start and end) are terminal; nodes ending in 1 or 2 are non-corners.
/// Throws std::invalid_argument on order 0.
Classification classify(const NodeIndex& node);

/// The evasive maneuver families. Non-corner obstacles are simply skipped;
/// corner obstacles resolve via the (e, q_p, m) tuple to one of three
/// sequence rewrites.
enum class ManeuverGroup {
  non_corner_skip,  // visit the successor in the blocked slot
  skip_forward,     // same rewrite as a non-corner skip
  backtrack_three,  // revisit the node three slots back, then continue
  detour_ahead,     // pull slot+3 forward, then bridge slot+3 to slot+4
};

/// Maneuver for a corner tuple. Exactly 12 tuples are valid (2 parities x
/// 4 digits x 2 run digits, minus the 4 start/end combinations); throws
/// std::invalid_argument for the rest.
ManeuverGroup maneuver_group(const CornerClass& c);

}  // namespace hilcov
