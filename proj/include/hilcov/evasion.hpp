#pragma once

#include <cstdint>
#include <vector>

#include "hilcov/corner.hpp"
#include "hilcov/hilbert.hpp"

namespace hilcov {

enum class SlotTag : std::uint8_t { normal, skip, detour, backtrack };

/// The slot-indexed visit plan of one traversal: slot s initially holds the
/// rank-s cell; evasive maneuvers reassign slots. Consecutive duplicate
/// slots collapse into a single visit when executed.
struct PlannedSequence {
  int order = 0;
  std::vector<GridCell> slots;
  std::vector<SlotTag> tags;

  static PlannedSequence initial(int order);
};

/// The slot assignments of one maneuver, in application order. dst is read
/// and overwritten with the current content of src.
struct RewritePlan {
  struct Assign {
    std::uint64_t dst;
    std::uint64_t src;
  };
  Assign assigns[2];
  int count = 0;
  SlotTag tag = SlotTag::normal;

  /// Validates the slot window: n_obs must not be the first or last slot,
  /// backtracking needs n_obs >= 3, a detour needs n_obs + 4 to exist.
  /// Throws EvasionError otherwise.
  static RewritePlan make(ManeuverGroup group, std::uint64_t n_obs, std::uint64_t slot_count);
};

/// Apply the maneuver for `group` at the blocked slot. Touches only the
/// slots named by the group's rewrite plan.
void rewrite(PlannedSequence& seq, std::uint64_t n_obs, ManeuverGroup group);

/// Visit order after collapsing consecutive duplicate slots.
std::vector<GridCell> executed_cells(const PlannedSequence& seq);

/// Continuous path of a planned sequence: straight segments between
/// consecutive distinct cell centres. Each unit slot interval
/// [s/4^n, (s+1)/4^n] belongs to one segment; intervals of collapsed
/// duplicates merge into the preceding segment, so the segment parameters
/// partition [0, (4^n - 1)/4^n].
struct PolylineSegment {
  ExactPoint a;
  ExactPoint b;
  ExactScalar t0;
  ExactScalar t1;
};

struct Polyline {
  std::vector<PolylineSegment> segments;
};

Polyline to_polyline(const PlannedSequence& seq);

}  // namespace hilcov
