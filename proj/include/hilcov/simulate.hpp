#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilcov/hilbert.hpp"
#include "hilcov/tree.hpp"
#include "hilcov/world.hpp"

namespace hilcov {

/// What a trace step is doing.
///
///   normal  - plain covering advance (or a plain transit hop inside a
///             maneuver whose interesting moves are tagged otherwise)
///   skip    - move produced by a skip maneuver
///   detour  - move produced by a detour maneuver
///   revisit - re-entering already covered space (backtracks do this)
///   ascend  - refocusing to the parent node (coarser view)
///   descend - refocusing into a child node (finer view)
enum class StepEvent : uint8_t { normal, skip, detour, revisit, ascend, descend };

const char* to_string(StepEvent event);
StepEvent step_event_from_string(const std::string& text);

/// One step of an executed coverage walk.
///
/// `slot` names the schedule leaf this step serves: for a covering step, the
/// ordinal of the leaf being covered; for transit steps (ascend/descend,
/// maneuver hops), the ordinal of the next leaf to be covered. `t` is that
/// leaf's start offset in the schedule, as an exact dyadic fraction of the
/// whole mission (slot/4^n on a uniform grid). `node` is the tree node whose
/// cell the step actually visits; during maneuvers and refocusing it can
/// differ from the slot's own leaf.
struct TraceStep {
  uint64_t slot = 0;
  ExactScalar t{0, 0};
  NodeIndex node;
  StepEvent event = StepEvent::normal;
};

/// A full coverage walk: the leaf schedule plus every executed step.
struct Trace {
  std::vector<NodeIndex> leaves;
  std::vector<TraceStep> steps;
  uint64_t query_count = 0;
  uint64_t rewrite_count = 0;
};

struct SimulateOptions {
  /// Maximum evasive rewrites applied to a single schedule slot before the
  /// walk gives up; guards against livelock between interacting obstacles.
  int rewrite_budget = 8;
};

/// Walk the uniform order-n curve over `world`, sensing ahead and evading
/// obstacles online. Throws SimulationError (or a subclass) when no legal
/// evasion exists.
Trace simulate(const World& world, const SimulateOptions& options = {});

/// Walk the non-uniform coverage tree induced by the world's resolution map
/// (uniform at the world's order when no map is given). With a uniform map
/// this produces exactly the same trace as simulate(). Throws PlanError when
/// an obstacle is strictly finer than the demanded resolution.
Trace plan_nonuniform(const World& world, const SimulateOptions& options = {});

}  // namespace hilcov
