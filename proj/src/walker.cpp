#include "hilcov/simulate.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "hilcov/corner.hpp"
#include "hilcov/errors.hpp"
#include "hilcov/evasion.hpp"

namespace hilcov {

const char* to_string(StepEvent event) {
  switch (event) {
    case StepEvent::normal: return "normal";
    case StepEvent::skip: return "skip";
    case StepEvent::detour: return "detour";
    case StepEvent::revisit: return "revisit";
    case StepEvent::ascend: return "ascend";
    case StepEvent::descend: return "descend";
  }
  return "?";
}

StepEvent step_event_from_string(const std::string& text) {
  if (text == "normal") return StepEvent::normal;
  if (text == "skip") return StepEvent::skip;
  if (text == "detour") return StepEvent::detour;
  if (text == "revisit") return StepEvent::revisit;
  if (text == "ascend") return StepEvent::ascend;
  if (text == "descend") return StepEvent::descend;
  throw std::invalid_argument("unknown step event \"" + text + "\"");
}

namespace {

// Executes a coverage walk over an arbitrary leaf schedule. The same engine
// serves the uniform simulator and the non-uniform planner: with a uniform
// schedule the two are identical by construction.
//
// The schedule is consumed slot by slot. An overlay maps a slot to a
// substitute cell when an evasive rewrite changed what gets visited there;
// cells pulled forward by a maneuver are remembered so their own slot later
// collapses silently (the walk is already past them). Obstacles aligned with
// a schedule leaf are evaded by rewriting slots in place; obstacles coarser
// than the local leaves are evaded by the same maneuver executed at the
// obstacle's own order, refocusing up, hopping across, and descending back
// into the finer leaves.
class Walker {
 public:
  Walker(const World& world, std::vector<NodeIndex> leaves,
         const SimulateOptions& options)
      : world_(world),
        options_(options),
        leaves_(std::move(leaves)),
        sensor_(world, leaves_.front()) {
    if (leaves_.empty()) {
      throw SimulationError("empty coverage schedule");
    }
    int n_max = 0;
    for (const auto& leaf : leaves_) n_max = std::max(n_max, leaf.order);
    t_denominator_pow2_ = 2 * n_max;
    t_start_.reserve(leaves_.size());
    int64_t acc = 0;
    for (const auto& leaf : leaves_) {
      t_start_.push_back(ExactScalar{acc, t_denominator_pow2_});
      acc += int64_t{1} << (t_denominator_pow2_ - 2 * leaf.order);
    }
    for (uint64_t s = 0; s < leaves_.size(); ++s) {
      slot_of_[leaves_[s]] = s;
    }
  }

  Trace run() {
    for (cursor_ = 0; cursor_ < leaves_.size(); ++cursor_) {
      execute_slot(cursor_, Entry{});
    }
    Trace trace;
    trace.leaves = std::move(leaves_);
    trace.steps = std::move(steps_);
    trace.query_count = sensor_.query_count();
    trace.rewrite_count = rewrite_count_;
    return trace;
  }

 private:
  struct Entry {
    // When set, the first covering move of this slot is a lateral maneuver
    // hop carrying this event instead of a plain sequential advance.
    std::optional<StepEvent> lateral_event;
  };

  const NodeIndex& planned(uint64_t slot) const {
    auto it = overlay_.find(slot);
    return it == overlay_.end() ? leaves_[slot] : it->second;
  }

  StepEvent planned_event(uint64_t slot) const {
    auto it = overlay_event_.find(slot);
    return it == overlay_event_.end() ? StepEvent::normal : it->second;
  }

  void execute_slot(uint64_t slot, Entry entry) {
    while (true) {
      // A blocked slot is void unless a rewrite gave it substitute content.
      if (blocked_slots_.count(slot) && overlay_.find(slot) == overlay_.end()) {
        return;
      }
      const NodeIndex target = planned(slot);
      auto target_slot = slot_lookup(target);
      if (target_slot) {
        if (early_covered_.count(*target_slot)) return;  // collapse
        if (blocked_slots_.count(*target_slot)) return;  // pulled into an
                                                         // evaded obstacle
      }
      World::SenseReply reply = sensor_.sense(target);
      switch (reply.occ) {
        case World::Occupancy::free_cell: {
          bool lateral = entry.lateral_event.has_value() ||
                         overlay_.count(slot) > 0 || !sequential_to(target);
          StepEvent arrival = StepEvent::normal;
          if (entry.lateral_event) {
            arrival = *entry.lateral_event;
          } else if (overlay_.count(slot)) {
            arrival = planned_event(slot);
          }
          move_to_cover(target, lateral, arrival);
          return;
        }
        case World::Occupancy::partially_blocked:
          throw PlanError("obstacle " + reply.obstacle.to_string() +
                          " lies strictly inside planned cell " +
                          target.to_string() +
                          "; the demanded resolution is too coarse there");
        case World::Occupancy::blocked_cell: {
          const NodeIndex obstacle = reply.obstacle;
          if (obstacle == target) {
            apply_rewrite(slot, target);
            entry = Entry{};
            continue;  // retry the slot with its substitute cell
          }
          // The obstacle is coarser than the planned cell: evade at the
          // obstacle's own order.
          run_script(obstacle);
          entry = Entry{};
          continue;  // the loop re-checks; the slot is now blocked or void
        }
      }
    }
  }

  // --- aligned obstacles: rewrite schedule slots in place ---------------

  void apply_rewrite(uint64_t slot, const NodeIndex& obstacle) {
    int used = ++budget_[slot];
    if (used > options_.rewrite_budget) {
      throw EvasionError("slot " + std::to_string(slot) + " exceeded " +
                         std::to_string(options_.rewrite_budget) +
                         " evasive rewrites; obstacles interact too closely");
    }
    RewritePlan plan = RewritePlan::make(group_for(obstacle), slot,
                                         leaves_.size());
    for (int a = 0; a < plan.count; ++a) {
      const auto& assign = plan.assigns[a];
      NodeIndex value = planned(assign.src);
      overlay_[assign.dst] = value;
      overlay_event_[assign.dst] = event_for(plan.tag);
    }
    if (leaves_[slot] == obstacle) blocked_slots_.insert(slot);
    ++rewrite_count_;
  }

  ManeuverGroup group_for(const NodeIndex& obstacle) const {
    Classification c = classify(obstacle);
    switch (c.role) {
      case NodeRole::terminal:
        throw EvasionError("obstacle " + obstacle.to_string() +
                           " sits on a curve endpoint; no evasion exists");
      case NodeRole::non_corner:
        return ManeuverGroup::non_corner_skip;
      case NodeRole::corner:
        return maneuver_group(c.corner);
    }
    throw EvasionError("unclassifiable obstacle " + obstacle.to_string());
  }

  static StepEvent event_for(SlotTag tag) {
    switch (tag) {
      case SlotTag::skip: return StepEvent::skip;
      case SlotTag::detour: return StepEvent::detour;
      case SlotTag::backtrack: return StepEvent::normal;  // shows as revisit
      case SlotTag::normal: return StepEvent::normal;
    }
    return StepEvent::normal;
  }

  // --- coarse obstacles: the same maneuver at the obstacle's order ------

  struct ScriptAction {
    bool covers;  // false: transit through already covered space
    uint64_t rank;
    StepEvent event;
  };

  void run_script(const NodeIndex& obstacle) {
    if (!scripted_.insert(obstacle).second) {
      throw SimulationError("obstacle " + obstacle.to_string() +
                            " re-blocks the walk after its evasion");
    }
    const int level = obstacle.order;
    const uint64_t cells = uint64_t{1} << (2 * level);
    const uint64_t s = obstacle.rank();
    ManeuverGroup group = group_for(obstacle);
    // Validates the maneuver fits the order-`level` schedule.
    RewritePlan::make(group, s, cells);

    // Every leaf inside the obstacle is skipped for good.
    for (uint64_t k = 0; k < leaves_.size(); ++k) {
      if (obstacle.is_prefix_of(leaves_[k])) blocked_slots_.insert(k);
    }
    ++rewrite_count_;

    std::vector<ScriptAction> program;
    switch (group) {
      case ManeuverGroup::non_corner_skip:
      case ManeuverGroup::skip_forward:
        program = {{true, s + 1, StepEvent::skip}};
        break;
      case ManeuverGroup::backtrack_three:
        program = {{false, s - 3, StepEvent::revisit},
                   {true, s + 1, StepEvent::normal}};
        break;
      case ManeuverGroup::detour_ahead:
        program = {{true, s + 3, StepEvent::detour},
                   {true, s + 1, StepEvent::normal},
                   {true, s + 2, StepEvent::normal},
                   {true, s + 4, StepEvent::detour}};
        break;
    }

    for (const auto& action : program) {
      NodeIndex waypoint = NodeIndex::from_rank(action.rank, level);
      if (action.covers) {
        script_cover(waypoint, action.event);
      } else {
        script_transit(waypoint);
      }
    }
  }

  // Covers every not-yet-covered leaf inside `waypoint`, entering it with a
  // maneuver hop at the waypoint's order when the walk is not already
  // adjacent in schedule order.
  void script_cover(const NodeIndex& waypoint, StepEvent entry_event) {
    auto range = leaf_range(waypoint);
    if (!range) {
      throw PlanError("evasion at order " +
                      std::to_string(waypoint.order) + " needs cell " +
                      waypoint.to_string() +
                      " as a coverage unit, but the demanded resolution is "
                      "coarser there");
    }
    auto [lo, hi] = *range;
    bool anything_left = false;
    for (uint64_t k = lo; k <= hi; ++k) {
      if (!covered_slots_.count(k) && !blocked_slots_.count(k)) {
        anything_left = true;
        break;
      }
    }
    if (!anything_left) return;

    if (pos_ && sequential_to(leaves_[lo])) {
      // Plain curve-order continuation; no hop needed.
      cover_range(lo, hi, Entry{});
      return;
    }
    refocus_to(waypoint.order, lo);
    World::SenseReply reply = sensor_.sense(waypoint);
    if (reply.occ == World::Occupancy::blocked_cell) {
      throw SimulationError("evasion target " + waypoint.to_string() +
                            " is itself blocked by obstacle " +
                            reply.obstacle.to_string());
    }
    if (waypoint == leaves_[lo]) {
      // The waypoint is a schedule leaf: the hop is the covering arrival.
      Entry entry;
      entry.lateral_event = entry_event;
      cover_range(lo, hi, entry);
      return;
    }
    emit(lo, waypoint, entry_event);
    cover_range(lo, hi, Entry{});
  }

  // Visits `waypoint` as pure transit through previously covered space.
  void script_transit(const NodeIndex& waypoint) {
    refocus_to(waypoint.order, transit_slot(waypoint));
    World::SenseReply reply = sensor_.sense(waypoint);
    if (reply.occ != World::Occupancy::free_cell) {
      throw SimulationError("evasion transit through " +
                            waypoint.to_string() +
                            " is not free; obstacles interact too closely");
    }
    emit(transit_slot(waypoint), waypoint, StepEvent::revisit);
  }

  void cover_range(uint64_t lo, uint64_t hi, Entry entry) {
    for (uint64_t k = lo; k <= hi; ++k) {
      execute_slot(k, entry);
      entry = Entry{};
    }
  }

  // Brings the walk's focus to `level`: ascends through parents when the
  // current node is finer, or descends through exit-corner children when it
  // is coarser (the exit corner is the order-`level` cell the curve leaves
  // the current node through).
  void refocus_to(int level, uint64_t serving_slot) {
    if (!pos_) {
      throw SimulationError("evasive maneuver before the walk started");
    }
    NodeIndex node = *pos_;
    while (node.order > level) {
      node = node.parent();
      emit(serving_slot, node, StepEvent::ascend);
    }
    while (node.order < level) {
      node = node.child(3);
      emit(serving_slot, node, StepEvent::descend);
    }
  }

  // --- movement ----------------------------------------------------------

  // True when `target` directly continues the walk in schedule order, so the
  // move between them is the plain curve transition.
  bool sequential_to(const NodeIndex& target) const {
    if (!pos_) return true;
    auto ps = slot_lookup(*pos_);
    auto ts = slot_lookup(target);
    return ps && ts && *ps + 1 == *ts;
  }

  // Moves from the current node to `target` (a covering arrival), emitting
  // refocus steps for order changes on plain curve transitions, or a single
  // lateral hop for maneuver moves.
  void move_to_cover(const NodeIndex& target, bool lateral,
                     StepEvent arrival) {
    uint64_t slot = *slot_lookup(target);
    if (covered_cells_.count(target)) arrival = StepEvent::revisit;
    if (!pos_ || lateral || *pos_ == target) {
      emit(slot, target, arrival);
      return;
    }
    const NodeIndex& from = *pos_;
    if (from.order > target.order) {
      NodeIndex node = from;
      while (node.order > target.order) {
        node = node.parent();
        if (node == target) break;
        emit(slot, node, StepEvent::ascend);
      }
      emit(slot, target, arrival);
    } else if (from.order < target.order) {
      if (from.is_prefix_of(target)) {
        for (int o = from.order + 1; o < target.order; ++o) {
          emit(slot, target.prefix(o), StepEvent::descend);
        }
      } else {
        NodeIndex node = from;
        while (node.order < target.order) {
          node = node.child(3);
          emit(slot, node, StepEvent::descend);
        }
      }
      emit(slot, target, arrival);
    } else {
      emit(slot, target, arrival);
    }
  }

  void emit(uint64_t slot, const NodeIndex& node, StepEvent event) {
    TraceStep step;
    step.slot = slot;
    step.t = t_start_[slot];
    step.node = node;
    step.event = event;
    steps_.push_back(step);
    sensor_.move_to(node);
    pos_ = node;
    auto ns = slot_lookup(node);
    if (ns && !covered_cells_.count(node) && event != StepEvent::ascend &&
        event != StepEvent::descend) {
      covered_cells_.insert(node);
      covered_slots_.insert(*ns);
      if (*ns > cursor_) early_covered_.insert(*ns);
    }
  }

  // --- schedule lookups ----------------------------------------------------

  std::optional<uint64_t> slot_lookup(const NodeIndex& node) const {
    auto it = slot_of_.find(node);
    if (it == slot_of_.end()) return std::nullopt;
    return it->second;
  }

  // Slot range of the leaves strictly inside (or equal to) `node`; empty when
  // the schedule is coarser than `node` there.
  std::optional<std::pair<uint64_t, uint64_t>> leaf_range(
      const NodeIndex& node) const {
    std::optional<uint64_t> lo, hi;
    for (uint64_t k = 0; k < leaves_.size(); ++k) {
      if (node.is_prefix_of(leaves_[k])) {
        if (!lo) lo = k;
        hi = k;
      }
    }
    if (!lo) return std::nullopt;
    return std::make_pair(*lo, *hi);
  }

  // Slot serving a pure-transit visit of `node`: the first schedule leaf
  // whose cell intersects it.
  uint64_t transit_slot(const NodeIndex& node) const {
    for (uint64_t k = 0; k < leaves_.size(); ++k) {
      if (node.is_prefix_of(leaves_[k]) || leaves_[k].is_prefix_of(node)) {
        return k;
      }
    }
    return cursor_;
  }

  const World& world_;
  SimulateOptions options_;
  std::vector<NodeIndex> leaves_;
  std::vector<ExactScalar> t_start_;
  int t_denominator_pow2_ = 0;
  SensorView sensor_;

  std::map<uint64_t, NodeIndex> overlay_;
  std::map<uint64_t, StepEvent> overlay_event_;
  std::map<uint64_t, int> budget_;
  std::set<uint64_t> covered_slots_;
  std::set<uint64_t> early_covered_;
  std::set<uint64_t> blocked_slots_;
  std::set<NodeIndex> covered_cells_;
  std::set<NodeIndex> scripted_;
  std::map<NodeIndex, uint64_t> slot_of_;

  std::optional<NodeIndex> pos_;
  std::vector<TraceStep> steps_;
  uint64_t cursor_ = 0;
  uint64_t rewrite_count_ = 0;
};

}  // namespace

Trace simulate(const World& world, const SimulateOptions& options) {
  Walker walker(world, uniform_leaves(world.order), options);
  return walker.run();
}

Trace plan_nonuniform(const World& world, const SimulateOptions& options) {
  ResolutionMap map;
  if (world.resolution) {
    map = *world.resolution;
  } else {
    map.default_order = world.order;
  }
  Walker walker(world, build_leaves(map, world.order), options);
  return walker.run();
}

}  // namespace hilcov
