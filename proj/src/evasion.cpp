#include "hilcov/evasion.hpp"

#include "hilcov/errors.hpp"

namespace hilcov {

PlannedSequence PlannedSequence::initial(int order) {
  PlannedSequence seq;
  seq.order = order;
  seq.slots = curve_nodes(order);
  seq.tags.assign(seq.slots.size(), SlotTag::normal);
  return seq;
}

RewritePlan RewritePlan::make(ManeuverGroup group, std::uint64_t n_obs, std::uint64_t slot_count) {
  if (n_obs == 0 || n_obs + 1 >= slot_count)
    throw EvasionError("rewrite: blocked slot is the first or last of the traversal");
  RewritePlan plan;
  switch (group) {
    case ManeuverGroup::non_corner_skip:
    case ManeuverGroup::skip_forward:
      plan.assigns[0] = {n_obs, n_obs + 1};
      plan.count = 1;
      plan.tag = SlotTag::skip;
      break;
    case ManeuverGroup::backtrack_three:
      if (n_obs < 3) throw EvasionError("rewrite: backtrack needs at least three prior slots");
      plan.assigns[0] = {n_obs, n_obs - 3};
      plan.count = 1;
      plan.tag = SlotTag::backtrack;
      break;
    case ManeuverGroup::detour_ahead:
      if (n_obs + 4 >= slot_count) throw EvasionError("rewrite: detour window extends past the last slot");
      plan.assigns[0] = {n_obs, n_obs + 3};
      plan.assigns[1] = {n_obs + 3, n_obs + 4};
      plan.count = 2;
      plan.tag = SlotTag::detour;
      break;
  }
  return plan;
}

void rewrite(PlannedSequence& seq, std::uint64_t n_obs, ManeuverGroup group) {
  const RewritePlan plan = RewritePlan::make(group, n_obs, seq.slots.size());
  for (int i = 0; i < plan.count; ++i) {
    const auto [dst, src] = plan.assigns[i];
    seq.slots[dst] = seq.slots[src];
    seq.tags[dst] = plan.tag;
  }
}

std::vector<GridCell> executed_cells(const PlannedSequence& seq) {
  std::vector<GridCell> out;
  out.reserve(seq.slots.size());
  for (const GridCell& c : seq.slots)
    if (out.empty() || !(out.back() == c)) out.push_back(c);
  return out;
}

Polyline to_polyline(const PlannedSequence& seq) {
  Polyline line;
  const int tpow = 2 * seq.order;  // slot width 1/4^n = 1/2^tpow
  for (std::uint64_t s = 0; s + 1 < seq.slots.size(); ++s) {
    const GridCell& from = seq.slots[s];
    const GridCell& to = seq.slots[s + 1];
    const ExactScalar t1{static_cast<std::int64_t>(s + 1), tpow};
    if (from == to) {
      // Dwell interval of a collapsed duplicate: extend the previous segment.
      if (!line.segments.empty()) line.segments.back().t1 = t1;
      continue;
    }
    line.segments.push_back({from.center(), to.center(), {static_cast<std::int64_t>(s), tpow}, t1});
  }
  return line;
}

}  // namespace hilcov
