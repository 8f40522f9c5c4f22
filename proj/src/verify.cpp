#include "hilcov/verify.hpp"

#include <cmath>
#include <set>

#include "hilcov/errors.hpp"

namespace hilcov {

namespace {

bool steps_adjacent(const NodeIndex& a, const NodeIndex& b) {
  // One-level parent/child move...
  if (a.order + 1 == b.order && a.is_prefix_of(b)) return true;
  if (b.order + 1 == a.order && b.is_prefix_of(a)) return true;
  // ...or closed sub-squares touching (shared edge, corner, or overlap).
  return cells_touch(cell_of(a), cell_of(b));
}

std::string describe_step(const TraceStep& step) {
  return std::string(to_string(step.event)) + " " + step.node.to_string() +
         " (slot " + std::to_string(step.slot) + ")";
}

}  // namespace

CoverageReport verify_coverage(const World& world, const Trace& trace) {
  CoverageReport report;
  report.total_leaves = trace.leaves.size();
  report.step_count = trace.steps.size();
  report.query_count = trace.query_count;
  report.rewrite_count = trace.rewrite_count;

  std::set<NodeIndex> leaf_set(trace.leaves.begin(), trace.leaves.end());
  std::set<NodeIndex> covered;

  const TraceStep* prev = nullptr;
  for (const auto& step : trace.steps) {
    for (const auto& obstacle : world.blocked) {
      if (obstacle.is_prefix_of(step.node)) {
        report.incursions.push_back(describe_step(step) + " enters obstacle " +
                                    obstacle.to_string());
      }
    }
    if (prev != nullptr) {
      if (!steps_adjacent(prev->node, step.node)) {
        report.adjacency_faults.push_back(describe_step(*prev) + " -> " +
                                          describe_step(step));
      }
      ExactPoint a = cell_of(prev->node).center();
      ExactPoint b = cell_of(step.node).center();
      report.path_length += std::hypot(b.xd() - a.xd(), b.yd() - a.yd());
      ++report.move_count;
    }
    if (step.event == StepEvent::revisit) ++report.revisit_count;
    if (leaf_set.count(step.node)) covered.insert(step.node);
    prev = &step;
  }

  for (const auto& leaf : trace.leaves) {
    bool blocked = false;
    for (const auto& obstacle : world.blocked) {
      if (obstacle.is_prefix_of(leaf)) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    ++report.free_leaves;
    if (!covered.count(leaf)) report.missed.push_back(leaf.to_string());
  }
  report.covered_leaves = covered.size();
  report.pass = report.missed.empty() && report.incursions.empty() &&
                report.adjacency_faults.empty();
  return report;
}

namespace {

void run_world(CampaignReport& campaign, const World& world,
               const std::string& label, const SimulateOptions& options) {
  ++campaign.worlds;
  try {
    Trace trace = simulate(world, options);
    CoverageReport report = verify_coverage(world, trace);
    if (report.pass) {
      ++campaign.passes;
      return;
    }
    ++campaign.failures;
    std::string detail;
    if (!report.missed.empty()) {
      detail += std::to_string(report.missed.size()) + " missed (first " +
                report.missed.front() + ")";
    }
    if (!report.incursions.empty()) {
      if (!detail.empty()) detail += "; ";
      detail += report.incursions.front();
    }
    if (!report.adjacency_faults.empty()) {
      if (!detail.empty()) detail += "; ";
      detail += report.adjacency_faults.front();
    }
    campaign.counterexamples.push_back({label, true, detail});
  } catch (const SimulationError& e) {
    ++campaign.errors;
    campaign.counterexamples.push_back({label, false, e.what()});
  }
}

}  // namespace

CampaignReport verify_single_obstacle(int order,
                                      const SimulateOptions& options) {
  CampaignReport campaign;
  campaign.name = "single-obstacle cells";
  campaign.order = order;
  const std::uint64_t cells = std::uint64_t{1} << (2 * order);
  for (std::uint64_t rank = 1; rank + 1 < cells; ++rank) {
    NodeIndex obstacle = NodeIndex::from_rank(rank, order);
    World world(order, {obstacle});
    run_world(campaign, world, obstacle.to_string(), options);
  }
  return campaign;
}

CampaignReport verify_single_obstacle_prefix(int order, int prefix_length,
                                             const SimulateOptions& options) {
  CampaignReport campaign;
  campaign.name = "single-obstacle prefixes of length " +
                  std::to_string(prefix_length);
  campaign.order = order;
  const std::uint64_t prefixes = std::uint64_t{1} << (2 * prefix_length);
  for (std::uint64_t rank = 0; rank < prefixes; ++rank) {
    NodeIndex obstacle = NodeIndex::from_rank(rank, prefix_length);
    if (rank == 0 || rank + 1 == prefixes) continue;  // start / end nodes
    World world(order, {obstacle});
    run_world(campaign, world, obstacle.to_string(), options);
  }
  return campaign;
}

CampaignReport verify_obstacle_pairs(int order, uint64_t min_rank_gap,
                                     const SimulateOptions& options) {
  CampaignReport campaign;
  campaign.name = "obstacle pairs, rank gap >= " +
                  std::to_string(min_rank_gap);
  campaign.order = order;
  const std::uint64_t cells = std::uint64_t{1} << (2 * order);
  for (std::uint64_t ra = 1; ra + 1 < cells; ++ra) {
    for (std::uint64_t rb = ra + min_rank_gap; rb + 1 < cells; ++rb) {
      NodeIndex a = NodeIndex::from_rank(ra, order);
      NodeIndex b = NodeIndex::from_rank(rb, order);
      World world(order, {a, b});
      run_world(campaign, world, a.to_string() + "+" + b.to_string(),
                options);
    }
  }
  return campaign;
}

bool no_shared_edge(const GridCell& a, const GridCell& b) {
  if (a.order != b.order) return true;
  std::int64_t di = a.i > b.i ? a.i - b.i : b.i - a.i;
  std::int64_t dj = a.j > b.j ? a.j - b.j : b.j - a.j;
  return di + dj != 1;
}

CampaignReport verify_multi_obstacle(int order, const PairFilter& filter,
                                     const SimulateOptions& options) {
  CampaignReport campaign;
  campaign.name = "obstacle pairs without a shared edge";
  campaign.order = order;
  const std::uint64_t cells = std::uint64_t{1} << (2 * order);
  for (std::uint64_t ra = 1; ra + 1 < cells; ++ra) {
    for (std::uint64_t rb = ra + 1; rb + 1 < cells; ++rb) {
      NodeIndex a = NodeIndex::from_rank(ra, order);
      NodeIndex b = NodeIndex::from_rank(rb, order);
      if (!filter(cell_of(a), cell_of(b))) continue;
      World world(order, {a, b});
      run_world(campaign, world, a.to_string() + "+" + b.to_string(),
                options);
    }
  }
  return campaign;
}

}  // namespace hilcov
