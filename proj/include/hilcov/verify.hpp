#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hilcov/simulate.hpp"
#include "hilcov/world.hpp"

namespace hilcov {

/// Outcome of checking one executed walk against its world.
///
/// pass requires: every free leaf covered, no step entering blocked space,
/// and every pair of consecutive steps adjacent (one-level parent/child move
/// or closed cell squares touching). Counters and the offending items are
/// reported for diagnostics.
struct CoverageReport {
  bool pass = false;
  uint64_t total_leaves = 0;
  uint64_t free_leaves = 0;
  uint64_t covered_leaves = 0;
  uint64_t revisit_count = 0;
  uint64_t step_count = 0;
  uint64_t move_count = 0;
  uint64_t query_count = 0;
  uint64_t rewrite_count = 0;
  double path_length = 0.0;
  std::vector<std::string> missed;
  std::vector<std::string> incursions;
  std::vector<std::string> adjacency_faults;
};

CoverageReport verify_coverage(const World& world, const Trace& trace);

/// One failing world inside a campaign.
struct CampaignOutcome {
  std::string world;
  bool simulated = false;  // false: the walk itself threw
  std::string detail;
};

/// Aggregate result of a verification campaign over many worlds.
struct CampaignReport {
  std::string name;
  int order = 0;
  uint64_t worlds = 0;
  uint64_t passes = 0;
  uint64_t failures = 0;  // walks that completed but failed verification
  uint64_t errors = 0;    // walks that threw before completing
  std::vector<CampaignOutcome> counterexamples;
};

/// Exhaustive single-obstacle campaign: every order-n cell except the curve's
/// first and last is blocked in turn, simulated, and verified.
CampaignReport verify_single_obstacle(int order,
                                      const SimulateOptions& options = {});

/// Exhaustive single-obstacle campaign over coarse obstacles: every obstacle
/// prefix of the given length (shorter than the world order) not containing
/// the curve's endpoints.
CampaignReport verify_single_obstacle_prefix(int order, int prefix_length,
                                             const SimulateOptions& options = {});

/// Pairwise-obstacle campaign: every pair of order-n cell obstacles whose
/// curve ranks differ by at least `min_rank_gap` (which keeps the two evasion
/// windows disjoint; 8 is the widest window any maneuver touches).
CampaignReport verify_obstacle_pairs(int order, uint64_t min_rank_gap = 8,
                                     const SimulateOptions& options = {});

/// Admission predicate for obstacle pairs in the multi-obstacle campaign.
using PairFilter = std::function<bool(const GridCell&, const GridCell&)>;

/// The default admission rule: the two cells do not share an edge (diagonal
/// contact and any larger separation are admitted).
bool no_shared_edge(const GridCell& a, const GridCell& b);

/// Multi-obstacle campaign over every pair of non-terminal order-n cell
/// obstacles the filter admits. Worlds where the walk fails coverage — or
/// throws — are listed verbatim as counterexamples; nearby-but-not-edge-
/// adjacent obstacles can interact through overlapping maneuver windows, so
/// the outcome is reported, not presumed.
CampaignReport verify_multi_obstacle(int order,
                                     const PairFilter& filter = no_shared_edge,
                                     const SimulateOptions& options = {});

}  // namespace hilcov
