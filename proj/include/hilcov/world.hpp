#pragma once

#include <optional>
#include <vector>

#include "hilcov/errors.hpp"
#include "hilcov/hilbert.hpp"

namespace hilcov {

/// Demanded coverage resolution: a default order plus per-prefix overrides.
/// Region prefixes with distinct demanded orders must not overlap.
struct ResolutionMap {
  struct Region {
    NodeIndex prefix;
    int order = 0;
  };
  std::vector<Region> regions;
  int default_order = 1;
};

/// Static description of the workspace: grid order, blocked sub-squares
/// (an antichain of digit prefixes), and an optional demanded-resolution
/// map for non-uniform coverage.
///
/// Construction validates the obstacle set: digits in range, prefix length
/// between 1 and order, no prefix containing another, and the curve's start
/// and end nodes free.
struct World {
  int order = 0;
  std::vector<NodeIndex> blocked;
  std::optional<ResolutionMap> resolution;

  World(int order_, std::vector<NodeIndex> blocked_, std::optional<ResolutionMap> resolution_ = std::nullopt);

  enum class Occupancy { free_cell, blocked_cell, partially_blocked };
  struct SenseReply {
    Occupancy occ = Occupancy::free_cell;
    NodeIndex obstacle;  // covering blocked prefix when occ == blocked_cell
  };

  /// Raw occupancy of a prefix cell: blocked if inside some blocked prefix,
  /// partially blocked if a blocked prefix lies strictly inside it.
  SenseReply lookup(const NodeIndex& cell) const;

  /// True if the order-n cell of this rank lies inside a blocked prefix.
  bool rank_blocked(std::uint64_t rank) const;
};

/// The only view of the world a planner gets while running: occupancy
/// queries restricted to the 8-neighbourhood of the current cell. Queries
/// about cells whose sub-square does not touch the current cell's
/// sub-square throw SensingError; this trap (rather than trust) is what
/// keeps the planner honest about acting on local information only.
class SensorView {
 public:
  SensorView(const World& world, NodeIndex start);

  void move_to(const NodeIndex& cell);
  const NodeIndex& position() const { return pos_; }

  World::SenseReply sense(const NodeIndex& target) const;
  std::uint64_t query_count() const { return queries_; }

 private:
  const World* world_;
  NodeIndex pos_;
  mutable std::uint64_t queries_ = 0;
};

}  // namespace hilcov
