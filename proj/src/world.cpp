#include "hilcov/world.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilcov {

namespace {

bool all_digits(const NodeIndex& n, std::uint8_t d) {
  return std::all_of(n.digits.begin(), n.digits.end(), [d](std::uint8_t x) { return x == d; });
}

}  // namespace

World::World(int order_, std::vector<NodeIndex> blocked_, std::optional<ResolutionMap> resolution_)
    : order(order_), blocked(std::move(blocked_)), resolution(std::move(resolution_)) {
  if (order < 1 || order > 16) throw std::invalid_argument("World: order must be in 1..16");
  for (const NodeIndex& b : blocked) {
    if (b.order < 1 || b.order > order)
      throw std::invalid_argument("World: obstacle prefix '" + b.to_string() +
                                  "' has length outside 1..order");
    if (all_digits(b, 0))
      throw std::invalid_argument("World: obstacle '" + b.to_string() + "' blocks the start node");
    if (all_digits(b, 3))
      throw std::invalid_argument("World: obstacle '" + b.to_string() + "' blocks the end node");
  }
  for (std::size_t a = 0; a < blocked.size(); ++a)
    for (std::size_t b = 0; b < blocked.size(); ++b) {
      if (a == b) continue;
      if (blocked[a].is_prefix_of(blocked[b]))
        throw std::invalid_argument("World: obstacle '" + blocked[a].to_string() +
                                    "' contains obstacle '" + blocked[b].to_string() + "'");
    }
}

World::SenseReply World::lookup(const NodeIndex& cell) const {
  for (const NodeIndex& b : blocked) {
    if (b.is_prefix_of(cell)) return {Occupancy::blocked_cell, b};
    if (cell.is_prefix_of(b)) return {Occupancy::partially_blocked, b};
  }
  return {Occupancy::free_cell, {}};
}

bool World::rank_blocked(std::uint64_t rank) const {
  const NodeIndex node = NodeIndex::from_rank(rank, order);
  return lookup(node).occ == Occupancy::blocked_cell;
}

SensorView::SensorView(const World& world, NodeIndex start) : world_(&world), pos_(std::move(start)) {}

void SensorView::move_to(const NodeIndex& cell) { pos_ = cell; }

World::SenseReply SensorView::sense(const NodeIndex& target) const {
  ++queries_;
  if (!cells_touch(cell_of(pos_), cell_of(target)))
    throw SensingError("sense: cell '" + target.to_string() + "' is outside the 8-neighbourhood of '" +
                       pos_.to_string() + "'");
  return world_->lookup(target);
}

}  // namespace hilcov
