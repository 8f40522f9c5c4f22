#include "hilcov/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hilcov {

namespace {

// Demanded order at node P: the deepest region whose prefix contains P or
// is contained by P determines it only when it contains P. A region strictly
// inside P forces a split, handled by the caller.
int demanded_order(const ResolutionMap& map, const NodeIndex& node) {
  int best_len = -1;
  int order = map.default_order;
  for (const auto& region : map.regions) {
    if (region.prefix.is_prefix_of(node) &&
        region.prefix.order > best_len) {
      best_len = region.prefix.order;
      order = region.order;
    }
  }
  return order;
}

void build_rec(const ResolutionMap& map, const NodeIndex& node,
               std::vector<NodeIndex>& out) {
  bool must_split = false;
  for (const auto& region : map.regions) {
    if (node.is_prefix_of(region.prefix) && region.prefix.order > node.order) {
      must_split = true;
      break;
    }
  }
  if (!must_split) {
    int target = demanded_order(map, node);
    if (target > node.order) {
      must_split = true;
    } else {
      out.push_back(node);
      return;
    }
  }
  for (uint8_t q = 0; q < 4; ++q) {
    build_rec(map, node.child(q), out);
  }
}

}  // namespace

std::vector<NodeIndex> build_leaves(const ResolutionMap& map, int n_max) {
  if (n_max < 1 || n_max > 16) {
    throw std::invalid_argument("max order must be between 1 and 16");
  }
  if (map.default_order < 0 || map.default_order > n_max) {
    throw std::invalid_argument("default order " +
                                std::to_string(map.default_order) +
                                " outside 0.." + std::to_string(n_max));
  }
  for (const auto& region : map.regions) {
    if (region.prefix.order < 1) {
      throw std::invalid_argument("region prefix must be non-empty");
    }
    if (region.order < region.prefix.order) {
      throw std::invalid_argument(
          "region " + region.prefix.to_string() + " demands order " +
          std::to_string(region.order) +
          " shallower than its own prefix length");
    }
    if (region.order > n_max) {
      throw std::invalid_argument(
          "region " + region.prefix.to_string() + " demands order " +
          std::to_string(region.order) + " above the maximum " +
          std::to_string(n_max));
    }
  }
  // Nested prefixes are fine (deepest wins); equal prefixes with different
  // demands contradict each other.
  for (size_t a = 0; a < map.regions.size(); ++a) {
    for (size_t b = a + 1; b < map.regions.size(); ++b) {
      const auto& ra = map.regions[a];
      const auto& rb = map.regions[b];
      if (ra.prefix == rb.prefix && ra.order != rb.order) {
        throw std::invalid_argument("region " + ra.prefix.to_string() +
                                    " demands two different orders");
      }
    }
  }

  std::vector<NodeIndex> out;
  NodeIndex root;
  root.order = 0;
  // The walk starts at the first leaf, so an empty decomposition (default
  // order 0, no regions) still yields the root as the single leaf.
  build_rec(map, root, out);
  return out;
}

std::vector<NodeIndex> uniform_leaves(int order) {
  std::vector<NodeIndex> out;
  uint64_t count = uint64_t{1} << (2 * order);
  out.reserve(count);
  for (uint64_t k = 0; k < count; ++k) {
    out.push_back(NodeIndex::from_rank(k, order));
  }
  return out;
}

}  // namespace hilcov
