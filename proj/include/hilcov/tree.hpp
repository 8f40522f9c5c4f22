#pragma once

#include <vector>

#include "hilcov/world.hpp"

namespace hilcov {

/// Leaves of the coverage tree induced by a resolution map, in curve order
/// (lexicographic prefix order). Every point of the unit square lies in
/// exactly one leaf; a leaf inside a region prefix has that region's
/// demanded order, anything else the default order.
///
/// Nested region prefixes are allowed; the deepest one containing a node
/// decides its order. Throws std::invalid_argument on: a region order below
/// its prefix length or above n_max, a default order outside 0..n_max, or
/// equal region prefixes with different demanded orders.
std::vector<NodeIndex> build_leaves(const ResolutionMap& map, int n_max);

/// Uniform resolution: the 4^n order-n nodes in rank order.
std::vector<NodeIndex> uniform_leaves(int order);

}  // namespace hilcov
