// Coverage-tree leaf schedules induced by resolution maps.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hilcov/tree.hpp"

using namespace hilcov;

namespace {

NodeIndex N(const char* s) { return NodeIndex::from_string(s); }

ResolutionMap map_with(int default_order,
                       std::vector<ResolutionMap::Region> regions = {}) {
  ResolutionMap m;
  m.default_order = default_order;
  m.regions = std::move(regions);
  return m;
}

// Leaves must tile the square: in curve order, each leaf's rank window
// starts exactly where the previous one ended.
void check_tiling(const std::vector<NodeIndex>& leaves, int n_max) {
  std::uint64_t next = 0;
  for (const NodeIndex& leaf : leaves) {
    std::uint64_t width = std::uint64_t{1} << (2 * (n_max - leaf.order));
    CHECK(leaf.rank() * width == next);
    next += width;
  }
  CHECK(next == (std::uint64_t{1} << (2 * n_max)));
}

}  // namespace

TEST_CASE("uniform schedules are the curve in rank order") {
  std::vector<NodeIndex> leaves = uniform_leaves(2);
  REQUIRE(leaves.size() == 16);
  for (std::uint64_t k = 0; k < 16; ++k) {
    CHECK(leaves[k] == NodeIndex::from_rank(k, 2));
  }
  check_tiling(leaves, 2);
}

TEST_CASE("default order alone gives a uniform schedule") {
  std::vector<NodeIndex> leaves = build_leaves(map_with(1), 3);
  REQUIRE(leaves.size() == 4);
  for (std::uint64_t k = 0; k < 4; ++k) {
    CHECK(leaves[k] == NodeIndex::from_rank(k, 1));
  }
  CHECK(build_leaves(map_with(3), 3) == uniform_leaves(3));
}

TEST_CASE("one refined quadrant splits into finer leaves") {
  // Default order 2 with quadrant 2 refined to order 3:
  // 3 quadrants x 4 leaves + 16 refined leaves = 28.
  ResolutionMap m = map_with(2, {{N("2"), 3}});
  std::vector<NodeIndex> leaves = build_leaves(m, 3);
  REQUIRE(leaves.size() == 28);
  check_tiling(leaves, 3);
  for (const NodeIndex& leaf : leaves) {
    if (N("2").is_prefix_of(leaf)) {
      CHECK(leaf.order == 3);
    } else {
      CHECK(leaf.order == 2);
    }
  }
  // Curve order: quadrants 0 and 1 first (8 coarse), then the 16 fine ones.
  CHECK(leaves[7] == N("13"));
  CHECK(leaves[8] == N("200"));
  CHECK(leaves[23] == N("233"));
  CHECK(leaves[24] == N("30"));
}

TEST_CASE("coarser regions work too") {
  ResolutionMap m = map_with(2, {{N("3"), 1}});
  std::vector<NodeIndex> leaves = build_leaves(m, 2);
  REQUIRE(leaves.size() == 13);  // 3 x 4 fine + 1 coarse
  CHECK(leaves.back() == N("3"));
  check_tiling(leaves, 2);
}

TEST_CASE("nested demands: the deepest containing region wins") {
  ResolutionMap m = map_with(1, {{N("2"), 2}, {N("21"), 3}});
  std::vector<NodeIndex> leaves = build_leaves(m, 3);
  // Quadrants 0,1,3 at order 1; quadrant 2 at order 2 except [2,1] at 3.
  REQUIRE(leaves.size() == 3 + 3 + 4);
  check_tiling(leaves, 3);
  std::set<int> orders;
  for (const NodeIndex& leaf : leaves) orders.insert(leaf.order);
  CHECK(orders == std::set<int>{1, 2, 3});
}

TEST_CASE("invalid maps are rejected") {
  // Region order below its prefix length.
  CHECK_THROWS_AS(build_leaves(map_with(1, {{N("21"), 1}}), 3),
                  std::invalid_argument);
  // Region order beyond the maximum.
  CHECK_THROWS_AS(build_leaves(map_with(1, {{N("2"), 4}}), 3),
                  std::invalid_argument);
  // Default order out of range.
  CHECK_THROWS_AS(build_leaves(map_with(5), 3), std::invalid_argument);
  // Same prefix demanding two different orders.
  CHECK_THROWS_AS(
      build_leaves(map_with(1, {{N("2"), 2}, {N("2"), 3}}), 3),
      std::invalid_argument);
}
