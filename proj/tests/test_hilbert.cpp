// Exact-geometry core: digit strings, the three point maps, adjacency.
//
// The oracle below recomputes both maps from the defining affine
// contractions with plain rational arithmetic, independently of the
// library's dyadic fixed-point representation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "hilcov/hilbert.hpp"

using namespace hilcov;

namespace {

struct Frac {
  std::int64_t n = 0;
  std::int64_t d = 1;
  Frac reduced() const {
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return g ? Frac{n / g, d / g} : Frac{0, 1};
  }
};

Frac add(Frac a, Frac b) { return Frac{a.n * b.d + b.n * a.d, a.d * b.d}.reduced(); }
Frac mul_int(Frac a, std::int64_t k) { return Frac{a.n * k, a.d}.reduced(); }
Frac half(Frac a) { return Frac{a.n, a.d * 2}.reduced(); }

struct FracPoint {
  Frac x, y;
};

// T_q(p) = (H_q p + h_q) / 2  with
//   H_0 = [[0,1],[1,0]], H_1 = H_2 = I, H_3 = -H_0
//   h_0 = (0,0), h_1 = (0,1), h_2 = (1,1), h_3 = (2,1).
FracPoint contract(int q, FracPoint p) {
  Frac hx{0, 1}, hy{0, 1};
  FracPoint r;
  switch (q) {
    case 0:
      r = {p.y, p.x};
      break;
    case 1:
      r = p;
      hy = Frac{1, 1};
      break;
    case 2:
      r = p;
      hx = Frac{1, 1};
      hy = Frac{1, 1};
      break;
    default:
      r = {mul_int(p.y, -1), mul_int(p.x, -1)};
      hx = Frac{2, 1};
      hy = Frac{1, 1};
      break;
  }
  return {half(add(r.x, hx)), half(add(r.y, hy))};
}

FracPoint fold(const NodeIndex& node, FracPoint seed) {
  FracPoint p = seed;
  for (int k = node.order - 1; k >= 0; --k) {
    p = contract(node.digits[k], p);
  }
  return p;
}

bool same(const ExactScalar& a, Frac b) {
  b = b.reduced();
  // a = num / 2^pow2; compare cross-multiplied.
  return static_cast<__int128>(a.num) * b.d ==
         static_cast<__int128>(b.n) << a.pow2;
}

bool same_point(const ExactPoint& a, const FracPoint& b) {
  return same(a.x(), b.x) && same(a.y(), b.y);
}

}  // namespace

TEST_CASE("digit strings and ranks convert both ways") {
  CHECK(rank_to_digits(35, 3) == std::vector<std::uint8_t>{2, 0, 3});
  CHECK(NodeIndex::from_rank(35, 3).to_string() == "203");
  CHECK(NodeIndex::from_string("203").rank() == 35);
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
      CHECK(NodeIndex::from_rank(k, n).rank() == k);
    }
  }
  CHECK_THROWS_AS(NodeIndex::from_string("104x"), std::invalid_argument);
}

TEST_CASE("vertex map: frozen values and rational oracle") {
  ExactPoint p = map_standard(NodeIndex::from_string("203"));
  CHECK(p.x().to_decimal() == "0.625");
  CHECK(p.y().to_decimal() == "0.75");
  // Against the oracle (seed (0,0)) over every node of orders 1..5.
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
      NodeIndex node = NodeIndex::from_rank(k, n);
      CHECK(same_point(map_standard(node),
                       fold(node, {Frac{0, 1}, Frac{0, 1}})));
    }
  }
}

TEST_CASE("centre map: frozen values and rational oracle") {
  GridCell c = map_center(NodeIndex::from_string("00"));
  CHECK(c.i == 0);
  CHECK(c.j == 0);
  CHECK(c.center().x().to_decimal() == "0.125");
  CHECK(c.center().y().to_decimal() == "0.125");
  GridCell c2 = map_center(NodeIndex::from_string("21"));
  CHECK(c2.center().x().to_decimal() == "0.625");
  CHECK(c2.center().y().to_decimal() == "0.875");
  // Seed (1/2,1/2): the composed point must be the returned cell's centre.
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
      NodeIndex node = NodeIndex::from_rank(k, n);
      CHECK(same_point(map_center(node).center(),
                       fold(node, {Frac{1, 2}, Frac{1, 2}})));
    }
  }
}

TEST_CASE("first-order centres anchor the recursion") {
  CHECK(first_order_center(0) == ExactPoint{1, 1, 2});
  CHECK(first_order_center(1) == ExactPoint{1, 3, 2});
  CHECK(first_order_center(2) == ExactPoint{3, 3, 2});
  CHECK(first_order_center(3) == ExactPoint{3, 1, 2});
}

TEST_CASE("closed-form map equals the composed map") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
      NodeIndex node = NodeIndex::from_rank(k, n);
      CHECK(map_simplified(node) == map_standard(node));
    }
  }
}

TEST_CASE("order-2 cell sequence is the classic 16-cell tour") {
  std::vector<std::pair<int, int>> expect = {
      {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 2},
      {2, 2}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}, {2, 0}, {3, 0}};
  std::vector<GridCell> cells = curve_nodes(2);
  REQUIRE(cells.size() == 16);
  for (size_t k = 0; k < cells.size(); ++k) {
    CHECK(cells[k].i == expect[k].first);
    CHECK(cells[k].j == expect[k].second);
  }
}

TEST_CASE("consecutive cells share an edge at every order up to 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<GridCell> cells = curve_nodes(n);
    REQUIRE(cells.size() == (std::uint64_t{1} << (2 * n)));
    for (size_t k = 1; k < cells.size(); ++k) {
      std::int64_t di = cells[k].i - cells[k - 1].i;
      std::int64_t dj = cells[k].j - cells[k - 1].j;
      CHECK(std::abs(di) + std::abs(dj) == 1);
    }
  }
}

TEST_CASE("centre map inverts exactly") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
      NodeIndex node = NodeIndex::from_rank(k, n);
      CHECK(inverse_map_center(map_center(node)) == node);
    }
  }
}

TEST_CASE("node prefix relations") {
  NodeIndex a = NodeIndex::from_string("20");
  NodeIndex b = NodeIndex::from_string("203");
  CHECK(a.is_prefix_of(b));
  CHECK(a.is_prefix_of(a));
  CHECK_FALSE(b.is_prefix_of(a));
  CHECK(b.parent() == a);
  CHECK(a.child(3) == b);
}

TEST_CASE("cell squares touch iff their closed squares intersect") {
  CHECK(cells_touch(GridCell{2, 0, 0}, GridCell{2, 1, 1}));   // corner
  CHECK(cells_touch(GridCell{2, 0, 0}, GridCell{2, 0, 1}));   // edge
  CHECK_FALSE(cells_touch(GridCell{2, 0, 0}, GridCell{2, 2, 0}));
  CHECK(cells_touch(GridCell{1, 0, 0}, GridCell{2, 2, 0}));   // mixed order
  CHECK_FALSE(cells_touch(GridCell{1, 0, 0}, GridCell{2, 3, 0}));
  CHECK(king_adjacent(GridCell{2, 1, 1}, GridCell{2, 2, 2}));
  CHECK_FALSE(king_adjacent(GridCell{2, 1, 1}, GridCell{2, 1, 1}));
  CHECK_FALSE(king_adjacent(GridCell{2, 1, 1}, GridCell{2, 3, 1}));
}

TEST_CASE("exact scalars print minimal decimal expansions") {
  CHECK(ExactScalar{1, 2}.to_decimal() == "0.25");
  CHECK(ExactScalar{1, 4}.to_decimal() == "0.0625");
  CHECK(ExactScalar{0, 3}.to_decimal() == "0");
  CHECK(ExactScalar{8, 3}.to_decimal() == "1");
  CHECK(ExactScalar{11, 4}.to_decimal() == "0.6875");
  CHECK(ExactScalar{1, 0}.to_decimal() == "1");
}
