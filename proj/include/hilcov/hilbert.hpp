#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hilcov {

/// Exact dyadic scalar: value = num / 2^pow2.
struct ExactScalar {
  std::int64_t num = 0;
  int pow2 = 0;

  double value() const;
  /// Exact decimal expansion (dyadic rationals terminate).
  std::string to_decimal() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
};

/// Exact dyadic point: (x, y) = (xn, yn) / 2^pow2.
///
/// All curve geometry is computed on these; floating point appears only at
/// export time. Equality is value equality (representations may differ in
/// denominator power).
struct ExactPoint {
  std::int64_t xn = 0;
  std::int64_t yn = 0;
  int pow2 = 0;

  ExactScalar x() const { return {xn, pow2}; }
  ExactScalar y() const { return {yn, pow2}; }
  double xd() const;
  double yd() const;

  /// Same value expressed over denominator 2^p (p >= current pow2).
  ExactPoint rescaled(int p) const;

  friend bool operator==(const ExactPoint& a, const ExactPoint& b);
  friend bool operator!=(const ExactPoint& a, const ExactPoint& b) { return !(a == b); }
};

/// A node of the order-n curve: quaternary digit sequence q1..qn (most
/// significant first). Doubles as a sub-square prefix: shorter sequences
/// name coarser cells, the empty sequence is the unit square itself.
struct NodeIndex {
  int order = 0;
  std::vector<std::uint8_t> digits;  // each in {0,1,2,3}, size == order

  NodeIndex() = default;
  NodeIndex(int order_, std::vector<std::uint8_t> digits_);

  static NodeIndex from_rank(std::uint64_t rank, int order);
  /// Parse "203" -> order 3 node. Throws std::invalid_argument on bad digits.
  static NodeIndex from_string(const std::string& s);

  std::uint64_t rank() const;
  std::string to_string() const;

  NodeIndex prefix(int len) const;
  NodeIndex parent() const;
  NodeIndex child(int q) const;
  bool is_prefix_of(const NodeIndex& other) const;  // proper or equal

  friend bool operator==(const NodeIndex& a, const NodeIndex& b) {
    return a.order == b.order && a.digits == b.digits;
  }
  friend bool operator!=(const NodeIndex& a, const NodeIndex& b) { return !(a == b); }
  friend bool operator<(const NodeIndex& a, const NodeIndex& b) {
    return a.digits < b.digits || (a.digits == b.digits && a.order < b.order);
  }
};

/// Integer cell coordinates at a given order: column i, row j in [0, 2^n),
/// centre ((2i+1)/2^(n+1), (2j+1)/2^(n+1)). Order 0 is the unit square
/// itself with centre (1/2, 1/2).
struct GridCell {
  int order = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;

  ExactPoint center() const;

  friend bool operator==(const GridCell& a, const GridCell& b) {
    return a.order == b.order && a.i == b.i && a.j == b.j;
  }
  friend bool operator!=(const GridCell& a, const GridCell& b) { return !(a == b); }
};

/// One of the four affine contractions T_q(p) = (H_q p + h_q) / 2 that
/// generate the curve. h entries are stored unscaled (h3 = (2,1)).
struct Transform {
  std::int8_t h[2][2];   // H_q, entries in {-1,0,1}
  std::int8_t off[2];    // h_q
  std::uint8_t tag = 0;  // q

  ExactPoint apply(const ExactPoint& p) const;
  static const Transform& of(int q);
};

/// Centre of the first-order cell q: F_0=(1/4,1/4), F_1=(1/4,3/4),
/// F_2=(3/4,3/4), F_3=(3/4,1/4).
ExactPoint first_order_center(int q);

/// Parities (mod 2) of the number of T_0 and T_3 occurrences among the
/// digits strictly before position j (j is a 0-based prefix length).
std::pair<int, int> transform_parities(const std::vector<std::uint8_t>& digits, int j);

/// Base-4 expansion of k, most significant digit first, zero-padded to
/// length `order`. Throws std::out_of_range if k >= 4^order.
std::vector<std::uint8_t> rank_to_digits(std::uint64_t k, int order);

/// Image of the node under the standard map: T_{q1} ... T_{qn} applied to
/// the origin. Lands on a corner of the node's sub-square.
ExactPoint map_standard(const NodeIndex& node);

/// Centre-shifted map: T_{q1} ... T_{q_{n-1}} applied to F_{qn}; returns
/// the unique cell whose centre is that point.
GridCell map_center(const NodeIndex& node);

/// Closed-form evaluation of the standard map via the H0/H3 parity
/// counters; equals map_standard on every node.
ExactPoint map_simplified(const NodeIndex& node);

/// Inverse of map_center at fixed order (the centre map is a bijection
/// rank <-> cell per order).
NodeIndex inverse_map_center(const GridCell& cell);

/// The 4^n cells in rank order (order 0: the single root cell).
std::vector<GridCell> curve_nodes(int order);

/// Closed sub-squares intersect (share interior, an edge or a corner).
/// Orders may differ.
bool cells_touch(const GridCell& a, const GridCell& b);

/// Same order and Chebyshev distance exactly 1.
bool king_adjacent(const GridCell& a, const GridCell& b);

/// Shorthand: the cell named by a digit prefix.
GridCell cell_of(const NodeIndex& prefix);

}  // namespace hilcov
