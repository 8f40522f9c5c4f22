#include "hilcov/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hilcov {

namespace {

std::int64_t shifted(std::int64_t v, int by) {
  assert(by >= 0 && by < 62);
  return v << by;
}

}  // namespace

double ExactScalar::value() const { return static_cast<double>(num) / static_cast<double>(std::int64_t{1} << pow2); }

std::string ExactScalar::to_decimal() const {
  std::int64_t n = num;
  std::string sign;
  if (n < 0) {
    sign = "-";
    n = -n;
  }
  const std::int64_t whole = n >> pow2;
  std::uint64_t frac = static_cast<std::uint64_t>(n) - (static_cast<std::uint64_t>(whole) << pow2);
  std::string out = sign + std::to_string(whole);
  if (frac == 0) return out;
  out += '.';
  std::string digits;
  const std::uint64_t mask = (std::uint64_t{1} << pow2) - 1;
  while (frac != 0) {
    unsigned __int128 wide = static_cast<unsigned __int128>(frac) * 10u;
    digits += static_cast<char>('0' + static_cast<unsigned>(wide >> pow2));
    frac = static_cast<std::uint64_t>(wide) & mask;
  }
  return out + digits;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  const int p = std::max(a.pow2, b.pow2);
  return shifted(a.num, p - a.pow2) == shifted(b.num, p - b.pow2);
}

double ExactPoint::xd() const { return x().value(); }
double ExactPoint::yd() const { return y().value(); }

ExactPoint ExactPoint::rescaled(int p) const {
  if (p < pow2) throw std::invalid_argument("rescaled: cannot lower denominator");
  return {shifted(xn, p - pow2), shifted(yn, p - pow2), p};
}

bool operator==(const ExactPoint& a, const ExactPoint& b) {
  const int p = std::max(a.pow2, b.pow2);
  return shifted(a.xn, p - a.pow2) == shifted(b.xn, p - b.pow2) &&
         shifted(a.yn, p - a.pow2) == shifted(b.yn, p - b.pow2);
}

NodeIndex::NodeIndex(int order_, std::vector<std::uint8_t> digits_)
    : order(order_), digits(std::move(digits_)) {
  if (order < 0) throw std::invalid_argument("NodeIndex: negative order");
  if (static_cast<int>(digits.size()) != order)
    throw std::invalid_argument("NodeIndex: digit count does not match order");
  for (auto d : digits)
    if (d > 3) throw std::invalid_argument("NodeIndex: digit out of range 0..3");
}

NodeIndex NodeIndex::from_rank(std::uint64_t rank, int order) {
  return NodeIndex(order, rank_to_digits(rank, order));
}

NodeIndex NodeIndex::from_string(const std::string& s) {
  std::vector<std::uint8_t> d;
  d.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '3') throw std::invalid_argument(std::string("bad quaternary digit '") + c + "'");
    d.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  // Take the size before the move: argument evaluation order is unspecified.
  const int order = static_cast<int>(d.size());
  return NodeIndex(order, std::move(d));
}

std::uint64_t NodeIndex::rank() const {
  std::uint64_t r = 0;
  for (auto d : digits) r = r * 4 + d;
  return r;
}

std::string NodeIndex::to_string() const {
  std::string s;
  s.reserve(digits.size());
  for (auto d : digits) s += static_cast<char>('0' + d);
  return s;
}

NodeIndex NodeIndex::prefix(int len) const {
  if (len < 0 || len > order) throw std::out_of_range("prefix: bad length");
  return NodeIndex(len, std::vector<std::uint8_t>(digits.begin(), digits.begin() + len));
}

NodeIndex NodeIndex::parent() const {
  if (order == 0) throw std::out_of_range("parent: root has no parent");
  return prefix(order - 1);
}

NodeIndex NodeIndex::child(int q) const {
  if (q < 0 || q > 3) throw std::invalid_argument("child: digit out of range");
  auto d = digits;
  d.push_back(static_cast<std::uint8_t>(q));
  return NodeIndex(order + 1, std::move(d));
}

bool NodeIndex::is_prefix_of(const NodeIndex& other) const {
  if (order > other.order) return false;
  return std::equal(digits.begin(), digits.end(), other.digits.begin());
}

ExactPoint GridCell::center() const { return {2 * i + 1, 2 * j + 1, order + 1}; }

namespace {

// H0 swaps the axes; H1 = H2 = identity; H3 = -H0. Offsets h0..h3 place the
// four images so the curve runs lower-left, upper-left, upper-right,
// lower-right.
const std::array<Transform, 4> kTransforms = {{
    {{{0, 1}, {1, 0}}, {0, 0}, 0},
    {{{1, 0}, {0, 1}}, {0, 1}, 1},
    {{{1, 0}, {0, 1}}, {1, 1}, 2},
    {{{0, -1}, {-1, 0}}, {2, 1}, 3},
}};

const std::array<ExactPoint, 4> kFirstOrderCenters = {{
    {1, 1, 2},  // (1/4, 1/4)
    {1, 3, 2},  // (1/4, 3/4)
    {3, 3, 2},  // (3/4, 3/4)
    {3, 1, 2},  // (3/4, 1/4)
}};

}  // namespace

ExactPoint Transform::apply(const ExactPoint& p) const {
  const std::int64_t scale = std::int64_t{1} << p.pow2;
  return {h[0][0] * p.xn + h[0][1] * p.yn + off[0] * scale,
          h[1][0] * p.xn + h[1][1] * p.yn + off[1] * scale, p.pow2 + 1};
}

const Transform& Transform::of(int q) {
  if (q < 0 || q > 3) throw std::invalid_argument("Transform::of: digit out of range");
  return kTransforms[static_cast<std::size_t>(q)];
}

ExactPoint first_order_center(int q) {
  if (q < 0 || q > 3) throw std::invalid_argument("first_order_center: digit out of range");
  return kFirstOrderCenters[static_cast<std::size_t>(q)];
}

std::pair<int, int> transform_parities(const std::vector<std::uint8_t>& digits, int j) {
  int e0 = 0, e3 = 0;
  for (int i = 0; i < j; ++i) {
    if (digits[static_cast<std::size_t>(i)] == 0) e0 ^= 1;
    if (digits[static_cast<std::size_t>(i)] == 3) e3 ^= 1;
  }
  return {e0, e3};
}

std::vector<std::uint8_t> rank_to_digits(std::uint64_t k, int order) {
  if (order < 0 || order > 30) throw std::out_of_range("rank_to_digits: order out of range");
  if (order < 30 && k >= (std::uint64_t{1} << (2 * order)))
    throw std::out_of_range("rank_to_digits: rank exceeds 4^order");
  std::vector<std::uint8_t> d(static_cast<std::size_t>(order));
  for (int pos = order - 1; pos >= 0; --pos) {
    d[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(k & 3u);
    k >>= 2;
  }
  return d;
}

ExactPoint map_standard(const NodeIndex& node) {
  ExactPoint p{0, 0, 0};
  for (auto it = node.digits.rbegin(); it != node.digits.rend(); ++it)
    p = Transform::of(*it).apply(p);
  return p;
}

GridCell map_center(const NodeIndex& node) {
  if (node.order == 0) return {0, 0, 0};
  ExactPoint p = first_order_center(node.digits.back());
  for (int pos = node.order - 2; pos >= 0; --pos)
    p = Transform::of(node.digits[static_cast<std::size_t>(pos)]).apply(p);
  // p = (2i+1, 2j+1) / 2^(n+1) by construction.
  assert(p.pow2 == node.order + 1);
  assert((p.xn & 1) == 1 && (p.yn & 1) == 1);
  return {node.order, (p.xn - 1) / 2, (p.yn - 1) / 2};
}

ExactPoint map_simplified(const NodeIndex& node) {
  const int n = node.order;
  std::int64_t xs = 0, ys = 0;  // accumulated over denominator 2^n
  int e0 = 0, e3 = 0;
  for (int j = 1; j <= n; ++j) {
    const int q = node.digits[static_cast<std::size_t>(j - 1)];
    const Transform& t = Transform::of(q);
    // M = H0^e0 * H3^e3 applied to h_q.
    std::int64_t vx = t.off[0], vy = t.off[1];
    if (e0 ^ e3) std::swap(vx, vy);  // both involutions swap the axes
    if (e3) {
      vx = -vx;
      vy = -vy;
    }
    const int shift = n - j;
    xs += vx << shift;
    ys += vy << shift;
    if (q == 0) e0 ^= 1;
    if (q == 3) e3 ^= 1;
  }
  return {xs, ys, n};
}

NodeIndex inverse_map_center(const GridCell& cell) {
  if (cell.order < 0 || cell.order > 30) throw std::out_of_range("inverse_map_center: order out of range");
  const std::int64_t side = std::int64_t{1} << cell.order;
  if (cell.i < 0 || cell.i >= side || cell.j < 0 || cell.j >= side)
    throw std::out_of_range("inverse_map_center: cell outside the grid");
  std::vector<std::uint8_t> d;
  d.reserve(static_cast<std::size_t>(cell.order));
  std::int64_t i = cell.i, j = cell.j;
  for (int n = cell.order; n > 0; --n) {
    const std::int64_t half = std::int64_t{1} << (n - 1);
    std::uint8_t q;
    if (i < half && j < half) {
      q = 0;
      std::swap(i, j);  // undo the axis swap of T0
    } else if (i < half) {
      q = 1;
      j -= half;
    } else if (j >= half) {
      q = 2;
      i -= half;
      j -= half;
    } else {
      q = 3;
      const std::int64_t ni = half - 1 - j;
      const std::int64_t nj = 2 * half - 1 - i;
      i = ni;
      j = nj;
    }
    d.push_back(q);
  }
  return NodeIndex(cell.order, std::move(d));
}

std::vector<GridCell> curve_nodes(int order) {
  if (order < 0) throw std::invalid_argument("curve_nodes: negative order");
  if (order == 0) return {GridCell{0, 0, 0}};
  const std::uint64_t count = std::uint64_t{1} << (2 * order);
  std::vector<GridCell> cells;
  cells.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) cells.push_back(map_center(NodeIndex::from_rank(r, order)));
  return cells;
}

bool cells_touch(const GridCell& a, const GridCell& b) {
  const int k = std::max(a.order, b.order);
  const std::int64_t alo_x = a.i << (k - a.order), ahi_x = (a.i + 1) << (k - a.order);
  const std::int64_t alo_y = a.j << (k - a.order), ahi_y = (a.j + 1) << (k - a.order);
  const std::int64_t blo_x = b.i << (k - b.order), bhi_x = (b.i + 1) << (k - b.order);
  const std::int64_t blo_y = b.j << (k - b.order), bhi_y = (b.j + 1) << (k - b.order);
  return alo_x <= bhi_x && blo_x <= ahi_x && alo_y <= bhi_y && blo_y <= ahi_y;
}

bool king_adjacent(const GridCell& a, const GridCell& b) {
  if (a.order != b.order) return false;
  const std::int64_t di = a.i > b.i ? a.i - b.i : b.i - a.i;
  const std::int64_t dj = a.j > b.j ? a.j - b.j : b.j - a.j;
  return std::max(di, dj) == 1;
}

GridCell cell_of(const NodeIndex& prefix) { return map_center(prefix); }

}  // namespace hilcov
