#include "hilcov/corner.hpp"

#include <stdexcept>
#include <string>

namespace hilcov {

Classification classify(const NodeIndex& node) {
  if (node.order < 1) throw std::invalid_argument("classify: node must have order >= 1");
  const std::uint8_t m = node.digits.back();
  if (m == 1 || m == 2) return {NodeRole::non_corner, {}};

  // Length of the maximal trailing run of m.
  int p = node.order - 1;  // 1-based index of the digit before the run
  while (p >= 1 && node.digits[static_cast<std::size_t>(p - 1)] == m) --p;
  if (p == 0) return {NodeRole::terminal, {}};  // all 0s (start) or all 3s (end)

  CornerClass c;
  c.p = p;
  c.n_eff = node.order - p + 1;
  c.e = c.n_eff % 2;
  c.q_p = node.digits[static_cast<std::size_t>(p - 1)];
  c.m = m;
  c.kind = (m == 0) ? CornerKind::entering : CornerKind::exiting;
  return {NodeRole::corner, c};
}

ManeuverGroup maneuver_group(const CornerClass& c) {
  const auto bad = [&]() {
    throw std::invalid_argument("maneuver_group: tuple (" + std::to_string(c.e) + "," +
                                std::to_string(c.q_p) + "," + std::to_string(c.m) +
                                ") is not one of the 12 corner cases");
  };
  if (c.m != 0 && c.m != 3) bad();
  if (c.q_p > 3 || (c.e != 0 && c.e != 1)) bad();
  if (c.q_p == c.m) bad();  // would extend the run: the four start/end combinations

  if (c.m == 0) {
    // Entering corners.
    switch (c.q_p) {
      case 1:
        return c.e == 0 ? ManeuverGroup::detour_ahead : ManeuverGroup::skip_forward;
      case 2:
        return c.e == 0 ? ManeuverGroup::skip_forward : ManeuverGroup::detour_ahead;
      case 3:
        return c.e == 0 ? ManeuverGroup::skip_forward : ManeuverGroup::detour_ahead;
      default:
        bad();
    }
  } else {
    // Exiting corners.
    switch (c.q_p) {
      case 0:
        return c.e == 0 ? ManeuverGroup::skip_forward : ManeuverGroup::backtrack_three;
      case 1:
        return c.e == 0 ? ManeuverGroup::skip_forward : ManeuverGroup::backtrack_three;
      case 2:
        return c.e == 0 ? ManeuverGroup::backtrack_three : ManeuverGroup::skip_forward;
      default:
        bad();
    }
  }
  bad();
  return ManeuverGroup::non_corner_skip;  // unreachable
}

}  // namespace hilcov
