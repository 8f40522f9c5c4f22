// Slot rewrites and the continuous path of a planned sequence.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hilcov/errors.hpp"
#include "hilcov/evasion.hpp"

using namespace hilcov;

namespace {

bool same_cell(const GridCell& a, std::int64_t i, std::int64_t j) {
  return a.i == i && a.j == j;
}

}  // namespace

TEST_CASE("initial sequence is the curve in rank order") {
  PlannedSequence seq = PlannedSequence::initial(2);
  REQUIRE(seq.slots.size() == 16);
  CHECK(same_cell(seq.slots[0], 0, 0));
  CHECK(same_cell(seq.slots[4], 0, 2));
  CHECK(same_cell(seq.slots[15], 3, 0));
  for (SlotTag tag : seq.tags) CHECK(tag == SlotTag::normal);
}

TEST_CASE("skip pulls the successor into the blocked slot") {
  PlannedSequence seq = PlannedSequence::initial(2);
  rewrite(seq, 3, ManeuverGroup::skip_forward);  // obstacle [0,3] at (0,1)
  CHECK(same_cell(seq.slots[3], 0, 2));
  CHECK(seq.tags[3] == SlotTag::skip);
  std::vector<GridCell> cells = executed_cells(seq);
  REQUIRE(cells.size() == 15);  // consecutive duplicate collapsed
  CHECK(same_cell(cells[2], 1, 1));
  CHECK(same_cell(cells[3], 0, 2));  // king-move diagonal bridge
  CHECK(same_cell(cells[4], 0, 3));
  for (const GridCell& c : cells) CHECK_FALSE(same_cell(c, 0, 1));
}

TEST_CASE("backtrack revisits three slots back") {
  PlannedSequence seq = PlannedSequence::initial(2);
  rewrite(seq, 11, ManeuverGroup::backtrack_three);  // obstacle [2,3] at (3,2)
  CHECK(same_cell(seq.slots[11], 2, 2));
  CHECK(seq.tags[11] == SlotTag::backtrack);
  std::vector<GridCell> cells = executed_cells(seq);
  REQUIRE(cells.size() == 16);  // nothing collapses: one real revisit
  CHECK(same_cell(cells[8], 2, 2));
  CHECK(same_cell(cells[11], 2, 2));
  CHECK(same_cell(cells[12], 3, 1));  // diagonal exit from the revisit
  for (const GridCell& c : cells) CHECK_FALSE(same_cell(c, 3, 2));
}

TEST_CASE("detour pulls slot+3 forward and bridges slot+3 to slot+4") {
  PlannedSequence seq = PlannedSequence::initial(2);
  rewrite(seq, 4, ManeuverGroup::detour_ahead);  // obstacle [1,0] at (0,2)
  CHECK(same_cell(seq.slots[4], 1, 2));  // content of slot 7
  CHECK(same_cell(seq.slots[7], 2, 2));  // content of slot 8
  CHECK(seq.tags[4] == SlotTag::detour);
  CHECK(seq.tags[7] == SlotTag::detour);
  std::vector<GridCell> cells = executed_cells(seq);
  REQUIRE(cells.size() == 15);  // slots 7 and 8 now hold the same cell
  CHECK(same_cell(cells[3], 0, 1));
  CHECK(same_cell(cells[4], 1, 2));  // pulled-forward visit
  CHECK(same_cell(cells[5], 0, 3));
  CHECK(same_cell(cells[6], 1, 3));
  CHECK(same_cell(cells[7], 2, 2));
  for (const GridCell& c : cells) CHECK_FALSE(same_cell(c, 0, 2));
}

TEST_CASE("rewrites touch only the slots named by the plan") {
  PlannedSequence seq = PlannedSequence::initial(3);
  PlannedSequence before = seq;
  rewrite(seq, 20, ManeuverGroup::detour_ahead);
  for (size_t s = 0; s < seq.slots.size(); ++s) {
    if (s == 20 || s == 23) continue;
    CHECK(same_cell(seq.slots[s], before.slots[s].i, before.slots[s].j));
    CHECK(seq.tags[s] == before.tags[s]);
  }
}

TEST_CASE("rewrite windows are validated") {
  CHECK_THROWS_AS(RewritePlan::make(ManeuverGroup::skip_forward, 0, 16),
                  EvasionError);
  CHECK_THROWS_AS(RewritePlan::make(ManeuverGroup::skip_forward, 15, 16),
                  EvasionError);
  CHECK_THROWS_AS(RewritePlan::make(ManeuverGroup::backtrack_three, 2, 16),
                  EvasionError);
  CHECK_THROWS_AS(RewritePlan::make(ManeuverGroup::detour_ahead, 12, 16),
                  EvasionError);
  CHECK_NOTHROW(RewritePlan::make(ManeuverGroup::detour_ahead, 11, 16));
  CHECK_NOTHROW(RewritePlan::make(ManeuverGroup::backtrack_three, 3, 16));
}

TEST_CASE("polyline of the unmodified order-1 tour") {
  Polyline line = to_polyline(PlannedSequence::initial(1));
  REQUIRE(line.segments.size() == 3);
  CHECK(line.segments[0].a == ExactPoint{1, 1, 2});
  CHECK(line.segments[0].b == ExactPoint{1, 3, 2});
  CHECK(line.segments[2].a == ExactPoint{3, 3, 2});
  CHECK(line.segments[2].b == ExactPoint{3, 1, 2});
  CHECK(line.segments[0].t0 == ExactScalar{0, 2});
  CHECK(line.segments[0].t1 == ExactScalar{1, 2});
  CHECK(line.segments[2].t1 == ExactScalar{3, 2});
}

TEST_CASE("collapsed duplicates merge their interval into the previous leg") {
  PlannedSequence seq = PlannedSequence::initial(1);
  rewrite(seq, 1, ManeuverGroup::non_corner_skip);  // obstacle [1] at (0,1)
  Polyline line = to_polyline(seq);
  REQUIRE(line.segments.size() == 2);
  CHECK(line.segments[0].a == ExactPoint{1, 1, 2});
  CHECK(line.segments[0].b == ExactPoint{3, 3, 2});
  CHECK(line.segments[0].t0 == ExactScalar{0, 2});
  CHECK(line.segments[0].t1 == ExactScalar{2, 2});
  CHECK(line.segments[1].b == ExactPoint{3, 1, 2});
  CHECK(line.segments[1].t1 == ExactScalar{3, 2});
}
