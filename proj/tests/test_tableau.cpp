#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"
#include "tlt/tableau.hpp"

using namespace tlt;

namespace {

Tableau make(std::vector<int> rows, std::vector<Cell> pts) {
  std::sort(pts.begin(), pts.end());
  return Tableau{std::move(rows), std::move(pts)};
}

}  // namespace

TEST_CASE("unit tableau") {
  Tableau t = unit_tableau();
  CHECK(t.size() == 1);
  CHECK(is_valid(t));
  CHECK(border_word(t) == "EN");
  auto cs = corners(t);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].cell == Cell{0, 0});
  CHECK(cs[0].occupied);
  CHECK(inner_corner_count(t) == 0);
  CHECK(special_point(t).first == Cell{0, 0});
  CHECK(sp_index(t) == 1);
  CHECK(is_symmetric(t));
  CHECK(project_state(t).empty());
}

TEST_CASE("validate accepts the valid and names the failing rule") {
  CHECK(is_valid(make({1}, {{0, 0}})));

  SUBCASE("unpointed root is rule 1") {
    try {
      validate({2}, {{Cell{0, 1}}});
      FAIL("expected a rule violation");
    } catch (const RuleViolation& e) {
      CHECK(e.rule == 1);
    }
  }
  SUBCASE("point both above and to the left is rule 2") {
    try {
      validate({2, 2}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
      FAIL("expected a rule violation");
    } catch (const RuleViolation& e) {
      CHECK(e.rule == 2);
      CHECK(e.witness == Cell{1, 1});
    }
  }
  SUBCASE("point with neither neighbour is also rule 2") {
    try {
      validate({2, 2}, {{0, 0}, {1, 1}});
      FAIL("expected a rule violation");
    } catch (const RuleViolation& e) {
      CHECK(e.rule == 2);
      CHECK(e.witness == Cell{1, 1});
    }
  }
  SUBCASE("empty column is rule 3") {
    try {
      validate({2, 1}, {{0, 0}, {1, 0}});
      FAIL("expected a rule violation");
    } catch (const RuleViolation& e) {
      CHECK(e.rule == 3);
      CHECK(e.witness == Cell{-1, 1});  // column 1
    }
  }
  SUBCASE("malformed shapes are domain errors, not rule violations") {
    CHECK_THROWS_AS(validate({}, {}), DomainError);
    CHECK_THROWS_AS(validate({1, 2}, {{0, 0}, {1, 0}, {1, 1}}), DomainError);  // not weakly decreasing
    CHECK_THROWS_AS(validate({0}, {}), DomainError);
    CHECK_THROWS_AS(validate({1}, {{0, 0}, {0, 0}}), DomainError);  // duplicate point
    CHECK_THROWS_AS(validate({1}, {{0, 5}}), DomainError);          // outside the shape
  }
}

TEST_CASE("border words of the smallest shapes") {
  CHECK(border_word(make({2}, {{0, 0}, {0, 1}})) == "EEN");
  CHECK(border_word(make({1, 1}, {{0, 0}, {1, 0}})) == "ENN");
  CHECK(border_word(make({2, 1}, {{0, 0}, {0, 1}, {1, 0}})) == "ENEN");
  // edge 1 is always East and the last edge always North
  for (int n = 1; n <= 6; ++n)
    generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
      std::string w = border_word(t);
      CHECK(w.size() == static_cast<size_t>(n + 1));
      CHECK(w.front() == 'E');
      CHECK(w.back() == 'N');
      CHECK(shape_from_word(w) == t.rows);
    });
}

TEST_CASE("corners and occupied corners") {
  // the 2x1 hook: two corners, both occupied
  Tableau hook = make({2, 1}, {{0, 0}, {0, 1}, {1, 0}});
  auto cs = corners(hook);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].cell == Cell{1, 0});
  CHECK(cs[1].cell == Cell{0, 1});
  CHECK(cs[0].occupied);
  CHECK(cs[1].occupied);
  CHECK(inner_corner_count(hook) == 1);

  // all six size-3 tableaux, with the occupied-corner multiset {2,1,1,1,1,0}
  std::multiset<int> ocs;
  int seen = 0;
  generate_all(3, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    ++seen;
    ocs.insert(occupied_corner_count(t));
    CHECK(inner_corner_count(t) == corner_count(t) - 1);
  });
  CHECK(seen == 6);
  CHECK(ocs == std::multiset<int>{0, 1, 1, 1, 1, 2});
}

TEST_CASE("special point") {
  Tableau row2 = make({2}, {{0, 0}, {0, 1}});
  CHECK(special_point(row2).first == Cell{0, 1});
  CHECK(sp_index(row2) == 2);

  Tableau col2 = make({1, 1}, {{0, 0}, {1, 0}});
  CHECK(special_point(col2).first == Cell{1, 0});
  CHECK(sp_index(col2) == 1);

  // sp is the bottom edge of the column holding the right-most column-bottom point
  generate_all(5, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    auto [cell, sp] = special_point(t);
    CHECK(border_word(t)[sp - 1] == 'E');
    // no pointed cell below it in its column
    for (const Cell& p : t.points)
      if (p.c == cell.c) CHECK(p.r <= cell.r);
  });
}

TEST_CASE("transpose and symmetry") {
  Tableau hook = make({2, 1}, {{0, 0}, {0, 1}, {1, 0}});
  CHECK(is_symmetric(hook));
  Tableau row2 = make({2}, {{0, 0}, {0, 1}});
  CHECK_FALSE(is_symmetric(row2));
  CHECK(transpose(row2) == make({1, 1}, {{0, 0}, {1, 0}}));
  CHECK(is_symmetric(make({2, 2}, {{0, 0}, {0, 1}, {1, 0}})));

  generate_all(5, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    Tableau tt = transpose(t);
    CHECK(is_valid(tt));
    CHECK(transpose(tt) == t);
    CHECK(occupied_corner_count(tt) == occupied_corner_count(t));
  });
}

TEST_CASE("state projection drops the outer edges") {
  CHECK(project_state(make({2}, {{0, 0}, {0, 1}})) == "1");
  CHECK(project_state(make({1, 1}, {{0, 0}, {1, 0}})) == "0");
  generate_all(4, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    std::string s = project_state(t);
    std::string w = border_word(t);
    CHECK(s.size() == 3);
    CHECK(w.substr(1, w.size() - 2) ==
          [&] {
            std::string m;
            for (char c : s) m.push_back(c == '1' ? 'E' : 'N');
            return m;
          }());
  });
}
