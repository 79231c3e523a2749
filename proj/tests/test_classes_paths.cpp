#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tlt/classes_paths.hpp"
#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"
#include "tlt/numeric.hpp"
#include "tlt/tableau.hpp"

using namespace tlt;

TEST_CASE("class partition basics") {
  auto one = partition_classes(1);
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->second.size() == 1);
  CHECK(canonical_representative(one.begin()->second) == unit_tableau());

  // classes partition the whole family
  for (int n = 1; n <= 6; ++n) {
    auto classes = partition_classes(n);
    Int members = 0;
    for (const auto& [key, cls] : classes) {
      members += cls.size();
      for (const Tableau& t : cls) CHECK(t.points == key);
    }
    CHECK(members == factorial(n));
  }
}

TEST_CASE("a size-5 class with occupied corners 3+1+1+0+0") {
  bool found = false;
  for (const auto& [key, cls] : partition_classes(5)) {
    if (cls.size() != 5) continue;
    std::multiset<int> ocs;
    for (const Tableau& t : cls) ocs.insert(occupied_corner_count(t));
    if (ocs == std::multiset<int>{0, 0, 1, 1, 3}) found = true;
  }
  CHECK(found);
}

TEST_CASE("each class holds exactly one all-corners-occupied member") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [key, cls] : partition_classes(n)) {
      int full = 0;
      for (const Tableau& t : cls)
        if (occupied_corner_count(t) == corner_count(t)) ++full;
      CHECK(full == 1);
      const Tableau& canon = canonical_representative(cls);
      CHECK(occupied_corner_count(canon) == corner_count(canon));
      // and the per-class count theorem
      Int oc_sum = 0;
      for (const Tableau& t : cls) oc_sum += occupied_corner_count(t);
      CHECK(oc_sum == Int(cls.size()));
    }
  }
  CHECK_THROWS_AS(canonical_representative(std::vector<Tableau>{}), NoCanonical);
  std::vector<Tableau> two{unit_tableau(), unit_tableau()};
  CHECK_THROWS_AS(canonical_representative(two), MultipleCanonical);
}

TEST_CASE("path enumeration below a path") {
  CHECK(paths_below("EN") == std::vector<LatticePath>{"EN"});
  auto two = paths_below("ENEN");
  CHECK(std::set<LatticePath>(two.begin(), two.end()) ==
        std::set<LatticePath>{"ENEN", "EENN"});
  auto three = paths_below("ENEENN");
  CHECK(std::set<LatticePath>(three.begin(), three.end()) ==
        std::set<LatticePath>{"ENEENN", "EENENN", "EEENNN"});

  // oracle: direct filter over all words with the same step counts
  for (const LatticePath& p : {LatticePath("ENENEN"), LatticePath("ENNEEN")}) {
    int e = std::count(p.begin(), p.end(), 'E');
    std::set<LatticePath> brute;
    std::string w = std::string(e, 'E') + std::string(p.size() - e, 'N');
    std::sort(w.begin(), w.end());
    do {
      if (weakly_below(w, p)) brute.insert(w);
    } while (std::next_permutation(w.begin(), w.end()));
    auto fast = paths_below(p);
    CHECK(std::set<LatticePath>(fast.begin(), fast.end()) == brute);
  }
}

TEST_CASE("common corners") {
  CHECK(cc("ENEN", "ENEN") == 2);
  CHECK(cc("ENEN", "EENN") == 0);
  CHECK(cc("EN", "EN") == 1);
  CHECK_THROWS_AS(cc("EN", "NE"), NotBelow);
  // the identity that restates the class theorem on paths
  for (const LatticePath& p : {LatticePath("EN"), LatticePath("ENEN"), LatticePath("ENENEN"),
                               LatticePath("ENEEENNN"), LatticePath("ENEENNEN")}) {
    auto below = paths_below(p);
    Int total = 0;
    for (const LatticePath& q : below) total += cc(p, q);
    CHECK(total == Int(below.size()));
  }
}

TEST_CASE("shift maps are mutually inverse") {
  for (const LatticePath& p :
       {LatticePath("ENEN"), LatticePath("ENENEN"), LatticePath("ENEENNEN")}) {
    auto below = paths_below(p);
    std::set<LatticePath> image;
    for (const LatticePath& p2 : below) {
      for (int c : corner_abscissas(p)) {
        bool common = false;
        for (int x : corner_abscissas(p2))
          if (x == c && e_step_height(p, c) == e_step_height(p2, c)) common = true;
        if (!common) {
          CHECK_THROWS_AS(shift_map(p, p2, c), NotCommonCorner);
          continue;
        }
        LatticePath q = shift_map(p, p2, c);
        CHECK(weakly_below(q, p));
        auto [back, cb] = shift_inverse(p, q);
        CHECK(back == p2);
        CHECK(cb == c);
        CHECK(image.insert(q).second);
      }
    }
    // the image exhausts paths below, each exactly once
    CHECK(image == std::set<LatticePath>(below.begin(), below.end()));
  }
  // the NE-most corner maps a path to itself (corners named by 0-based E index)
  CHECK(corner_abscissas("ENEN") == std::vector<int>{0, 1});
  CHECK(shift_map("ENEN", "ENEN", 1) == "ENEN");
  auto [p2, c] = shift_inverse("ENEN", "ENEN");
  CHECK(p2 == "ENEN");
  CHECK(c == 1);
}

TEST_CASE("members correspond to paths below the canonical border segment") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [key, cls] : partition_classes(n)) {
      const Tableau& canon = canonical_representative(cls);
      auto range = class_path_range(canon);
      LatticePath p = member_path(canon, range);
      CHECK(p.front() == 'E');
      CHECK(p.back() == 'N');
      auto below = paths_below(p);
      CHECK(below.size() == cls.size());
      std::set<LatticePath> member_paths;
      for (const Tableau& t : cls) {
        LatticePath mp = member_path(t, range);
        member_paths.insert(mp);
        CHECK(weakly_below(mp, p));
        CHECK(Int(occupied_corner_count(t)) == cc(p, mp));
        // outside the segment, borders agree across the class
        std::string wt = border_word(t), wc = border_word(canon);
        CHECK(wt.substr(0, range.first - 1) == wc.substr(0, range.first - 1));
        CHECK(wt.substr(range.second) == wc.substr(range.second));
      }
      CHECK(member_paths == std::set<LatticePath>(below.begin(), below.end()));
    }
  }
}
