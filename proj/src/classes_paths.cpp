#include "tlt/classes_paths.hpp"

#include <algorithm>

#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"

namespace tlt {

std::map<ClassKey, std::vector<Tableau>> partition_classes(int n) {
  std::map<ClassKey, std::vector<Tableau>> out;
  generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    out[t.points].push_back(t);
  });
  return out;
}

const Tableau& canonical_representative(const std::vector<Tableau>& cls) {
  const Tableau* found = nullptr;
  for (const Tableau& t : cls) {
    bool all_occupied = true;
    for (const Corner& c : corners(t))
      if (!c.occupied) {
        all_occupied = false;
        break;
      }
    if (!all_occupied) continue;
    if (found) throw MultipleCanonical("two members with all corners occupied");
    found = &t;
  }
  if (!found) throw NoCanonical("no member with all corners occupied");
  return *found;
}

std::pair<int, int> class_path_range(const Tableau& canonical) {
  auto cs = corners(canonical);
  if (cs.empty()) throw DomainError("tableau has no corners");
  return {cs.front().bottom_edge_index, cs.back().bottom_edge_index + 1};
}

LatticePath member_path(const Tableau& member, std::pair<int, int> range) {
  std::string w = border_word(member);
  if (range.first < 1 || range.second > static_cast<int>(w.size()))
    throw DomainError("path range outside the border word");
  return w.substr(range.first - 1, range.second - range.first + 1);
}

int e_step_height(const LatticePath& p, int x) {
  int seen_e = 0, height = 0;
  for (char s : p) {
    if (s == 'E') {
      if (seen_e == x) return height;
      ++seen_e;
    } else {
      ++height;
    }
  }
  throw DomainError("path has no E step at abscissa " + std::to_string(x));
}

std::vector<int> corner_abscissas(const LatticePath& p) {
  std::vector<int> out;
  int x = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 'E') {
      if (i + 1 < p.size() && p[i + 1] == 'N') out.push_back(x);
      ++x;
    }
  }
  return out;
}

static int east_count(const LatticePath& p) {
  return static_cast<int>(std::count(p.begin(), p.end(), 'E'));
}

bool weakly_below(const LatticePath& q, const LatticePath& p) {
  if (q.size() != p.size() || east_count(q) != east_count(p)) return false;
  const int w = east_count(p);
  for (int x = 0; x < w; ++x)
    if (e_step_height(q, x) > e_step_height(p, x)) return false;
  return true;
}

std::vector<LatticePath> paths_below(const LatticePath& p) {
  const int w = east_count(p);
  const int h = static_cast<int>(p.size()) - w;
  // heights[x] caps how many N steps may precede E step x
  std::vector<int> cap(w);
  for (int x = 0; x < w; ++x) cap[x] = e_step_height(p, x);

  std::vector<LatticePath> out;
  LatticePath cur;
  auto rec = [&](auto&& self, int e_done, int n_done) -> void {
    if (e_done == w && n_done == h) {
      out.push_back(cur);
      return;
    }
    if (e_done < w && n_done <= cap[e_done]) {
      cur.push_back('E');
      self(self, e_done + 1, n_done);
      cur.pop_back();
    }
    // an N is legal unless it would push the next E step above its cap
    if (n_done < h && (e_done == w || n_done + 1 <= cap[e_done])) {
      cur.push_back('N');
      self(self, e_done, n_done + 1);
      cur.pop_back();
    }
  };
  if (w == 0) return {p};  // all-North path: nothing varies
  rec(rec, 0, 0);
  return out;
}

static std::vector<int> common_corners(const LatticePath& p, const LatticePath& p2) {
  std::vector<int> out;
  auto ca = corner_abscissas(p), cb = corner_abscissas(p2);
  for (int x : ca) {
    if (std::find(cb.begin(), cb.end(), x) == cb.end()) continue;
    if (e_step_height(p, x) == e_step_height(p2, x)) out.push_back(x);
  }
  return out;
}

int cc(const LatticePath& p, const LatticePath& p2) {
  if (!weakly_below(p2, p)) throw NotBelow("second path is not weakly below the first");
  return static_cast<int>(common_corners(p, p2).size());
}

// Drops the N step that completes corner x in `path`.
static size_t n_index_of_corner(const LatticePath& path, int x) {
  int seen_e = 0;
  for (size_t i = 0; i < path.size(); ++i) {
    if (path[i] != 'E') continue;
    if (seen_e == x) {
      if (i + 1 >= path.size() || path[i + 1] != 'N')
        throw NotCommonCorner("no corner at that E step");
      return i + 1;
    }
    ++seen_e;
  }
  throw NotCommonCorner("abscissa outside the path");
}

LatticePath shift_map(const LatticePath& p, const LatticePath& p2, int c) {
  auto common = common_corners(p, p2);
  if (std::find(common.begin(), common.end(), c) == common.end())
    throw NotCommonCorner("not a common corner of the two paths");
  auto pc = corner_abscissas(p);
  if (c == pc.back()) return p2;  // the NE-most corner of p maps to p2 itself
  LatticePath out = p2;
  out.erase(out.begin() + n_index_of_corner(p2, c));
  out.push_back('N');
  return out;
}

std::pair<LatticePath, int> shift_inverse(const LatticePath& p, const LatticePath& q) {
  if (!weakly_below(q, p)) throw NotBelow("path is not weakly below the reference");
  const int w = east_count(p);
  int s = -1;
  for (int x = w - 1; x >= 0; --x)
    if (e_step_height(p, x) == e_step_height(q, x)) {
      s = x;
      break;
    }
  if (s < 0) throw DomainError("no common E step; impossible for weakly-below paths");

  if (s == w - 1) {
    auto common = common_corners(p, q);
    if (common.empty()) throw DomainError("no common corner; impossible in the image");
    return {q, common.back()};
  }
  // lift q's tail back North: remove its final N, reinsert right after E step s
  LatticePath out = q;
  size_t last_n = out.find_last_of('N');
  out.erase(out.begin() + last_n);
  int seen_e = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] != 'E') continue;
    if (seen_e == s) {
      out.insert(out.begin() + i + 1, 'N');
      return {out, s};
    }
    ++seen_e;
  }
  throw DomainError("E step vanished during lift; unreachable");
}

}  // namespace tlt
