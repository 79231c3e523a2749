#include "tlt/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace tlt {

bool Tableau::pointed(Cell x) const {
  return std::binary_search(points.begin(), points.end(), x);
}

Tableau unit_tableau() { return Tableau{{1}, {{0, 0}}}; }

int col_height(const Tableau& t, int c) {
  int h = 0;
  for (int len : t.rows) {
    if (len > c)
      ++h;
    else
      break;
  }
  return h;
}

std::vector<Edge> border_edges(const Tableau& t) {
  std::vector<Edge> es;
  es.reserve(t.size() + 1);
  int prev = 0;
  for (int r = t.row_count() - 1; r >= 0; --r) {
    for (int c = prev; c < t.rows[r]; ++c) es.push_back({'E', {r, c}});
    es.push_back({'N', {r, t.rows[r] - 1}});
    prev = t.rows[r];
  }
  return es;
}

std::string border_word(const Tableau& t) {
  std::string w;
  for (const Edge& e : border_edges(t)) w.push_back(e.dir);
  return w;
}

std::vector<int> shape_from_word(const std::string& w) {
  std::vector<int> rows;
  int x = 0;
  for (char ch : w) {
    if (ch == 'E')
      ++x;
    else
      rows.push_back(x);
  }
  std::reverse(rows.begin(), rows.end());
  return rows;
}

static void check_shape_and_points(const std::vector<int>& shape,
                                   const std::vector<Cell>& points) {
  if (shape.empty()) throw DomainError("empty shape");
  for (size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] <= 0) throw DomainError("row length must be positive");
    if (i && shape[i] > shape[i - 1])
      throw DomainError("row lengths must be weakly decreasing");
  }
  for (const Cell& p : points) {
    if (p.r < 0 || p.r >= static_cast<int>(shape.size()) || p.c < 0 ||
        p.c >= shape[p.r])
      throw DomainError("point outside the shape");
  }
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i] == points[i - 1]) throw DomainError("duplicate point");
}

Tableau validate(std::vector<int> shape, std::vector<Cell> points) {
  std::sort(points.begin(), points.end());
  check_shape_and_points(shape, points);
  Tableau t{std::move(shape), std::move(points)};

  if (!t.pointed({0, 0}))
    throw RuleViolation(1, {0, 0}, "rule 1: root cell (0,0) is not pointed");

  // points are sorted, so this scan is row-major
  for (const Cell& p : t.points) {
    if (p == Cell{0, 0}) continue;
    bool above = false, left = false;
    for (const Cell& q : t.points) {
      if (q.c == p.c && q.r < p.r) above = true;
      if (q.r == p.r && q.c < p.c) left = true;
    }
    if (above == left)
      throw RuleViolation(2, p,
                          above ? "rule 2: point has both a point above and one to its left"
                                : "rule 2: point has neither a point above nor one to its left");
  }

  std::vector<char> rowp(t.row_count(), 0), colp(t.col_count(), 0);
  for (const Cell& p : t.points) rowp[p.r] = 1, colp[p.c] = 1;
  for (int r = 0; r < t.row_count(); ++r)
    if (!rowp[r]) throw RuleViolation(3, {r, -1}, "rule 3: empty row");
  for (int c = 0; c < t.col_count(); ++c)
    if (!colp[c]) throw RuleViolation(3, {-1, c}, "rule 3: empty column");

  return t;
}

bool is_valid(const Tableau& t) {
  if (t.rows.empty()) return false;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i] <= 0) return false;
    if (i && t.rows[i] > t.rows[i - 1]) return false;
  }
  if (t.points.empty() || !(t.points[0] == Cell{0, 0})) return false;
  for (const Cell& p : t.points) {
    if (p.r < 0 || p.r >= t.row_count() || p.c < 0 || p.c >= t.rows[p.r]) return false;
    if (p == Cell{0, 0}) continue;
    bool above = false, left = false;
    for (const Cell& q : t.points) {
      if (q.c == p.c && q.r < p.r) above = true;
      if (q.r == p.r && q.c < p.c) left = true;
    }
    if (above == left) return false;
  }
  std::vector<char> rowp(t.row_count(), 0), colp(t.col_count(), 0);
  for (const Cell& p : t.points) rowp[p.r] = 1, colp[p.c] = 1;
  for (char b : rowp)
    if (!b) return false;
  for (char b : colp)
    if (!b) return false;
  for (size_t i = 1; i < t.points.size(); ++i)
    if (t.points[i] == t.points[i - 1]) return false;
  return true;
}

std::vector<Corner> corners(const Tableau& t) {
  auto es = border_edges(t);
  std::vector<Corner> out;
  for (size_t i = 0; i + 1 < es.size(); ++i)
    if (es[i].dir == 'E' && es[i + 1].dir == 'N')
      out.push_back({es[i].cell, static_cast<int>(i) + 1, t.pointed(es[i].cell)});
  return out;
}

int corner_count(const Tableau& t) { return static_cast<int>(corners(t).size()); }

int occupied_corner_count(const Tableau& t) {
  int k = 0;
  for (const Corner& c : corners(t)) k += c.occupied;
  return k;
}

int inner_corner_count(const Tableau& t) {
  std::string w = border_word(t);
  int k = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 'N' && w[i + 1] == 'E') ++k;
  return k;
}

std::pair<Cell, int> special_point(const Tableau& t) {
  int best = -1;
  for (int c = 0; c < t.col_count(); ++c) {
    Cell bottom{col_height(t, c) - 1, c};
    if (t.pointed(bottom)) best = c;
  }
  if (best < 0) throw DomainError("no column-bottom point; tableau invalid");
  // sp = index of the horizontal edge under column `best`, i.e. the
  // (best+1)-th E letter of the border word
  auto es = border_edges(t);
  int hcount = 0;
  for (size_t i = 0; i < es.size(); ++i) {
    if (es[i].dir == 'E') {
      if (hcount == best) return {{col_height(t, best) - 1, best}, static_cast<int>(i) + 1};
      ++hcount;
    }
  }
  throw DomainError("border walk never reached the special column");
}

int sp_index(const Tableau& t) { return special_point(t).second; }

Tableau transpose(const Tableau& t) {
  Tableau o;
  for (int c = 0; c < t.col_count(); ++c) o.rows.push_back(col_height(t, c));
  for (const Cell& p : t.points) o.points.push_back({p.c, p.r});
  std::sort(o.points.begin(), o.points.end());
  return o;
}

bool is_symmetric(const Tableau& t) { return transpose(t) == t; }

std::string project_state(const Tableau& t) {
  std::string w = border_word(t);
  std::string s;
  for (size_t i = 1; i + 1 < w.size(); ++i) s.push_back(w[i] == 'E' ? '1' : '0');
  return s;
}

std::string to_string(const Tableau& t) {
  std::ostringstream os;
  os << "rows=[";
  for (size_t i = 0; i < t.rows.size(); ++i) os << (i ? "," : "") << t.rows[i];
  os << "] points=";
  for (const Cell& p : t.points) os << "(" << p.r << "," << p.c << ")";
  return os.str();
}

}  // namespace tlt
