#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tlt/errors.hpp"

namespace tlt {

struct Cell {
  int r{}, c{};
  auto operator<=>(const Cell&) const = default;
};

// A filling of a Young diagram with points. Coordinates are 0-indexed from
// the top-left, rows downward, columns rightward. The point set is kept
// sorted so equality doubles as canonical point-arrangement equality.
struct Tableau {
  std::vector<int> rows;      // weakly decreasing row lengths
  std::vector<Cell> points;   // sorted lexicographically

  auto operator<=>(const Tableau&) const = default;

  int size() const { return static_cast<int>(points.size()); }
  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return rows.empty() ? 0 : rows[0]; }
  bool pointed(Cell x) const;
};

// The unique size-1 tableau; starting point of every insertion chain.
Tableau unit_tableau();

// Border edges and lattice-path steps share one alphabet: 'E' is a horizontal
// edge (an East step, the bottom edge of its cell), 'N' a vertical edge (a
// North step, the right edge of its cell). Edges are 1-indexed SW to NE.
struct Edge {
  char dir{};  // 'E' or 'N'
  Cell cell;   // the cell this edge borders
};

// One of the three defining rules failed. rule 1: root (0,0) missing.
// rule 2: a non-root point with both (or neither) a point above and a point
// to its left; witness is that point. rule 3: empty line; witness {r,-1}
// for row r, {-1,c} for column c.
struct RuleViolation : TltError {
  int rule;
  Cell witness;
  RuleViolation(int rule_, Cell w, const std::string& msg)
      : TltError(msg), rule(rule_), witness(w) {}
};

// Checks the three rules and returns the tableau; throws RuleViolation with
// the first violation in row-major scan order. Malformed input (empty or
// increasing shape, out-of-shape or duplicate points) throws DomainError.
Tableau validate(std::vector<int> shape, std::vector<Cell> points);

// Non-throwing variant used by generators and hot loops.
bool is_valid(const Tableau& t);

// Height of column c (number of rows whose length exceeds c).
int col_height(const Tableau& t, int c);

// The n+1 border edges, SW to NE. edges[i-1] is edge i.
std::vector<Edge> border_edges(const Tableau& t);

// Border edges as a word over {E,N}; length n+1, starts 'E', ends 'N'.
std::string border_word(const Tableau& t);

// Rebuilds the row lengths encoded by a border word.
std::vector<int> shape_from_word(const std::string& w);

struct Corner {
  Cell cell;
  int bottom_edge_index{};  // 1-based; the right edge is index+1
  bool occupied{};
};

// Cells whose bottom and right edges are both border edges (EN factors),
// SW to NE. c(T) = corners(T).size().
std::vector<Corner> corners(const Tableau& t);

int corner_count(const Tableau& t);
int occupied_corner_count(const Tableau& t);

// NE factors of the border word; always corner_count - 1.
int inner_corner_count(const Tableau& t);

// The rightmost point among those at the bottom of a column, together with
// sp(T): the 1-based index of the horizontal border edge directly under it.
std::pair<Cell, int> special_point(const Tableau& t);
int sp_index(const Tableau& t);

Tableau transpose(const Tableau& t);
bool is_symmetric(const Tableau& t);

// Interior of the border word with '1' for a particle (E) and '0' for an
// empty site (N): a tableau of size n+1 projects to a state of length n.
std::string project_state(const Tableau& t);

// "rows=[a,b,...] points=(r,c)(r,c)..." debug/reporting form.
std::string to_string(const Tableau& t);

}  // namespace tlt
