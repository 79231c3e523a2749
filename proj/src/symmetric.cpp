#include "tlt/symmetric.hpp"

#include <algorithm>
#include <set>

#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"

namespace tlt {

static void require_odd(int size) {
  if (size < 1 || size % 2 == 0) throw DomainError("symmetric tableaux have odd size");
}

std::vector<Tableau> generate_symmetric(int size) {
  require_odd(size);
  std::vector<Tableau> out;
  generate_all(size, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    if (is_symmetric(t)) out.push_back(t);
  });
  return out;
}

// All ways to grow a symmetric base by a mirror pair of nearly empty lines:
// a row at index x carrying its point at (x,pc) plus the mirror column at
// index x with point (pc,x). The final row length L is free; validity and
// symmetry prune the candidates.
static std::vector<Tableau> grow_sym(const Tableau& b) {
  std::vector<Tableau> out;
  const int nr = b.row_count();
  const int nc = b.col_count();
  for (int x = 1; x <= nr; ++x) {
    for (int pc = 0; pc <= nc; ++pc) {
      if (pc == x) continue;  // the root stays the only diagonal point
      for (int L = pc + 1; L <= nc + 1; ++L) {
        // Build the final row lengths directly. Row x gets L; the mirror
        // column at x runs through the rows above the new row's height, so
        // a surviving row is either covered by it (length grows by one,
        // and must already reach x) or not (must stop at or before x).
        bool ok = true;
        std::vector<int> rows2;
        rows2.reserve(nr + 1);
        for (int r = 0; r <= nr && ok; ++r) {
          if (r == x) {
            rows2.push_back(L);
            continue;
          }
          int len = b.rows[r - (r > x)];
          bool covered = r < L;  // the new column occupies cell (r, x)
          if (covered) {
            if (len < x)
              ok = false;
            else
              rows2.push_back(len + 1);
          } else {
            if (len > x)
              ok = false;
            else
              rows2.push_back(len);
          }
        }
        if (!ok) continue;
        Tableau s;
        s.rows = std::move(rows2);
        s.points.reserve(b.size() + 2);
        for (Cell p : b.points) {
          if (p.r >= x) ++p.r;
          if (p.c >= x) ++p.c;
          s.points.push_back(p);
        }
        s.points.push_back({x, pc});
        s.points.push_back({pc, x});
        std::sort(s.points.begin(), s.points.end());
        if (!is_valid(s)) continue;
        if (!is_symmetric(s)) continue;
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<Tableau> generate_symmetric_paired(int size) {
  require_odd(size);
  std::set<Tableau> level{unit_tableau()};
  for (int s = 3; s <= size; s += 2) {
    std::set<Tableau> next;
    for (const Tableau& b : level)
      for (Tableau& g : grow_sym(b)) next.insert(std::move(g));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

Tableau paired_insert(const Tableau& base, int i, Cell* below_corner, Cell* above_corner) {
  const int n = (base.size() + 1) / 2;
  if (i < 1 || i > n)
    throw IndexOutOfRange("paired insertion edge index " + std::to_string(i) +
                          " outside 1.." + std::to_string(n));
  auto es = border_edges(base);
  const Edge e = es[i - 1];
  Tableau r1 = corner_insert(base, i);
  Cell q1 = e.dir == 'E' ? Cell{e.cell.r + 1, e.cell.c} : Cell{e.cell.r, e.cell.c + 1};

  // Mirror edge: direction flipped, cell transposed, then mapped through the
  // first insertion's shift so we can find it on r1's border.
  Cell mc{e.cell.c, e.cell.r};
  mc = shift_cell(e, mc);
  const char md = e.dir == 'E' ? 'N' : 'E';
  auto es1 = border_edges(r1);
  int j = 0;
  for (size_t k = 0; k < es1.size(); ++k)
    if (es1[k].dir == md && es1[k].cell == mc) {
      j = static_cast<int>(k) + 1;
      break;
    }
  if (j == 0) throw DomainError("mirror edge not found; base not symmetric?");

  const Edge e2 = es1[j - 1];
  Tableau r2 = corner_insert(r1, j);
  Cell q2 = e2.dir == 'E' ? Cell{e2.cell.r + 1, e2.cell.c} : Cell{e2.cell.r, e2.cell.c + 1};
  q1 = shift_cell(e2, q1);

  if (below_corner) *below_corner = q1.r > q1.c ? q1 : q2;
  if (above_corner) *above_corner = q1.r > q1.c ? q2 : q1;
  return r2;
}

SymTriplet sym_removal(const Tableau& t, const Corner& corner) {
  if (!corner.occupied || !t.pointed(corner.cell))
    throw NotOccupied("symmetric removal requires an occupied corner");
  // Work from the below-diagonal representative of the mirror pair.
  const char rho = corner.cell.r > corner.cell.c ? 'b' : 'a';
  const Cell below = rho == 'b' ? corner.cell : Cell{corner.cell.c, corner.cell.r};
  const Cell mirror{below.c, below.r};

  bool row_single = true, col_single = true;
  for (const Cell& q : t.points) {
    if (q == below) continue;
    if (q.r == below.r) row_single = false;
    if (q.c == below.c) col_single = false;
  }
  if (row_single == col_single)
    throw DomainError("corner's lines not nearly empty; tableau not symmetric?");
  const int x = row_single ? below.r : below.c;  // drop row x and column x together

  SymTriplet trip;
  trip.rho = rho;
  // the below-diagonal bottom edge index; always within 1..n
  auto es = border_edges(t);
  trip.i = 0;
  for (size_t k = 0; k < es.size(); ++k)
    if (es[k].dir == 'E' && es[k].cell == below) {
      trip.i = static_cast<int>(k) + 1;
      break;
    }
  if (trip.i == 0) throw DomainError("corner cell has no bottom border edge");

  Tableau& b = trip.base;
  for (int r = 0; r < t.row_count(); ++r) {
    if (r == x) continue;
    b.rows.push_back(t.rows[r] - (t.rows[r] > x ? 1 : 0));
  }
  for (Cell q : t.points) {
    if (q == below || q == mirror) continue;
    if (q.r > x) --q.r;
    if (q.c > x) --q.c;
    b.points.push_back(q);
  }
  std::sort(b.points.begin(), b.points.end());
  return trip;
}

std::pair<Tableau, Corner> sym_insertion(const SymTriplet& trip) {
  Cell qb, qa;
  Tableau t = paired_insert(trip.base, trip.i, &qb, &qa);
  const Cell want = trip.rho == 'b' ? qb : qa;
  for (const Corner& c : corners(t))
    if (c.cell == want) return {std::move(t), c};
  throw DomainError("paired insertion did not leave its new point in a corner");
}

Int oc_total_symmetric(int size) {
  Int total = 0;
  for (const Tableau& t : generate_symmetric_paired(size))
    total += occupied_corner_count(t);
  return total;
}

IntPolynomial Q_recurrence(int n) {
  if (n < 0) throw DomainError("n must be >= 0");
  IntPolynomial q{{Int(1)}};  // Q_0 = 1
  IntPolynomial two_x{{Int(0), Int(2)}};
  IntPolynomial two_minus_2x2{{Int(2), Int(0), Int(-2)}};
  for (int k = 1; k <= n; ++k) {
    IntPolynomial rhs = Int(k) * (two_x * q) + two_minus_2x2 * q.derivative();
    IntPolynomial next = integrate(rhs);
    Int constant = pow2(k) * factorial(k) - next.eval(1);
    next = next + IntPolynomial{{constant}};
    for (int d = 1; d <= next.degree(); d += 2)
      if (next.coeff(d) != 0)
        throw OddPowerPresent("x^" + std::to_string(d) + " survives in Q_" +
                              std::to_string(k));
    q = std::move(next);
  }
  return q;
}

IntPolynomial Q_enum(int n) {
  std::vector<Int> hist;
  for (const Tableau& t : generate_symmetric_paired(2 * n + 1)) {
    int occ = occupied_corner_count(t);
    if (hist.size() <= static_cast<size_t>(occ)) hist.resize(occ + 1, Int(0));
    ++hist[occ];
  }
  return IntPolynomial{hist};
}

bool b_recurrence_check(int n) {
  // n=1 would link to the degenerate size-1 histogram (a bare x, carrying the
  // root's odd occupied corner), which the even-power family does not cover
  if (n < 2) throw DomainError("recurrence link needs n >= 2");
  IntPolynomial prev = Q_enum(n - 1), cur = Q_enum(n);
  // b_{n,k} is the coefficient of x^{2k}
  int kmax = std::max(prev.degree(), cur.degree()) / 2 + 1;
  for (int k = 1; k <= kmax; ++k) {
    Int lhs = Int(2) * k * cur.coeff(2 * k);
    Int rhs = Int(2) * (Int(2) * k * prev.coeff(2 * k) +
                        Int(n - 2 * (k - 1)) * prev.coeff(2 * (k - 1)));
    if (lhs != rhs) return false;
  }
  return true;
}

Rat variance_oc_symmetric(int n) {
  IntPolynomial q = Q_recurrence(n);
  Int q0 = q.eval(1);
  Int q1 = q.derivative().eval(1);
  Int q2 = q.derivative().derivative().eval(1);
  Rat mean = Rat(q1) / Rat(q0);
  return Rat(q2 + q1) / Rat(q0) - mean * mean;
}

Int corners_total_symmetric(int size) {
  Int total = 0;
  for (const Tableau& t : generate_symmetric_paired(size)) total += corner_count(t);
  return total;
}

Rat conjectured_sym_corners_literal(int n) {
  return Rat(pow2(n) * n * (4 * n + 13)) / 12;
}

Rat conjectured_sym_corners_factorial(int n) {
  return Rat(pow2(n) * factorial(n) * (4 * n + 13)) / 12;
}

}  // namespace tlt
