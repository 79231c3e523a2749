#include "tlt/statistics.hpp"

#include <algorithm>

#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"

namespace tlt {

StatReport stat_report(int n, int threads) {
  struct Acc {
    Int tableaux{0}, oc{0}, corners{0};
    std::vector<Int> hist;
  };
  // One accumulator per chunk; merged in chunk order below.
  std::vector<Acc> accs(chunk_count(n, threads));
  generate_chunked(
      n, threads,
      [&](size_t chunk, const Tableau& t, const InsertionCode&, const PointTrace&) {
        Acc& a = accs[chunk];
        ++a.tableaux;
        int occ = 0, cor = 0;
        for (const Corner& c : corners(t)) {
          ++cor;
          occ += c.occupied;
        }
        a.oc += occ;
        a.corners += cor;
        if (a.hist.size() <= static_cast<size_t>(occ)) a.hist.resize(occ + 1, Int(0));
        ++a.hist[occ];
      });

  StatReport r;
  r.n = n;
  r.total_tableaux = 0;
  r.total_oc = 0;
  r.total_corners = 0;
  for (const Acc& a : accs) {
    r.total_tableaux += a.tableaux;
    r.total_oc += a.oc;
    r.total_corners += a.corners;
    if (r.oc_histogram.size() < a.hist.size()) r.oc_histogram.resize(a.hist.size(), Int(0));
    for (size_t i = 0; i < a.hist.size(); ++i) r.oc_histogram[i] += a.hist[i];
  }

  // Var = E[oc^2] - E[oc]^2 over the uniform distribution, exactly.
  Rat mean = Rat(r.total_oc) / Rat(r.total_tableaux);
  Rat m2 = 0;
  for (size_t k = 0; k < r.oc_histogram.size(); ++k)
    m2 += Rat(Int(k) * Int(k) * r.oc_histogram[k]);
  m2 /= Rat(r.total_tableaux);
  r.variance = m2 - mean * mean;
  return r;
}

Int oc_total(int n) {
  Int total = 0;
  generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    total += occupied_corner_count(t);
  });
  return total;
}

std::pair<Tableau, int> removal_bijection(const Tableau& t, const Corner& corner) {
  if (!corner.occupied || !t.pointed(corner.cell))
    throw NotOccupied("removal requires an occupied corner");
  const Cell p = corner.cell;
  bool row_single = true, col_single = true;
  for (const Cell& q : t.points) {
    if (q == p) continue;
    if (q.r == p.r) row_single = false;
    if (q.c == p.c) col_single = false;
  }
  if (row_single == col_single)
    throw DomainError("corner's row/column occupancy is not nearly empty; invalid input");

  Tableau out;
  if (row_single) {
    for (int r = 0; r < t.row_count(); ++r)
      if (r != p.r) out.rows.push_back(t.rows[r]);
    for (Cell q : t.points) {
      if (q == p) continue;
      if (q.r > p.r) --q.r;
      out.points.push_back(q);
    }
  } else {
    for (int r = 0; r < t.row_count(); ++r) {
      int len = t.rows[r] - (t.rows[r] > p.c ? 1 : 0);
      if (len > 0) out.rows.push_back(len);
    }
    for (Cell q : t.points) {
      if (q == p) continue;
      if (q.c > p.c) --q.c;
      out.points.push_back(q);
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return {std::move(out), corner.bottom_edge_index};
}

IntPolynomial P_recurrence(int n) {
  if (n < 0) throw DomainError("n must be >= 0");
  IntPolynomial p{{Int(1)}};  // P_0 = 1
  IntPolynomial one{{Int(1)}};
  IntPolynomial one_minus_x{{Int(1), Int(-1)}};
  for (int k = 1; k <= n; ++k) {
    IntPolynomial rhs = Int(k) * p + Int(2) * (one_minus_x * p.derivative());
    IntPolynomial next = integrate(rhs);
    Int constant = factorial(k) - next.eval(1);
    next = next + IntPolynomial{{constant}};
    p = std::move(next);
  }
  return p;
}

IntPolynomial P_enum(int n, int threads) {
  StatReport r = stat_report(n, threads);
  return IntPolynomial{r.oc_histogram};
}

bool a_recurrence_check(int n) {
  if (n < 2) throw DomainError("recurrence link needs n >= 2");
  IntPolynomial prev = P_enum(n - 1), cur = P_enum(n);
  int kmax = std::max(prev.degree(), cur.degree()) + 1;
  for (int k = 1; k <= kmax; ++k) {
    Int lhs = Int(k) * cur.coeff(k);
    Int rhs = Int(2) * k * prev.coeff(k) + Int(n - 2 * (k - 1)) * prev.coeff(k - 1);
    if (lhs != rhs) return false;
  }
  return true;
}

Rat variance_oc(int n) {
  IntPolynomial p = P_recurrence(n);
  Int p1 = p.derivative().eval(1);
  Int p2 = p.derivative().derivative().eval(1);
  return Rat(p2 + p1) / Rat(factorial(n)) - 1;
}

Int corners_total(int n) {
  Int total = 0;
  generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    total += corner_count(t);
  });
  return total;
}

Rat conjectured_corners_total(int n) {
  return Rat(factorial(n) * (n + 4)) / 6;
}

Int perms_without_consecutive_cycles(int n) {
  if (n < 1 || n > 9) throw DomainError("brute force supported for 1 <= n <= 9");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  Int count = 0;
  do {
    bool forbidden = false;
    std::vector<char> seen(n + 1, 0);
    for (int start = 1; start <= n && !forbidden; ++start) {
      if (seen[start]) continue;
      // walk the cycle containing `start`, tracking its minimum and length
      int len = 0, mn = start, cur = start;
      do {
        seen[cur] = 1;
        mn = std::min(mn, cur);
        cur = w[cur - 1];
        ++len;
      } while (cur != start);
      // forbidden iff the cycle is i -> i+1 -> ... -> i+len-1 -> i
      int probe = mn;
      bool runs = true;
      for (int s = 0; s < len; ++s) {
        int want = (s == len - 1) ? mn : probe + 1;
        if (w[probe - 1] != want) {
          runs = false;
          break;
        }
        probe = want;
      }
      if (runs) forbidden = true;
    }
    if (!forbidden) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

}  // namespace tlt
