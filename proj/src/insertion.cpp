#include "tlt/insertion.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tlt/errors.hpp"

namespace tlt {

Cell shift_cell(const Edge& e, Cell x) {
  if (e.dir == 'E') {
    if (x.r > e.cell.r) ++x.r;
  } else {
    if (x.r <= e.cell.r && x.c > e.cell.c) ++x.c;
  }
  return x;
}

static Cell new_point_of(const Edge& e) {
  return e.dir == 'E' ? Cell{e.cell.r + 1, e.cell.c} : Cell{e.cell.r, e.cell.c + 1};
}

Tableau insert_point(const Tableau& t, int i) {
  const int n = t.size();
  if (i < 1 || i > n + 1)
    throw IndexOutOfRange("edge index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n + 1));
  auto es = border_edges(t);
  const Edge e = es[i - 1];
  const int sp = sp_index(t);
  std::string w = border_word(t);

  // New border word. At i >= sp edge i simply splits into the EN factor of
  // the new corner; at i < sp the inserted line continues as a ribbon of
  // empty cells hugging the old border up to the special point, which in
  // border-word terms stretches E over [i..sp-1] and moves the N to sp.
  std::string w2 = w.substr(0, i - 1);
  if (i >= sp) {
    w2 += "EN";
    w2 += w.substr(i);
  } else {
    w2 += "EE";
    w2 += w.substr(i, sp - 1 - i);
    w2 += 'N';
    w2 += w.substr(sp);
  }

  Tableau out;
  out.rows = shape_from_word(w2);
  out.points.reserve(n + 1);
  for (Cell p : t.points) out.points.push_back(shift_cell(e, p));
  out.points.push_back(new_point_of(e));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

Tableau corner_insert(const Tableau& t, int i) {
  const int n = t.size();
  if (i < 1 || i > n + 1)
    throw IndexOutOfRange("edge index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n + 1));
  auto es = border_edges(t);
  const Edge e = es[i - 1];
  std::string w = border_word(t);
  std::string w2 = w.substr(0, i - 1) + "EN" + w.substr(i);

  Tableau out;
  out.rows = shape_from_word(w2);
  out.points.reserve(n + 1);
  for (Cell p : t.points) out.points.push_back(shift_cell(e, p));
  out.points.push_back(new_point_of(e));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

std::pair<Tableau, PointTrace> decode(const InsertionCode& code) {
  Tableau t = unit_tableau();
  PointTrace trace;
  trace.cell_of = {Cell{0, 0}};
  int k = 1;
  for (int m : code.entries) {
    ++k;
    if (m < 1 || m > k)
      throw DomainError("code entry m_" + std::to_string(k) + " = " +
                        std::to_string(m) + " outside 1.." + std::to_string(k));
    const Edge e = border_edges(t)[m - 1];
    t = insert_point(t, m);
    for (Cell& c : trace.cell_of) c = shift_cell(e, c);
    trace.cell_of.push_back(new_point_of(e));
  }
  return {std::move(t), std::move(trace)};
}

Tableau decode_tableau(const InsertionCode& code) { return decode(code).first; }

// Candidate predecessors for undoing an insertion at edge i of s. The undone
// insertion removed the special point p of s together with its nearly empty
// line; whether that line was a row or a column, and where the old special
// point's N letter sat for ribboned words, gives at most a handful of
// candidates, each checked by reinsertion.
static std::vector<Tableau> undo_candidates(const Tableau& s, int i) {
  std::string w = border_word(s);
  const int n = s.size();
  if (w[i - 1] != 'E') return {};

  const Cell p = special_point(s).first;
  bool row_single = true, col_single = true;
  for (const Cell& q : s.points) {
    if (q.r == p.r && q.c != p.c) row_single = false;
    if (q.c == p.c && q.r != p.r) col_single = false;
  }

  auto points_minus_row = [&] {
    std::vector<Cell> v;
    for (Cell q : s.points) {
      if (q == p) continue;
      if (q.r > p.r) --q.r;
      v.push_back(q);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  auto points_minus_col = [&] {
    std::vector<Cell> v;
    for (Cell q : s.points) {
      if (q == p) continue;
      if (q.r <= p.r && q.c > p.c) --q.c;
      v.push_back(q);
    }
    std::sort(v.begin(), v.end());
    return v;
  };

  std::vector<Tableau> cands;
  auto emit = [&](const std::string& word, bool removed_row) {
    Tableau t;
    t.rows = shape_from_word(word);
    t.points = removed_row ? points_minus_row() : points_minus_col();
    if (is_valid(t)) cands.push_back(std::move(t));
  };

  if (i < static_cast<int>(w.size()) && w[i] == 'N') {
    // ribbonless: the EN factor at i collapses back to a single edge
    std::string base = w.substr(0, i - 1);
    std::string tail = w.substr(i + 1);
    if (row_single) emit(base + "E" + tail, true);
    if (col_single) emit(base + "N" + tail, false);
  } else if (i < static_cast<int>(w.size()) && w[i] == 'E') {
    // ribboned: some later N was the old special point's; each choice of its
    // position j restores one E there and contracts the EE prefix at i
    for (int j = i + 2; j <= n + 1; ++j) {
      if (w[j - 1] != 'N') continue;
      std::string base = w.substr(0, i - 1);
      std::string mid = w.substr(i + 1, j - 1 - (i + 1));
      std::string tail = w.substr(j);
      if (row_single) emit(base + "E" + mid + "E" + tail, true);
      if (col_single) emit(base + "N" + mid + "E" + tail, false);
    }
  }
  return cands;
}

static Tableau undo_insert(const Tableau& s, int i) {
  std::vector<Tableau> hits;
  for (Tableau& c : undo_candidates(s, i))
    if (insert_point(c, i) == s) hits.push_back(std::move(c));
  if (hits.size() != 1)
    throw NotReachable("undo at edge " + std::to_string(i) + " found " +
                       std::to_string(hits.size()) + " predecessors for " +
                       to_string(s));
  return hits[0];
}

InsertionCode encode(const Tableau& t) {
  if (!is_valid(t)) throw DomainError("encode requires a valid tableau");
  InsertionCode code;
  Tableau cur = t;
  while (cur.size() > 1) {
    int i = sp_index(cur);
    code.entries.push_back(i);
    cur = undo_insert(cur, i);
  }
  std::reverse(code.entries.begin(), code.entries.end());
  return code;
}

// Depth-first over code suffixes with an explicit tableau stack so each node
// costs one insertion.
static void gen_rec(const Tableau& t, int n, InsertionCode& code, PointTrace& trace,
                    const TableauVisitor& visit) {
  if (t.size() == n) {
    visit(t, code, trace);
    return;
  }
  const int next = t.size() + 1;
  for (int i = 1; i <= next; ++i) {
    const Edge e = border_edges(t)[i - 1];
    Tableau s = insert_point(t, i);
    code.entries.push_back(i);
    std::vector<Cell> saved = trace.cell_of;
    for (Cell& c : trace.cell_of) c = shift_cell(e, c);
    trace.cell_of.push_back(new_point_of(e));
    gen_rec(s, n, code, trace, visit);
    trace.cell_of = std::move(saved);
    code.entries.pop_back();
  }
}

void generate_all(int n, const TableauVisitor& visit) {
  if (n < 1) throw DomainError("size must be >= 1");
  InsertionCode code;
  PointTrace trace;
  trace.cell_of = {Cell{0, 0}};
  gen_rec(unit_tableau(), n, code, trace, visit);
}

std::vector<Tableau> all_tableaux(int n) {
  std::vector<Tableau> out;
  generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
    out.push_back(t);
  });
  return out;
}

// Split depth: fix the first d code entries; the prefix count is (d+1)!,
// grown until there are enough chunks to keep the pool busy.
static std::vector<std::vector<int>> plan_prefixes(int n, int threads) {
  if (n < 1) throw DomainError("size must be >= 1");
  if (threads < 1) threads = 1;
  int d = 0;
  size_t prefixes = 1;
  while (d < n - 1 && prefixes < static_cast<size_t>(8) * threads) {
    ++d;
    prefixes *= (d + 1);
  }
  std::vector<std::vector<int>> chunks;
  chunks.reserve(prefixes);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > d + 1) {
      chunks.push_back(cur);
      return;
    }
    for (int m = 1; m <= k; ++m) {
      cur.push_back(m);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return chunks;
}

size_t chunk_count(int n, int threads) { return plan_prefixes(n, threads).size(); }

size_t generate_chunked(int n, int threads, const ChunkVisitor& visit) {
  if (threads < 1) threads = 1;
  std::vector<std::vector<int>> chunks = plan_prefixes(n, threads);

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= chunks.size()) return;
      InsertionCode code{chunks[idx]};
      auto [t, trace] = decode(code);
      gen_rec(t, n, code, trace,
              [&](const Tableau& tt, const InsertionCode& cc, const PointTrace& tr) {
                visit(idx, tt, cc, tr);
              });
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return chunks.size();
}

}  // namespace tlt
