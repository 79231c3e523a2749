#pragma once

#include <functional>
#include <vector>

#include "tlt/tableau.hpp"

namespace tlt {

// The sequence (m_2,...,m_n) with 1 <= m_k <= k; m_1 = 1 is implicit. decode
// is a bijection from codes of length n-1 onto the size-n tableaux.
struct InsertionCode {
  std::vector<int> entries;
  auto operator<=>(const InsertionCode&) const = default;
};

// Labels each point with its insertion step: cell_of[k-1] is where p_k sits
// in the final tableau (positions track all shifts along the way).
struct PointTrace {
  std::vector<Cell> cell_of;
  Cell cell(int k) const { return cell_of[k - 1]; }
  // 1..n, or 0 if the cell holds no point.
  int label(Cell c) const {
    for (size_t i = 0; i < cell_of.size(); ++i)
      if (cell_of[i] == c) return static_cast<int>(i) + 1;
    return 0;
  }
};

// Where an existing cell moves when a new line is inserted at edge e: a
// horizontal edge (r,c) pushes rows below r down, a vertical edge pushes the
// cells right of c in rows <= r to the right.
Cell shift_cell(const Edge& e, Cell x);

// Insertion at border edge i (1 <= i <= size+1). A new nearly-empty row
// (horizontal edge) or column (vertical edge) is inserted ending at edge i
// with a point in its last cell; when i < sp(T) the word additionally grows
// a ribbon of empty cells reaching back to the old special point. The new
// point is the special point of the result: sp(result) = i.
Tableau insert_point(const Tableau& t, int i);

// The minimal insertion (no ribbon): the border word gains an EN factor at
// position i. Coincides with insert_point exactly when i >= sp(T). This is
// the inverse of the occupied-corner removal maps.
Tableau corner_insert(const Tableau& t, int i);

// Left-fold of insert_point over the code starting from the size-1 tableau.
std::pair<Tableau, PointTrace> decode(const InsertionCode& code);
Tableau decode_tableau(const InsertionCode& code);

// The unique code reproducing t, recovered by stepwise undo at i = sp: build
// the candidate predecessors (special point's singleton row removed, or its
// singleton column; one candidate per admissible ribbon split) and keep the
// one that reinserts back to t. Exactly one candidate ever matches on a valid
// tableau; anything else throws NotReachable.
InsertionCode encode(const Tableau& t);

// Streams all n! size-n tableaux in lexicographic code order. The trace
// passed to the visitor is reused storage, valid only during the call.
using TableauVisitor =
    std::function<void(const Tableau&, const InsertionCode&, const PointTrace&)>;
void generate_all(int n, const TableauVisitor& visit);

// Convenience: materializes the full list (lexicographic code order).
std::vector<Tableau> all_tableaux(int n);

// Parallel scan: the code tree is split at a fixed prefix depth into chunks
// (lexicographic order, disjoint, covering); workers pull chunks from an
// atomic dispenser. The visitor runs concurrently across chunks, so per-chunk
// accumulators indexed by `chunk` are the intended pattern; merge them in
// chunk order for deterministic results. Returns the number of chunks.
using ChunkVisitor = std::function<void(
    size_t chunk, const Tableau&, const InsertionCode&, const PointTrace&)>;
size_t generate_chunked(int n, int threads, const ChunkVisitor& visit);

// Number of chunks generate_chunked(n, threads, ...) will produce; lets
// callers size per-chunk accumulators up front.
size_t chunk_count(int n, int threads);

}  // namespace tlt
