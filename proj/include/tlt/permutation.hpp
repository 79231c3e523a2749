#pragma once

#include <set>
#include <vector>

#include "tlt/insertion.hpp"
#include "tlt/numeric.hpp"
#include "tlt/tableau.hpp"

namespace tlt {

// One-line notation, 1-indexed values: word[i-1] = sigma(i).
struct Permutation {
  std::vector<int> word;
  auto operator<=>(const Permutation&) const = default;
  int size() const { return static_cast<int>(word.size()); }
};

bool is_permutation(const Permutation& s);

// The removal construction: start from the word 1 2 ... n; for k = n down to
// 1 remove the m_k-th remaining letter, which becomes sigma(k).
Permutation phi(const InsertionCode& code);

// t_i = m_i - 1 = #{ j < i : sigma(j) < sigma(i) }.
std::vector<int> non_inversion_table(const Permutation& s);

// m_i = 1 + #{ j < i : sigma(j) < sigma(i) }, entries m_2..m_n.
InsertionCode phi_inverse(const Permutation& s);

// The k in 2..n with (sigma(k-1) = sigma(k)+1 or sigma(k-1) < sigma(k)) and
// sigma(j) > sigma(k)+1 for all k < j <= n: the pattern characterization of
// "p_k sits in a corner".
std::set<int> corner_indices_perm(const Permutation& s);

// Same set read off the geometry: labels of points lying in corner cells.
// The root p_1 is in a corner only when n = 1 and is excluded here.
std::set<int> corner_indices_geom(const Tableau& t, const PointTrace& trace);

// Closed form for the number of size-n tableaux whose p_k is in a corner:
// n!/((n-k+2)(n-k+1)), plus (n-1)! when k = n. Throws DomainError unless
// 2 <= k <= n. Summing over k gives n! exactly.
Int count_pk_in_corner(int n, int k);

std::string to_string(const Permutation& s);

}  // namespace tlt
