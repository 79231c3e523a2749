#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlt/tableau.hpp"

namespace tlt {

// Two tableaux are in the same non-ambiguous class iff their points are
// arranged identically; the sorted point set is the class key.
using ClassKey = std::vector<Cell>;

// Monotone lattice path as a word over {'E','N'}, read from the Southwest
// end. In the class correspondence paths start and end with an EN corner.
using LatticePath = std::string;

std::map<ClassKey, std::vector<Tableau>> partition_classes(int n);

// The unique member with every corner occupied. NoCanonical and
// MultipleCanonical are assertion-grade: uniqueness is a theorem.
const Tableau& canonical_representative(const std::vector<Tableau>& cls);

// Edge-index range [first, last] (1-based, inclusive) spanned by the
// canonical representative's SW-most corner's E edge through its NE-most
// corner's N edge. All members of the class share their border outside this
// range, and their border segments over it are exactly the paths weakly
// below the canonical segment.
std::pair<int, int> class_path_range(const Tableau& canonical);
LatticePath member_path(const Tableau& member, std::pair<int, int> range);

// E step x of a path is the one from abscissa x to x+1; its height is the
// number of N steps before it. A path has one E step per abscissa,
// so corners are identified by the abscissa of their E step.
int e_step_height(const LatticePath& p, int x);
std::vector<int> corner_abscissas(const LatticePath& p);

// Same endpoints and every E step at a height <= the corresponding one in p.
bool weakly_below(const LatticePath& q, const LatticePath& p);

// All paths with p's endpoints staying weakly below p.
std::vector<LatticePath> paths_below(const LatticePath& p);

// Corners occupying identical positions in both paths (same abscissa, same
// height). Throws NotBelow unless p2 is weakly below p.
int cc(const LatticePath& p, const LatticePath& p2);

// The shift bijection between {(p2, c) : c a common corner of p and p2} and
// the paths weakly below p. c is a corner abscissa. If c is p's NE-most
// corner the result is p2 itself; otherwise p2's subpath NE of c drops one
// step South (c's N step moves to the end). Throws NotCommonCorner.
LatticePath shift_map(const LatticePath& p, const LatticePath& p2, int c);

// Inverse: locate the NE-most E step p and q share; if it is p's last E
// step, q pairs with its NE-most common corner; otherwise q's tail is lifted
// back North at that step. Throws NotBelow.
std::pair<LatticePath, int> shift_inverse(const LatticePath& p, const LatticePath& q);

}  // namespace tlt
