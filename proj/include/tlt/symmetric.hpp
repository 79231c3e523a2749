#pragma once

#include <utility>
#include <vector>

#include "tlt/numeric.hpp"
#include "tlt/polynomial.hpp"
#include "tlt/tableau.hpp"

namespace tlt {

// All symmetric tableaux of odd size 2n+1, by filtering the full enumeration.
// Correct by construction; feasible for size <= 9.
std::vector<Tableau> generate_symmetric(int size);

// Second generator: grows size 2n-1 to size 2n+1 by inserting a mirror pair
// of nearly empty lines (row x with its point at (x,pc), column x with the
// mirror point (pc,x)); the new row length is enumerated as a free parameter
// and validity + symmetry prune the candidates. Cross-validated against the
// filter for size <= 9 and used alone beyond (size 11 = 3840 tableaux).
std::vector<Tableau> generate_symmetric_paired(int size);

// Two minimal insertions: corner_insert at edge i (1 <= i <= n for a base of
// size 2n-1), then at the image of the mirror edge. The result is symmetric
// of size 2n+1 with the two new points in occupied corners (a mirror pair
// strictly off the diagonal). Outputs below_corner/above_corner when asked.
Tableau paired_insert(const Tableau& base, int i,
                      Cell* below_corner = nullptr, Cell* above_corner = nullptr);

// The occupied-corner bijection of the symmetric count theorem: an occupied
// corner of a symmetric tableau of size 2n+1 corresponds to a triplet (base
// of size 2n-1, edge index i in 1..n, rho in {a,b}); rho says whether the
// corner sits above (a) or below (b) the main diagonal.
struct SymTriplet {
  Tableau base;
  int i{};
  char rho{};  // 'a' or 'b'
};

// Removal direction: take the corner's below-diagonal representative, remove
// its nearly empty line together with the mirror line. Throws NotOccupied.
SymTriplet sym_removal(const Tableau& t, const Corner& corner);

// Insertion direction; returns the tableau and the corner selected by rho.
std::pair<Tableau, Corner> sym_insertion(const SymTriplet& trip);

// Occupied corners summed over all symmetric tableaux of the given odd size;
// equals 2^n n! for size 2n+1.
Int oc_total_symmetric(int size);

// Q_0 = 1; Q_n integrates 2nx*Q_{n-1} + 2(1-x^2)*Q_{n-1}' with the constant
// fixed by Q_n(1) = 2^n n!. Only even powers may appear (OddPowerPresent and
// NonIntegerCoefficient are assertion-grade).
IntPolynomial Q_recurrence(int n);

// Histogram of oc over the symmetric tableaux of size 2n+1 (paired-insertion
// generator), as a polynomial.
IntPolynomial Q_enum(int n);

// 2k*b_{n,k} = 2*(2k*b_{n-1,k} + (n-2(k-1))*b_{n-1,k-1}) between enumerated
// even-power histograms of consecutive sizes.
bool b_recurrence_check(int n);

// Variance of oc over symmetric tableaux of size 2n+1, from exact Q
// derivatives. NOTE: the source text claims (n-1)/n, but its own printed
// polynomials and recurrence give 1 at n=1 and 2(n-1)/n for n >= 2 (checked
// against direct enumeration); this function returns the true value.
Rat variance_oc_symmetric(int n);

// Corner totals over symmetric tableaux, enumerated, plus the two readings
// of the conjectured closed form (the literal one and the factorial one;
// they disagree except at n=2 and only the factorial reading matches
// enumeration: 14, 100, 928, 10560 for n = 2..5).
Int corners_total_symmetric(int size);
Rat conjectured_sym_corners_literal(int n);    // 2^n * n * (4n+13) / 12
Rat conjectured_sym_corners_factorial(int n);  // 2^n * n! * (4n+13) / 12

}  // namespace tlt
