#pragma once

#include <utility>
#include <vector>

#include "tlt/numeric.hpp"
#include "tlt/polynomial.hpp"
#include "tlt/tableau.hpp"

namespace tlt {

// Aggregates over all size-n tableaux. oc_histogram[k] counts tableaux with
// exactly k occupied corners (the a_{n,k}).
struct StatReport {
  int n{};
  Int total_tableaux;
  Int total_oc;
  Int total_corners;
  std::vector<Int> oc_histogram;
  Rat variance;
};

// Single enumeration pass (parallel over code-prefix chunks when threads > 1).
StatReport stat_report(int n, int threads = 1);

// Sum of occupied corners over all size-n tableaux; equals n!.
Int oc_total(int n);

// Removes the occupied corner's nearly empty line: its row when the corner is
// the row's only point, otherwise its column (exactly one of the two holds).
// Returns the size n-1 tableau and the corner's bottom-edge index i; the pair
// determines T uniquely and corner_insert(T', i) rebuilds it.
std::pair<Tableau, int> removal_bijection(const Tableau& t, const Corner& corner);

// P_0 = 1; P_n integrates n*P_{n-1} + 2(1-x)*P_{n-1}' termwise with the
// constant fixed by P_n(1) = n!. Coefficients must come out integral
// (NonIntegerCoefficient is assertion-grade).
IntPolynomial P_recurrence(int n);

// Histogram of oc over the full enumeration, as a polynomial in x.
IntPolynomial P_enum(int n, int threads = 1);

// k*a_{n,k} = 2k*a_{n-1,k} + (n-2(k-1))*a_{n-1,k-1} between enumerated
// histograms of sizes n-1 and n, for all k >= 1.
bool a_recurrence_check(int n);

// (P_n''(1) + P_n'(1))/n! - 1, exact; equals (n-2)/n for n >= 2.
Rat variance_oc(int n);

// Total corner count over all size-n tableaux (enumerated).
Int corners_total(int n);

// The conjectured total, n!(n+4)/6, as an exact rational (non-integral
// at n = 1; reported, never rounded).
Rat conjectured_corners_total(int n);

// Permutations of 1..n with no cycle of the form (i, i+1, ..., i+j-1): the
// cycle's element set is a consecutive run AND it maps i to i+1 to ... back
// to i. j = 1 forbids fixed points. Brute force; compared against P_n(0).
Int perms_without_consecutive_cycles(int n);

}  // namespace tlt
