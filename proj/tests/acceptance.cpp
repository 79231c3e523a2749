// Acceptance checklist: one line per criterion, exit 0 only when every
// failure is one of the two documented source-text discrepancies.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "tlt/classes_paths.hpp"
#include "tlt/insertion.hpp"
#include "tlt/numeric.hpp"
#include "tlt/pasep.hpp"
#include "tlt/permutation.hpp"
#include "tlt/polynomial.hpp"
#include "tlt/statistics.hpp"
#include "tlt/symmetric.hpp"
#include "tlt/tableau.hpp"

using namespace tlt;

namespace {

int failures = 0;
std::set<int> failed_criteria;

void report(int criterion, bool pass, const std::string& text) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << text
            << "\n";
  if (!pass) {
    ++failures;
    failed_criteria.insert(criterion);
  }
}

void note(const std::string& text) { std::cout << "       " << text << "\n"; }

struct Scan {
  Int count = 0;
  Int oc = 0;
  Int corners = 0;
  std::vector<Int> hist;
  bool all_valid = true;
  bool encode_matches = true;  // implies distinctness: codes are distinct by construction
};

Scan scan_size(int n) {
  Scan s;
  s.hist.assign(n + 1, Int(0));
  generate_all(n, [&](const Tableau& t, const InsertionCode& code, const PointTrace&) {
    ++s.count;
    int oc = occupied_corner_count(t);
    s.oc += oc;
    s.corners += corner_count(t);
    ++s.hist[oc];
    if (!is_valid(t)) s.all_valid = false;
    if (encode(t) != code) s.encode_matches = false;
  });
  return s;
}

std::vector<LatticePath> corner_bounded_paths(int max_steps) {
  std::vector<LatticePath> out;
  out.push_back("EN");
  for (int len = 4; len <= max_steps; ++len)
    for (unsigned bits = 0; bits < (1u << (len - 4)); ++bits) {
      LatticePath p = "EN";
      for (int i = 0; i < len - 4; ++i) p.push_back(bits & (1u << i) ? 'N' : 'E');
      p += "EN";
      out.push_back(std::move(p));
    }
  return out;
}

}  // namespace

int main() {
  std::vector<Scan> scans(10);
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 9; ++n) scans[n] = scan_size(n);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // 1: cardinality, validity, distinctness, speed
  {
    bool ok = secs < 60.0;
    for (int n = 1; n <= 9; ++n)
      ok = ok && scans[n].count == factorial(n) && scans[n].all_valid &&
           scans[n].encode_matches;
    // belt and braces: literal distinctness at n <= 7
    for (int n = 1; n <= 7 && ok; ++n) {
      std::set<Tableau> seen;
      generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
        seen.insert(t);
      });
      ok = ok && Int(seen.size()) == factorial(n);
    }
    std::ostringstream os;
    os << "generation yields n! distinct valid tableaux for n=1..9 ("
       << scans[9].count << " at n=9, " << static_cast<int>(secs * 1000) << " ms total)";
    report(1, ok, os.str());
  }

  // 2: occupied corners total n!
  {
    bool ok = true;
    for (int n = 1; n <= 9; ++n) ok = ok && scans[n].oc == factorial(n);
    report(2, ok, "occupied corners total n! for n=1..9");
  }

  // 3: histogram polynomials match the recurrence, and the printed P10
  {
    bool ok = true;
    for (int n = 1; n <= 9; ++n)
      ok = ok && IntPolynomial{scans[n].hist} == P_recurrence(n);
    std::vector<Int> p10{Int(1193760), Int(1475280), Int(748800),
                         Int(188640),  Int(21600),   Int(720)};
    ok = ok && P_recurrence(10) == IntPolynomial{p10};
    report(3, ok, "oc polynomials: enumeration equals recurrence (n=1..9), printed P10 exact");
  }

  // 4: coefficient recurrence between consecutive histograms
  {
    bool ok = true;
    for (int n = 2; n <= 9; ++n) {
      IntPolynomial prev{scans[n - 1].hist}, cur{scans[n].hist};
      for (int k = 1; k <= cur.degree(); ++k)
        if (Int(k) * cur.coeff(k) !=
            Int(2) * k * prev.coeff(k) + Int(n - 2 * (k - 1)) * prev.coeff(k - 1))
          ok = false;
    }
    report(4, ok, "histogram coefficient recurrence holds for n=2..9, all k");
  }

  // 5: variance closed forms
  {
    bool main_ok = true;
    for (int n = 2; n <= 9; ++n) main_ok = main_ok && variance_oc(n) == Rat(n - 2, n);
    bool sym_ok = true;
    bool sym_documented = true;  // mismatch matches the established honest values
    for (int n = 1; n <= 4; ++n) {
      Rat honest = variance_oc_symmetric(n);
      if (honest != Rat(n - 1, n)) sym_ok = false;
      Rat expected_honest = n == 1 ? Rat(1) : Rat(2 * (n - 1), n);
      if (honest != expected_honest) sym_documented = false;
    }
    report(5, main_ok && sym_ok,
           "variance (n-2)/n for n=2..9; symmetric variance (n-1)/n for n=1..4");
    if (main_ok && !sym_ok) {
      note("the (n-2)/n half holds; the symmetric half does not hold as stated:");
      note("enumerated symmetric variances are 1, 1, 4/3, 3/2 for n=1..4, i.e. 2(n-1)/n");
      note("for n>=2, double the quoted (n-1)/n; the quoted form also breaks the quoted");
      note("polynomials Q1..Q3, whose own second derivatives give the enumerated values");
      if (!sym_documented) note("WARNING: mismatch differs from the documented pattern");
    }
    if (!main_ok || !sym_documented) failed_criteria.insert(-5);  // undocumented failure
  }

  // 6: per-point corner counts
  {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
      std::vector<Int> by_k(n + 1, Int(0));
      generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace& tr) {
        for (int k : corner_indices_geom(t, tr)) ++by_k[k];
      });
      for (int k = 2; k <= n; ++k)
        if (by_k[k] != count_pk_in_corner(n, k)) ok = false;
    }
    for (int n = 2; n <= 12; ++n) {
      Int sum = 0;
      for (int k = 2; k <= n; ++k) sum += count_pk_in_corner(n, k);
      if (sum != factorial(n)) ok = false;
    }
    report(6, ok,
           "closed-form p_k-in-corner counts match enumeration (2<=k<=n<=8), telescoping "
           "to n! for n<=12");
  }

  // 7: the permutation bijection roundtrips, worked example byte-for-byte
  {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      std::set<std::vector<int>> images;
      generate_all(n, [&](const Tableau&, const InsertionCode& code, const PointTrace&) {
        Permutation s = phi(code);
        images.insert(s.word);
        if (phi_inverse(s) != code) ok = false;
      });
      if (Int(images.size()) != factorial(n)) ok = false;
      // and from the permutation side
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = i + 1;
      do {
        Permutation s{w};
        if (phi(phi_inverse(s)).word != w) ok = false;
      } while (std::next_permutation(w.begin(), w.end()));
    }
    ok = ok && to_string(phi(InsertionCode{{1, 3, 2, 2, 1, 4}})) == "6275314";
    report(7, ok, "phi roundtrips both ways for n<=8; worked example gives 6275314");
  }

  // 8: geometric and permutation corner characterizations coincide
  {
    bool ok = true;
    for (int n = 2; n <= 8; ++n)
      generate_all(n, [&](const Tableau& t, const InsertionCode& code, const PointTrace& tr) {
        auto geom = corner_indices_geom(t, tr);
        auto perm = corner_indices_perm(phi(code));
        // both inclusions, checked separately
        for (int k : geom)
          if (!perm.count(k)) ok = false;
        for (int k : perm)
          if (!geom.count(k)) ok = false;
      });
    report(8, ok, "corner indices from geometry and from the permutation agree, n<=8");
  }

  // 9: symmetric family counts and polynomials
  {
    bool ok = true;
    for (int size = 1; size <= 9; size += 2) {
      int n = (size - 1) / 2;
      auto filtered = generate_symmetric(size);
      auto paired = generate_symmetric_paired(size);
      if (std::set<Tableau>(filtered.begin(), filtered.end()) !=
          std::set<Tableau>(paired.begin(), paired.end()))
        ok = false;
      if (Int(filtered.size()) != pow2(n) * factorial(n)) ok = false;
      Int oc = 0;
      for (const Tableau& t : filtered) oc += occupied_corner_count(t);
      if (oc != pow2(n) * factorial(n)) ok = false;
    }
    // the paired generator continues to size 11
    if (Int(generate_symmetric_paired(11).size()) != pow2(5) * factorial(5)) ok = false;
    for (int n = 1; n <= 4; ++n)
      if (Q_enum(n) != Q_recurrence(n)) ok = false;
    std::vector<Int> q9{Int(109405056), Int(0), Int(61380480), Int(0),
                        Int(13566720),  Int(0), Int(1386240),  Int(0),
                        Int(55680),     Int(0), Int(384)};
    if (Q_recurrence(9) != IntPolynomial{q9}) ok = false;
    report(9, ok,
           "symmetric counts and oc totals are 2^n n! (filter <=9, paired <=11), Q "
           "enumeration matches recurrence (n<=4), printed Q9 exact");
  }

  // 10: class theorem and its lattice-path restatement
  {
    bool ok = true;
    for (int n = 1; n <= 8; ++n)
      for (const auto& [key, cls] : partition_classes(n)) {
        Int oc_sum = 0;
        for (const Tableau& t : cls) oc_sum += occupied_corner_count(t);
        if (oc_sum != Int(cls.size())) ok = false;
      }
    for (const LatticePath& p : corner_bounded_paths(12)) {
      auto below = paths_below(p);
      Int total = 0;
      for (const LatticePath& q : below) total += cc(p, q);
      if (total != Int(below.size())) ok = false;
      // shift maps: mutually inverse, image exhausts paths below
      std::set<LatticePath> image;
      for (const LatticePath& p2 : below)
        for (int c : corner_abscissas(p)) {
          bool common = false;
          for (int x : corner_abscissas(p2))
            if (x == c && e_step_height(p, c) == e_step_height(p2, c)) common = true;
          if (!common) continue;
          LatticePath q = shift_map(p, p2, c);
          auto [back, cb] = shift_inverse(p, q);
          if (back != p2 || cb != c) ok = false;
          if (!image.insert(q).second) ok = false;
        }
      if (image != std::set<LatticePath>(below.begin(), below.end())) ok = false;
    }
    report(10, ok,
           "per-class oc sums equal class sizes (n<=8); path identity and shift bijection "
           "hold for corner-bounded paths with <=12 steps");
  }

  // 11: exact stationary law equals the tableau projection
  {
    bool ok = true;
    PasepParams params;
    for (int n = 1; n <= 7; ++n)
      if (!(stationary(transition_matrix(n, params)) == tableau_distribution(n))) ok = false;
    for (int n = 1; n <= 8; ++n)
      if (expected_X(n) != Rat(n + 2, 3)) ok = false;
    report(11, ok,
           "stationary law = projected distribution (exact, n<=7); mean X = (n+2)/3 (n<=8)");
  }

  // 12: the two corner-count conjectures
  {
    bool conj1_ok = true;
    for (int n = 2; n <= 9; ++n)
      if (Rat(scans[n].corners) != conjectured_corners_total(n)) conj1_ok = false;
    bool conj2_ok = true;
    bool conj2_documented = true;
    for (int n = 1; 2 * n + 1 <= 9; ++n) {
      Rat literal = conjectured_sym_corners_literal(n);
      if (denominator(literal) != 1) continue;  // non-integral, reported not asserted
      Int enumerated = corners_total_symmetric(2 * n + 1);
      if (Rat(enumerated) != literal) {
        conj2_ok = false;
        // documented shape of the failure: the n! reading matches instead
        if (Rat(enumerated) != conjectured_sym_corners_factorial(n)) conj2_documented = false;
      }
    }
    report(12, conj1_ok && conj2_ok,
           "corner totals: n!(n+4)/6 for n=2..9; symmetric totals 2^n n (4n+13)/12 where "
           "integral, sizes <= 9");
    if (conj1_ok && !conj2_ok) {
      note("the first total holds for every n=2..9; the symmetric formula as literally");
      note("stated is integral at n=2 (14, matches) and n=3 (50, enumeration gives 100);");
      note("reading the factor n as n! reproduces every enumerated total from n=2 on");
      note("(14, 100, 928) while the literal form does not; n=1 and n=4 are non-integral");
      if (!conj2_documented) note("WARNING: mismatch differs from the documented pattern");
    }
    if (!conj1_ok || !conj2_documented) failed_criteria.insert(-12);
  }

  // 13: constant terms against the permutation brute force
  {
    bool ok = true;
    for (int n = 1; n <= 8; ++n)
      if (P_recurrence(n).coeff(0) != perms_without_consecutive_cycles(n)) ok = false;
    report(13, ok,
           "P_n(0) equals the count of permutations without consecutive-run cycles, n<=8 "
           "(conjecture-level identification)");
  }

  // 14: seeded simulation accuracy and determinism
  {
    PasepParams params;
    const long long steps = 10000000;
    const unsigned long long seed = 20240601;
    auto exact = stationary(transition_matrix(5, params));
    auto emp = mc_sample(5, params, steps, seed);
    Rat tv = total_variation(exact, emp);
    bool ok = tv < Rat(1, 50);
    auto emp2 = mc_sample(5, params, steps, seed);
    ok = ok && emp == emp2;
    std::ostringstream os;
    os << "10^7-step simulation at n=5: total variation "
       << static_cast<double>(numerator(tv)) / static_cast<double>(denominator(tv))
       << " < 0.02, deterministic under fixed seed";
    report(14, ok, os.str());
  }

  std::cout << "\n" << (14 - failures) << "/14 criteria pass";
  std::set<int> documented{5, 12};
  bool only_documented = true;
  for (int c : failed_criteria)
    if (!documented.count(c) || c < 0) only_documented = false;
  if (failures > 0 && only_documented)
    std::cout << "; every failure is a documented discrepancy in the source text "
                 "(symmetric variance closed form; literal symmetric corner formula)";
  std::cout << "\n";
  return only_documented ? 0 : 1;
}
