#include "tlt/verify.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tlt/classes_paths.hpp"
#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"
#include "tlt/numeric.hpp"
#include "tlt/pasep.hpp"
#include "tlt/permutation.hpp"
#include "tlt/statistics.hpp"
#include "tlt/symmetric.hpp"
#include "tlt/tableau.hpp"

namespace tlt {

bool VerificationReport::ok() const {
  for (const Check& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::string VerificationReport::to_jsonl() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    nlohmann::json j;
    j["id"] = c.id;
    j["claim"] = c.claim;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["status"] = c.status;
    // wall-clock stays out of the machine format so that output is
    // byte-deterministic for fixed inputs; the human table shows it
    os << j.dump() << "\n";
  }
  return os.str();
}

std::string VerificationReport::to_table() const {
  std::ostringstream os;
  size_t idw = 2;
  for (const Check& c : checks) idw = std::max(idw, c.id.size());
  os << "suite " << suite << " (n_max " << n_max << ")\n";
  int pass = 0, fail = 0, flagged = 0;
  for (const Check& c : checks) {
    os << "  " << c.id << std::string(idw - c.id.size() + 2, ' ') << c.status;
    if (c.status != "pass") os << "  expected " << c.expected << ", observed " << c.observed;
    os << "  (" << static_cast<long long>(c.millis) << " ms)\n";
    if (c.status == "pass")
      ++pass;
    else if (c.status == "fail")
      ++fail;
    else
      ++flagged;
  }
  os << "  " << pass << " pass, " << fail << " fail, " << flagged << " flagged\n";
  return os.str();
}

namespace {

struct SuiteBuilder {
  VerificationReport report;
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

  void add(const std::string& id, const std::string& claim, const std::string& expected,
           const std::string& observed, bool conjecture_level) {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - mark).count();
    mark = now;
    std::string status;
    if (conjecture_level)
      status = (expected == observed) ? "flagged-match" : "flagged-mismatch";
    else
      status = (expected == observed) ? "pass" : "fail";
    report.checks.push_back({id, claim, expected, observed, status, ms});
  }
  void exact(const std::string& id, const std::string& claim, const std::string& expected,
             const std::string& observed) {
    add(id, claim, expected, observed, false);
  }
  void flagged(const std::string& id, const std::string& claim, const std::string& expected,
               const std::string& observed) {
    add(id, claim, expected, observed, true);
  }
};

std::string yn(bool b) { return b ? "yes" : "no"; }

// All paths that begin and end with an EN corner, up to max_steps long.
std::vector<LatticePath> corner_bounded_paths(int max_steps) {
  std::vector<LatticePath> out;
  if (max_steps >= 2) out.push_back("EN");
  for (int len = 4; len <= max_steps; ++len) {
    const int mid = len - 4;
    for (unsigned bits = 0; bits < (1u << mid); ++bits) {
      LatticePath p = "EN";
      for (int i = 0; i < mid; ++i) p.push_back(bits & (1u << i) ? 'N' : 'E');
      p += "EN";
      out.push_back(std::move(p));
    }
  }
  return out;
}

void theorem_checks(SuiteBuilder& b, int n_max, int threads) {
  for (int n = 1; n <= n_max; ++n) {
    StatReport r = stat_report(n, threads);
    b.exact("count/n=" + std::to_string(n),
            "the generator yields exactly n! size-n tableaux",
            to_string(factorial(n)), to_string(r.total_tableaux));
    b.exact("oc-total/n=" + std::to_string(n),
            "occupied corners over all size-n tableaux total n!",
            to_string(factorial(n)), to_string(r.total_oc));
    b.exact("p-enum-vs-recurrence/n=" + std::to_string(n),
            "the oc histogram polynomial matches the integrated recurrence",
            to_string(P_recurrence(n)), to_string(IntPolynomial{r.oc_histogram}));
    if (n >= 2) {
      b.exact("a-recurrence/n=" + std::to_string(n),
              "k a(n,k) = 2k a(n-1,k) + (n-2(k-1)) a(n-1,k-1) on enumerated histograms",
              "holds", a_recurrence_check(n) ? "holds" : "violated");
      b.exact("variance/n=" + std::to_string(n),
              "variance of oc equals (n-2)/n",
              to_string(Rat(n - 2) / n), to_string(variance_oc(n)));
    }
  }

  // removal bijection: occupied corners of size n <-> (size n-1, edge 1..n)
  for (int n = 2; n <= std::min(n_max, 8); ++n) {
    std::set<std::pair<Tableau, int>> pairs;
    Int total = 0;
    bool reconstructs = true;
    generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
      for (const Corner& c : corners(t)) {
        if (!c.occupied) continue;
        ++total;
        auto [base, i] = removal_bijection(t, c);
        if (corner_insert(base, i) != t) reconstructs = false;
        pairs.insert({base, i});
      }
    });
    bool ok = reconstructs && total == factorial(n) && Int(pairs.size()) == total;
    b.exact("removal-bijection/n=" + std::to_string(n),
            "occupied-corner removal is injective onto (smaller tableau, edge) pairs "
            "and reinsertion reconstructs",
            "bijective", ok ? "bijective" : "broken");
  }

  // phi is a bijection and the corner characterizations agree
  for (int n = 2; n <= std::min(n_max, 8); ++n) {
    std::set<std::vector<int>> images;
    bool prop_ok = true, obs_ok = true, root_ok = true;
    generate_all(n, [&](const Tableau& t, const InsertionCode& code, const PointTrace& tr) {
      Permutation s = phi(code);
      images.insert(s.word);
      auto geom = corner_indices_geom(t, tr);
      if (geom != corner_indices_perm(s)) prop_ok = false;
      // the border-word observation: m_k >= m_{k-1} and all later m_j > m_k + 1
      std::set<int> obs;
      auto m = [&](int k) { return k == 1 ? 1 : code.entries[k - 2]; };
      for (int k = 2; k <= n; ++k) {
        if (m(k) < m(k - 1)) continue;
        bool tail = true;
        for (int j = k + 1; j <= n; ++j)
          if (m(j) <= m(k) + 1) {
            tail = false;
            break;
          }
        if (tail) obs.insert(k);
      }
      if (obs != geom) obs_ok = false;
      if (tr.label(Cell{0, 0}) == 1) {
        bool root_in_corner = false;
        for (const Corner& c : corners(t))
          if (c.cell == Cell{0, 0}) root_in_corner = true;
        if (root_in_corner != (n == 1)) root_ok = false;
      }
    });
    b.exact("phi-bijection/n=" + std::to_string(n),
            "phi hits n! distinct permutations",
            to_string(factorial(n)), std::to_string(images.size()));
    b.exact("corner-proposition/n=" + std::to_string(n),
            "geometric corner indices match the permutation pattern conditions",
            "equal", prop_ok ? "equal" : "differ");
    b.exact("corner-observation/n=" + std::to_string(n),
            "geometric corner indices match the code conditions",
            "equal", obs_ok ? "equal" : "differ");
    b.exact("root-corner/n=" + std::to_string(n),
            "the root sits in a corner only at size 1",
            "holds", root_ok ? "holds" : "violated");
  }

  // per-k closed form for points in corners
  for (int n = 2; n <= std::min(n_max, 8); ++n) {
    std::vector<Int> by_k(n + 1, Int(0));
    generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace& tr) {
      for (int k : corner_indices_geom(t, tr)) ++by_k[k];
    });
    bool all_match = true;
    Int sum = 0;
    for (int k = 2; k <= n; ++k) {
      if (by_k[k] != count_pk_in_corner(n, k)) all_match = false;
      sum += by_k[k];
    }
    b.exact("pk-corner-closed-form/n=" + std::to_string(n),
            "per-index counts of points in corners match the closed form, summing to n!",
            "match", (all_match && sum == factorial(n)) ? "match" : "differ");
  }

  // symmetric family: counts, oc totals, generator equivalence, Q identities
  for (int size = 1; size <= std::min(n_max, 9); size += 2) {
    const int n = (size - 1) / 2;
    auto filtered = generate_symmetric(size);
    auto paired = generate_symmetric_paired(size);
    std::set<Tableau> fs(filtered.begin(), filtered.end());
    std::set<Tableau> ps(paired.begin(), paired.end());
    Int expected = pow2(n) * factorial(n);
    b.exact("sym-generators-agree/size=" + std::to_string(size),
            "filtering and paired-line growth produce the same symmetric set",
            "equal", fs == ps ? "equal" : "differ");
    b.exact("sym-count/size=" + std::to_string(size),
            "symmetric tableaux of size 2n+1 number 2^n n!",
            to_string(expected), std::to_string(filtered.size()));
    Int oc = 0;
    for (const Tableau& t : filtered) oc += occupied_corner_count(t);
    b.exact("sym-oc-total/size=" + std::to_string(size),
            "occupied corners over symmetric tableaux total 2^n n!",
            to_string(expected), to_string(oc));
    bool diag_ok = true;
    for (const Tableau& t : filtered)
      for (const Cell& p : t.points)
        if (p.r == p.c && !(p == Cell{0, 0})) diag_ok = false;
    b.exact("sym-diagonal/size=" + std::to_string(size),
            "the root is the only diagonal point",
            "holds", diag_ok ? "holds" : "violated");
  }
  for (int n = 1; 2 * n + 1 <= std::min(n_max, 9); ++n) {
    b.exact("q-enum-vs-recurrence/n=" + std::to_string(n),
            "the symmetric oc histogram matches the integrated recurrence",
            to_string(Q_recurrence(n)), to_string(Q_enum(n)));
    if (n >= 2)
      b.exact("b-recurrence/n=" + std::to_string(n),
              "2k b(n,k) = 2(2k b(n-1,k) + (n-2(k-1)) b(n-1,k-1)) on enumerated histograms",
              "holds", b_recurrence_check(n) ? "holds" : "violated");
    // the closed form printed for this variance elsewhere, (n-1)/n, matches
    // neither route; the dual-route equality below is the actual theorem-level
    // fact, and the discrepancy is reported by the stats tooling
    Rat enumerated = [&] {
      auto members = generate_symmetric_paired(2 * n + 1);
      Int cnt = members.size(), s1 = 0, s2 = 0;
      for (const Tableau& t : members) {
        int o = occupied_corner_count(t);
        s1 += o;
        s2 += o * o;
      }
      Rat mean = Rat(s1) / Rat(cnt);
      return Rat(s2) / Rat(cnt) - mean * mean;
    }();
    b.exact("sym-variance-dual/n=" + std::to_string(n),
            "symmetric oc variance from Q derivatives equals the enumerated variance",
            to_string(enumerated), to_string(variance_oc_symmetric(n)));
  }

  // non-ambiguous classes and the path restatement
  for (int n = 1; n <= std::min(n_max, 8); ++n) {
    auto classes = partition_classes(n);
    bool sum_ok = true, canon_ok = true, path_ok = true;
    Int members = 0;
    for (const auto& [key, cls] : classes) {
      members += cls.size();
      Int oc_sum = 0;
      for (const Tableau& t : cls) oc_sum += occupied_corner_count(t);
      if (oc_sum != Int(cls.size())) sum_ok = false;
      const Tableau* canon = nullptr;
      try {
        canon = &canonical_representative(cls);
      } catch (const TltError&) {
        canon_ok = false;
        continue;
      }
      auto range = class_path_range(*canon);
      LatticePath p = member_path(*canon, range);
      std::set<LatticePath> seen;
      for (const Tableau& t : cls) {
        LatticePath mp = member_path(t, range);
        seen.insert(mp);
        if (!weakly_below(mp, p)) path_ok = false;
        else if (occupied_corner_count(t) != cc(p, mp)) path_ok = false;
        // outside the range every member's border agrees with the canonical's
        std::string wm = border_word(t), wc = border_word(*canon);
        if (wm.substr(0, range.first - 1) != wc.substr(0, range.first - 1) ||
            wm.substr(range.second) != wc.substr(range.second))
          path_ok = false;
      }
      if (seen.size() != cls.size()) path_ok = false;
      auto below = paths_below(p);
      if (seen != std::set<LatticePath>(below.begin(), below.end())) path_ok = false;
    }
    b.exact("class-oc-theorem/n=" + std::to_string(n),
            "within each class, occupied corners sum to the class size",
            "holds", sum_ok ? "holds" : "violated");
    b.exact("class-canonical/n=" + std::to_string(n),
            "each class has exactly one member with all corners occupied",
            "holds", canon_ok ? "holds" : "violated");
    b.exact("class-path-correspondence/n=" + std::to_string(n),
            "class members are exactly the paths weakly below the canonical "
            "border segment, with oc = common corners",
            "holds", path_ok ? "holds" : "violated");
    b.exact("class-partition/n=" + std::to_string(n),
            "classes partition the full set",
            to_string(factorial(n)), to_string(members));
  }

  {
    bool identity_ok = true;
    for (const LatticePath& p : corner_bounded_paths(10)) {
      auto below = paths_below(p);
      Int total = 0;
      for (const LatticePath& q : below) total += cc(p, q);
      if (total != Int(below.size())) identity_ok = false;
    }
    b.exact("path-cc-identity/steps<=10",
            "paths weakly below P are counted by the common corners they carry",
            "holds", identity_ok ? "holds" : "violated");
  }
}

void bijection_checks(SuiteBuilder& b, int n_max, int /*threads*/) {
  for (int n = 1; n <= std::min(n_max, 7); ++n) {
    bool ok = true;
    Int count = 0;
    generate_all(n, [&](const Tableau& t, const InsertionCode& code, const PointTrace&) {
      ++count;
      if (encode(t) != code) ok = false;
      if (decode_tableau(code) != t) ok = false;
    });
    b.exact("code-roundtrip/n=" + std::to_string(n),
            "encode inverts decode across the full enumeration",
            "holds", (ok && count == factorial(n)) ? "holds" : "violated");
  }
  for (int n = 1; n <= std::min(n_max, 8); ++n) {
    bool ok = true;
    generate_all(n, [&](const Tableau&, const InsertionCode& code, const PointTrace&) {
      if (phi_inverse(phi(code)) != code) ok = false;
    });
    b.exact("phi-roundtrip/n=" + std::to_string(n),
            "the non-inversion table inverts the removal construction",
            "holds", ok ? "holds" : "violated");
  }
  {
    InsertionCode fig{{1, 3, 2, 2, 1, 4}};
    b.exact("phi-worked-example",
            "the documented size-7 code maps to 6275314",
            "6275314", to_string(phi(fig)));
  }

  // triplet bijection for symmetric occupied corners
  for (int size = 3; size <= std::min(n_max, 9); size += 2) {
    const int n = (size - 1) / 2;
    std::set<std::tuple<Tableau, int, char>> seen;
    Int total = 0;
    bool ok = true;
    for (const Tableau& t : generate_symmetric_paired(size)) {
      for (const Corner& c : corners(t)) {
        if (!c.occupied) continue;
        ++total;
        SymTriplet trip = sym_removal(t, c);
        if (trip.i < 1 || trip.i > n) ok = false;
        if (!is_valid(trip.base) || !is_symmetric(trip.base)) ok = false;
        auto [back, corner] = sym_insertion(trip);
        if (back != t || corner.cell != c.cell) ok = false;
        seen.insert({trip.base, trip.i, trip.rho});
      }
    }
    if (total != pow2(n) * factorial(n)) ok = false;
    if (Int(seen.size()) != total) ok = false;
    b.exact("sym-triplet-bijection/size=" + std::to_string(size),
            "occupied corners correspond to (smaller symmetric tableau, edge, side) triplets",
            "bijective", ok ? "bijective" : "broken");
  }

  // the shift maps are mutually inverse and exhaust paths below
  {
    bool ok = true;
    for (const LatticePath& p : corner_bounded_paths(10)) {
      auto below = paths_below(p);
      std::set<LatticePath> image;
      for (const LatticePath& p2 : below) {
        for (int c : corner_abscissas(p)) {
          bool common = false;
          for (int x : corner_abscissas(p2))
            if (x == c && e_step_height(p, c) == e_step_height(p2, c)) common = true;
          if (!common) continue;
          LatticePath q = shift_map(p, p2, c);
          if (!weakly_below(q, p)) ok = false;
          auto [back, cb] = shift_inverse(p, q);
          if (back != p2 || cb != c) ok = false;
          if (!image.insert(q).second) ok = false;  // each target hit once
        }
      }
      if (image != std::set<LatticePath>(below.begin(), below.end())) ok = false;
    }
    b.exact("shift-bijection/steps<=10",
            "corner shifts biject (path, common corner) pairs with paths below",
            "bijective", ok ? "bijective" : "broken");
  }

  // sp lands where the insertion happened; validity along the way
  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    bool ok = true;
    generate_all(n, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
      for (int i = 1; i <= n + 1; ++i) {
        Tableau s = insert_point(t, i);
        if (!is_valid(s) || sp_index(s) != i) ok = false;
      }
    });
    b.exact("insert-sp/n=" + std::to_string(n),
            "insertion at edge i yields a valid tableau whose special edge is i",
            "holds", ok ? "holds" : "violated");
  }
}

void conjecture_checks(SuiteBuilder& b, int n_max, int threads) {
  for (int n = 1; n <= n_max; ++n) {
    StatReport r = stat_report(n, threads);
    std::string id = "corner-total/n=" + std::to_string(n);
    std::string claim = "corners over all size-n tableaux total n!(n+4)/6";
    if (n == 1) claim += " (n=1 lies outside the apparent validity range)";
    b.flagged(id, claim, to_string(conjectured_corners_total(n)), to_string(r.total_corners));
  }
  for (int n = 1; 2 * n + 1 <= std::min(n_max, 9); ++n) {
    Int enumerated = corners_total_symmetric(2 * n + 1);
    b.flagged("sym-corner-total-literal/n=" + std::to_string(n),
              "symmetric corners total 2^n n (4n+13)/12 as literally stated",
              to_string(conjectured_sym_corners_literal(n)), to_string(enumerated));
    b.flagged("sym-corner-total-factorial/n=" + std::to_string(n),
              "symmetric corners total 2^n n! (4n+13)/12 (the reading implied "
              "by the stated average)",
              to_string(conjectured_sym_corners_factorial(n)), to_string(enumerated));
  }
  for (int n = 1; n <= std::min(n_max, 8); ++n) {
    b.flagged("p0-vs-consecutive-cycles/n=" + std::to_string(n),
              "tableaux with no occupied corner are counted by permutations "
              "avoiding consecutive-run cycles",
              to_string(perms_without_consecutive_cycles(n)),
              to_string(P_recurrence(n).coeff(0)));
  }
  for (int n = 1; n + 1 <= std::min(n_max + 1, 9); ++n) {
    b.flagged("expected-X/n=" + std::to_string(n),
              "the mean of X under the projected distribution is (n+2)/3",
              to_string(Rat(n + 2) / 3), to_string(expected_X(n)));
  }
}

void pasep_checks(SuiteBuilder& b, int n_max, int /*threads*/) {
  for (int n = 1; n <= std::min(n_max, 7); ++n) {
    PasepParams p;  // alpha = beta = q = 1
    auto m = transition_matrix(n, p);
    bool stochastic = true;
    for (const auto& row : m) {
      Rat s = 0;
      for (const Rat& v : row) s += v;
      if (s != 1) stochastic = false;
    }
    b.exact("row-stochastic/n=" + std::to_string(n),
            "every transition row sums to one",
            "holds", stochastic ? "holds" : "violated");
    StateDistribution pi = stationary(m);
    StateDistribution proj = tableau_distribution(n);
    b.exact("stationary-vs-projection/n=" + std::to_string(n),
            "the chain's exact stationary law is the projected tableau distribution",
            "equal", pi == proj ? "equal" : "differ");
    Rat via_states = 0;
    for (const auto& [s, prob] : proj.probs) via_states += prob * X_of_state(s);
    b.exact("x-dual-route/n=" + std::to_string(n),
            "summing X over states matches the direct tableau average",
            to_string(expected_X(n)), to_string(via_states));
  }
  for (int n = 1; n + 1 <= std::min(n_max + 1, 8); ++n) {
    bool well_defined = true;
    std::map<PasepState, int> cs;
    generate_all(n + 1, [&](const Tableau& t, const InsertionCode&, const PointTrace&) {
      auto s = project_state(t);
      int c = corner_count(t);
      auto [it, inserted] = cs.try_emplace(s, c);
      if (!inserted && it->second != c) well_defined = false;
    });
    b.exact("corners-state-function/n=" + std::to_string(n),
            "corner count is a function of the projected state",
            "holds", well_defined ? "holds" : "violated");
  }
  {
    PasepParams p;
    auto exact_pi = stationary(transition_matrix(3, p));
    auto emp = mc_sample(3, p, 1000000, 20240601);
    Rat tv = total_variation(exact_pi, emp);
    b.exact("mc-convergence/n=3",
            "a seeded million-step simulation lands within 0.05 total variation",
            "within", tv < Rat(1, 20) ? "within" : to_string(tv));
    auto emp2 = mc_sample(3, p, 1000000, 20240601);
    b.exact("mc-deterministic/n=3",
            "the same seed reproduces the same empirical distribution",
            "equal", emp == emp2 ? "equal" : "differ");
  }
}

}  // namespace

VerificationReport run_suite(const std::string& name, int n_max, int threads) {
  if (name != "theorems" && name != "conjectures" && name != "bijections" &&
      name != "pasep" && name != "all")
    throw DomainError("unknown suite: " + name);
  if (n_max < 1 || n_max > 9)
    throw InfeasibleN("n_max must lie in 1..9 (full enumeration bound)");

  SuiteBuilder b;
  b.report.suite = name;
  b.report.n_max = n_max;
  if (name == "theorems" || name == "all") theorem_checks(b, n_max, threads);
  if (name == "bijections" || name == "all") bijection_checks(b, n_max, threads);
  if (name == "conjectures" || name == "all") conjecture_checks(b, n_max, threads);
  if (name == "pasep" || name == "all") pasep_checks(b, n_max, threads);
  return b.report;
}

}  // namespace tlt
