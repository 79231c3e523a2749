#pragma once

#include <string>
#include <vector>

namespace tlt {

// One verified claim. status is "pass", "fail", "flagged-match" or
// "flagged-mismatch"; the flagged pair is reserved for conjecture-level
// checks, which never affect the suite's exit contract.
struct Check {
  std::string id;        // stable, e.g. "oc-total/n=5"
  std::string claim;     // what is being asserted, in words
  std::string expected;
  std::string observed;
  std::string status;
  double millis{};
};

struct VerificationReport {
  std::string suite;
  int n_max{};
  std::vector<Check> checks;

  // True iff no non-flagged check failed.
  bool ok() const;
  std::string to_jsonl() const;  // one JSON object per check
  std::string to_table() const;  // human summary
};

// Suites: "theorems" (exact identities and bijections), "conjectures"
// (flagged comparisons), "bijections" (roundtrip families), "pasep"
// (chain vs projection), "all". n_max caps the enumeration size; full
// enumeration is documented feasible up to 9 (PASEP exact solves cap
// themselves at 7 internally). Throws InfeasibleN when n_max < 1 or > 9,
// DomainError for an unknown suite name.
VerificationReport run_suite(const std::string& name, int n_max, int threads = 1);

}  // namespace tlt
