#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "tlt/errors.hpp"
#include "tlt/json_io.hpp"
#include "tlt/tableau.hpp"
#include "tlt/verify.hpp"

using namespace tlt;

TEST_CASE("theorem suite passes outright") {
  VerificationReport r = run_suite("theorems", 5);
  CHECK(r.ok());
  CHECK(!r.checks.empty());
  for (const Check& c : r.checks) CHECK(c.status == "pass");
}

TEST_CASE("conjecture suite flags, never fails") {
  VerificationReport r = run_suite("conjectures", 5);
  CHECK(r.ok());  // flagged results do not affect ok()
  bool any_match = false, any_mismatch = false;
  for (const Check& c : r.checks) {
    CHECK((c.status == "flagged-match" || c.status == "flagged-mismatch"));
    if (c.status == "flagged-match") any_match = true;
    if (c.status == "flagged-mismatch") any_mismatch = true;
  }
  CHECK(any_match);
  // the literal symmetric-corner reading is non-integral at n=1, so an honest
  // mismatch is always present
  CHECK(any_mismatch);
}

TEST_CASE("bijection and pasep suites pass") {
  CHECK(run_suite("bijections", 4).ok());
  CHECK(run_suite("pasep", 3).ok());
}

TEST_CASE("suite and bound validation") {
  CHECK_THROWS_AS(run_suite("all", 0), InfeasibleN);
  CHECK_THROWS_AS(run_suite("theorems", 10), InfeasibleN);
  CHECK_THROWS_AS(run_suite("nonsense", 5), DomainError);
}

TEST_CASE("reports serialize deterministically") {
  VerificationReport a = run_suite("pasep", 2);
  VerificationReport b = run_suite("pasep", 2);
  CHECK(a.to_jsonl() == b.to_jsonl());  // byte level, timing kept out
  // one JSON object per line, each with the full field set
  std::istringstream lines(a.to_jsonl());
  std::string line;
  size_t count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("id"));
    CHECK(j.contains("claim"));
    CHECK(j.contains("expected"));
    CHECK(j.contains("observed"));
    CHECK(j.contains("status"));
    ++count;
  }
  CHECK(count == a.checks.size());
  CHECK(a.to_table().find("pass") != std::string::npos);
}

TEST_CASE("json round trips") {
  Tableau t{{2, 1}, {{0, 0}, {0, 1}, {1, 0}}};
  auto j = tableau_to_json(t);
  CHECK(j["rows"] == nlohmann::json({2, 1}));
  CHECK(tableau_from_json(j) == t);
  // deserialization revalidates
  nlohmann::json bad{{"rows", {2, 2}}, {"points", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}};
  CHECK_THROWS_AS(tableau_from_json(bad), RuleViolation);
  nlohmann::json garbage{{"rows", {2, 1}}};
  CHECK_THROWS_AS(tableau_from_json(garbage), DomainError);

  InsertionCode code{{1, 3, 2}};
  CHECK(code_from_json(code_to_json(code)) == code);
}
