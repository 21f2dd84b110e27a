#include "salpeter/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace salpeter;

TEST_CASE("grid presets") {
  CHECK(verify_grid("small").nl_max == 4);
  CHECK(verify_grid("large").nl_max == 25);
  CHECK(verify_grid("large").N1_max == 50);
  CHECK(verify_grid("large").N2d_max == 40);
  CHECK_THROWS_AS(verify_grid("huge"), std::invalid_argument);
}

TEST_CASE("small grid passes") {
  const VerifyReport report = run_verification(verify_grid("small"));
  CHECK(report.passed());
  CHECK(report.first_failure() == nullptr);
  CHECK(report.entries.size() > 500);
}

TEST_CASE("injected fault is caught") {
  const VerifyReport report = run_verification(verify_grid("small"), {.perturb = true});
  CHECK_FALSE(report.passed());
  REQUIRE(report.first_failure() != nullptr);
  // n = 0 states are untouched by the fault; the first failure is the first state with n > 0.
  CHECK(report.first_failure()->case_id == "(d=1, N=1) eps1");
}

TEST_CASE("results do not depend on the thread count") {
  const auto one = to_json(run_verification(verify_grid("small"), {.threads = 1}));
  const auto four = to_json(run_verification(verify_grid("small"), {.threads = 4}));
  CHECK(one == four);
}

TEST_CASE("report schema") {
  const auto j = to_json(run_verification(verify_grid("small")));
  CHECK(j["status"] == "pass");
  CHECK(j["failures"] == 0);
  for (const auto& e : j["entries"]) {
    REQUIRE(e.contains("case"));
    REQUIRE(e.contains("method"));
    REQUIRE(e.contains("value_pq"));
    REQUIRE(e.contains("value_dec"));
    REQUIRE(e.contains("status"));
  }
  CHECK(j["entries"][0]["case"] == "(d=1, N=0) eps1");
  CHECK(j["entries"][0]["value_pq"] == "-3/32");
}
