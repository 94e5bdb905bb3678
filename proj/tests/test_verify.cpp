#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagtetra/verify.hpp"

using namespace lagtet;

TEST_CASE("run configuration validation") {
  RunConfig ok;
  CHECK_NOTHROW(validate(ok));

  RunConfig tight = ok;
  tight.tol = 1e-15;
  CHECK_NOTHROW(validate(tight));

  RunConfig inverted = ok;
  inverted.tol = 0.5;
  CHECK_THROWS_AS(validate(inverted), Error);

  RunConfig coarse = ok;
  coarse.cluster = 1e-2;
  CHECK_THROWS_AS(validate(coarse), Error);

  RunConfig zero = ok;
  zero.tol = 0;
  CHECK_THROWS_AS(validate(zero), Error);

  RunConfig none = ok;
  none.samples = 0;
  CHECK_THROWS_AS(validate(none), Error);
}

TEST_CASE("suite registry lists six suites and rejects unknown names") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 6);
  CHECK(names.front() == "projective");
  CHECK(names.back() == "topology");
  RunConfig cfg;
  CHECK_THROWS_AS(run_suite("algebraic", cfg), Error);
}

TEST_CASE("every suite passes at a reduced sample count") {
  RunConfig cfg;
  cfg.samples = 10;
  auto results = run_suites(suite_names(), cfg);
  REQUIRE(results.size() == 6);
  for (const auto& r : results) {
    CHECK(r.checks.size() == 5);
    for (const auto& c : r.checks) {
      INFO(r.name << " / " << c.name << ": " << c.detail);
      CHECK(c.pass);
    }
    CHECK(r.passed());
  }
}

TEST_CASE("suite runs are deterministic") {
  RunConfig cfg;
  cfg.samples = 5;
  SuiteResult a = run_suite("symplectic", cfg);
  SuiteResult b = run_suite("symplectic", cfg);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}
