#include "doctest.h"
#include "scatter1d/verify.hpp"

using namespace scatter1d;

TEST_CASE("verification suite passes at nominal and loosened thresholds") {
  const VerificationReport nominal = run_verification();
  CHECK(nominal.all_passed());
  CHECK(nominal.checks.size() >= 14);
  for (const CheckResult& c : nominal.checks) {
    CHECK(c.passed);
    CHECK(c.residual <= c.threshold);
  }

  const VerificationReport loose = run_verification({}, 100.0);
  CHECK(loose.all_passed());
}

TEST_CASE("verification suite is sensitive: absurd thresholds fail") {
  const VerificationReport strict = run_verification({}, 1e-8);
  CHECK_FALSE(strict.all_passed());
}
