#include "catmoves/verify.hpp"
#include "doctest.h"

using namespace catmoves;

TEST_CASE("every verify suite passes at a small bound") {
  VerifyOptions options;
  options.max_n = 5;
  for (const std::string& suite : verify_suite_names()) {
    if (suite == "all") continue;
    for (const CheckResult& result : run_verify_suite(suite, options)) {
      INFO(suite, ": ", result.name, " - ", result.detail);
      CHECK(result.passed);
    }
  }
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS((void)run_verify_suite("no-such-suite", VerifyOptions{}), Error);
}

TEST_CASE("the all suite chains everything") {
  VerifyOptions options;
  options.max_n = 3;
  const auto results = run_verify_suite("all", options);
  CHECK(results.size() >= 14);
  for (const CheckResult& result : results) CHECK(result.passed);
}
