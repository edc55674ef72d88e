#include "doctest.h"
#include "hypsys/errors.hpp"
#include "hypsys/verify.hpp"

using namespace hypsys;

namespace {

std::string failures_of(const VerifyReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.pass) out += c.group + " " + c.instance + " " + c.detail + "\n";
  return out;
}

}  // namespace

TEST_CASE("inequality suite at small n") {
  const VerifyReport r = verify_inequalities(16);
  INFO(failures_of(r));
  CHECK(r.all_pass());
  CHECK(r.count("compare-n") > 0);
  CHECK(r.count("decreasing") > 0);
  CHECK_THROWS_AS(verify_inequalities(6), Error);
}

TEST_CASE("family suite at small n") {
  const VerifyReport r = verify_families(12);
  INFO(failures_of(r));
  CHECK(r.all_pass());
  CHECK(r.checks.size() > 20);
}

TEST_CASE("rome suite") {
  const VerifyReport r = verify_rome(10);
  INFO(failures_of(r));
  CHECK(r.all_pass());
}

TEST_CASE("zrl suite reports every group") {
  ZrlSuiteOptions o;
  o.samples = 10;
  o.sizes = {6};
  const VerifyReport r = verify_zrl(o);
  CHECK(r.count("normalize") == 10);
  CHECK(r.failures("normalize") == 0);
  CHECK(r.failures("theta preserved") == 0);
  CHECK(r.failures("coding") == 0);
  CHECK(r.failures("fixed point (first step t)") == 0);
}
