#include <gtest/gtest.h>

#include <algorithm>

#include "chargelab/errors.hpp"
#include "chargelab/verify.hpp"

using namespace chargelab;

TEST(Verify, DefaultRunPasses) {
  const auto results = run_verification(VerifyOptions{});
  EXPECT_TRUE(all_passed(results));
  EXPECT_GT(results.size(), 30u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_GT(r.checked, 0) << r.name;
  }
}

TEST(Verify, EveryScopeRunsOnItsOwn) {
  for (const std::string& scope : verification_scopes()) {
    VerifyOptions o;
    o.scope = scope;
    const auto results = run_verification(o);
    EXPECT_FALSE(results.empty()) << scope;
    EXPECT_TRUE(all_passed(results)) << scope;
  }
}

TEST(Verify, InjectedFaultIsDetected) {
  VerifyOptions o;
  o.scope = "A-qbg";
  o.inject_qbg_fault = true;
  const auto results = run_verification(o);
  EXPECT_FALSE(all_passed(results));
  const auto failed = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  ASSERT_NE(failed, results.end());
  EXPECT_FALSE(failed->detail.empty());
}

TEST(Verify, UnknownScope) {
  VerifyOptions o;
  o.scope = "nonsense";
  EXPECT_THROW(run_verification(o), ValidationError);
}

TEST(Verify, ParallelRunMatchesSerial) {
  VerifyOptions serial, parallel;
  serial.scope = parallel.scope = "A-bijection";
  parallel.jobs = 4;
  const auto a = run_verification(serial), b = run_verification(parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].checked, b[i].checked);
    EXPECT_EQ(a[i].passed, b[i].passed);
  }
}
