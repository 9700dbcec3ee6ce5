#include <gtest/gtest.h>

#include <sstream>

#include "sixvertex/oracles.hpp"

using namespace sixvertex;

namespace {

std::size_t count_status(const std::vector<CheckReport>& rs, CheckStatus s) {
  return static_cast<std::size_t>(
      std::count_if(rs.begin(), rs.end(), [&](const CheckReport& r) { return r.status == s; }));
}

TEST(Suites, NamesRoundTrip) {
  for (Suite s : kAllSuites) EXPECT_EQ(parse_suite(suite_name(s)), s);
  EXPECT_FALSE(parse_suite("nope").has_value());
}

TEST(Suites, YangBaxterHundredInstances) {
  const auto rs = run_suite(Suite::ybe, {1, 0, 100});
  EXPECT_EQ(rs.size(), 100U);
  EXPECT_EQ(count_status(rs, CheckStatus::pass), 100U);
}

TEST(Suites, EveryDefaultSuitePasses) {
  for (Suite s : kAllSuites) {
    const auto rs = run_suite(s);
    EXPECT_FALSE(rs.empty()) << suite_name(s);
    for (const auto& r : rs) EXPECT_EQ(r.status, CheckStatus::pass) << suite_name(s) << ": " << r.to_json().dump();
  }
}

TEST(Suites, DeterministicForFixedSeed) {
  for (Suite s : {Suite::full_equivalence, Suite::izergin_limits, Suite::offshell}) {
    std::ostringstream a, b;
    write_json_lines(a, run_suite(s, {7, 2, 0}));
    write_json_lines(b, run_suite(s, {7, 2, 0}));
    EXPECT_EQ(a.str(), b.str());
    std::ostringstream c;
    write_json_lines(c, run_suite(s, {8, 2, 0}));
    EXPECT_NE(a.str(), c.str());
  }
}

TEST(Suites, BinomialCoefficientsAtFour) {
  InstanceGenerator gen(3);
  const auto p = gen.params(4, 0);
  std::vector<Scalar> sums(5, Scalar(0));
  std::vector<Scalar> in, out;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    detail::split(p.u, mask, in, out);
    sums[in.size()] += kernel_product(Kernel::f, in, out, p.c);
  }
  EXPECT_EQ(sums, (std::vector<Scalar>{Scalar(1), Scalar(4), Scalar(6), Scalar(4), Scalar(1)}));
}

TEST(Suites, OffshellNotesTheRejectedReading) {
  bool saw_refuted = false;
  for (const auto& r : run_suite(Suite::offshell, {1, 2, 0})) {
    if (r.check != "offshell_D") continue;
    ASSERT_FALSE(r.note.is_null());
    saw_refuted = saw_refuted || !r.note["fixed_index_reading_holds"].get<bool>();
  }
  EXPECT_TRUE(saw_refuted);
}

TEST(Recorder, MapsExceptionsToStatuses) {
  Recorder rec;
  rec.run("ok", Json::object(), [] { return CheckResult{}; });
  rec.run("bad", Json::object(), [] { return CheckResult{Json{{"residual", 1}}}; });
  rec.run("degenerate", Json::object(), []() -> CheckResult { throw DegenerateError("chi", "chi = 0"); });
  rec.run("crash", Json::object(), []() -> CheckResult { throw SingularityError("boom"); });
  const auto& rs = rec.reports();
  ASSERT_EQ(rs.size(), 4U);
  EXPECT_EQ(rs[0].status, CheckStatus::pass);
  EXPECT_EQ(rs[1].status, CheckStatus::fail);
  EXPECT_EQ(rs[1].witness["residual"], 1);
  EXPECT_EQ(rs[2].status, CheckStatus::skipped_degenerate);
  EXPECT_EQ(rs[2].witness["quantity"], "chi");
  EXPECT_EQ(rs[3].status, CheckStatus::fail);
  EXPECT_EQ(rs[3].to_json()["status"], "fail");
  EXPECT_FALSE(all_passed(rs));
}

TEST(Witness, FailureCarriesInstanceAndResidual) {
  Recorder rec;
  Matrix<Scalar> m(2, 2);
  m(1, 0) = Scalar(Rational(3, 7));
  rec.run("residual", Json{{"c", "1"}}, [&] { return zero_or_witness(m); });
  const Json j = rec.reports().front().to_json();
  EXPECT_EQ(j["instance"]["c"], "1");
  EXPECT_EQ(j["witness"]["first"]["row"], 1);
  EXPECT_EQ(j["witness"]["first"]["value"], "3/7");
}

}  // namespace
