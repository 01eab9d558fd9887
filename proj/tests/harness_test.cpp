#include <gtest/gtest.h>

#include <cmath>

#include "dfaint.hpp"

using namespace dfaint;

namespace {

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return num / den;
}

std::vector<io::BenchRow> without_times(std::vector<io::BenchRow> rows) {
  for (auto& r : rows) r.time_ns = 0;
  return rows;
}

}  // namespace

TEST(Verify, FiftyMachinesAllAgree) {
  const VerifyReport r = verify_corpus(VerifyOptions{});
  EXPECT_EQ(r.cases, 50u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.linear.agree + r.linear.skipped, 50u);
  EXPECT_EQ(r.kozen.agree + r.kozen.skipped, 50u);
  EXPECT_GT(r.linear.nonempty, 0u);
  EXPECT_LT(r.linear.nonempty, 50u);
  for (const auto& f : r.linear.failures) ADD_FAILURE() << f;
  for (const auto& f : r.kozen.failures) ADD_FAILURE() << f;
}

TEST(Verify, SingleStateInitialAcceptingMachinesAreAllNonempty) {
  VerifyOptions opt;
  opt.max_states = 1;
  opt.initial_accepting = true;
  const VerifyReport r = verify_corpus(opt);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.linear.nonempty, opt.machines);
  EXPECT_EQ(r.kozen.nonempty, opt.machines);
}

TEST(Verify, InjectedFaultIsDetected) {
  VerifyOptions opt;
  opt.fault = Fault::skip_input_check;
  const VerifyReport r = verify_corpus(opt);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.linear.failures.empty());
}

TEST(Verify, SameSeedSameReport) {
  VerifyOptions opt;
  opt.machines = 20;
  opt.seed = 77;
  const VerifyReport a = verify_corpus(opt);
  const VerifyReport b = verify_corpus(opt);
  EXPECT_EQ(a.seed, 77u);
  EXPECT_EQ(a.linear.nonempty, b.linear.nonempty);
  EXPECT_EQ(a.kozen.nonempty, b.kozen.nonempty);
  opt.seed = 78;
  const VerifyReport c = verify_corpus(opt);
  EXPECT_TRUE(c.ok());
}

TEST(Bench, EmptyRangeGivesHeaderOnly) {
  BenchOptions opt;
  opt.ks = {2};
  EXPECT_TRUE(run_bench(opt).empty());
  EXPECT_EQ(io::emit_csv(run_bench(opt)), std::string(io::kBenchHeader) + "\n");
}

TEST(Bench, CounterModuliArePrimesScaledToN) {
  const auto m = counter_moduli(64, 3);
  ASSERT_EQ(m.size(), 3u);
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_TRUE(is_prime(m[i]));
    if (i > 0) {
      EXPECT_GT(m[i], m[i - 1]);
    }
  }
  EXPECT_GE(m[0], 64u);
  EXPECT_LE(m[2], 2 * 64 * 5 / 2);
}

TEST(Bench, OneCounterGrowsLinearly) {
  BenchOptions opt;
  opt.ns = {64, 128, 256, 512, 1024};
  opt.ks = {1};
  opt.repeats = 1;
  const auto rows = run_bench(opt);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = static_cast<double>(rows[i].states_explored) / static_cast<double>(rows[i - 1].states_explored);
    EXPECT_GE(ratio, 2.0 / 2.5);
    EXPECT_LE(ratio, 2.0 * 2.5 / 2.0) << "n=" << rows[i].n;
  }
}

TEST(Bench, TwoCountersTimeSlopeIsQuadratic) {
  BenchOptions opt;
  opt.ns = {128, 256, 512, 1024};
  opt.ks = {2};
  opt.repeats = 3;
  const auto rows = run_bench(opt);
  std::vector<double> n, t, s;
  for (const auto& r : rows) {
    EXPECT_EQ(r.verdict, "nonempty");
    n.push_back(static_cast<double>(r.n));
    t.push_back(static_cast<double>(r.time_ns));
    s.push_back(static_cast<double>(r.states_explored));
  }
  const double time_slope = loglog_slope(n, t);
  EXPECT_GE(time_slope, 1.5);
  EXPECT_LE(time_slope, 2.5);
  const double state_slope = loglog_slope(n, s);
  EXPECT_GE(state_slope, 1.8);
  EXPECT_LE(state_slope, 2.2);
}

TEST(Bench, DeterministicModuloTime) {
  BenchOptions opt;
  opt.ns = {8, 16};
  opt.ks = {1, 2};
  opt.strategies = {Strategy::materialized, Strategy::on_the_fly};
  opt.repeats = 1;
  for (const char* family : {"counter", "linear", "kozen"}) {
    opt.family = family;
    const auto a = run_bench(opt);
    EXPECT_EQ(a.size(), 8u);
    EXPECT_EQ(without_times(a), without_times(run_bench(opt)));
    EXPECT_EQ(io::parse_csv(io::emit_csv(a)), a);
  }
}

TEST(Bench, CapViolationsBecomeSkippedRows) {
  BenchOptions opt;
  opt.ns = {64};
  opt.ks = {3};
  opt.strategies = {Strategy::materialized};
  opt.size_cap = 1000;
  opt.repeats = 1;
  const auto rows = run_bench(opt);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].verdict, "skipped");
  EXPECT_THROW(bench_instance("nope", 8, 1), ValidationError);
}
