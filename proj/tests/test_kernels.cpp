#include <gtest/gtest.h>

#include <omp.h>

#include <cstring>

#include "bridge.hpp"
#include "dtqw/error.hpp"
#include "dtqw/kernels.hpp"
#include "dtqw/quadrature.hpp"

using namespace dtqw;

namespace {

bool bitwise_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST(GaussLegendre, TwoPointRule) {
  const auto r = gauss_legendre(2);
  ASSERT_EQ(r.size(), 2);
  EXPECT_NEAR(r.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
}

TEST(GaussLegendre, ExactForHighDegreePolynomials) {
  for (int n : {5, 16, 64, 128}) {
    const auto r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-13) << n;
    // int_{-1}^{1} x^{2m} dx = 2 / (2m + 1), exact up to degree 2n - 1.
    const int m = std::min(n - 1, 20);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * std::pow(r.nodes[i], 2 * m);
    EXPECT_NEAR(acc, 2.0 / (2 * m + 1), 1e-13) << n;
  }
  EXPECT_THROW(gauss_legendre(0), DomainError);
}

TEST(ThetaRule, WeightsAverageOverZeroPi) {
  const auto base = gauss_legendre(16);
  for (const std::vector<double>& breaks : {std::vector<double>{}, std::vector<double>{1.0},
                                            std::vector<double>{0.4, 2.2}}) {
    const auto r = theta_rule(base, breaks);
    EXPECT_EQ(r.theta.size(), base.nodes.size() * (breaks.size() + 1));
    double w = 0.0, first = 0.0;
    for (std::size_t i = 0; i < r.theta.size(); ++i) {
      w += r.weight[i];
      first += r.weight[i] * std::cos(r.theta[i]);
      EXPECT_GT(r.theta[i], 0.0);
      EXPECT_LT(r.theta[i], kPi);
    }
    EXPECT_NEAR(w, 1.0, 1e-14);
    EXPECT_NEAR(first, 0.0, 1e-13);
  }
}

TEST(PairwiseSum, MatchesNaiveOnSmallInputs) {
  std::vector<double> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(1.0 / i);
  double naive = 0.0;
  for (double x : v) naive += x;
  EXPECT_NEAR(pairwise_sum(v), naive, 1e-12);
  EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(Trajectory, ColumnsFollowTheWalk) {
  const auto seq = parse_sequence("5: H H X");
  const auto traj = kernels::column_trajectory(seq, 9);
  ASSERT_EQ(traj.col0.size(), 10u);
  std::vector<oracle::Coin> coins;
  for (const auto& b : seq.block()) coins.push_back(testing_bridge::to_oracle(b.spec));
  for (int t = 0; t <= 9; ++t) {
    oracle::Amps e0(10), e1(10);
    e0[0] = 1.0;
    e1[1] = 1.0;
    EXPECT_LT(testing_bridge::max_diff(oracle::walk(5, coins, e0, t), traj.col0[t]), 1e-13);
    EXPECT_LT(testing_bridge::max_diff(oracle::walk(5, coins, e1, t), traj.col1[t]), 1e-13);
  }
}

TEST(Series, ParallelIsBitIdenticalToSerial) {
  omp_set_num_threads(4);
  for (const char* text : {"4: H", "3: H H X", "8: C'", "5: I H I"}) {
    const auto seq = parse_sequence(text);
    const auto serial = kernels::theta_average_series_serial(seq, kPi / 2, 60);
    const auto par = kernels::theta_average_series_omp(seq, kPi / 2, 60);
    ASSERT_EQ(serial.size(), par.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_TRUE(bitwise_equal(serial[i].e_av, par[i].e_av)) << text << " t=" << i + 1;
      EXPECT_TRUE(bitwise_equal(serial[i].s_av, par[i].s_av)) << text << " t=" << i + 1;
      EXPECT_EQ(serial[i].t, par[i].t);
    }
  }
}

TEST(Series, MatchesPointwiseAverage) {
  const auto seq = parse_sequence("4: I H I");
  const auto series = kernels::theta_average_series_omp(seq, 0.9, 20);
  for (int t = 1; t <= 20; ++t) {
    EXPECT_TRUE(bitwise_equal(series[t - 1].e_av, average_over_theta(seq, t, 0.9).e_av));
  }
  EXPECT_THROW(kernels::theta_average_series_omp(seq, 0.9, 5, 4), DomainError);
  EXPECT_TRUE(kernels::theta_average_series_serial(seq, 0.9, 0).empty());
}

TEST(ReturnProbability, ShiftOnlyWalk) {
  // With the identity coin and theta = 0 the walker just steps left: back at 0 every 4 steps.
  const auto p = kernels::return_probability_series(parse_sequence("4: I"), {0.0, kPi / 2}, 12);
  ASSERT_EQ(p.size(), 13u);
  for (int t = 0; t <= 12; ++t) EXPECT_NEAR(p[t], t % 4 == 0 ? 1.0 : 0.0, 1e-15) << t;
}

TEST(ReturnProbability, HadamardPeriodEight) {
  const auto p = kernels::return_probability_series(parse_sequence("4: H"), {0.0, kPi / 2}, 40);
  EXPECT_NEAR(p[0], 1.0, 1e-15);
  for (int t = 0; t + 8 <= 40; ++t) EXPECT_NEAR(p[t], p[t + 8], 1e-12);
  EXPECT_NEAR(p[8], 1.0, 1e-12);
}
