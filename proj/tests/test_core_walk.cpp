#include <gtest/gtest.h>

#include <random>

#include "bridge.hpp"
#include "dtqw/core_walk.hpp"
#include "dtqw/error.hpp"
#include "dtqw/sequences.hpp"

using namespace dtqw;
using testing_bridge::max_diff;
using testing_bridge::to_amps;
using testing_bridge::to_oracle;
using testing_bridge::to_vector;

namespace {

CoinSpec random_coin(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {u(rng), u(rng) * 2 * kPi, u(rng) * 2 * kPi};
}

}  // namespace

TEST(Coin, HadamardEntries) {
  const Matrix2 h = make_coin({0.5, 0.0, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(h(0, 0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(0, 1) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(1, 0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(1, 1) + r), 0.0, 1e-15);
}

TEST(Coin, IdentityAndPauliX) {
  const Matrix2 i = make_coin(*lookup_coin("I"));
  EXPECT_LT((i - Matrix2::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  const Matrix2 x = make_coin(*lookup_coin("X"));
  Matrix2 expect;
  expect << 0, 1, 1, 0;
  EXPECT_LT((x - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Coin, MatchesWrittenOutEntries) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 50; ++n) {
    const CoinSpec s = random_coin(rng);
    const auto c = to_oracle(s);
    const Matrix2 m = make_coin(s);
    EXPECT_LT(std::abs(m(0, 0) - c.c00), 1e-14);
    EXPECT_LT(std::abs(m(0, 1) - c.c01), 1e-14);
    EXPECT_LT(std::abs(m(1, 0) - c.c10), 1e-14);
    EXPECT_LT(std::abs(m(1, 1) - c.c11), 1e-14);
    EXPECT_LT(unitarity_defect(m), 1e-14);
  }
}

TEST(Coin, RejectsRhoOutsideUnitInterval) {
  EXPECT_THROW(make_coin({-0.1, 0, 0}), DomainError);
  EXPECT_THROW(make_coin({1.1, 0, 0}), DomainError);
  EXPECT_THROW(make_coin({0.5, std::nan(""), 0}), DomainError);
}

TEST(Shift, MovesCoinZeroLeftAndCoinOneRight) {
  const Matrix s = make_shift(5);
  for (int j = 0; j < 5; ++j) {
    const Vector left = s * WalkState::basis(5, j, 0).amplitudes();
    const Vector right = s * WalkState::basis(5, j, 1).amplitudes();
    EXPECT_EQ(left(2 * ((j + 4) % 5)), Complex(1.0));
    EXPECT_EQ(right(2 * ((j + 1) % 5) + 1), Complex(1.0));
    EXPECT_DOUBLE_EQ(left.squaredNorm(), 1.0);
    EXPECT_DOUBLE_EQ(right.squaredNorm(), 1.0);
  }
}

TEST(Evolution, UnitaryForRandomCoins) {
  std::mt19937_64 rng(3);
  for (int k : {3, 4, 5, 8}) {
    for (int n = 0; n < 20; ++n) {
      EXPECT_LT(unitarity_defect(make_evolution(k, random_coin(rng)).matrix()), 1e-12);
    }
  }
}

TEST(Evolution, AgreesWithAmplitudeBookkeeping) {
  std::mt19937_64 rng(5);
  for (int k : {3, 4, 5, 8}) {
    for (int n = 0; n < 10; ++n) {
      const std::vector<CoinSpec> specs{random_coin(rng), random_coin(rng), random_coin(rng)};
      std::vector<EvolutionOperator> ops;
      std::vector<oracle::Coin> coins;
      for (const auto& s : specs) ops.push_back(make_evolution(k, s)), coins.push_back(to_oracle(s));
      const auto start = oracle::random_state(k, rng);
      const int t = 17;
      const auto expect = oracle::walk(k, coins, start, t);
      const WalkState got = evolve(WalkState(k, to_vector(start)), ops, t);
      EXPECT_LT(max_diff(expect, got.amplitudes()), 1e-12) << "k=" << k;
    }
  }
}

TEST(Evolution, ComposeAppliesFrontFirst) {
  const std::vector<EvolutionOperator> ops{make_evolution(4, *lookup_coin("H")), make_evolution(4, *lookup_coin("X"))};
  const Matrix expect = ops[1].matrix() * ops[0].matrix();
  EXPECT_LT(max_abs_diff(compose(ops).matrix(), expect), 1e-15);
}

TEST(Evolution, HadamardFourCycleHasPeriodEight) {
  const Matrix u = make_evolution(4, *lookup_coin("H")).matrix();
  Matrix p = Matrix::Identity(8, 8);
  for (int i = 0; i < 8; ++i) p = u * p;
  EXPECT_LT(max_abs_diff(p, Matrix::Identity(8, 8)), 1e-12);
  EXPECT_GT(max_abs_diff(u * u * u * u, Matrix::Identity(8, 8)), 0.5);
}

TEST(Evolution, MismatchedCycleRejected) {
  const auto op = make_evolution(4, {});
  EXPECT_THROW(op.apply(WalkState::basis(5, 0, 0)), DomainError);
  EXPECT_THROW(EvolutionOperator(4, Matrix::Identity(6, 6)), DomainError);
}

TEST(WalkState, Validation) {
  EXPECT_THROW(WalkState(2, Vector::Zero(4)), DomainError);
  EXPECT_THROW(WalkState(4, Vector::Zero(7)), DomainError);
  EXPECT_THROW(make_shift(2), DomainError);
  EXPECT_THROW(WalkState::basis(4, 4, 0), DomainError);
}

TEST(WalkState, InitialState) {
  const auto s = prepare_initial(4, {kPi / 2, kPi / 2});
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(s.amplitude(0, 0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(0, 1) - Complex(0, r)), 0.0, 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(WalkState, PositionDistributionSumsToOne) {
  std::mt19937_64 rng(9);
  const WalkState s(5, to_vector(oracle::random_state(5, rng)));
  const auto p = position_distribution(s);
  ASSERT_EQ(p.size(), 5u);
  double total = 0.0;
  for (double v : p) total += v;
  EXPECT_NEAR(total, 1.0, 1e-14);
}

TEST(WalkState, EvolveZeroStepsIsIdentity) {
  std::mt19937_64 rng(1);
  const WalkState s(3, to_vector(oracle::random_state(3, rng)));
  const std::vector<EvolutionOperator> ops{make_evolution(3, {})};
  EXPECT_EQ(to_amps(evolve(s, ops, 0).amplitudes()), to_amps(s.amplitudes()));
  EXPECT_THROW(evolve(s, ops, -1), DomainError);
}

TEST(Phase, WrapIntoZeroTwoPi) {
  EXPECT_NEAR(wrap_phase(-kPi / 2), 1.5 * kPi, 1e-15);
  EXPECT_NEAR(wrap_phase(5 * kPi), kPi, 1e-14);
  EXPECT_GE(wrap_phase(-1e-18), 0.0);
  EXPECT_LT(wrap_phase(-1e-18), 2 * kPi);
}
