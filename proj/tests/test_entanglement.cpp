#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bridge.hpp"
#include "dtqw/entanglement.hpp"
#include "dtqw/error.hpp"
#include "dtqw/sequences.hpp"

using namespace dtqw;
using testing_bridge::to_oracle;
using testing_bridge::to_vector;

TEST(Bloch, MatchesPartialTraceOnRandomStates) {
  std::mt19937_64 rng(2024);
  for (int k : {3, 4, 5, 8}) {
    for (int n = 0; n < 100; ++n) {
      const auto a = oracle::random_state(k, rng);
      const auto ref = oracle::partial_trace(a);
      const auto rep = analyze_entanglement(WalkState(k, to_vector(a)));
      EXPECT_NEAR(rep.entropy, ref.entropy, 1e-10);
      EXPECT_NEAR(rep.schmidt, ref.schmidt, 1e-10);
      EXPECT_NEAR(rep.eig_minus + rep.eig_plus, 1.0, 1e-14);
    }
  }
}

TEST(Bloch, ProductStateIsSeparable) {
  const auto s = prepare_initial(4, {1.1, 0.3});
  const auto rep = analyze_entanglement(s);
  EXPECT_NEAR(bloch_length(rep.bloch), 0.5, 1e-15);
  EXPECT_NEAR(rep.entropy, 0.0, 1e-12);
  EXPECT_NEAR(rep.schmidt, 1.0, 1e-7);
}

TEST(Bloch, MaximallyEntangled) {
  Vector v = Vector::Zero(8);
  v(2 * 3) = 1.0 / std::sqrt(2.0);
  v(2 * 1 + 1) = Complex(0, 1.0 / std::sqrt(2.0));
  const auto rep = analyze_entanglement(WalkState(4, v));
  EXPECT_NEAR(rep.entropy, 1.0, 1e-15);
  EXPECT_NEAR(rep.schmidt, std::sqrt(2.0), 1e-15);
}

TEST(Bloch, RequiresNormalizedState) {
  EXPECT_THROW(entropy(WalkState(4, Vector::Zero(8))), DomainError);
  Vector v = Vector::Zero(8);
  v(0) = 1.1;
  EXPECT_THROW(schmidt_norm(WalkState(4, v)), DomainError);
}

TEST(BinaryEntropy, ZeroLogZero) {
  EXPECT_EQ(binary_entropy(0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5, 0.5), 1.0);
  EXPECT_NEAR(binary_entropy(0.25, 0.75), 0.8112781244591328, 1e-15);
}

TEST(Average, HadamardFourCycleSequence) {
  const auto seq = parse_sequence("4: H");
  const double expect[] = {1, 0.5573049591, 0.5573049591, 0, 1, 0.5573049591, 0.5573049591, 0};
  for (int t = 1; t <= 8; ++t) {
    const auto a = average_over_theta(seq, t, kPi / 2);
    EXPECT_NEAR(a.e_av, expect[t - 1], 1e-9) << "t=" << t;
  }
}

TEST(Average, PartialValueIsMeanBinaryEntropy) {
  // At t=2 the H4 walk leaves a state whose reduced coin spectrum is {cos^2(theta/2), sin^2(theta/2)}.
  const double ref = oracle::simpson(
                         [](double th) {
                           const double c = std::cos(th / 2) * std::cos(th / 2);
                           return c <= 0 || c >= 1 ? 0.0 : -c * std::log2(c) - (1 - c) * std::log2(1 - c);
                         },
                         0.0, kPi, 1e-13) /
                     kPi;
  EXPECT_NEAR(ref, 0.5573049591, 1e-9);
  EXPECT_NEAR(average_over_theta(parse_sequence("4: H"), 2, kPi / 2).e_av, ref, 1e-10);
}

TEST(Average, MatchesBruteForceQuadrature) {
  struct Case {
    const char* seq;
    double phi;
    int t;
  };
  const Case cases[] = {{"4: H", kPi / 2, 3},      {"3: H H X", kPi / 2, 7}, {"5: H I", kPi / 3, 6},
                        {"8: R", kPi / 6, 5},      {"4: C", 0.4, 9},         {"3: C2(0.3,1,2)", 2.0, 4},
                        {"5: I H I", kPi / 2, 11}, {"4: F", kPi, 3}};
  for (const auto& c : cases) {
    const auto seq = parse_sequence(c.seq);
    std::vector<oracle::Coin> coins;
    for (const auto& b : seq.block()) coins.push_back(to_oracle(b.spec));
    auto at = [&](double th, bool schmidt) {
      const auto a = oracle::walk(seq.k(), coins, oracle::initial(seq.k(), th, c.phi), c.t);
      const auto r = oracle::partial_trace(a);
      return schmidt ? r.schmidt / std::sqrt(2.0) : r.entropy;
    };
    const double e_ref = oracle::simpson([&](double th) { return at(th, false); }, 0.0, kPi, 1e-12) / kPi;
    const double s_ref = oracle::simpson([&](double th) { return at(th, true); }, 0.0, kPi, 1e-12) / kPi;
    const auto got = average_over_theta(seq, c.t, c.phi);
    EXPECT_NEAR(got.e_av, e_ref, 1e-8) << c.seq << " t=" << c.t;
    EXPECT_NEAR(got.s_av, s_ref, 1e-8) << c.seq << " t=" << c.t;
    EXPECT_EQ(got.t, c.t);
    EXPECT_DOUBLE_EQ(got.value(Measure::Schmidt), got.s_av);
  }
}

TEST(Average, StableUnderNodeDoubling) {
  for (const char* text : {"4: H", "3: H H X", "5: H I I", "8: F", "4: C"}) {
    const auto seq = parse_sequence(text);
    for (int t = 1; t <= 30; ++t) {
      for (double phi : {kPi / 2, kPi / 6, kPi, 1.0}) {
        const auto a = average_over_theta(seq, t, phi, 64);
        const auto b = average_over_theta(seq, t, phi, 128);
        ASSERT_LT(std::abs(a.e_av - b.e_av), 1e-9) << text << " t=" << t << " phi=" << phi;
        ASSERT_LT(std::abs(a.s_av - b.s_av), 1e-9) << text << " t=" << t << " phi=" << phi;
      }
    }
  }
}

TEST(Average, InRangeAndValidated) {
  const auto seq = parse_sequence("5: H H X");
  for (int t = 0; t <= 20; ++t) {
    const auto a = average_over_theta(seq, t, 0.7);
    EXPECT_GE(a.e_av, 0.0);
    EXPECT_LE(a.e_av, 1.0);
    EXPECT_GE(a.s_av, 1.0 / std::sqrt(2.0) - 1e-12);
    EXPECT_LE(a.s_av, 1.0 + 1e-12);
  }
  EXPECT_NEAR(average_over_theta(seq, 0, 0.7).e_av, 0.0, 1e-12);
  EXPECT_THROW(average_over_theta(seq, 3, 0.7, 8), DomainError);
  EXPECT_THROW(average_over_theta(seq, -1, 0.7), DomainError);
}

TEST(SeparableThetas, FindsEveryInteriorSeparablePoint) {
  int interior = 0;
  for (const char* text : {"4: H", "3: H H X", "5: H I", "4: I H I", "8: H"}) {
    const auto seq = parse_sequence(text);
    const int dim = 2 * seq.k();
    Vector c0 = Vector::Unit(dim, 0);
    Vector c1 = Vector::Unit(dim, 1);
    for (int t = 1; t <= 12; ++t) {
      c0 = seq.step(t).matrix() * c0;
      c1 = seq.step(t).matrix() * c1;
      for (double phi : {kPi / 2, 0.3}) {
        const Vector c1p = std::polar(1.0, phi) * c1;
        const auto found = detail::separable_thetas(c0, c1p);
        interior += static_cast<int>(found.size());
        for (double x : found) {
          const Vector psi = std::cos(x / 2) * c0 + std::sin(x / 2) * c1p;
          EXPECT_NEAR(bloch_length(detail::bloch_of(psi)), 0.5, 1e-6) << text << " t=" << t;
        }
        // Dense scan: anything separable must be close to a reported point, unless the state is
        // separable for every theta (no kink to split at).
        std::vector<double> gap(3999);
        for (int i = 1; i < 4000; ++i) {
          const double x = kPi * i / 4000;
          const Vector psi = std::cos(x / 2) * c0 + std::sin(x / 2) * c1p;
          gap[static_cast<std::size_t>(i - 1)] = 0.5 - bloch_length(detail::bloch_of(psi));
        }
        if (*std::max_element(gap.begin(), gap.end()) < 1e-10) continue;
        for (int i = 1; i < 4000; ++i) {
          const double x = kPi * i / 4000;
          if (gap[static_cast<std::size_t>(i - 1)] > 1e-10) continue;
          const bool near = std::any_of(found.begin(), found.end(), [&](double f) { return std::abs(f - x) < 1e-3; });
          EXPECT_TRUE(near) << text << " t=" << t << " theta=" << x;
        }
      }
    }
  }
  EXPECT_GT(interior, 0);
}
