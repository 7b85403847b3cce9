#include <gtest/gtest.h>

#include "dtqw/entanglement.hpp"
#include "dtqw/error.hpp"
#include "dtqw/qkd.hpp"

using namespace dtqw;
using namespace dtqw::qkd;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

// Overlap |<a|b>| = 1 means equal up to a global phase.
double phase_free_overlap(const Vector& a, const Vector& b) { return std::abs(a.dot(b)); }

Vector basis_combo(std::initializer_list<std::pair<int, Complex>> terms) {
  Vector v = Vector::Zero(8);
  for (const auto& [idx, amp] : terms) v(idx) = amp;
  return v;
}

}  // namespace

TEST(Keygen, DefaultKey) {
  const auto pk = keygen({});
  const Vector expect = basis_combo({{2 * 1 + 0, kS}, {2 * 3 + 1, kS}});
  EXPECT_NEAR(phase_free_overlap(pk.state.amplitudes(), expect), 1.0, 1e-12);
  EXPECT_NEAR(entropy(pk.state), 1.0, 1e-9);
}

TEST(Keygen, SingleStep) {
  const auto pk = keygen({1, 0, 0.0});
  const Vector expect = basis_combo({{2 * 3 + 0, kS}, {2 * 1 + 1, kS}});
  EXPECT_NEAR(phase_free_overlap(pk.state.amplitudes(), expect), 1.0, 1e-12);
  EXPECT_NEAR(entropy(pk.state), 1.0, 1e-12);
}

TEST(Keygen, AlwaysMaximallyEntangled) {
  for (int a : {1, 5, 9, 13}) {
    for (int j = 0; j < 4; ++j) {
      for (int i = 0; i < 32; ++i) {
        const auto pk = keygen({a, j, kPi * i / 31});
        EXPECT_NEAR(entropy(pk.state), 1.0, 1e-9);
      }
    }
  }
}

TEST(Keygen, RejectsBadKeys) {
  EXPECT_THROW(keygen({4, 0, 0.0}), KeyError);
  EXPECT_THROW(keygen({2, 0, 0.0}), KeyError);
  EXPECT_THROW(keygen({-3, 0, 0.0}), KeyError);
  EXPECT_THROW(keygen({5, 4, 0.0}), DomainError);
  EXPECT_THROW(keygen({5, -1, 0.0}), DomainError);
}

TEST(Encrypt, DefaultKeyWalkthrough) {
  const auto ct = encrypt(keygen({}), Message{3});
  const Vector expect = basis_combo({{2 * 0 + 0, kS}, {2 * 2 + 1, kS}});
  EXPECT_NEAR(phase_free_overlap(ct.amplitudes(), expect), 1.0, 1e-12);
  EXPECT_NEAR(entropy(ct), 1.0, 1e-9);
}

TEST(Encrypt, ZeroIsIdentity) {
  const auto pk = keygen({5, 2, 0.7});
  EXPECT_LT((encrypt(pk, Message{0}).amplitudes() - pk.state.amplitudes()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(encrypt(pk, Message{4}), DomainError);
  EXPECT_THROW(encrypt(pk, Message{-1}), DomainError);
}

TEST(Translation, CommutesWithWalk) {
  const Matrix h = hadamard_walk_power(1);
  for (int m = 0; m < 4; ++m) {
    const Matrix t = translation(m);
    EXPECT_LT(max_abs_diff(t * h, h * t), 1e-15);
  }
  EXPECT_LT(max_abs_diff(hadamard_walk_power(8), Matrix::Identity(8, 8)), 1e-12);
}

TEST(Decrypt, DefaultKeyWalkthrough) {
  const PrivateKey sk;
  const auto dec = decrypt_detailed(encrypt(keygen(sk), Message{3}), sk);
  EXPECT_EQ(dec.message.m, 3);
  EXPECT_EQ(dec.position, 3);
  EXPECT_NEAR(std::abs(dec.final_state.amplitude(3, 0)), 1.0, 1e-12);
  EXPECT_GT(dec.support, 1.0 - 1e-10);
}

TEST(Decrypt, ExhaustiveRoundTrip) {
  for (int a : {1, 5, 9}) {
    for (int j = 0; j < 4; ++j) {
      for (int i = 0; i < 16; ++i) {
        const PrivateKey sk{a, j, kPi * i / 15};
        const auto pk = keygen(sk);
        for (int m = 0; m < 4; ++m) {
          EXPECT_EQ(decrypt(encrypt(pk, Message{m}), sk).m, m) << "a=" << a << " j=" << j << " i=" << i;
        }
      }
    }
  }
}

TEST(Decrypt, GlobalPhaseDoesNotMatter) {
  const PrivateKey sk{5, 1, 1.2};
  const auto ct = encrypt(keygen(sk), Message{2});
  const WalkState rotated(4, std::polar(1.0, 2.1) * ct.amplitudes());
  EXPECT_EQ(decrypt(rotated, sk).m, 2);
}

TEST(Decrypt, CorruptedCiphertext) {
  const PrivateKey sk;
  Vector v = Vector::Zero(8);
  v(0) = kS;
  v(3) = kS;
  EXPECT_THROW(decrypt(WalkState(4, v), sk), ProtocolError);
  EXPECT_THROW(decrypt(WalkState::basis(5, 0, 0), sk), DomainError);
}

TEST(Commutation, DefaultAndNegativeControl) {
  EXPECT_TRUE(shift_commutation_check());
  EXPECT_TRUE(shift_commutation_check(3));
  EXPECT_FALSE(shift_commutation_check(2));
  EXPECT_FALSE(shift_commutation_check(1));
}
