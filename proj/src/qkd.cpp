#include "dtqw/qkd.hpp"

#include <cmath>
#include <string>

#include "dtqw/error.hpp"
#include "dtqw/sequences.hpp"

namespace dtqw::qkd {

namespace {

int mod4(int v) { return ((v % kCycle) + kCycle) % kCycle; }

int complement_power(int a_power) { return ((kWalkPeriod - a_power) % kWalkPeriod + kWalkPeriod) % kWalkPeriod; }

// Site with probability above 1 - kSupportTol, if any.
std::optional<int> single_site(const WalkState& s, double* prob) {
  const auto p = position_distribution(s);
  for (int i = 0; i < kCycle; ++i) {
    if (p[static_cast<std::size_t>(i)] > 1.0 - kSupportTol) {
      if (prob) *prob = p[static_cast<std::size_t>(i)];
      return i;
    }
  }
  return std::nullopt;
}

}  // namespace

void PrivateKey::validate() const {
  if (a_power <= 0 || a_power % 4 != 1) {
    throw KeyError("A_power must be 1 mod 4 for a maximally entangled public key (got " + std::to_string(a_power) + ")");
  }
  if (j < 0 || j >= kCycle) throw DomainError("initial position j must be in 0..3");
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
}

void Message::validate() const {
  if (m < 0 || m >= kCycle) throw DomainError("message must be in 0..3");
}

Matrix translation(int m) {
  Matrix t = Matrix::Zero(2 * kCycle, 2 * kCycle);
  for (int i = 0; i < kCycle; ++i) {
    const int to = mod4(i + m);
    t(2 * to, 2 * i) = 1.0;
    t(2 * to + 1, 2 * i + 1) = 1.0;
  }
  return t;
}

Matrix hadamard_walk_power(int power) {
  if (power < 0) throw DomainError("negative walk power");
  const Matrix h = make_evolution(kCycle, *lookup_coin("H")).matrix();
  Matrix out = Matrix::Identity(2 * kCycle, 2 * kCycle);
  for (int i = 0; i < power; ++i) out = h * out;
  return out;
}

PublicKeyState keygen(const PrivateKey& sk) {
  sk.validate();
  Vector amps = Vector::Zero(2 * kCycle);
  amps(2 * sk.j) = std::cos(0.5 * sk.theta);
  amps(2 * sk.j + 1) = Complex(0.0, std::sin(0.5 * sk.theta));
  return {WalkState(kCycle, hadamard_walk_power(sk.a_power) * amps)};
}

WalkState encrypt(const PublicKeyState& pk, const Message& msg) {
  msg.validate();
  if (pk.state.k() != kCycle) throw DomainError("public key must live on a 4-cycle");
  return WalkState(kCycle, translation(msg.m) * pk.state.amplitudes());
}

Decryption decrypt_detailed(const WalkState& ct, const PrivateKey& sk) {
  sk.validate();
  if (ct.k() != kCycle) throw DomainError("ciphertext must live on a 4-cycle");
  WalkState out(kCycle, hadamard_walk_power(complement_power(sk.a_power)) * ct.amplitudes());
  double prob = 0.0;
  const auto site = single_site(out, &prob);
  if (!site) throw ProtocolError("decrypted state is not supported on a single position");
  return {Message{mod4(*site - sk.j)}, *site, prob, std::move(out)};
}

Message decrypt(const WalkState& ct, const PrivateKey& sk) { return decrypt_detailed(ct, sk).message; }

bool shift_commutation_check(std::optional<int> w_power) {
  const PrivateKey base;
  const Matrix w = hadamard_walk_power(w_power.value_or(complement_power(base.a_power)));
  constexpr int kThetaGrid = 16;
  for (int j = 0; j < kCycle; ++j) {
    for (int i = 0; i < kThetaGrid; ++i) {
      const PrivateKey sk{base.a_power, j, kPi * i / (kThetaGrid - 1)};
      const auto pk = keygen(sk);
      for (int m = 0; m < kCycle; ++m) {
        const WalkState out(kCycle, w * encrypt(pk, Message{m}).amplitudes());
        const auto site = single_site(out, nullptr);
        if (!site || *site != mod4(j + m)) return false;
      }
    }
  }
  return true;
}

}  // namespace dtqw::qkd
