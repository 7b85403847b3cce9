#pragma once

// Public-key exchange on a 4-cycle Hadamard walk.
//
// Bob's private key is (A_power, j, theta). The public key is (H_4)^A_power applied to
// |j_p> (x) (cos(theta/2)|0_c> + i sin(theta/2)|1_c>), which is maximally entangled when
// A_power = 1 mod 4. Alice encodes m in {0..3} by translating the walker m sites. Bob runs the
// walk (8 - A_power) mod 8 more steps; the H_4 walk has period 8 and commutes with translations,
// so the walker lands on the single site (j + m) mod 4.

#include <optional>

#include "dtqw/core_walk.hpp"

namespace dtqw::qkd {

inline constexpr int kCycle = 4;
inline constexpr int kWalkPeriod = 8;
inline constexpr double kSupportTol = 1e-10;

struct PrivateKey {
  int a_power = 5;
  int j = 0;
  double theta = 0.0;

  /// Throws KeyError unless a_power > 0 and a_power = 1 mod 4, DomainError for j outside 0..3.
  void validate() const;
};

struct PublicKeyState {
  WalkState state;
};

struct Message {
  int m = 0;

  /// Throws DomainError outside 0..3.
  void validate() const;
};

/// T_m (x) I_c with T_m |i> = |(i + m) mod 4>.
Matrix translation(int m);

/// H_4 to the given power.
Matrix hadamard_walk_power(int power);

PublicKeyState keygen(const PrivateKey& sk);

WalkState encrypt(const PublicKeyState& pk, const Message& msg);

struct Decryption {
  Message message;
  int position = 0;          ///< m' = (j + m) mod 4
  double support = 0.0;      ///< probability on that position
  WalkState final_state;     ///< W applied to the ciphertext
};

/// Throws ProtocolError when the state after W is not on a single site.
Decryption decrypt_detailed(const WalkState& ct, const PrivateKey& sk);

Message decrypt(const WalkState& ct, const PrivateKey& sk);

/// Runs every (j, m) on a 16-point theta grid for the default A_power = 5 key and checks that the
/// ciphertext, after `w_power` steps of H_4 (default: the complement to 8), sits on the single site
/// (j + m) mod 4.
bool shift_commutation_check(std::optional<int> w_power = std::nullopt);

}  // namespace dtqw::qkd
