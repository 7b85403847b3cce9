#pragma once

// Closed forms for the first step of a single-coin walk from
// cos(theta/2)|0_p,0_c> + e^{i phi} sin(theta/2)|0_p,1_c>.
//
// With nu = sqrt(rho) and mu = sqrt((1-rho)/rho):
//   |psi(1)> = nu{cos(theta/2) + mu e^{i(gamma+phi)} sin(theta/2)} |k-1, 0>
//            + nu{mu e^{i eta} cos(theta/2) - e^{i(gamma+phi+eta)} sin(theta/2)} |1, 1>.
// When gamma + phi is pi/2 or 3pi/2 the theta-average of S/sqrt(2) is (2 sqrt(2) nu / pi) E(1 - mu^2),
// which reaches 1 only at rho = 1/2.

#include <array>
#include <functional>
#include <optional>

#include "dtqw/core_walk.hpp"

namespace dtqw {

struct T1Result {
  WalkState state;
  bool closed_form = true;  ///< false for rho = 0, where mu is undefined and the walk is stepped instead
};

T1Result t1_state(int k, const CoinSpec& coin, const InitialStateSpec& init);

/// Schmidt norm of the t = 1 state, written so that theta = pi needs no limit.
double t1_schmidt(const CoinSpec& coin, double theta, double phi);

/// Complete elliptic integral of the second kind in parameter form,
/// E(m) = int_0^{pi/2} sqrt(1 - m sin^2 x) dx, for m <= 1 (negative m allowed). AGM evaluation.
double elliptic_e(double m);

/// (2 sqrt(2) nu / pi) E(1 - mu^2). Valid when gamma + phi is pi/2 or 3pi/2.
/// Throws DomainError unless 0 < rho <= 1.
double t1_average_schmidt(double rho);

struct T1Analysis {
  CoinSpec coin;
  double phi = 0.0;
  double nu = 0.0;
  double mu = 0.0;
  std::function<double(double)> s_pointwise;
  std::optional<double> s_av_closed;  ///< set when cos(gamma + phi) = 0
};

/// Throws DomainError for rho = 0.
T1Analysis analyze_t1(const CoinSpec& coin, double phi);

/// Coins that give a maximally entangled state at t = 1 for every theta:
/// rho = 1/2 and gamma = pi/2 - phi or 3pi/2 - phi (mod 2 pi), eta free.
struct MespsCoinFamily {
  double phi = 0.0;
  std::array<double, 2> gammas{};  ///< wrapped into [0, 2 pi)

  bool contains(const CoinSpec& spec, double tol = 1e-12) const;
};

MespsCoinFamily mesps_coin_family(double phi);

/// For a rho = 1/2 coin: true iff gamma + eta is a multiple of pi/2 (mod 2 pi, within 1e-12),
/// the condition for recurring maximally entangled states on 4- and 8-cycles.
/// Throws DomainError when rho != 1/2.
bool recurrence_predicate(const CoinSpec& coin);

}  // namespace dtqw
