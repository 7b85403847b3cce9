#pragma once

// Coin-position entanglement of a walk state.
//
// The coin reduced density matrix is fixed by the Bloch vector
//   n = ( Re S, Im S, (1/2) sum_j (|a0(j)|^2 - |a1(j)|^2) ),  S = sum_j a0(j) conj(a1(j)),
// with eigenvalues E_-/+ = 1/2 -/+ |n|. Entropy E = -sum E_i log2 E_i, Schmidt norm S = sqrt(E_-) + sqrt(E_+).

#include <array>
#include <span>
#include <vector>

#include "dtqw/core_walk.hpp"
#include "dtqw/sequences.hpp"

namespace dtqw {

using BlochVector = std::array<double, 3>;

struct EntanglementReport {
  BlochVector bloch{};
  double eig_minus = 0.5;
  double eig_plus = 0.5;
  double entropy = 1.0;
  double schmidt = std::numbers::sqrt2;
};

/// Throws DomainError when the state is not normalized (|norm^2 - 1| > 1e-9).
BlochVector bloch_vector(const WalkState& state);

double bloch_length(const BlochVector& n);

/// Eigenvalues, entropy and Schmidt norm from a Bloch vector (|n| clamped to 1/2).
EntanglementReport entanglement_from_bloch(const BlochVector& n);

EntanglementReport analyze_entanglement(const WalkState& state);
double entropy(const WalkState& state);
double schmidt_norm(const WalkState& state);

/// -E_- log2 E_- - E_+ log2 E_+, with 0 log 0 = 0.
double binary_entropy(double eig_minus, double eig_plus);

enum class Measure { Entropy, Schmidt };

struct AveragedEntanglement {
  double phi = 0.0;
  int t = 0;
  double e_av = 0.0;  ///< (1/pi) int_0^pi E d theta
  double s_av = 0.0;  ///< (1/pi) int_0^pi S/sqrt(2) d theta
  int quadrature_nodes = 0;

  double value(Measure m) const { return m == Measure::Entropy ? e_av : s_av; }
};

inline constexpr int kDefaultNodes = 64;
inline constexpr int kMinNodes = 16;

/// theta-average of both measures after t steps of `seq` from the initial state at fixed phi.
/// `nodes` Gauss-Legendre points are used per panel (see theta_rule); throws DomainError if nodes < 16.
AveragedEntanglement average_over_theta(const EvolutionSequence& seq, int t, double phi, int nodes = kDefaultNodes);

namespace detail {

/// Bloch vector without the normalization check.
BlochVector bloch_of(const Vector& amplitudes);

/// The evolved state is cos(theta/2) c0 + sin(theta/2) c1p with c1p = e^{i phi} M e_1, so n(theta)
/// = A + B cos(theta) + C sin(theta). Returns the interior theta in (0, pi) where |n| comes within
/// `gap` of 1/2 (separable points). There are at most two.
std::vector<double> separable_thetas(const Vector& c0, const Vector& c1p, double gap = 1e-6);

}  // namespace detail

}  // namespace dtqw
