#include "dtqw/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "dtqw/error.hpp"
#include "dtqw/kernels.hpp"

namespace dtqw {

namespace {

constexpr double kNormTol = 1e-9;

BlochVector combine(const BlochVector& a, double ca, const BlochVector& b, double cb) {
  return {ca * a[0] + cb * b[0], ca * a[1] + cb * b[1], ca * a[2] + cb * b[2]};
}

double dot(const BlochVector& a, const BlochVector& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

namespace detail {

BlochVector bloch_of(const Vector& amplitudes) {
  Complex overlap{0.0, 0.0};
  double z = 0.0;
  for (Eigen::Index j = 0; j + 1 < amplitudes.size(); j += 2) {
    const Complex a0 = amplitudes(j);
    const Complex a1 = amplitudes(j + 1);
    overlap += a0 * std::conj(a1);
    z += std::norm(a0) - std::norm(a1);
  }
  return {overlap.real(), overlap.imag(), 0.5 * z};
}

std::vector<double> separable_thetas(const Vector& c0, const Vector& c1p, double gap) {
  const BlochVector n0 = bloch_of(c0);
  const BlochVector npi = bloch_of(c1p);
  const BlochVector nhalf = bloch_of((c0 + c1p) * (1.0 / std::numbers::sqrt2));
  const BlochVector a = combine(n0, 0.5, npi, 0.5);
  const BlochVector b = combine(n0, 0.5, npi, -0.5);
  const BlochVector c = combine(nhalf, 1.0, a, -1.0);

  auto n_at = [&](double th) {
    const double co = std::cos(th);
    const double si = std::sin(th);
    return BlochVector{a[0] + b[0] * co + c[0] * si, a[1] + b[1] * co + c[1] * si, a[2] + b[2] * co + c[2] * si};
  };
  auto g = [&](double th) {
    const auto n = n_at(th);
    return dot(n, n);
  };
  auto dg = [&](double th) {
    const BlochVector dn = combine(b, -std::sin(th), c, std::cos(th));
    return 2.0 * dot(n_at(th), dn);
  };

  constexpr int kGrid = 512;
  std::vector<double> gv(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) gv[static_cast<std::size_t>(i)] = g(kPi * i / kGrid);
  const auto [lo, hi] = std::minmax_element(gv.begin(), gv.end());
  if (*hi - *lo < 1e-14) return {};

  std::vector<double> out;
  for (int i = 1; i < kGrid; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (!(gv[u] >= gv[u - 1] && gv[u] > gv[u + 1])) continue;
    double left = kPi * (i - 1) / kGrid;
    double right = kPi * (i + 1) / kGrid;
    double peak = kPi * i / kGrid;
    if (dg(left) > 0.0 && dg(right) < 0.0) {
      for (int it = 0; it < 80 && right - left > 1e-15; ++it) {
        const double mid = 0.5 * (left + right);
        (dg(mid) > 0.0 ? left : right) = mid;
      }
      peak = 0.5 * (left + right);
    }
    if (0.5 - std::sqrt(std::max(g(peak), 0.0)) < gap && peak > 1e-9 && peak < kPi - 1e-9) {
      out.push_back(peak);
    }
  }
  return out;
}

}  // namespace detail

BlochVector bloch_vector(const WalkState& state) {
  if (std::abs(state.norm_squared() - 1.0) > kNormTol) {
    throw DomainError("entanglement measures need a normalized state");
  }
  return detail::bloch_of(state.amplitudes());
}

double bloch_length(const BlochVector& n) { return std::sqrt(dot(n, n)); }

double binary_entropy(double eig_minus, double eig_plus) {
  double e = 0.0;
  if (eig_minus > 0.0) e -= eig_minus * std::log2(eig_minus);
  if (eig_plus > 0.0) e -= eig_plus * std::log2(eig_plus);
  return std::clamp(e, 0.0, 1.0);
}

EntanglementReport entanglement_from_bloch(const BlochVector& n) {
  EntanglementReport r;
  r.bloch = n;
  const double len = std::min(bloch_length(n), 0.5);
  r.eig_minus = 0.5 - len;
  r.eig_plus = 0.5 + len;
  r.entropy = binary_entropy(r.eig_minus, r.eig_plus);
  r.schmidt = std::sqrt(r.eig_minus) + std::sqrt(r.eig_plus);
  return r;
}

EntanglementReport analyze_entanglement(const WalkState& state) { return entanglement_from_bloch(bloch_vector(state)); }

double entropy(const WalkState& state) { return analyze_entanglement(state).entropy; }

double schmidt_norm(const WalkState& state) { return analyze_entanglement(state).schmidt; }

AveragedEntanglement average_over_theta(const EvolutionSequence& seq, int t, double phi, int nodes) {
  if (nodes < kMinNodes) throw DomainError("theta quadrature needs at least 16 nodes");
  if (t < 0) throw DomainError("negative step count");
  const auto traj = kernels::column_trajectory(seq, t);
  const auto rule = gauss_legendre(nodes);
  const auto tt = static_cast<std::size_t>(t);
  return kernels::theta_average_at(traj.col0[tt], traj.col1[tt], phi, t, rule);
}

}  // namespace dtqw
