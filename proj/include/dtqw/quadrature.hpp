#pragma once

#include <span>
#include <vector>

namespace dtqw {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Nodes by Newton iteration on P_n from the Chebyshev guesses; exact for polynomials of degree 2n-1.
GaussLegendreRule gauss_legendre(int n);

/// Quadrature for (1/pi) * integral_0^pi f(theta) d theta.
struct ThetaRule {
  std::vector<double> theta;
  std::vector<double> weight;  ///< sums to 1
};

/// Splits [0, pi] at `breakpoints` (interior points, any order) and puts the full `base` rule on
/// every panel after the substitution x = a + (b-a) * u^2 (3 - 2u). The substitution clusters
/// nodes at panel ends, where the entanglement integrands have their x^2 log x / |x| kinks.
ThetaRule theta_rule(const GaussLegendreRule& base, std::span<const double> breakpoints = {});

/// Pairwise (cascade) sum in index order; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace dtqw
