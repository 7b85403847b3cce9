#include "dtqw/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dtqw/error.hpp"

namespace dtqw {

namespace {

constexpr double kRhoGrid = 1e-4;
constexpr double kRootAccept = 1e-7;

Matrix2 block_of(const Matrix& fc, const Matrix& op, int l) {
  const Eigen::MatrixXcd rows = fc.middleRows(2 * l, 2);
  return rows * op * rows.adjoint();
}

}  // namespace

Matrix fourier_matrix(int m) {
  if (m < 1) throw DomainError("Fourier matrix needs m >= 1");
  Matrix f(m, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      f(r, c) = std::polar(scale, 2.0 * kPi * ((r * c) % m) / m);
    }
  }
  return f;
}

Matrix commensurate_fourier(int k) {
  const Matrix fk = fourier_matrix(k);
  const Matrix f2 = fourier_matrix(2);
  Matrix fc(2 * k, 2 * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) fc.block<2, 2>(2 * a, 2 * b) = fk(a, b) * f2;
  }
  return fc;
}

BlockSpectrum block_diagonalize(const EvolutionOperator& op) {
  const int k = op.k();
  const Matrix fc = commensurate_fourier(k);
  const Matrix rotated = fc * op.matrix() * fc.adjoint();

  BlockSpectrum spec;
  spec.k = k;
  Matrix off = rotated;
  for (int l = 0; l < k; ++l) {
    const Matrix2 b = rotated.block<2, 2>(2 * l, 2 * l);
    spec.blocks.push_back(b);
    spec.eigenvalues.push_back(eigenvalues_2x2(b));
    off.block<2, 2>(2 * l, 2 * l).setZero();
  }
  spec.leakage = off.cwiseAbs().maxCoeff();
  if (spec.leakage > kBlockLeakageTol) {
    throw StructuralError("operator is not block-circulant (off-block leakage " + std::to_string(spec.leakage) + ")");
  }
  return spec;
}

std::array<Complex, 2> eigenvalues_2x2(const Matrix2& m) {
  // (tr/2)^2 - det written as ((a-d)/2)^2 + bc, which does not cancel for near-degenerate blocks.
  const Complex half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const Complex half_gap = 0.5 * (m(0, 0) - m(1, 1));
  const Complex root = std::sqrt(half_gap * half_gap + m(0, 1) * m(1, 0));
  return {half_trace + root, half_trace - root};
}

Complex block_eigensum(const Matrix2& block) { return 0.5 * block.trace(); }

std::string_view to_string(WalkClass c) {
  return c == WalkClass::Ordered ? "ordered" : "chaotic-within-horizon";
}

PeriodReport detect_period(const EvolutionSequence& seq, int n_max) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  const int dim = 2 * seq.k();
  const Matrix identity = Matrix::Identity(dim, dim);

  PeriodReport report;
  report.n_max = n_max;
  report.block_length = seq.block_length();
  report.block_spectrum = block_diagonalize(compose(seq.operators()));

  const int v = report.block_length;
  int aligned = 0;
  Matrix product = identity;
  for (int n = 1; n <= n_max && aligned == 0; ++n) {
    product = seq.step(n).matrix() * product;
    const double residual = max_abs_diff(product, identity);
    if (residual >= kIdentityTol) continue;
    if (!report.period) {
      report.period = n;
      report.identity_residual = residual;
    }
    if (n % v == 0) aligned = n;
  }
  if (!report.period) return report;

  // A return that splits a block says nothing about the block operator, so the
  // root-of-unity check uses the first return that is a whole number of blocks.
  report.classification = WalkClass::Ordered;
  report.aligned_period = aligned;
  if (aligned == 0) return report;
  const int exponent = aligned / v;
  report.verified = true;
  for (const auto& pair : report.block_spectrum.eigenvalues) {
    for (const Complex& lambda : pair) {
      if (std::abs(std::pow(lambda, exponent) - 1.0) >= kRootOfUnityTol) report.verified = false;
    }
  }
  return report;
}

Complex single_coin_block_halftrace(double rho, double gamma_plus_eta, int k, int l, int v) {
  if (l < 0 || l >= k) throw DomainError("block index out of range");
  if (v < 1) throw DomainError("block length must be >= 1");
  const auto step = make_evolution(k, CoinSpec{rho, gamma_plus_eta, 0.0});
  const Matrix2 b = block_of(commensurate_fourier(k), step.matrix(), l);
  Matrix2 p = Matrix2::Identity();
  for (int i = 0; i < v; ++i) p = b * p;
  return block_eigensum(p);
}

std::vector<double> match_single_coin(Complex target, double gamma_plus_eta, int k, int l, int v) {
  if (l < 0 || l >= k) throw DomainError("block index out of range");
  if (v < 1) throw DomainError("block length must be >= 1");
  const Matrix fc = commensurate_fourier(k);
  auto lambda = [&](double rho) {
    rho = std::clamp(rho, 0.0, 1.0);
    const Matrix2 b = block_of(fc, make_evolution(k, CoinSpec{rho, gamma_plus_eta, 0.0}).matrix(), l);
    Matrix2 p = Matrix2::Identity();
    for (int i = 0; i < v; ++i) p = b * p;
    return block_eigensum(p);
  };
  auto miss = [&](double rho) { return std::norm(lambda(rho) - target); };
  // d/drho |lambda - target|^2 = 2 Re(conj(lambda - target) lambda').
  auto slope = [&](double rho) {
    constexpr double h = 1e-7;
    const double lo = std::max(rho - h, 0.0);
    const double hi = std::min(rho + h, 1.0);
    const Complex deriv = (lambda(hi) - lambda(lo)) / (hi - lo);
    return 2.0 * (std::conj(lambda(rho) - target) * deriv).real();
  };

  const int n = static_cast<int>(std::lround(1.0 / kRhoGrid));
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) g[static_cast<std::size_t>(i)] = miss(i * kRhoGrid);

  std::vector<double> roots;
  for (int i = 0; i <= n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const bool left_ok = i == 0 || g[u] <= g[u - 1];
    const bool right_ok = i == n || g[u] <= g[u + 1];
    if (!left_ok || !right_ok) continue;
    double rho = i * kRhoGrid;
    if (i > 0 && i < n) {
      double a = (i - 1) * kRhoGrid;
      double b = (i + 1) * kRhoGrid;
      if (slope(a) < 0.0 && slope(b) > 0.0) {
        for (int it = 0; it < 60 && b - a > 1e-14; ++it) {
          const double mid = 0.5 * (a + b);
          (slope(mid) < 0.0 ? a : b) = mid;
        }
        rho = 0.5 * (a + b);
      }
    }
    if (std::abs(lambda(rho) - target) < kRootAccept) roots.push_back(rho);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(), [](double a, double b) { return std::abs(a - b) < 1e-6; }),
              roots.end());
  return roots;
}

}  // namespace dtqw
