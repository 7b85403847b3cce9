#pragma once

// Walk periodicity and the Fourier block structure of position-independent evolutions.
//
// With F^M_{m,n} = e^{2 pi i m n / M} / sqrt(M) and F_c = F^k (x) F^2, any operator built from
// position-independent coins and the conditional shift is block-circulant, and
// F_c U F_c^dagger = diag[U_{k,0}, ..., U_{k,k-1}] with 2x2 blocks.

#include <array>
#include <optional>
#include <vector>

#include "dtqw/core_walk.hpp"
#include "dtqw/sequences.hpp"

namespace dtqw {

struct BlockSpectrum {
  int k = 0;
  std::vector<Matrix2> blocks;                     ///< U_{k,l}, l = 0..k-1
  std::vector<std::array<Complex, 2>> eigenvalues;  ///< {lambda+, lambda-} per block
  double leakage = 0.0;                            ///< largest entry outside the diagonal blocks
};

inline constexpr double kBlockLeakageTol = 1e-8;
inline constexpr double kIdentityTol = 1e-10;
inline constexpr double kRootOfUnityTol = 1e-9;

/// M x M Fourier matrix with the + sign convention.
Matrix fourier_matrix(int m);

/// F^k (x) F^2.
Matrix commensurate_fourier(int k);

/// Throws StructuralError when leakage exceeds kBlockLeakageTol.
BlockSpectrum block_diagonalize(const EvolutionOperator& op);

/// Closed-form eigenvalues tr/2 +- sqrt((tr/2)^2 - det).
std::array<Complex, 2> eigenvalues_2x2(const Matrix2& m);

/// (lambda+ + lambda-)/2, i.e. half the trace.
Complex block_eigensum(const Matrix2& block);

enum class WalkClass { Ordered, ChaoticWithinHorizon };

std::string_view to_string(WalkClass c);

struct PeriodReport {
  std::optional<int> period;  ///< smallest N with U(N)...U(1) = I
  int block_length = 1;       ///< v
  int n_max = 0;
  int aligned_period = 0;     ///< first return that is a multiple of v, 0 if none within n_max
  bool verified = false;      ///< (lambda_{k,l})^{aligned_period/v} = 1 for every block eigenvalue
  WalkClass classification = WalkClass::ChaoticWithinHorizon;
  BlockSpectrum block_spectrum;  ///< spectrum of the v-step block operator
  double identity_residual = 0.0;  ///< max|U(N)...U(1) - I| at the reported period
};

/// Period search by explicit operator products, cross-checked on the block spectrum.
PeriodReport detect_period(const EvolutionSequence& seq, int n_max = 200);

/// Half-trace of block l of U_k(rho, gamma_plus_eta, 0)^v. Depends on gamma and eta only
/// through their sum.
Complex single_coin_block_halftrace(double rho, double gamma_plus_eta, int k, int l, int v);

/// All rho in [0, 1] where single_coin_block_halftrace(rho, ...) equals `target` (|diff| < 1e-7).
/// Scans a 1e-4 grid for minima of |lambda(rho) - target|^2 and bisects on the sign of its
/// derivative, so tangential (double) roots are found too. Empty when there is no solution.
std::vector<double> match_single_coin(Complex target, double gamma_plus_eta, int k, int l, int v);

}  // namespace dtqw
