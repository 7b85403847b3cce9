#pragma once

// Walker state and coin/shift evolution on a k-site cycle.
//
// Basis ordering: amplitude index 2*j + q for position j in [0, k) and coin q in {0, 1}.
// Coin state |0_c> moves the walker one site left, |1_c> one site right.

#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dtqw {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr int kMinCycle = 3;

/// Parameters of the general 2x2 coin
///   [[ sqrt(rho),               sqrt(1-rho) e^{i gamma}        ],
///    [ sqrt(1-rho) e^{i eta},  -sqrt(rho)   e^{i (gamma+eta)} ]].
/// The nominal phase range is [0, pi]; any real phase is accepted (only e^{i phase} matters).
struct CoinSpec {
  double rho = 0.5;
  double gamma = 0.0;
  double eta = 0.0;

  void validate() const;
};

/// Separable initial state cos(theta/2)|0_p,0_c> + e^{i phi} sin(theta/2)|0_p,1_c>.
struct InitialStateSpec {
  double theta = 0.0;
  double phi = 0.0;
};

/// Wraps a phase into [0, 2 pi).
double wrap_phase(double angle);

class WalkState {
 public:
  /// Takes ownership of 2k amplitudes. Throws DomainError on k < 3 or a size mismatch.
  WalkState(int k, Vector amplitudes);

  /// |position_p, coin_c>.
  static WalkState basis(int k, int position, int coin);

  int k() const noexcept { return k_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(int position, int coin) const { return amplitudes_(2 * position + coin); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  int k_;
  Vector amplitudes_;
};

/// A unitary on the 2k-dimensional walk space. Single steps come from make_evolution;
/// compose() multiplies several steps into one multi-step operator.
class EvolutionOperator {
 public:
  EvolutionOperator(int k, Matrix matrix);

  int k() const noexcept { return k_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  WalkState apply(const WalkState& state) const;

 private:
  int k_;
  Matrix matrix_;
};

Matrix2 make_coin(const CoinSpec& spec);

/// Conditional shift: |j,0_c> -> |j-1 mod k,0_c>, |j,1_c> -> |j+1 mod k,1_c>.
Matrix make_shift(int k);

/// U_k = S . (I_k (x) C).
EvolutionOperator make_evolution(int k, const CoinSpec& spec);

WalkState prepare_initial(int k, const InitialStateSpec& init);

/// Applies ops[0], ops[1], ... cyclically for t steps (step s uses ops[(s-1) mod ops.size()]).
WalkState evolve(const WalkState& state, std::span<const EvolutionOperator> ops, int t);

/// Product ops.back() * ... * ops.front(), i.e. the operator of running the block once.
EvolutionOperator compose(std::span<const EvolutionOperator> ops);

/// P(x = j) summed over both coin states.
std::vector<double> position_distribution(const WalkState& state);

/// max |(U^dagger U - I)_{ij}|.
double unitarity_defect(const Matrix& u);

/// max |(A - B)_{ij}|.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace dtqw
