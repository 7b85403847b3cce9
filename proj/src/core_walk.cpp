#include "dtqw/core_walk.hpp"

#include <cmath>
#include <string>

#include "dtqw/error.hpp"

namespace dtqw {

namespace {

void require_cycle(int k) {
  if (k < kMinCycle) {
    throw DomainError("cycle size must be >= 3, got " + std::to_string(k));
  }
}

}  // namespace

void CoinSpec::validate() const {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("coin rho must lie in [0,1], got " + std::to_string(rho));
  }
  if (!std::isfinite(gamma) || !std::isfinite(eta)) {
    throw DomainError("coin phases must be finite");
  }
}

double wrap_phase(double angle) {
  double r = std::fmod(angle, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

WalkState::WalkState(int k, Vector amplitudes) : k_(k), amplitudes_(std::move(amplitudes)) {
  require_cycle(k);
  if (amplitudes_.size() != 2 * k) {
    throw DomainError("walk state needs 2k = " + std::to_string(2 * k) + " amplitudes, got " +
                      std::to_string(amplitudes_.size()));
  }
}

WalkState WalkState::basis(int k, int position, int coin) {
  require_cycle(k);
  if (position < 0 || position >= k || (coin != 0 && coin != 1)) {
    throw DomainError("basis state out of range");
  }
  Vector v = Vector::Zero(2 * k);
  v(2 * position + coin) = 1.0;
  return WalkState(k, std::move(v));
}

EvolutionOperator::EvolutionOperator(int k, Matrix matrix) : k_(k), matrix_(std::move(matrix)) {
  require_cycle(k);
  if (matrix_.rows() != 2 * k || matrix_.cols() != 2 * k) {
    throw DomainError("evolution operator must be 2k x 2k");
  }
}

WalkState EvolutionOperator::apply(const WalkState& state) const {
  if (state.k() != k_) {
    throw DomainError("operator for k=" + std::to_string(k_) + " applied to state with k=" +
                      std::to_string(state.k()));
  }
  return WalkState(k_, matrix_ * state.amplitudes());
}

Matrix2 make_coin(const CoinSpec& spec) {
  spec.validate();
  const double a = std::sqrt(spec.rho);
  const double b = std::sqrt(1.0 - spec.rho);
  Matrix2 c;
  c(0, 0) = a;
  c(0, 1) = std::polar(b, spec.gamma);
  c(1, 0) = std::polar(b, spec.eta);
  c(1, 1) = -std::polar(a, spec.gamma + spec.eta);
  return c;
}

Matrix make_shift(int k) {
  require_cycle(k);
  Matrix s = Matrix::Zero(2 * k, 2 * k);
  for (int j = 0; j < k; ++j) {
    s(2 * ((j - 1 + k) % k) + 0, 2 * j + 0) = 1.0;
    s(2 * ((j + 1) % k) + 1, 2 * j + 1) = 1.0;
  }
  return s;
}

EvolutionOperator make_evolution(int k, const CoinSpec& spec) {
  const Matrix2 coin = make_coin(spec);
  const Matrix shift = make_shift(k);
  Matrix local = Matrix::Zero(2 * k, 2 * k);
  for (int j = 0; j < k; ++j) local.block<2, 2>(2 * j, 2 * j) = coin;
  return EvolutionOperator(k, shift * local);
}

WalkState prepare_initial(int k, const InitialStateSpec& init) {
  require_cycle(k);
  Vector v = Vector::Zero(2 * k);
  v(0) = std::cos(init.theta / 2.0);
  v(1) = std::polar(std::sin(init.theta / 2.0), init.phi);
  return WalkState(k, std::move(v));
}

WalkState evolve(const WalkState& state, std::span<const EvolutionOperator> ops, int t) {
  if (t < 0) throw DomainError("negative step count");
  if (t == 0) return state;
  if (ops.empty()) throw DomainError("empty operator sequence");
  for (const auto& op : ops) {
    if (op.k() != state.k()) throw DomainError("operator/state cycle size mismatch");
  }
  Vector psi = state.amplitudes();
  for (int s = 0; s < t; ++s) {
    psi = ops[static_cast<std::size_t>(s) % ops.size()].matrix() * psi;
  }
  return WalkState(state.k(), std::move(psi));
}

EvolutionOperator compose(std::span<const EvolutionOperator> ops) {
  if (ops.empty()) throw DomainError("empty operator sequence");
  const int k = ops.front().k();
  Matrix m = Matrix::Identity(2 * k, 2 * k);
  for (const auto& op : ops) {
    if (op.k() != k) throw DomainError("operator cycle size mismatch");
    m = op.matrix() * m;
  }
  return EvolutionOperator(k, std::move(m));
}

std::vector<double> position_distribution(const WalkState& state) {
  std::vector<double> p(static_cast<std::size_t>(state.k()));
  for (int j = 0; j < state.k(); ++j) {
    p[static_cast<std::size_t>(j)] = std::norm(state.amplitude(j, 0)) + std::norm(state.amplitude(j, 1));
  }
  return p;
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace dtqw
