#include "dtqw/mesps_analysis.hpp"

#include <cmath>

#include "dtqw/error.hpp"

namespace dtqw {

namespace {

constexpr double kPhaseTol = 1e-12;

// Distance between two phases on the circle.
double phase_distance(double a, double b) {
  const double d = wrap_phase(a - b);
  return std::min(d, 2.0 * kPi - d);
}

}  // namespace

T1Result t1_state(int k, const CoinSpec& coin, const InitialStateSpec& init) {
  coin.validate();
  const WalkState start = prepare_initial(k, init);
  if (coin.rho == 0.0) {
    const EvolutionOperator u = make_evolution(k, coin);
    return {u.apply(start), false};
  }
  const double nu = std::sqrt(coin.rho);
  const double mu = std::sqrt((1.0 - coin.rho) / coin.rho);
  const double c = std::cos(0.5 * init.theta);
  const double s = std::sin(0.5 * init.theta);
  const Complex left = nu * (c + mu * std::polar(s, coin.gamma + init.phi));
  const Complex right = nu * (mu * std::polar(c, coin.eta) - std::polar(s, coin.gamma + init.phi + coin.eta));
  Vector amps = Vector::Zero(2 * k);
  amps(2 * (k - 1)) = left;
  amps(2 * 1 + 1) = right;
  return {WalkState(k, std::move(amps)), true};
}

double t1_schmidt(const CoinSpec& coin, double theta, double phi) {
  coin.validate();
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double cross = 2.0 * std::sqrt(coin.rho * (1.0 - coin.rho)) * std::cos(coin.gamma + phi) * s * c;
  const double left = coin.rho * c * c + (1.0 - coin.rho) * s * s + cross;
  const double right = (1.0 - coin.rho) * c * c + coin.rho * s * s - cross;
  return std::sqrt(std::max(left, 0.0)) + std::sqrt(std::max(right, 0.0));
}

double elliptic_e(double m) {
  if (!(m <= 1.0)) throw DomainError("elliptic_e needs m <= 1");
  if (m == 1.0) return 1.0;
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double sum = 0.5 * m;
  double scale = 0.5;
  for (int it = 0; it < 64; ++it) {
    const double c = 0.5 * (a - b);
    scale *= 2.0;
    sum += scale * c * c;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    if (std::abs(c) < 1e-16 * a) break;
  }
  return kPi / (2.0 * a) * (1.0 - sum);
}

double t1_average_schmidt(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("t1_average_schmidt needs 0 < rho <= 1");
  const double nu = std::sqrt(rho);
  const double mu2 = (1.0 - rho) / rho;
  return 2.0 * std::numbers::sqrt2 * nu / kPi * elliptic_e(1.0 - mu2);
}

T1Analysis analyze_t1(const CoinSpec& coin, double phi) {
  coin.validate();
  if (coin.rho <= 0.0) throw DomainError("t = 1 closed form needs rho > 0");
  T1Analysis out;
  out.coin = coin;
  out.phi = phi;
  out.nu = std::sqrt(coin.rho);
  out.mu = std::sqrt((1.0 - coin.rho) / coin.rho);
  out.s_pointwise = [coin, phi](double theta) { return t1_schmidt(coin, theta, phi); };
  if (std::abs(std::cos(coin.gamma + phi)) < kPhaseTol) out.s_av_closed = t1_average_schmidt(coin.rho);
  return out;
}

bool MespsCoinFamily::contains(const CoinSpec& spec, double tol) const {
  if (std::abs(spec.rho - 0.5) > tol) return false;
  return phase_distance(spec.gamma, gammas[0]) < tol || phase_distance(spec.gamma, gammas[1]) < tol;
}

MespsCoinFamily mesps_coin_family(double phi) {
  MespsCoinFamily f;
  f.phi = phi;
  f.gammas = {wrap_phase(0.5 * kPi - phi), wrap_phase(1.5 * kPi - phi)};
  return f;
}

bool recurrence_predicate(const CoinSpec& coin) {
  coin.validate();
  if (std::abs(coin.rho - 0.5) > kPhaseTol) throw DomainError("recurrence predicate applies only to rho = 1/2 coins");
  const double sum = coin.gamma + coin.eta;
  for (int q = 0; q < 4; ++q) {
    if (phase_distance(sum, 0.5 * kPi * q) < kPhaseTol) return true;
  }
  return false;
}

}  // namespace dtqw
