#include "dtqw/kernels.hpp"

#include <cmath>

#include "dtqw/error.hpp"

namespace dtqw::kernels {

namespace {

void check_series_args(int t_max, int nodes) {
  if (t_max < 0) throw DomainError("t_max must be >= 0");
  if (nodes < kMinNodes) throw DomainError("theta quadrature needs at least 16 nodes");
}

}  // namespace

ColumnTrajectory column_trajectory(const EvolutionSequence& seq, int t_max) {
  if (t_max < 0) throw DomainError("t_max must be >= 0");
  const int dim = 2 * seq.k();
  ColumnTrajectory traj;
  traj.k = seq.k();
  traj.col0.reserve(static_cast<std::size_t>(t_max) + 1);
  traj.col1.reserve(static_cast<std::size_t>(t_max) + 1);
  traj.col0.push_back(Vector::Unit(dim, 0));
  traj.col1.push_back(Vector::Unit(dim, 1));
  for (int t = 1; t <= t_max; ++t) {
    const Matrix& u = seq.step(t).matrix();
    traj.col0.push_back(u * traj.col0.back());
    traj.col1.push_back(u * traj.col1.back());
  }
  return traj;
}

AveragedEntanglement theta_average_at(const Vector& col0, const Vector& col1, double phi, int t,
                                      const GaussLegendreRule& rule) {
  const Vector col1p = std::polar(1.0, phi) * col1;
  const auto breaks = detail::separable_thetas(col0, col1p);
  const ThetaRule quad = theta_rule(rule, breaks);

  const std::size_t n = quad.theta.size();
  std::vector<double> e_terms(n);
  std::vector<double> s_terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double half = 0.5 * quad.theta[i];
    const Vector psi = std::cos(half) * col0 + std::sin(half) * col1p;
    const auto rep = entanglement_from_bloch(detail::bloch_of(psi));
    e_terms[i] = quad.weight[i] * rep.entropy;
    s_terms[i] = quad.weight[i] * rep.schmidt * (1.0 / std::numbers::sqrt2);
  }
  AveragedEntanglement out;
  out.phi = phi;
  out.t = t;
  out.e_av = pairwise_sum(e_terms);
  out.s_av = pairwise_sum(s_terms);
  out.quadrature_nodes = static_cast<int>(n);
  return out;
}

std::vector<AveragedEntanglement> theta_average_series_serial(const EvolutionSequence& seq, double phi, int t_max,
                                                              int nodes) {
  check_series_args(t_max, nodes);
  const auto traj = column_trajectory(seq, t_max);
  const auto rule = gauss_legendre(nodes);
  std::vector<AveragedEntanglement> out(static_cast<std::size_t>(t_max));
  for (int t = 1; t <= t_max; ++t) {
    const auto u = static_cast<std::size_t>(t);
    out[u - 1] = theta_average_at(traj.col0[u], traj.col1[u], phi, t, rule);
  }
  return out;
}

std::vector<AveragedEntanglement> theta_average_series_omp(const EvolutionSequence& seq, double phi, int t_max,
                                                           int nodes) {
  check_series_args(t_max, nodes);
  const auto traj = column_trajectory(seq, t_max);
  const auto rule = gauss_legendre(nodes);
  std::vector<AveragedEntanglement> out(static_cast<std::size_t>(t_max));
#pragma omp parallel for schedule(dynamic, 4)
  for (int t = 1; t <= t_max; ++t) {
    const auto u = static_cast<std::size_t>(t);
    out[u - 1] = theta_average_at(traj.col0[u], traj.col1[u], phi, t, rule);
  }
  return out;
}

std::vector<double> return_probability_series(const EvolutionSequence& seq, const InitialStateSpec& init, int t_max) {
  if (t_max < 0) throw DomainError("t_max must be >= 0");
  std::vector<double> p0;
  p0.reserve(static_cast<std::size_t>(t_max) + 1);
  WalkState state = prepare_initial(seq.k(), init);
  p0.push_back(position_distribution(state)[0]);
  for (int t = 1; t <= t_max; ++t) {
    state = seq.step(t).apply(state);
    p0.push_back(position_distribution(state)[0]);
  }
  return p0;
}

}  // namespace dtqw::kernels
