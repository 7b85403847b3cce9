#pragma once

// Data-parallel kernels behind the E_av(t) scans, with a serial reference.
//
// By linearity the state after t steps from cos(theta/2)|0,0> + e^{i phi} sin(theta/2)|0,1> is
//   cos(theta/2) M(t) e_0 + e^{i phi} sin(theta/2) M(t) e_1,
// so one trajectory of the two columns serves every quadrature node. The parallel kernel splits
// the time axis across threads; every E_av(t) is reduced by one thread in node order, so the
// parallel and serial results are bit-identical.

#include <vector>

#include "dtqw/core_walk.hpp"
#include "dtqw/entanglement.hpp"
#include "dtqw/quadrature.hpp"
#include "dtqw/sequences.hpp"

namespace dtqw::kernels {

/// col0[t] = M(t) e_0 and col1[t] = M(t) e_1 for t = 0..t_max.
struct ColumnTrajectory {
  int k = 0;
  std::vector<Vector> col0;
  std::vector<Vector> col1;
};

ColumnTrajectory column_trajectory(const EvolutionSequence& seq, int t_max);

/// E_av and S_av at one time step from the trajectory columns.
AveragedEntanglement theta_average_at(const Vector& col0, const Vector& col1, double phi, int t,
                                      const GaussLegendreRule& rule);

/// E_av/S_av for t = 1..t_max, one thread.
std::vector<AveragedEntanglement> theta_average_series_serial(const EvolutionSequence& seq, double phi, int t_max,
                                                              int nodes = kDefaultNodes);

/// Same values as the serial kernel, t-loop parallelized with OpenMP.
std::vector<AveragedEntanglement> theta_average_series_omp(const EvolutionSequence& seq, double phi, int t_max,
                                                           int nodes = kDefaultNodes);

/// P(x = 0) for t = 0..t_max from a fixed initial state.
std::vector<double> return_probability_series(const EvolutionSequence& seq, const InitialStateSpec& init, int t_max);

}  // namespace dtqw::kernels
