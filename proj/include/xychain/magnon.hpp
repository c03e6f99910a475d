#pragma once

#include <Eigen/Dense>
#include <complex>

namespace xychain {

using Complex = std::complex<double>;

// One-magnon eigenbasis of the open XY chain.
//
// The standing-wave modes of a chain of N sites with free ends are
//   phi_l(q_n) = sqrt(2/(N+1)) sin(q_n l),   q_n = pi n/(N+1),  n = 1..N,
// with dispersion eps(q) = K cos(q).  Sites are labeled 1..N externally;
// storage is 0-based, so phi(l-1, n-1) = phi_l(q_n).
struct ModeTable {
  int n_sites = 0;        // N >= 2
  double exchange = 1.0;  // K
  Eigen::VectorXd q;      // wavenumbers, strictly increasing
  Eigen::MatrixXd phi;    // columns are orthonormal mode functions
  Eigen::VectorXd eps;    // eps(q_n) = K cos(q_n)
};

// Amplitudes of the single down spin: state = sum_l psi_l |l>, where |l>
// has the down spin at site l and all other spins up.  Norm 1.
struct AmplitudeVector {
  int n_sites = 0;
  Eigen::VectorXcd psi;
  double time = 0.0;  // hbar = 1; time in units of 1/K when K = 1
};

// gamma_{l,m}(t) = sum_q exp(-i eps_q t) phi_l(q) phi_m(q).
// Unitary and symmetric (the mode matrix is real symmetric).
struct PropagatorMatrix {
  int n_sites = 0;
  double time = 0.0;
  Eigen::MatrixXcd gamma;
};

// Builds the mode table for a chain of n_sites >= 2.  exchange must be
// finite and nonzero.
ModeTable mode_table(int n_sites, double exchange = 1.0);

// Full propagator matrix at time t, O(N^3) by direct mode sum.
PropagatorMatrix propagator(const ModeTable& modes, double t);

// Initial amplitude vectors at t = 0: a down spin localized at site 1, and
// the symmetric superposition (|1> + |2>)/sqrt(2) of the first pair.
AmplitudeVector initial_unentangled(int n_sites);
AmplitudeVector initial_bell(int n_sites);

// Time-evolved amplitudes, O(N^2) per call.  evolve_unentangled starts from
// the localized down spin (psi_l = gamma_{l,1}); evolve_bell from the
// first-pair superposition (psi_l = (gamma_{l,1} + gamma_{l,2})/sqrt(2)).
AmplitudeVector evolve_unentangled(const ModeTable& modes, double t);
AmplitudeVector evolve_bell(const ModeTable& modes, double t);

// Advances an arbitrary normalized one-magnon state by t:
// psi_out = gamma(t) psi_in, time stamp in.time + t.
AmplitudeVector evolve_general(const ModeTable& modes,
                               const AmplitudeVector& initial, double t);

}  // namespace xychain
