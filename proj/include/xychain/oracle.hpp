#pragma once

#include <cstdint>
#include <string>

#include "xychain/density.hpp"

namespace xychain {

// Nearest-neighbour anisotropic Heisenberg chain with open ends,
//   H = (K/2) sum_i (S+_i S-_{i+1} + h.c.) + Delta sum_i Sz_i Sz_{i+1} - E0,
// with Sz = sigma^z / 2 and S+- the single-site flip operators.  The offset
// E0 = Delta (N-1)/4 makes the all-up state an exact zero-energy eigenstate.
// Site counts are capped at 12 (dense 4096 x 4096 at most).
struct HamiltonianSpec {
  int n_sites = 2;
  double exchange = 1.0;  // K
  double delta = 0.0;     // anisotropy
  double offset = 0.0;    // E0
};

// Spec with the conventional offset filled in.
HamiltonianSpec hamiltonian_spec(int n_sites, double exchange = 1.0,
                                 double delta = 0.0);

// Dense real symmetric 2^N x 2^N matrix in the site-spin basis of
// FullState.  Magnetization sectors appear as invariant blocks.
Eigen::MatrixXd build_hamiltonian(const HamiltonianSpec& spec);

// The N x N block of the Hamiltonian restricted to one-down-spin states,
// ordered by the site of the down spin.
Eigen::MatrixXd one_magnon_block(const Eigen::MatrixXd& h, int n_sites);

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

SpectralDecomposition diagonalize(const Eigen::MatrixXd& h);

// Exact evolution exp(-i H t)|psi> through the spectral sum (hbar = 1).
FullState evolve_full(const SpectralDecomposition& dec, const FullState& state,
                      double t);

// Cross-validation of the closed-form one-magnon dynamics against the
// brute-force path: random (i, j, t) samples, both canonical initial
// states, elementwise comparison of the two reduced density matrices.
struct ValidationReport {
  int n_sites = 0;
  int trials = 0;
  double tolerance = 0;
  double max_dev_unentangled = 0;
  double max_dev_bell = 0;
  bool passed = false;

  std::string to_text() const;
};

// Requires spec.delta == 0: the closed-form propagator is the XY dynamics,
// and with free ends a nonzero Delta shifts edge and bulk sites differently.
// Samples t uniformly in [0, 10 N / K].
ValidationReport validate_sector(const HamiltonianSpec& spec, int trials,
                                 double tolerance, std::uint64_t seed = 20040);

// Largest elementwise deviation between the closed-form and brute-force
// reduced density matrices for one (initial state, pair, time) probe.
// Usable at any Delta; validate_sector asserts with it at Delta = 0, and at
// Delta != 0 it measures the edge-effect discrepancy without asserting.
double pair_deviation(const SpectralDecomposition& dec, const ModeTable& modes,
                      bool bell, int i, int j, double t);

}  // namespace xychain
