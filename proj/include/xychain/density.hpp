#pragma once

#include <Eigen/Dense>

#include "xychain/magnon.hpp"

namespace xychain {

// Two-qubit reduced density matrix of a labeled site pair (i, j), i < j.
//
// Basis ordering is |00>, |01>, |10>, |11> with the first slot belonging to
// site i.  |0> is the down spin (sigma^z|0> = -|0>), |1> the up spin.  The
// upper triangle is named
//
//        [ A  E  F  G ]
//        [ .  B  H  I ]
//        [ .  .  C  J ]
//        [ .  .  .  D ]
//
// Hermitian, unit trace, PSD up to -1e-10 eigenvalue tolerance.  Instances
// built from a fixed-magnetization state additionally have
// E = F = G = I = J = 0 exactly, and A = 0 exactly in the one-magnon case.
struct TwoQubitDensity {
  int site_i = 0;  // 1-based
  int site_j = 0;
  Eigen::Matrix4cd rho;

  double A() const { return rho(0, 0).real(); }
  double B() const { return rho(1, 1).real(); }
  double C() const { return rho(2, 2).real(); }
  double D() const { return rho(3, 3).real(); }
  Complex E() const { return rho(0, 1); }
  Complex F() const { return rho(0, 2); }
  Complex G() const { return rho(0, 3); }
  Complex H() const { return rho(1, 2); }
  Complex I() const { return rho(1, 3); }
  Complex J() const { return rho(2, 3); }

  // Throws NumericError if Hermiticity (1e-12), unit trace (1e-12) or
  // positivity (eigenvalues >= -1e-10) is violated.
  void validate() const;
};

// Full 2^N state vector, used only by the brute-force reference path.
// Bit convention: the bit of site l is 1 for an up spin and the basis index
// is sum_l bit_l * 2^(N-l), i.e. site 1 is the most significant bit.
struct FullState {
  int n_sites = 0;
  Eigen::VectorXcd amp;
};

// Reduced density matrix of pair (i, j) for a one-magnon state:
// A = 0, B = |psi_i|^2, C = |psi_j|^2, D = 1 - B - C, H = psi_i conj(psi_j),
// every other off-diagonal exactly zero.
TwoQubitDensity rdm_from_magnon(const AmplitudeVector& psi, int i, int j);

// Reduced density matrix by partial trace over all sites other than (i, j).
// Makes no sector assumption.
TwoQubitDensity rdm_from_state(const FullState& state, int i, int j);

// Maps sum_l psi_l |l> into the 2^N basis (down spin at site l, rest up).
FullState embed_magnon(const AmplitudeVector& psi);

// Inverse of embed_magnon.  Throws SectorError if more than 1e-8 of the
// state's weight lies outside the one-down-spin sector.  The result is
// renormalized; its time stamp is zero (a raw state vector carries none).
AmplitudeVector extract_magnon(const FullState& state);

}  // namespace xychain
