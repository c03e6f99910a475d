#pragma once

#include "xychain/density.hpp"

namespace xychain {

// Connected two-site correlation functions of the pair state:
//   qx     = <sx_i sx_j> - <sx_i><sx_j>            (likewise qy, qz)
//   s_plus  = (1 + <sz_i sz_j>)^2 - (<sz_i> + <sz_j>)^2
//   s_minus = (1 - <sz_i sz_j>)^2 - (<sz_i> - <sz_j>)^2
struct Correlators {
  double qx = 0, qy = 0, qz = 0;
  double s_plus = 0, s_minus = 0;
};

// Bounds on the localizable entanglement of the pair:
//   max(|qx|,|qy|,|qz|)  <=  LE  <=  (sqrt(s_plus) + sqrt(s_minus))/2.
struct LeBounds {
  double lower = 0;
  double upper = 0;
};

// Every pairwise quantity for one (pair, time) cell.  le_aux_sum and
// le_aux_max are the fixed-magnetization expressions 2(sqrt(AD)+sqrt(BC))
// and max(4|AD-BC|, 2 Re H), carried as diagnostics only; le_lower/le_upper
// are the correlator bounds above and are the authoritative pair.
struct MeasureSet {
  double impurity = 0;     // 1 - Tr rho^2, in [0, 3/4]
  double entropy = 0;      // von Neumann entropy, base-2 logs, in [0, 2]
  double concurrence = 0;  // Wootters concurrence, in [0, 1]
  double qx = 0, qy = 0, qz = 0;
  double s_plus = 0, s_minus = 0;
  double le_lower = 0, le_upper = 0;
  double le_aux_sum = 0, le_aux_max = 0;
};

// True when the off-diagonals E, F, G, I, J all vanish to within tol, the
// structure a fixed number of down spins enforces.
bool in_sector(const TwoQubitDensity& rho, double tol = 1e-12);

// 1 - Tr rho^2.
double impurity(const TwoQubitDensity& rho);

// -sum lambda log2 lambda over the eigenvalues of rho, with 0 log 0 := 0.
// Eigenvalues in [-1e-10, 0) are clamped to zero; anything more negative
// throws NumericError.
double entropy(const TwoQubitDensity& rho);

// Wootters concurrence max(0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)) where
// l1 >= l2 >= l3 >= l4 are the eigenvalues of rho * rho_tilde and
// rho_tilde = (sy x sy) conj(rho) (sy x sy).  Evaluated through the
// Hermitian product sqrt(rho) rho_tilde sqrt(rho), which shares the
// spectrum and keeps the eigenvalues real.
double concurrence(const TwoQubitDensity& rho);

// Fixed-magnetization fast path 2 max(0, |H| - sqrt(A D)).  Throws
// SectorError when the off-diagonal zero structure does not hold.
double concurrence_sector(const TwoQubitDensity& rho);

// Correlators evaluated literally as Tr(rho O) with O the Kronecker
// products of single-site Pauli operators in the declared basis.
Correlators correlators(const TwoQubitDensity& rho);

LeBounds le_bounds(const Correlators& c);
LeBounds le_bounds(const TwoQubitDensity& rho);

// Bundles everything above.  Uses the fixed-magnetization closed forms when
// the sector zeros hold (they are exact there and avoid the sqrt of a
// cancellation-noise s_plus), general paths otherwise.
MeasureSet measure_all(const TwoQubitDensity& rho);

}  // namespace xychain
