#include "xychain/density.hpp"

#include <cmath>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

namespace {

void require_pair(int n_sites, int i, int j) {
  if (i < 1 || j < 1 || i > n_sites || j > n_sites) {
    throw ConfigError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range for " + std::to_string(n_sites) +
                      " sites");
  }
  if (i >= j) {
    throw ConfigError("pair sites must satisfy i < j, got (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

// Basis index of the one-magnon state |l>: all bits up except site l.
std::int64_t magnon_index(int n_sites, int l) {
  const std::int64_t all_up = (std::int64_t{1} << n_sites) - 1;
  return all_up - (std::int64_t{1} << (n_sites - l));
}

}  // namespace

void TwoQubitDensity::validate() const {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw NumericError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
      std::abs(rho.trace().imag()) > 1e-12) {
    throw NumericError("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("density matrix eigensolve failed");
  }
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw NumericError("density matrix has eigenvalue " +
                       std::to_string(solver.eigenvalues().minCoeff()));
  }
}

TwoQubitDensity rdm_from_magnon(const AmplitudeVector& psi, int i, int j) {
  require_pair(psi.n_sites, i, j);
  if (std::abs(psi.psi.norm() - 1.0) > 1e-8) {
    throw ConfigError("amplitude vector is not normalized");
  }

  const Complex ai = psi.psi(i - 1);
  const Complex aj = psi.psi(j - 1);
  const double b = std::norm(ai);
  const double c = std::norm(aj);

  TwoQubitDensity dm;
  dm.site_i = i;
  dm.site_j = j;
  dm.rho.setZero();
  dm.rho(1, 1) = b;
  dm.rho(2, 2) = c;
  dm.rho(3, 3) = 1.0 - b - c;
  dm.rho(1, 2) = ai * std::conj(aj);
  dm.rho(2, 1) = std::conj(dm.rho(1, 2));
  return dm;
}

TwoQubitDensity rdm_from_state(const FullState& state, int i, int j) {
  require_pair(state.n_sites, i, j);
  if (std::abs(state.amp.norm() - 1.0) > 1e-8) {
    throw ConfigError("state vector is not normalized");
  }

  const int n = state.n_sites;
  const std::int64_t dim = std::int64_t{1} << n;
  const int pi = n - i;  // bit position of site i, pi > pj
  const int pj = n - j;

  // Group amplitudes by the (i, j) bit pattern, rho = M M^dagger.
  Eigen::Matrix<Complex, 4, Eigen::Dynamic> grouped(4, dim / 4);
  grouped.setZero();
  const std::int64_t low_j = (std::int64_t{1} << pj) - 1;
  const std::int64_t low_i = (std::int64_t{1} << (pi - 1)) - 1;
  for (std::int64_t s = 0; s < dim; ++s) {
    const int a = static_cast<int>((s >> pi) & 1);
    const int b = static_cast<int>((s >> pj) & 1);
    std::int64_t rest = ((s >> (pj + 1)) << pj) | (s & low_j);
    rest = ((rest >> pi) << (pi - 1)) | (rest & low_i);
    grouped(2 * a + b, rest) = state.amp(s);
  }

  TwoQubitDensity dm;
  dm.site_i = i;
  dm.site_j = j;
  dm.rho = grouped * grouped.adjoint();
  return dm;
}

FullState embed_magnon(const AmplitudeVector& psi) {
  if (std::abs(psi.psi.norm() - 1.0) > 1e-8) {
    throw ConfigError("amplitude vector is not normalized");
  }
  FullState state;
  state.n_sites = psi.n_sites;
  state.amp = Eigen::VectorXcd::Zero(std::int64_t{1} << psi.n_sites);
  for (int l = 1; l <= psi.n_sites; ++l) {
    state.amp(magnon_index(psi.n_sites, l)) = psi.psi(l - 1);
  }
  return state;
}

AmplitudeVector extract_magnon(const FullState& state) {
  AmplitudeVector psi;
  psi.n_sites = state.n_sites;
  psi.psi.resize(state.n_sites);
  for (int l = 1; l <= state.n_sites; ++l) {
    psi.psi(l - 1) = state.amp(magnon_index(state.n_sites, l));
  }
  const double inside = psi.psi.squaredNorm();
  const double outside = state.amp.squaredNorm() - inside;
  if (outside > 1e-8) {
    throw SectorError("state has weight " + std::to_string(outside) +
                      " outside the one-down-spin sector");
  }
  psi.psi /= std::sqrt(inside);
  return psi;
}

}  // namespace xychain
