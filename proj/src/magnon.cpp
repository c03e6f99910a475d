#include "xychain/magnon.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

namespace {

void require_finite_time(double t) {
  if (!std::isfinite(t)) {
    throw ConfigError("time must be finite, got " + std::to_string(t));
  }
}

// psi_l(t) = sum_n exp(-i eps_n t) phi_l(q_n) c_n for mode coefficients
// c_n = <q_n | psi(0)>.  O(N^2) in total.
Eigen::VectorXcd evolve_modes(const ModeTable& modes,
                              const Eigen::VectorXcd& mode_coeffs, double t) {
  Eigen::VectorXcd rotated(modes.n_sites);
  for (int n = 0; n < modes.n_sites; ++n) {
    rotated(n) = std::polar(1.0, -modes.eps(n) * t) * mode_coeffs(n);
  }
  Eigen::VectorXcd out(modes.n_sites);
  out.real() = modes.phi * rotated.real();
  out.imag() = modes.phi * rotated.imag();
  return out;
}

}  // namespace

ModeTable mode_table(int n_sites, double exchange) {
  if (n_sites < 2) {
    throw ConfigError("chain needs at least 2 sites, got " +
                      std::to_string(n_sites));
  }
  if (!std::isfinite(exchange) || exchange == 0.0) {
    throw ConfigError("exchange strength must be finite and nonzero");
  }

  ModeTable modes;
  modes.n_sites = n_sites;
  modes.exchange = exchange;
  modes.q.resize(n_sites);
  modes.eps.resize(n_sites);
  modes.phi.resize(n_sites, n_sites);

  const double norm = std::sqrt(2.0 / (n_sites + 1));
  for (int n = 1; n <= n_sites; ++n) {
    const double q = std::numbers::pi * n / (n_sites + 1);
    modes.q(n - 1) = q;
    modes.eps(n - 1) = exchange * std::cos(q);
    for (int l = 1; l <= n_sites; ++l) {
      modes.phi(l - 1, n - 1) = norm * std::sin(q * l);
    }
  }
  return modes;
}

PropagatorMatrix propagator(const ModeTable& modes, double t) {
  require_finite_time(t);
  const Eigen::ArrayXd phase = modes.eps.array() * (-t);
  const Eigen::VectorXd c = phase.cos();
  const Eigen::VectorXd s = phase.sin();

  PropagatorMatrix prop;
  prop.n_sites = modes.n_sites;
  prop.time = t;
  prop.gamma.resize(modes.n_sites, modes.n_sites);
  prop.gamma.real() = modes.phi * c.asDiagonal() * modes.phi.transpose();
  prop.gamma.imag() = modes.phi * s.asDiagonal() * modes.phi.transpose();
  return prop;
}

AmplitudeVector initial_unentangled(int n_sites) {
  AmplitudeVector psi;
  psi.n_sites = n_sites;
  psi.psi = Eigen::VectorXcd::Zero(n_sites);
  psi.psi(0) = 1.0;
  return psi;
}

AmplitudeVector initial_bell(int n_sites) {
  AmplitudeVector psi;
  psi.n_sites = n_sites;
  psi.psi = Eigen::VectorXcd::Zero(n_sites);
  psi.psi(0) = psi.psi(1) = std::numbers::sqrt2 / 2.0;
  return psi;
}

AmplitudeVector evolve_unentangled(const ModeTable& modes, double t) {
  return evolve_general(modes, initial_unentangled(modes.n_sites), t);
}

AmplitudeVector evolve_bell(const ModeTable& modes, double t) {
  return evolve_general(modes, initial_bell(modes.n_sites), t);
}

AmplitudeVector evolve_general(const ModeTable& modes,
                               const AmplitudeVector& initial, double t) {
  require_finite_time(t);
  if (initial.n_sites != modes.n_sites ||
      initial.psi.size() != modes.n_sites) {
    throw ConfigError("amplitude vector has " +
                      std::to_string(initial.psi.size()) +
                      " entries, mode table expects " +
                      std::to_string(modes.n_sites));
  }
  if (std::abs(initial.psi.norm() - 1.0) > 1e-8) {
    throw ConfigError("initial amplitudes are not normalized");
  }

  Eigen::VectorXcd coeffs(modes.n_sites);
  coeffs.real() = modes.phi.transpose() * initial.psi.real();
  coeffs.imag() = modes.phi.transpose() * initial.psi.imag();

  AmplitudeVector out;
  out.n_sites = modes.n_sites;
  out.time = initial.time + t;
  out.psi = evolve_modes(modes, coeffs, t);
  return out;
}

}  // namespace xychain
