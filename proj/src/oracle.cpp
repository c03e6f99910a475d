#include "xychain/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

namespace {

constexpr int kMaxSites = 12;

void require_spec(const HamiltonianSpec& spec) {
  if (spec.n_sites < 2 || spec.n_sites > kMaxSites) {
    throw ConfigError("brute-force path supports 2..12 sites, got " +
                      std::to_string(spec.n_sites));
  }
  if (!std::isfinite(spec.exchange) || !std::isfinite(spec.delta) ||
      !std::isfinite(spec.offset)) {
    throw ConfigError("Hamiltonian parameters must be finite");
  }
}

}  // namespace

HamiltonianSpec hamiltonian_spec(int n_sites, double exchange, double delta) {
  HamiltonianSpec spec;
  spec.n_sites = n_sites;
  spec.exchange = exchange;
  spec.delta = delta;
  spec.offset = delta * (n_sites - 1) / 4.0;
  require_spec(spec);
  return spec;
}

Eigen::MatrixXd build_hamiltonian(const HamiltonianSpec& spec) {
  require_spec(spec);
  const int n = spec.n_sites;
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  for (std::int64_t s = 0; s < dim; ++s) {
    double diag = -spec.offset;
    for (int bond = 1; bond < n; ++bond) {
      const int hi = n - bond;  // bit of site `bond`
      const int lo = hi - 1;    // bit of site `bond + 1`
      const int bi = static_cast<int>((s >> hi) & 1);
      const int bj = static_cast<int>((s >> lo) & 1);
      diag += spec.delta * (bi == bj ? 0.25 : -0.25);
      if (bi != bj) {
        // S+ S- + h.c. exchanges the antiparallel pair.
        const std::int64_t flipped =
            s ^ ((std::int64_t{1} << hi) | (std::int64_t{1} << lo));
        h(flipped, s) += spec.exchange / 2.0;
      }
    }
    h(s, s) += diag;
  }
  return h;
}

Eigen::MatrixXd one_magnon_block(const Eigen::MatrixXd& h, int n_sites) {
  const std::int64_t all_up = (std::int64_t{1} << n_sites) - 1;
  Eigen::MatrixXd block(n_sites, n_sites);
  for (int l = 1; l <= n_sites; ++l) {
    const std::int64_t row = all_up - (std::int64_t{1} << (n_sites - l));
    for (int m = 1; m <= n_sites; ++m) {
      const std::int64_t col = all_up - (std::int64_t{1} << (n_sites - m));
      block(l - 1, m - 1) = h(row, col);
    }
  }
  return block;
}

SpectralDecomposition diagonalize(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericError("dense eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

FullState evolve_full(const SpectralDecomposition& dec, const FullState& state,
                      double t) {
  if (!std::isfinite(t)) {
    throw ConfigError("time must be finite");
  }
  if (state.amp.size() != dec.eigenvalues.size() ||
      dec.eigenvectors.cols() != dec.eigenvalues.size()) {
    throw ConfigError("state dimension does not match the decomposition");
  }
  if (std::abs(state.amp.norm() - 1.0) > 1e-8) {
    throw ConfigError("state vector is not normalized");
  }

  // exp(-i H t) psi = U diag(exp(-i lambda t)) U^T psi, U real orthogonal.
  Eigen::VectorXcd coeff(dec.eigenvalues.size());
  coeff.real() = dec.eigenvectors.transpose() * state.amp.real();
  coeff.imag() = dec.eigenvectors.transpose() * state.amp.imag();
  for (Eigen::Index k = 0; k < coeff.size(); ++k) {
    coeff(k) *= std::polar(1.0, -dec.eigenvalues(k) * t);
  }

  FullState out;
  out.n_sites = state.n_sites;
  out.amp.resize(state.amp.size());
  out.amp.real() = dec.eigenvectors * coeff.real();
  out.amp.imag() = dec.eigenvectors * coeff.imag();
  return out;
}

double pair_deviation(const SpectralDecomposition& dec, const ModeTable& modes,
                      bool bell, int i, int j, double t) {
  const AmplitudeVector analytic =
      bell ? evolve_bell(modes, t) : evolve_unentangled(modes, t);
  const TwoQubitDensity direct = rdm_from_magnon(analytic, i, j);

  const AmplitudeVector start = bell ? initial_bell(modes.n_sites)
                                     : initial_unentangled(modes.n_sites);
  const FullState evolved = evolve_full(dec, embed_magnon(start), t);
  const TwoQubitDensity traced = rdm_from_state(evolved, i, j);

  return (direct.rho - traced.rho).cwiseAbs().maxCoeff();
}

ValidationReport validate_sector(const HamiltonianSpec& spec, int trials,
                                 double tolerance, std::uint64_t seed) {
  require_spec(spec);
  if (spec.delta != 0.0) {
    throw ConfigError("sector validation requires delta = 0; the closed-form "
                      "propagator is the XY dynamics");
  }
  if (trials < 1) {
    throw ConfigError("validation needs at least one trial");
  }

  const SpectralDecomposition dec = diagonalize(build_hamiltonian(spec));
  const ModeTable modes = mode_table(spec.n_sites, spec.exchange);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> site(1, spec.n_sites);
  std::uniform_real_distribution<double> time(
      0.0, 10.0 * spec.n_sites / std::abs(spec.exchange));

  ValidationReport report;
  report.n_sites = spec.n_sites;
  report.trials = trials;
  report.tolerance = tolerance;
  for (int trial = 0; trial < trials; ++trial) {
    int i = site(rng);
    int j = site(rng);
    while (j == i) j = site(rng);
    if (i > j) std::swap(i, j);
    const double t = time(rng);
    report.max_dev_unentangled = std::max(
        report.max_dev_unentangled, pair_deviation(dec, modes, false, i, j, t));
    report.max_dev_bell = std::max(report.max_dev_bell,
                                   pair_deviation(dec, modes, true, i, j, t));
  }
  report.passed = report.max_dev_unentangled < tolerance &&
                  report.max_dev_bell < tolerance;
  return report;
}

std::string ValidationReport::to_text() const {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof(buf), "sector cross-validation: N=%d trials=%d\n",
                n_sites, trials);
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "  max |rho_analytic - rho_bruteforce|  unentangled: %.3e\n",
                max_dev_unentangled);
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "  max |rho_analytic - rho_bruteforce|  bell:        %.3e\n",
                max_dev_bell);
  out += buf;
  std::snprintf(buf, sizeof(buf), "  tolerance: %.3e  ->  %s\n", tolerance,
                passed ? "PASS" : "FAIL");
  out += buf;
  return out;
}

}  // namespace xychain
