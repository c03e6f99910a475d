#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xychain/errors.hpp"
#include "xychain/magnon.hpp"

using namespace xychain;
using std::numbers::pi;

namespace {

double unitarity_defect(const PropagatorMatrix& prop) {
  const Eigen::MatrixXcd res =
      prop.gamma * prop.gamma.adjoint() -
      Eigen::MatrixXcd::Identity(prop.n_sites, prop.n_sites);
  return res.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("mode table: three-site chain has the quarter-pi wavenumbers") {
  const ModeTable modes = mode_table(3, 1.0);
  CHECK(modes.q(0) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(modes.q(1) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(modes.q(2) == doctest::Approx(3 * pi / 4).epsilon(1e-15));
  CHECK(modes.eps(0) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(modes.eps(1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(modes.eps(2) == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("mode table: two-site chain is the even/odd pair") {
  const ModeTable modes = mode_table(2, 1.0);
  const double r = std::sqrt(0.5);
  CHECK(modes.phi(0, 0) == doctest::Approx(r).epsilon(1e-14));
  CHECK(modes.phi(1, 0) == doctest::Approx(r).epsilon(1e-14));
  CHECK(modes.phi(0, 1) == doctest::Approx(r).epsilon(1e-14));
  CHECK(modes.phi(1, 1) == doctest::Approx(-r).epsilon(1e-14));
}

TEST_CASE("mode table: columns are orthonormal and q increases") {
  for (int n : {2, 3, 5, 8, 17, 40}) {
    const ModeTable modes = mode_table(n, 0.7);
    const Eigen::MatrixXd gram =
        modes.phi.transpose() * modes.phi - Eigen::MatrixXd::Identity(n, n);
    CHECK(gram.cwiseAbs().maxCoeff() < 1e-12);
    for (int k = 1; k < n; ++k) CHECK(modes.q(k) > modes.q(k - 1));
    for (int k = 0; k < n; ++k) {
      CHECK(modes.eps(k) == 0.7 * std::cos(modes.q(k)));
    }
  }
}

TEST_CASE("mode table: rejects bad arguments") {
  CHECK_THROWS_AS(mode_table(1, 1.0), ConfigError);
  CHECK_THROWS_AS(mode_table(0, 1.0), ConfigError);
  CHECK_THROWS_AS(mode_table(5, 0.0), ConfigError);
  CHECK_THROWS_AS(mode_table(5, std::nan("")), ConfigError);
  CHECK_THROWS_AS(mode_table(5, INFINITY), ConfigError);
}

TEST_CASE("propagator: t = 0 is the identity") {
  const ModeTable modes = mode_table(7, 1.3);
  const PropagatorMatrix prop = propagator(modes, 0.0);
  const Eigen::MatrixXcd res =
      prop.gamma - Eigen::MatrixXcd::Identity(7, 7);
  CHECK(res.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("propagator: two-site closed form") {
  // With two sites the mode sum collapses to
  // gamma_11 = cos(K t / 2), gamma_21 = -i sin(K t / 2).
  const double k = 1.0;
  const ModeTable modes = mode_table(2, k);
  for (double t : {0.3, 1.0, 2.7, -4.2, 31.4}) {
    const PropagatorMatrix prop = propagator(modes, t);
    CHECK(std::abs(prop.gamma(0, 0) - Complex(std::cos(k * t / 2), 0)) <
          1e-12);
    CHECK(std::abs(prop.gamma(1, 0) - Complex(0, -std::sin(k * t / 2))) <
          1e-12);
  }
}

TEST_CASE("propagator: unitary, symmetric, composable, reversible") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> sites(2, 30);
  std::uniform_real_distribution<double> times(-20.0, 20.0);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = sites(rng);
    const ModeTable modes = mode_table(n, 1.0);
    const double t1 = times(rng);
    const double t2 = times(rng);

    const PropagatorMatrix g1 = propagator(modes, t1);
    CHECK(unitarity_defect(g1) < 1e-12);
    CHECK((g1.gamma - g1.gamma.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    const PropagatorMatrix g2 = propagator(modes, t2);
    const PropagatorMatrix g12 = propagator(modes, t1 + t2);
    CHECK((g12.gamma - g1.gamma * g2.gamma).cwiseAbs().maxCoeff() < 1e-10);

    const PropagatorMatrix gr = propagator(modes, -t1);
    CHECK((gr.gamma - g1.gamma.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("propagator: mirror symmetry of the open chain") {
  const int n = 11;
  const ModeTable modes = mode_table(n, 1.0);
  const PropagatorMatrix prop = propagator(modes, 5.37);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      CHECK(std::abs(std::abs(prop.gamma(l, m)) -
                     std::abs(prop.gamma(n - 1 - l, n - 1 - m))) < 1e-10);
    }
  }
}

TEST_CASE("propagator: rejects non-finite time") {
  const ModeTable modes = mode_table(4, 1.0);
  CHECK_THROWS_AS(propagator(modes, std::nan("")), ConfigError);
  CHECK_THROWS_AS(propagator(modes, INFINITY), ConfigError);
}

TEST_CASE("evolution: localized start stays put at t = 0") {
  const ModeTable modes = mode_table(9, 1.0);
  const AmplitudeVector psi = evolve_unentangled(modes, 0.0);
  CHECK(std::abs(psi.psi(0) - Complex(1, 0)) < 1e-12);
  CHECK(psi.psi.tail(8).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("evolution: two-site full transfer at t = pi") {
  const ModeTable modes = mode_table(2, 1.0);
  const AmplitudeVector psi = evolve_unentangled(modes, pi);
  CHECK(std::abs(psi.psi(0)) < 1e-12);
  CHECK(std::abs(psi.psi(1) - Complex(0, -1)) < 1e-12);
}

TEST_CASE("evolution: bell start at t = 0 and norm through time") {
  const ModeTable modes = mode_table(12, 1.0);
  const AmplitudeVector at0 = evolve_bell(modes, 0.0);
  const double r = std::sqrt(0.5);
  CHECK(std::abs(at0.psi(0) - Complex(r, 0)) < 1e-12);
  CHECK(std::abs(at0.psi(1) - Complex(r, 0)) < 1e-12);
  CHECK(at0.psi.tail(10).cwiseAbs().maxCoeff() < 1e-12);

  for (double t : {0.1, 3.0, 17.0, 123.0}) {
    CHECK(std::abs(evolve_bell(modes, t).psi.norm() - 1.0) < 1e-10);
    CHECK(std::abs(evolve_unentangled(modes, t).psi.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("evolution: general path reduces to the named initial states") {
  const ModeTable modes = mode_table(8, 1.0);
  const double t = 2.31;
  const AmplitudeVector u =
      evolve_general(modes, initial_unentangled(8), t);
  const AmplitudeVector u_ref = evolve_unentangled(modes, t);
  CHECK((u.psi - u_ref.psi).cwiseAbs().maxCoeff() == 0.0);

  const AmplitudeVector e = evolve_general(modes, initial_bell(8), t);
  const AmplitudeVector e_ref = evolve_bell(modes, t);
  CHECK((e.psi - e_ref.psi).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("evolution: matches the dense propagator column") {
  const ModeTable modes = mode_table(10, 1.0);
  const double t = 6.1;
  const PropagatorMatrix prop = propagator(modes, t);
  const AmplitudeVector psi = evolve_unentangled(modes, t);
  CHECK((psi.psi - prop.gamma.col(0)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("evolution: composition through intermediate times") {
  const ModeTable modes = mode_table(6, 1.0);
  const AmplitudeVector leg1 = evolve_bell(modes, 1.7);
  const AmplitudeVector leg2 = evolve_general(modes, leg1, 2.3);
  const AmplitudeVector direct = evolve_bell(modes, 4.0);
  CHECK((leg2.psi - direct.psi).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(leg2.time == doctest::Approx(4.0));
}

TEST_CASE("evolution: general path rejects bad input") {
  const ModeTable modes = mode_table(5, 1.0);
  AmplitudeVector wrong_size;
  wrong_size.n_sites = 4;
  wrong_size.psi = Eigen::VectorXcd::Zero(4);
  wrong_size.psi(0) = 1.0;
  CHECK_THROWS_AS(evolve_general(modes, wrong_size, 1.0), ConfigError);

  AmplitudeVector not_normalized;
  not_normalized.n_sites = 5;
  not_normalized.psi = Eigen::VectorXcd::Constant(5, Complex(0.9, 0));
  CHECK_THROWS_AS(evolve_general(modes, not_normalized, 1.0), ConfigError);
}
