#include "xychain/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

namespace {

constexpr double kEigenFloor = -1e-10;

// Pauli operators in the declared basis (|0> = down, |1> = up):
// sz|0> = -|0>, s+|0> = |1>.
Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, 1), Complex(0, -1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << -1, 0, 0, 1;
  return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& p, const Eigen::Matrix2cd& q) {
  Eigen::Matrix4cd m;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) m(2 * a + b, 2 * c + d) = p(a, c) * q(b, d);
  return m;
}

double expectation(const Eigen::Matrix4cd& rho, const Eigen::Matrix4cd& op) {
  return (rho * op).trace().real();
}

// sigma^y x sigma^y, the spin-flip conjugation used by the concurrence.
const Eigen::Matrix4cd& spin_flip() {
  static const Eigen::Matrix4cd yy = kron(pauli_y(), pauli_y());
  return yy;
}

// Eigenvalues clamped per the shared positivity policy: [-1e-10, 0) -> 0,
// anything lower is an invalid density matrix.
Eigen::Vector4d clamped_spectrum(const Eigen::Matrix4cd& m,
                                 const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError(std::string(what) + ": eigensolver did not converge");
  }
  Eigen::Vector4d ev = solver.eigenvalues();
  for (int k = 0; k < 4; ++k) {
    if (ev(k) < kEigenFloor) {
      throw NumericError(std::string(what) + ": eigenvalue " +
                         std::to_string(ev(k)) + " below tolerance");
    }
    ev(k) = std::max(ev(k), 0.0);
  }
  return ev;
}

double entropy_bits(const Eigen::Vector4d& spectrum) {
  double s = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (spectrum(k) > 0.0) s -= spectrum(k) * std::log2(spectrum(k));
  }
  return std::max(s, 0.0);
}

double sqrt_nonneg(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

bool in_sector(const TwoQubitDensity& rho, double tol) {
  return std::abs(rho.E()) <= tol && std::abs(rho.F()) <= tol &&
         std::abs(rho.G()) <= tol && std::abs(rho.I()) <= tol &&
         std::abs(rho.J()) <= tol;
}

double impurity(const TwoQubitDensity& rho) {
  return std::max(0.0, 1.0 - (rho.rho * rho.rho).trace().real());
}

double entropy(const TwoQubitDensity& rho) {
  return entropy_bits(clamped_spectrum(rho.rho, "entropy"));
}

double concurrence(const TwoQubitDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho.rho);
  if (solver.info() != Eigen::Success) {
    throw NumericError("concurrence: eigensolver did not converge");
  }
  Eigen::Vector4d ev = solver.eigenvalues();
  for (int k = 0; k < 4; ++k) {
    if (ev(k) < kEigenFloor) {
      throw NumericError("concurrence: eigenvalue " + std::to_string(ev(k)) +
                         " below tolerance");
    }
    ev(k) = sqrt_nonneg(ev(k));
  }
  const Eigen::Matrix4cd sqrt_rho = solver.eigenvectors() *
                                    ev.asDiagonal().toDenseMatrix().cast<Complex>() *
                                    solver.eigenvectors().adjoint();

  const Eigen::Matrix4cd flipped =
      spin_flip() * rho.rho.conjugate() * spin_flip();
  // sqrt(rho) rho~ sqrt(rho) is Hermitian PSD with the spectrum of rho rho~.
  const Eigen::Matrix4cd product = sqrt_rho * flipped * sqrt_rho;

  Eigen::Vector4d lambda = clamped_spectrum(product, "concurrence");
  std::sort(lambda.data(), lambda.data() + 4, std::greater<double>());
  const double c = std::sqrt(lambda(0)) - std::sqrt(lambda(1)) -
                   std::sqrt(lambda(2)) - std::sqrt(lambda(3));
  return std::max(c, 0.0);
}

double concurrence_sector(const TwoQubitDensity& rho) {
  if (!in_sector(rho)) {
    throw SectorError("density matrix is not in the fixed-magnetization "
                      "sector");
  }
  return 2.0 * std::max(0.0, std::abs(rho.H()) -
                                 sqrt_nonneg(rho.A() * rho.D()));
}

Correlators correlators(const TwoQubitDensity& rho) {
  static const Eigen::Matrix4cd xx = kron(pauli_x(), pauli_x());
  static const Eigen::Matrix4cd yy = kron(pauli_y(), pauli_y());
  static const Eigen::Matrix4cd zz = kron(pauli_z(), pauli_z());
  static const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix4cd xi = kron(pauli_x(), id);
  static const Eigen::Matrix4cd ix = kron(id, pauli_x());
  static const Eigen::Matrix4cd yi = kron(pauli_y(), id);
  static const Eigen::Matrix4cd iy = kron(id, pauli_y());
  static const Eigen::Matrix4cd zi = kron(pauli_z(), id);
  static const Eigen::Matrix4cd iz = kron(id, pauli_z());

  const double zz_e = expectation(rho.rho, zz);
  const double zi_e = expectation(rho.rho, zi);
  const double iz_e = expectation(rho.rho, iz);

  Correlators c;
  c.qx = expectation(rho.rho, xx) -
         expectation(rho.rho, xi) * expectation(rho.rho, ix);
  c.qy = expectation(rho.rho, yy) -
         expectation(rho.rho, yi) * expectation(rho.rho, iy);
  c.qz = zz_e - zi_e * iz_e;
  c.s_plus = (1.0 + zz_e) * (1.0 + zz_e) - (zi_e + iz_e) * (zi_e + iz_e);
  c.s_minus = (1.0 - zz_e) * (1.0 - zz_e) - (zi_e - iz_e) * (zi_e - iz_e);
  return c;
}

LeBounds le_bounds(const Correlators& c) {
  LeBounds b;
  b.lower = std::max({std::abs(c.qx), std::abs(c.qy), std::abs(c.qz)});
  b.upper = 0.5 * (sqrt_nonneg(c.s_plus) + sqrt_nonneg(c.s_minus));
  return b;
}

LeBounds le_bounds(const TwoQubitDensity& rho) {
  return le_bounds(correlators(rho));
}

MeasureSet measure_all(const TwoQubitDensity& rho) {
  const double a = rho.A();
  const double b = rho.B();
  const double c = rho.C();
  const double d = rho.D();
  const double h_abs = std::abs(rho.H());
  const double h_re = rho.H().real();

  MeasureSet out;
  out.le_aux_sum = 2.0 * (sqrt_nonneg(a * d) + sqrt_nonneg(b * c));
  out.le_aux_max = std::max(4.0 * std::abs(a * d - b * c), 2.0 * h_re);

  if (in_sector(rho)) {
    out.impurity =
        std::max(0.0, 1.0 - a * a - b * b - c * c - d * d - 2.0 * h_abs * h_abs);
    // Spectrum splits into {A, D} and the 2x2 block spanned by |01>, |10>.
    const double mid = 0.5 * (b + c);
    const double split = std::hypot(0.5 * (b - c), h_abs);
    Eigen::Vector4d spectrum(a, d, mid + split, mid - split);
    for (int k = 0; k < 4; ++k) {
      if (spectrum(k) < kEigenFloor) {
        throw NumericError("measure_all: eigenvalue " +
                           std::to_string(spectrum(k)) + " below tolerance");
      }
      spectrum(k) = std::max(spectrum(k), 0.0);
    }
    out.entropy = entropy_bits(spectrum);
    out.concurrence = 2.0 * std::max(0.0, h_abs - sqrt_nonneg(a * d));
    out.qx = 2.0 * h_re;
    out.qy = 2.0 * h_re;
    out.qz = 4.0 * (a * d - b * c);
    out.s_plus = 16.0 * a * d;
    out.s_minus = 16.0 * b * c;
  } else {
    out.impurity = impurity(rho);
    out.entropy = entropy(rho);
    out.concurrence = concurrence(rho);
    const Correlators corr = correlators(rho);
    out.qx = corr.qx;
    out.qy = corr.qy;
    out.qz = corr.qz;
    out.s_plus = corr.s_plus;
    out.s_minus = corr.s_minus;
  }

  out.le_lower = std::max({std::abs(out.qx), std::abs(out.qy),
                           std::abs(out.qz)});
  out.le_upper = 0.5 * (sqrt_nonneg(out.s_plus) + sqrt_nonneg(out.s_minus));
  return out;
}

}  // namespace xychain
