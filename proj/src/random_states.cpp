#include "gcv/random_states.hpp"

#include <Eigen/QR>
#include <cmath>
#include <complex>

namespace gcv {

Mat StateSampler::random_orthogonal_symplectic(int n_modes) {
  // Haar unitary from QR of a complex Ginibre matrix.
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n_modes, n_modes);
  for (int i = 0; i < n_modes; ++i)
    for (int j = 0; j < n_modes; ++j)
      g(i, j) = std::complex<double>(gauss(rng_), gauss(rng_));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd rdiag = qr.matrixQR().diagonal().asDiagonal();
  for (int i = 0; i < n_modes; ++i)
    q.col(i) *= rdiag(i, i) / std::abs(rdiag(i, i));
  // U = X + iY -> qqpp block form [[X, Y], [-Y, X]], then back to qpqp.
  Mat blocked(2 * n_modes, 2 * n_modes);
  blocked << q.real(), q.imag(), -q.imag(), q.real();
  Mat s = reorder_to_qpqp(blocked);
  // fall back defensively if a numerical issue sneaks in
  if (!check_symplectic(s, 1e-9)) return Mat::Identity(2 * n_modes, 2 * n_modes);
  return s;
}

Mat StateSampler::random_symplectic(int n_modes, double z_max) {
  Mat z = Mat::Identity(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double zk = uniform(1.0, z_max);
    z(2 * k, 2 * k) = zk;
    z(2 * k + 1, 2 * k + 1) = 1.0 / zk;
  }
  return random_orthogonal_symplectic(n_modes) * z *
         random_orthogonal_symplectic(n_modes);
}

Mat StateSampler::random_physical_cm(int n_modes, double nu_max) {
  Vec nu(n_modes);
  for (int k = 0; k < n_modes; ++k) nu[k] = uniform(1.0, nu_max);
  const Mat s = random_symplectic(n_modes);
  return s.transpose() * thermal_cm(nu) * s;
}

Mat StateSampler::random_pure_cm(int n_modes) {
  const Mat s = random_symplectic(n_modes);
  return s.transpose() * s;
}

}  // namespace gcv
