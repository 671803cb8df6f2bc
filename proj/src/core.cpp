#include "gcv/core.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace gcv {

namespace {

Mat matrix_sqrt_spd(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  return es.operatorSqrt();
}

Mat matrix_inv_sqrt_spd(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  return es.operatorInverseSqrt();
}

}  // namespace

Mat symplectic_form(int n_modes) {
  Mat omega = Mat::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

Mat reorder_to_qqpp(const Mat& sigma) {
  const int n = mode_count(sigma);
  Mat out(2 * n, 2 * n);
  auto src = [&](int i) { return i < n ? 2 * i : 2 * (i - n) + 1; };
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) out(i, j) = sigma(src(i), src(j));
  return out;
}

Mat reorder_to_qpqp(const Mat& sigma_qqpp) {
  const int n = mode_count(sigma_qqpp);
  Mat out(2 * n, 2 * n);
  auto dst = [&](int i) { return i < n ? 2 * i : 2 * (i - n) + 1; };
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) out(dst(i), dst(j)) = sigma_qqpp(i, j);
  return out;
}

bool is_symmetric(const Mat& m, double tol) {
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

int mode_count(const Mat& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() % 2 != 0)
    throw std::invalid_argument("CM must be square with even dimension");
  return static_cast<int>(sigma.rows()) / 2;
}

DiagnosedBool check_physical(const Mat& sigma, double eps) {
  if (!is_symmetric(sigma))
    throw std::invalid_argument("check_physical: non-symmetric input");
  const int n = mode_count(sigma);
  Eigen::MatrixXcd h = sigma.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 1.0) * symplectic_form(n).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  return {lo >= -eps, lo, lo >= -eps ? "physical" : "uncertainty violated"};
}

DiagnosedBool check_symplectic(const Mat& S, double eps) {
  const int n = mode_count(S);
  const Mat omega = symplectic_form(n);
  const double res = (S.transpose() * omega * S - omega).cwiseAbs().maxCoeff();
  return {res <= eps, res, res <= eps ? "symplectic" : "S^T Omega S != Omega"};
}

Vec symplectic_spectrum(const Mat& sigma) {
  const int n = mode_count(sigma);
  Eigen::SelfAdjointEigenSolver<Mat> pd(sigma, Eigen::EigenvaluesOnly);
  const double mineig = pd.eigenvalues().minCoeff();
  if (mineig <= 0.0) {
    throw std::runtime_error(
        "symplectic_spectrum: singular CM, min eigenvalue " +
        std::to_string(mineig) + ", condition " +
        std::to_string(pd.eigenvalues().maxCoeff() / std::max(mineig, 1e-300)));
  }
  // Eigenvalues of Omega*sigma come in pairs +/- i nu_k.
  Eigen::EigenSolver<Mat> es(symplectic_form(n) * sigma, false);
  std::vector<double> mags(2 * n);
  for (int i = 0; i < 2 * n; ++i) mags[i] = std::abs(es.eigenvalues()[i].imag());
  std::sort(mags.begin(), mags.end());
  Vec nu(n);
  for (int k = 0; k < n; ++k) nu[k] = 0.5 * (mags[2 * k] + mags[2 * k + 1]);
  return nu;
}

Williamson williamson(const Mat& sigma) {
  const int n = mode_count(sigma);
  const Mat omega = symplectic_form(n);
  const Mat root = matrix_sqrt_spd(sigma);
  const Mat iroot = matrix_inv_sqrt_spd(sigma);
  // A is antisymmetric; its real Schur form is block diagonal with
  // 2x2 blocks [[0, nu], [-nu, 0]].
  const Mat a = root * omega * root;
  Eigen::RealSchur<Mat> schur(a);
  Mat q = schur.matrixU();
  Mat t = schur.matrixT();
  Vec nu(n);
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) {
    double v = t(2 * k, 2 * k + 1);
    if (v < 0.0) {
      // swap the two columns of the block to flip the sign
      q.col(2 * k).swap(q.col(2 * k + 1));
      v = -v;
    }
    nu[k] = v;
    order[k] = k;
  }
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return nu[i] < nu[j]; });
  Mat q_sorted(2 * n, 2 * n);
  Vec nu_sorted(n);
  for (int k = 0; k < n; ++k) {
    q_sorted.col(2 * k) = q.col(2 * order[k]);
    q_sorted.col(2 * k + 1) = q.col(2 * order[k] + 1);
    nu_sorted[k] = nu[order[k]];
  }
  Mat scale = Mat::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    scale(2 * k, 2 * k) = std::sqrt(nu_sorted[k]);
    scale(2 * k + 1, 2 * k + 1) = std::sqrt(nu_sorted[k]);
  }
  // S_w sigma S_w^T = diag(nu); returned S = S_w^{-1} reproduces sigma as
  // S^T in the paper's convention sigma = S^T diag S with S := S_w^{-T}.
  const Mat s_w = scale * q_sorted.transpose() * iroot;
  Williamson out;
  out.nu = nu_sorted;
  out.S = s_w.inverse().transpose();
  return out;
}

namespace {

// Build an orthogonal symplectic O1 and z-values such that
// P = O1 * diag(z1, 1/z1, ...) * O1^T for symmetric positive-definite
// symplectic P. Eigenvectors with z > 1 pair with -Omega x in the 1/z space;
// the z == 1 eigenspace gets a symplectic Gram-Schmidt.
void orthosymplectic_eigen(const Mat& p, Mat* o1, std::vector<double>* z) {
  const int n = mode_count(p);
  const Mat omega = symplectic_form(n);
  Eigen::SelfAdjointEigenSolver<Mat> es(p);
  const Vec ev = es.eigenvalues();
  const Mat v = es.eigenvectors();
  const double tol = 1e-8;

  std::vector<Eigen::VectorXd> xs;
  std::vector<double> zs;
  // strictly squeezed directions
  for (int i = 2 * n - 1; i >= 0; --i) {
    if (ev[i] > 1.0 + tol) {
      xs.push_back(v.col(i));
      zs.push_back(ev[i]);
    }
  }
  // unit eigenspace: pick pairs (x, -Omega x)
  std::vector<Eigen::VectorXd> unit_basis;
  for (int i = 0; i < 2 * n; ++i)
    if (std::abs(ev[i] - 1.0) <= tol) unit_basis.push_back(v.col(i));
  while (static_cast<int>(xs.size()) < n && !unit_basis.empty()) {
    Eigen::VectorXd x = unit_basis.front();
    x.normalize();
    Eigen::VectorXd w = -omega * x;
    xs.push_back(x);
    zs.push_back(1.0);
    std::vector<Eigen::VectorXd> next;
    for (auto& b : unit_basis) {
      Eigen::VectorXd r = b - x * x.dot(b) - w * w.dot(b);
      if (r.norm() > 1e-7) next.push_back(r.normalized());
    }
    // re-orthonormalize what is left
    for (size_t i = 0; i < next.size(); ++i) {
      for (size_t j = 0; j < i; ++j) next[i] -= next[j] * next[j].dot(next[i]);
      next[i].normalize();
    }
    unit_basis = std::move(next);
  }
  if (static_cast<int>(xs.size()) != n)
    throw std::runtime_error("euler_decompose: eigenvalue pairing failed");

  o1->resize(2 * n, 2 * n);
  z->assign(n, 1.0);
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXd& x = xs[k];
    Eigen::VectorXd w = -omega * x;
    o1->col(2 * k) = x;
    o1->col(2 * k + 1) = w;
    (*z)[k] = zs[k];
  }
}

}  // namespace

Euler euler_decompose(const Mat& S) {
  if (!check_symplectic(S, 1e-7))
    throw std::invalid_argument("euler_decompose: input not symplectic");
  const int n = mode_count(S);
  // polar: S = P O0 with P symmetric positive definite symplectic
  const Mat p = matrix_sqrt_spd(S * S.transpose());
  const Mat o0 = p.ldlt().solve(S);
  Mat o1;
  std::vector<double> z;
  orthosymplectic_eigen(p, &o1, &z);
  Euler out;
  out.O_left = o1;
  out.z = z;
  out.Z = Mat::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    out.Z(2 * k, 2 * k) = z[k];
    out.Z(2 * k + 1, 2 * k + 1) = 1.0 / z[k];
  }
  out.O_right = o1.transpose() * o0;
  return out;
}

Mat partial_trace(const Mat& sigma, const std::vector<int>& keep) {
  const int n = mode_count(sigma);
  std::vector<int> idx;
  for (int m : keep) {
    if (m < 0 || m >= n) throw std::invalid_argument("partial_trace: bad mode index");
    idx.push_back(2 * m);
    idx.push_back(2 * m + 1);
  }
  Mat out(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) out(i, j) = sigma(idx[i], idx[j]);
  return out;
}

Mat partial_transpose(const Mat& sigma, const std::vector<int>& side) {
  const int n = mode_count(sigma);
  Vec theta = Vec::Ones(2 * n);
  for (int m : side) {
    if (m < 0 || m >= n)
      throw std::invalid_argument("partial_transpose: bad mode index");
    theta[2 * m + 1] = -1.0;
  }
  return theta.asDiagonal() * sigma * theta.asDiagonal();
}

Vec nu_tilde_spectrum(const Mat& sigma, const std::vector<int>& side) {
  return symplectic_spectrum(partial_transpose(sigma, side));
}

double nu_tilde_min(const Mat& sigma, const std::vector<int>& side) {
  return nu_tilde_spectrum(sigma, side).minCoeff();
}

double purity(const Mat& sigma) {
  return 1.0 / std::sqrt(sigma.determinant());
}

double entropy_function_f(double x) {
  if (x <= 1.0 + 1e-15) return 0.0;
  const double a = 0.5 * (x + 1.0);
  const double b = 0.5 * (x - 1.0);
  return a * std::log(a) - b * std::log(b);
}

double schatten_gp(double x, double p) {
  return std::pow(2.0, p) / (std::pow(x + 1.0, p) - std::pow(x - 1.0, p));
}

double eof_function_h(double x) {
  if (x >= 1.0 - 1e-15) return 0.0;
  const double plus = (1.0 + x) * (1.0 + x) / (4.0 * x);
  const double minus = (1.0 - x) * (1.0 - x) / (4.0 * x);
  return plus * std::log(plus) - minus * std::log(minus);
}

namespace {
// nu in [1 - eps_phys, 1] is rounded to 1 before entering f or g_p.
double clamp_nu(double nu) {
  return (nu < 1.0 && nu > 1.0 - kEpsPhys) ? 1.0 : nu;
}
}  // namespace

double von_neumann_entropy(const Mat& sigma) {
  const Vec nu = symplectic_spectrum(sigma);
  double s = 0.0;
  for (int i = 0; i < nu.size(); ++i) s += entropy_function_f(clamp_nu(nu[i]));
  return s;
}

double generalized_entropy(const Mat& sigma, double p) {
  if (p <= 1.0) throw std::invalid_argument("generalized_entropy: need p > 1");
  const Vec nu = symplectic_spectrum(sigma);
  double prod = 1.0;
  for (int i = 0; i < nu.size(); ++i) prod *= schatten_gp(clamp_nu(nu[i]), p);
  return (1.0 - prod) / (p - 1.0);
}

double mutual_information(const Mat& sigma, const std::vector<int>& split_a) {
  const int n = mode_count(sigma);
  std::vector<int> b;
  for (int m = 0; m < n; ++m)
    if (std::find(split_a.begin(), split_a.end(), m) == split_a.end())
      b.push_back(m);
  return von_neumann_entropy(partial_trace(sigma, split_a)) +
         von_neumann_entropy(partial_trace(sigma, b)) -
         von_neumann_entropy(sigma);
}

EntropyRange entropy_extremes(double mu, int n_modes, double p) {
  if (mu <= 0.0 || mu > 1.0)
    throw std::invalid_argument("entropy_extremes: mu in (0, 1] required");
  if (p == 1.0) {
    return {entropy_function_f(1.0 / mu),
            n_modes * entropy_function_f(std::pow(mu, -1.0 / n_modes))};
  }
  const double concentrated = (1.0 - schatten_gp(1.0 / mu, p)) / (p - 1.0);
  const double spread =
      (1.0 - std::pow(schatten_gp(std::pow(mu, -1.0 / n_modes), p),
                      static_cast<double>(n_modes))) /
      (p - 1.0);
  if (p < 2.0) return {concentrated, spread};
  if (p > 2.0) return {spread, concentrated};
  return {1.0 - mu, 1.0 - mu};
}

SchmidtModes phase_space_schmidt(const Mat& sigma_pure,
                                 const std::vector<int>& split_a) {
  if (!pure_state_conditions(sigma_pure, 1e-6))
    throw std::invalid_argument("phase_space_schmidt: state is not pure");
  const int n = mode_count(sigma_pure);
  const int na = static_cast<int>(split_a.size());
  const int nb = n - na;
  const Vec nu = symplectic_spectrum(partial_trace(sigma_pure, split_a));
  SchmidtModes out;
  for (int i = nu.size() - 1; i >= 0; --i) {
    if (nu[i] > 1.0 + 1e-9)
      out.r.push_back(0.5 * std::acosh(nu[i]));
    else
      out.r.push_back(0.0);
  }
  out.vacua = std::max(na, nb) - std::min(na, nb);
  return out;
}

DiagnosedBool pure_state_conditions(const Mat& sigma, double tol) {
  const int n = mode_count(sigma);
  const Mat omega = symplectic_form(n);
  const double res =
      (-(omega * sigma * omega * sigma) - Mat::Identity(2 * n, 2 * n))
          .cwiseAbs()
          .maxCoeff();
  return {res <= tol, res, res <= tol ? "pure" : "not pure"};
}

int dof_count(int n_modes, bool block_diagonal) {
  if (n_modes < 1) throw std::invalid_argument("dof_count: N >= 1");
  if (n_modes == 1) return 0;
  if (n_modes <= 3 || block_diagonal) return n_modes * (n_modes - 1) / 2;
  return n_modes * (n_modes - 2);
}

Mat homodyne_condition(const Mat& sigma, int mode, Quadrature quad) {
  const int n = mode_count(sigma);
  std::vector<int> keep;
  for (int m = 0; m < n; ++m)
    if (m != mode) keep.push_back(m);
  const Mat a = partial_trace(sigma, keep);
  Mat c(2 * (n - 1), 2);
  int row = 0;
  for (int m : keep) {
    c.block<2, 2>(row, 0) = sigma.block<2, 2>(2 * m, 2 * mode);
    row += 2;
  }
  const Mat b = sigma.block<2, 2>(2 * mode, 2 * mode);
  const int q = quad == Quadrature::Q ? 0 : 1;
  Mat pinv = Mat::Zero(2, 2);
  if (b(q, q) > 1e-14) pinv(q, q) = 1.0 / b(q, q);
  return a - c * pinv * c.transpose();
}

Mat thermal_cm(const Vec& nu) {
  const int n = static_cast<int>(nu.size());
  Mat out = Mat::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    out(2 * k, 2 * k) = nu[k];
    out(2 * k + 1, 2 * k + 1) = nu[k];
  }
  return out;
}

Mat two_mode_squeezed_cm(double r) {
  Mat out(4, 4);
  const double c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
  out << c, 0, s, 0,
         0, c, 0, -s,
         s, 0, c, 0,
         0, -s, 0, c;
  return out;
}

}  // namespace gcv
