#include "gcv/multimode.hpp"

#include <cmath>

#include "gcv/optics.hpp"

namespace gcv::multimode {

double contangle_g(double m2) {
  if (m2 <= 1.0) return 0.0;
  const double y = std::sqrt(m2 - 1.0);
  const double as = std::log(y + std::sqrt(y * y + 1.0));
  return as * as;
}

double tangle_w(double m2) {
  if (m2 <= 1.0) return 0.0;
  const double t = std::sqrt(m2 - 1.0) + std::sqrt(m2) - 1.0;
  return 0.25 * t * t;
}

FullySymmetricParams fully_symmetric_pure(int n_modes, double b) {
  if (n_modes < 2 || b < 1.0)
    throw std::invalid_argument("fully_symmetric_pure: need N >= 2, b >= 1");
  const double l = n_modes;
  const double root =
      std::sqrt(std::max((b * b - 1.0) * (l * ((b * b - 1.0) * l + 4.0) - 4.0), 0.0));
  FullySymmetricParams p;
  p.n_modes = n_modes;
  p.b = b;
  p.z1 = ((l - 2.0) * (b * b - 1.0) + root) / (2.0 * b * (l - 1.0));
  p.z2 = ((l - 2.0) * (b * b - 1.0) - root) / (2.0 * b * (l - 1.0));
  return p;
}

Mat fully_symmetric_cm(const FullySymmetricParams& p) {
  Mat sigma = Mat::Zero(2 * p.n_modes, 2 * p.n_modes);
  for (int i = 0; i < p.n_modes; ++i) {
    sigma(2 * i, 2 * i) = p.b;
    sigma(2 * i + 1, 2 * i + 1) = p.b;
    for (int j = 0; j < p.n_modes; ++j) {
      if (i == j) continue;
      sigma(2 * i, 2 * j) = p.z1;
      sigma(2 * i + 1, 2 * j + 1) = p.z2;
    }
  }
  return sigma;
}

std::pair<double, double> fully_symmetric_spectrum(
    const FullySymmetricParams& p) {
  const double lo = std::sqrt((p.b - p.z1) * (p.b - p.z2));
  const double hi = std::sqrt((p.b + (p.n_modes - 1) * p.z1) *
                              (p.b + (p.n_modes - 1) * p.z2));
  return {lo, hi};
}

Localized unitary_localize(const Mat& sigma, const std::vector<int>& split_a) {
  const int n = mode_count(sigma);
  std::vector<int> split_b;
  for (int m = 0; m < n; ++m)
    if (std::find(split_a.begin(), split_a.end(), m) == split_a.end())
      split_b.push_back(m);
  const int na = static_cast<int>(split_a.size());
  const int nb = static_cast<int>(split_b.size());
  if (na == 0 || nb == 0)
    throw std::invalid_argument("unitary_localize: empty split");

  const Mat wa = williamson(partial_trace(sigma, split_a)).S;
  const Mat wb = williamson(partial_trace(sigma, split_b)).S;
  // S_diag = S^{-T}: block diagonalizers acting on the reordered CM
  Mat local = Mat::Zero(2 * n, 2 * n);
  std::vector<int> order = split_a;
  order.insert(order.end(), split_b.begin(), split_b.end());
  Mat perm = Mat::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    perm(2 * k, 2 * order[k]) = 1.0;
    perm(2 * k + 1, 2 * order[k] + 1) = 1.0;
  }
  local.topLeftCorner(2 * na, 2 * na) = wa.inverse().transpose();
  local.bottomRightCorner(2 * nb, 2 * nb) = wb.inverse().transpose();
  const Mat work = local * perm * sigma * perm.transpose() * local.transpose();

  // locate the correlated pair across the split
  int best_i = 0, best_j = na;
  double best = -1.0;
  for (int i = 0; i < na; ++i) {
    for (int j = na; j < n; ++j) {
      const double w = work.block<2, 2>(2 * i, 2 * j).cwiseAbs().maxCoeff();
      if (w > best) {
        best = w;
        best_i = i;
        best_j = j;
      }
    }
  }
  Localized out;
  out.sigma_eq = Mat(4, 4);
  out.sigma_eq.block<2, 2>(0, 0) = work.block<2, 2>(2 * best_i, 2 * best_i);
  out.sigma_eq.block<2, 2>(0, 2) = work.block<2, 2>(2 * best_i, 2 * best_j);
  out.sigma_eq.block<2, 2>(2, 0) = work.block<2, 2>(2 * best_j, 2 * best_i);
  out.sigma_eq.block<2, 2>(2, 2) = work.block<2, 2>(2 * best_j, 2 * best_j);
  out.residual = 0.0;
  for (int i = 0; i < na; ++i) {
    for (int j = na; j < n; ++j) {
      if (i == best_i && j == best_j) continue;
      out.residual = std::max(
          out.residual, work.block<2, 2>(2 * i, 2 * j).cwiseAbs().maxCoeff());
    }
  }
  for (int k = 0; k < n; ++k) {
    if (k == best_i || k == best_j) continue;
    out.thermal.push_back(0.5 * (work(2 * k, 2 * k) + work(2 * k + 1, 2 * k + 1)));
  }
  return out;
}

double block_log_negativity(const FullySymmetricParams& p, int k) {
  if (k < 1 || k > p.n_modes - 1)
    throw std::invalid_argument("block_log_negativity: 1 <= K <= N-1");
  // equivalent two-mode invariants of the (1 | K) reduction
  const double b1 = p.b + (k - 1) * p.z1;
  const double b2 = p.b + (k - 1) * p.z2;
  const double c1 = std::sqrt(static_cast<double>(k)) * p.z1;
  const double c2 = std::sqrt(static_cast<double>(k)) * p.z2;
  const double det_sig = (p.b * b1 - c1 * c1) * (p.b * b2 - c2 * c2);
  const double dt = p.b * p.b + b1 * b2 - 2.0 * c1 * c2;
  const double nt2 =
      0.5 * (dt - std::sqrt(std::max(dt * dt - 4.0 * det_sig, 0.0)));
  if (nt2 >= 1.0) return 0.0;
  return -0.5 * std::log(nt2);
}

double block_log_negativity_limit(int n_rest, int k) {
  // b -> infinity limit; the 1 x N value diverges, K < N stays finite
  const double num = static_cast<double>((k + 1) * (n_rest - k));
  const double den = static_cast<double>(n_rest * (k + 1) - k * (k - 3));
  if (k >= n_rest) throw std::invalid_argument("limit defined for K < N");
  return -0.5 * std::log(num / den);
}

double contangle_pure_1n(const Mat& sigma_pure, int probe) {
  const Mat blk = partial_trace(sigma_pure, {probe});
  return contangle_g(blk.determinant());
}

double gaussian_contangle(const Mat& sigma_two_mode) {
  const auto em = twomode::gaussian_em(sigma_two_mode);
  return contangle_g(em.m_opt * em.m_opt);
}

double gaussian_tangle(const Mat& sigma_two_mode) {
  const auto em = twomode::gaussian_em(sigma_two_mode);
  return tangle_w(em.m_opt * em.m_opt);
}

double monogamy_residual(const Mat& sigma_pure, int probe, Measure measure) {
  const int n = mode_count(sigma_pure);
  const double m2_global = partial_trace(sigma_pure, {probe}).determinant();
  double total = measure == Measure::Contangle ? contangle_g(m2_global)
                                               : tangle_w(m2_global);
  for (int j = 0; j < n; ++j) {
    if (j == probe) continue;
    const Mat red = partial_trace(sigma_pure, {probe, j});
    total -= measure == Measure::Contangle ? gaussian_contangle(red)
                                           : gaussian_tangle(red);
  }
  return total;
}

double glems_pair_m(double a, double s, double d) {
  // separability of the reduced pair (local mixednesses a and s+d,
  // symplectic rank one with nu_+ = s-d)
  if (d < -(a * a - 1.0) / (4.0 * s)) return 1.0;
  const double k_minus = a * a - (s + d) * (s + d);
  const double k_plus = a * a + (s + d) * (s + d);
  const double m_minus = std::abs(k_minus) / ((s - d) * (s - d) - 1.0);
  const double delta = (a - 2.0 * d - 1.0) * (a - 2.0 * d + 1.0) *
                       (a + 2.0 * d - 1.0) * (a + 2.0 * d + 1.0) *
                       (a - 2.0 * s - 1.0) * (a - 2.0 * s + 1.0) *
                       (a + 2.0 * s - 1.0) * (a + 2.0 * s + 1.0);
  const double m_plus =
      std::sqrt(std::max(
          2.0 * (2.0 * a * a * (1.0 + 2.0 * s * s + 2.0 * d * d) -
                 (4.0 * s * s - 1.0) * (4.0 * d * d - 1.0) - a * a * a * a -
                 std::sqrt(std::max(delta, 0.0))),
          0.0)) /
      (4.0 * (s - d));
  const double disc = k_minus * k_minus + 8.0 * k_plus;
  const double dsel =
      2.0 * (s - d) -
      std::sqrt(2.0 *
                (k_minus * k_minus + 2.0 * k_plus +
                 std::abs(k_minus) * std::sqrt(disc)) /
                k_plus);
  const double m = dsel <= 0.0 ? m_minus : m_plus;
  return std::max(m, 1.0);
}

double residual_contangle_3mode_pure(double a1, double a2, double a3) {
  // probe = smallest local mixedness (ties -> lowest index)
  const double arr[3] = {a1, a2, a3};
  int probe = 0;
  for (int i = 1; i < 3; ++i)
    if (arr[i] < arr[probe] - 1e-12) probe = i;
  const double a = arr[probe];
  const double aj = arr[(probe + 1) % 3];
  const double ak = arr[(probe + 2) % 3];
  if (a <= 1.0 + 1e-12) return 0.0;
  const double s = 0.5 * (aj + ak);
  const double d = 0.5 * (aj - ak);
  const double q = contangle_g(glems_pair_m(a, s, d) * glems_pair_m(a, s, d)) +
                   contangle_g(glems_pair_m(a, s, -d) * glems_pair_m(a, s, -d));
  return contangle_g(a * a) - q;
}

double residual_contangle_3mode_pure(const Mat& sigma3_pure) {
  if (mode_count(sigma3_pure) != 3)
    throw std::invalid_argument("residual_contangle_3mode_pure: 3 modes");
  if (!pure_state_conditions(sigma3_pure, 1e-6))
    throw std::invalid_argument(
        "residual_contangle_3mode_pure: state is not pure");
  const double a1 = std::sqrt(partial_trace(sigma3_pure, {0}).determinant());
  const double a2 = std::sqrt(partial_trace(sigma3_pure, {1}).determinant());
  const double a3 = std::sqrt(partial_trace(sigma3_pure, {2}).determinant());
  return residual_contangle_3mode_pure(a1, a2, a3);
}

double residual_contangle_3mode_symmetric(const Mat& sigma3) {
  if (mode_count(sigma3) != 3)
    throw std::invalid_argument("residual_contangle_3mode_symmetric: 3 modes");
  // 1 x 2 term by localizing modes 2, 3 on a balanced beam-splitter
  const Mat mixed =
      optics::apply(sigma3, optics::BeamSplitter{1, 2, 0.5});
  const Mat pair = partial_trace(mixed, {0, 1});
  const double g_1_23 = gaussian_contangle(pair);
  // reduced two-mode states are symmetric: closed form
  const auto sf = twomode::to_standard_form(partial_trace(sigma3, {0, 1})).sf;
  const double en = twomode::log_negativity(sf);
  const double g_pair = en * en;
  return g_1_23 - 2.0 * g_pair;
}

Mat four_mode_state(double s, double a) {
  Mat sigma = Mat::Identity(8, 8);
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{1, 2, s});
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{0, 1, a});
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{2, 3, a});
  return sigma;
}

FourModeReport four_mode_analysis(double s, double a) {
  const Mat sigma = four_mode_state(s, a);
  FourModeReport rep;
  rep.g_12 = 4.0 * a * a;
  rep.g_12_34 = 4.0 * s * s;
  rep.pair_13_separable = nu_tilde_min(partial_trace(sigma, {0, 2}), {0}) >= 1.0 - 1e-9;
  rep.pair_24_separable = nu_tilde_min(partial_trace(sigma, {1, 3}), {0}) >= 1.0 - 1e-9;
  rep.pair_14_separable = nu_tilde_min(partial_trace(sigma, {0, 3}), {0}) >= 1.0 - 1e-9;
  // m_{2|3}: the reduced pair is a GMEMS; piecewise switch at arcsinh sqrt(tanh s)
  if (a < std::asinh(std::sqrt(std::tanh(s)))) {
    const double ch2a = std::cosh(2.0 * a);
    rep.m_23 = (-1.0 + 2.0 * ch2a * ch2a * std::cosh(s) * std::cosh(s) +
                3.0 * std::cosh(2.0 * s) -
                4.0 * std::sinh(a) * std::sinh(a) * std::sinh(2.0 * s)) /
               (4.0 * (std::cosh(a) * std::cosh(a) +
                       std::exp(2.0 * s) * std::sinh(a) * std::sinh(a)));
  } else {
    rep.m_23 = 1.0;
  }
  const double m_1_rest =
      std::cosh(a) * std::cosh(a) + std::cosh(2.0 * s) * std::sinh(a) * std::sinh(a);
  rep.residual = contangle_g(m_1_rest * m_1_rest) - 4.0 * a * a;
  // tripartite bound from the block-diagonal pure ansatz
  const double sech_a = 1.0 / std::cosh(a);
  const double q = sech_a * sech_a * std::tanh(s) * std::tanh(s);
  const double t = 0.5 * std::acosh((1.0 + q) / (1.0 - q));
  Mat gp = Mat::Identity(6, 6);
  gp = optics::apply(gp, optics::TwoModeSqueezer{1, 2, t});
  gp = optics::apply(gp, optics::TwoModeSqueezer{0, 1, a});
  const double mg_1 = std::sqrt(partial_trace(gp, {0}).determinant());
  const double mg_3 = std::sqrt(partial_trace(gp, {2}).determinant());
  const double m_12 = std::cosh(2.0 * a);
  rep.tripartite_bound =
      std::min(contangle_g(mg_1 * mg_1) - contangle_g(m_12 * m_12),
               contangle_g(mg_3 * mg_3) - contangle_g(rep.m_23 * rep.m_23));
  return rep;
}

}  // namespace gcv::multimode
