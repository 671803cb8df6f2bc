#include "gcv/protocols.hpp"

#include <cmath>

#include "gcv/multimode.hpp"
#include "gcv/optics.hpp"
#include "gcv/twomode.hpp"

namespace gcv::protocols {

double fidelity(const TeleportSetup& setup) {
  if (mode_count(setup.input) != 1)
    throw std::invalid_argument("fidelity: single-mode input expected");
  const Mat a = partial_trace(setup.resource, {setup.sender});
  const Mat b = partial_trace(setup.resource, {setup.receiver});
  const Mat pair = partial_trace(setup.resource, {setup.sender, setup.receiver});
  const Mat eps = pair.block<2, 2>(0, 2);
  Mat xi(2, 2);
  xi << -1, 0, 0, 1;
  const Mat big = 2.0 * setup.input + xi * a * xi + b + xi * eps +
                  eps.transpose() * xi;
  return 2.0 / std::sqrt(big.determinant());
}

double fidelity_coherent(const Mat& resource, int sender, int receiver) {
  return fidelity({Mat::Identity(2, 2), resource, sender, receiver});
}

TwoPartyOptimal optimal_two_party(double n1, double n2, double rbar) {
  if (n1 < 1.0 || n2 < 1.0)
    throw std::invalid_argument("optimal_two_party: n1, n2 >= 1");
  TwoPartyOptimal out;
  out.d_opt = 0.25 * std::log(n1 / n2);
  out.nu_tilde = std::sqrt(n1 * n2) * std::exp(-2.0 * rbar);
  out.f_opt = 1.0 / (1.0 + out.nu_tilde);
  return out;
}

Mat network_resource(int n_parties, double n1, double n2, double r1,
                     double r2) {
  if (n_parties < 2) throw std::invalid_argument("network_resource: N >= 2");
  const int n = n_parties;
  Mat sigma = Mat::Zero(2 * n, 2 * n);
  sigma(0, 0) = n1 * std::exp(2.0 * r1);
  sigma(1, 1) = n1 * std::exp(-2.0 * r1);
  for (int k = 1; k < n; ++k) {
    sigma(2 * k, 2 * k) = n2 * std::exp(-2.0 * r2);
    sigma(2 * k + 1, 2 * k + 1) = n2 * std::exp(2.0 * r2);
  }
  const Mat splitter = optics::tritter(n);
  return splitter * sigma * splitter.transpose();
}

NetworkOptimal network_optimal(int n_parties, double n1, double n2,
                               double rbar) {
  if (n_parties < 2) throw std::invalid_argument("network_optimal: N >= 2");
  const double n = n_parties;
  const double tail = (n - 2.0) + 2.0 * std::exp(4.0 * rbar) * n2 / n1;
  NetworkOptimal out;
  out.g_opt = 1.0 - n / tail;
  out.d_opt = rbar + 0.25 * std::log(n / tail);
  out.nu_tilde_n = std::sqrt(
      n * n1 * n2 / (2.0 * std::exp(4.0 * rbar) + (n - 2.0) * n1 / n2));
  out.f_opt = 1.0 / (1.0 + out.nu_tilde_n);
  out.e_t = std::max(0.0, (1.0 - out.nu_tilde_n) / (1.0 + out.nu_tilde_n));
  out.e_f_loc = eof_function_h((1.0 - out.e_t) / (1.0 + out.e_t));
  return out;
}

double network_fidelity_variance_route(int n_parties, double n1, double n2,
                                       double rbar, double d, double gain) {
  const double n = n_parties;
  const double q_rel = 2.0 * n2 * std::exp(-2.0 * (rbar - d));
  const double p_tot =
      (std::pow(2.0 + (n - 2.0) * gain, 2) * n1 * std::exp(-2.0 * (rbar + d)) +
       2.0 * std::pow(gain - 1.0, 2) * (n - 2.0) * n2 *
           std::exp(2.0 * (rbar - d))) /
      4.0;
  const double phi = 0.25 * (q_rel + 2.0) * (p_tot + 2.0);
  return 1.0 / std::sqrt(phi);
}

NetworkOptimal network_optimal_from_resource(const Mat& resource_fs,
                                             double tol) {
  const int n = mode_count(resource_fs);
  // full permutation symmetry check: identical local blocks and identical
  // intermodal blocks
  for (int i = 0; i < n; ++i) {
    if (((resource_fs.block<2, 2>(2 * i, 2 * i) -
          resource_fs.block<2, 2>(0, 0))
             .cwiseAbs()
             .maxCoeff()) > tol)
      throw std::domain_error("network: resource is not fully symmetric");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Mat ref =
          n > 1 ? Mat(resource_fs.block<2, 2>(0, 2)) : Mat(Mat::Zero(2, 2));
      if ((resource_fs.block<2, 2>(2 * i, 2 * j) - ref).cwiseAbs().maxCoeff() >
          tol)
        throw std::domain_error("network: resource is not fully symmetric");
    }
  }
  // measurement localization: momentum detections on the assisting modes
  // leave the sender/receiver pair in the protocol's two-mode state
  Mat loc = resource_fs;
  while (mode_count(loc) > 2)
    loc = homodyne_condition(loc, mode_count(loc) - 1, Quadrature::P);
  const auto sf = twomode::to_standard_form(loc).sf;
  NetworkOptimal out;
  out.nu_tilde_n = twomode::tilde_nu_minus(sf);
  out.f_opt = 1.0 / (1.0 + out.nu_tilde_n);
  out.e_t = std::max(0.0, (1.0 - out.nu_tilde_n) / (1.0 + out.nu_tilde_n));
  out.e_f_loc = eof_function_h((1.0 - out.e_t) / (1.0 + out.e_t));
  out.g_opt = std::numeric_limits<double>::quiet_NaN();
  out.d_opt = std::numeric_limits<double>::quiet_NaN();
  return out;
}

GhzwVariants ghzw_two_party_variants(double rbar) {
  GhzwVariants out;
  out.f2_red = 3.0 / (3.0 + std::sqrt(3.0 + 6.0 * std::exp(-4.0 * rbar)));
  out.f2_uni =
      1.0 / (1.0 + (std::sqrt(4.0 * std::cosh(4.0 * rbar) + 5.0) -
                    2.0 * std::sqrt(std::cosh(4.0 * rbar) - 1.0)) /
                       3.0);
  return out;
}

double telecloning_symmetric(double a) {
  if (a < 1.0) throw std::invalid_argument("telecloning_symmetric: a >= 1");
  return 4.0 / (3.0 * a - 2.0 * std::sqrt(2.0) * std::sqrt(a * a - 1.0) + 5.0);
}

AsymTelecloning telecloning_asymmetric(double a, double t) {
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument("telecloning_asymmetric: t in [0, 1]");
  auto f = [&](double tt) {
    const double arg = (a + 3.0) * (a + 3.0) + (a - 1.0) * (a - 1.0) * tt * tt +
                       2.0 * (a - 1.0) * (3.0 * a + 5.0) * tt -
                       4.0 * std::sqrt((a * a - 1.0) * tt) *
                           (a + (a - 1.0) * tt + 3.0);
    return 2.0 / std::sqrt(arg);
  };
  return {f(t), f(1.0 - t)};
}

bool asym_window(double a, double* t_lo, double* t_hi) {
  const double lo = 2.0 * std::sqrt(2.0) * (2.0 - std::sqrt(1.0 + std::sqrt(2.0)));
  const double hi = 2.0 * std::sqrt(2.0) * (2.0 + std::sqrt(1.0 + std::sqrt(2.0)));
  if (a < lo || a > hi) return false;
  if (t_lo) *t_lo = (a - 2.0 * std::sqrt(a + 1.0) + 2.0) / (a - 1.0);
  if (t_hi) *t_hi = 2.0 * (std::sqrt(2.0) * std::sqrt(a + 1.0) - 2.0) / (a - 1.0);
  return true;
}

double residual_contangle_from_et(double e_t) {
  const double num = 2.0 * std::sqrt(2.0) * e_t -
                     (e_t + 1.0) * std::sqrt(e_t * e_t + 1.0);
  const double den = (e_t - 1.0) * std::sqrt(e_t * (e_t + 4.0) + 1.0);
  const double first = std::log(num / den);
  const double second =
      std::log((e_t * e_t + 1.0) / (e_t * (e_t + 4.0) + 1.0));
  return first * first - 0.5 * second * second;
}

}  // namespace gcv::protocols
