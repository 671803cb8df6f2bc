#include "gcv/relativistic.hpp"

#include <cmath>

#include "gcv/multimode.hpp"
#include "gcv/optics.hpp"
#include "gcv/twomode.hpp"

namespace gcv::relativistic {

namespace {
double sqr(double x) { return x * x; }
double f_vn(double x) { return entropy_function_f(x); }
}  // namespace

double acceleration_parameter(double a_phys, double omega) {
  if (a_phys <= 0.0 || omega <= 0.0)
    throw std::invalid_argument("acceleration_parameter: positive inputs");
  const double t = 1.0 - std::exp(-2.0 * M_PI * std::abs(omega) / a_phys);
  return std::acosh(1.0 / std::sqrt(t));
}

Mat one_observer_state(double s, double r) {
  // modes (A, R, antiR): squeeze (A, R) by s, then the Rindler pair (R, antiR)
  Mat sigma = Mat::Identity(6, 6);
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{0, 1, s});
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{1, 2, r});
  return sigma;
}

OneObserverReport one_observer_report(double s, double r) {
  OneObserverReport rep;
  const double ch2s = std::cosh(2.0 * s);
  const double ch_r2 = sqr(std::cosh(r)), sh_r2 = sqr(std::sinh(r));
  rep.m_a_rr = ch2s;
  rep.m_r_arr = ch2s * ch_r2 + sh_r2;
  rep.m_rr_ar = ch_r2 + ch2s * sh_r2;
  rep.m_ar = (2.0 * sh_r2 + (std::cosh(2.0 * r) + 3.0) * ch2s) /
             (2.0 * ch2s * sh_r2 + std::cosh(2.0 * r) + 3.0);
  rep.g_ar = multimode::contangle_g(sqr(rep.m_ar));
  rep.g_r_rr = 4.0 * r * r;
  const double r_star = std::acosh(std::sqrt(sqr(std::tanh(s)) + 1.0));
  if (r < r_star) {
    rep.residual =
        multimode::contangle_g(sqr(rep.m_rr_ar)) - multimode::contangle_g(sqr(std::cosh(2.0 * r)));
  } else {
    rep.residual = multimode::contangle_g(sqr(rep.m_a_rr)) - rep.g_ar;
  }
  rep.mutual_info = f_vn(rep.m_a_rr) + f_vn(rep.m_r_arr) - f_vn(rep.m_rr_ar);
  rep.m_ar_cap = 1.0 + 2.0 / std::max(sh_r2, 1e-300);
  rep.g_cap = sqr(std::asinh(2.0 * std::cosh(r) / std::max(sh_r2, 1e-300)));
  return rep;
}

Mat two_observer_state(double s, double l, double n) {
  // modes (antiL, L, N, antiN)
  Mat sigma = Mat::Identity(8, 8);
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{1, 2, s});
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{1, 0, l});
  sigma = optics::apply(sigma, optics::TwoModeSqueezer{2, 3, n});
  return sigma;
}

namespace {

double m_ln_value(double s, double l, double n) {
  if (std::tanh(s) <= std::sinh(l) * std::sinh(n)) return 1.0;
  const double ch2l = std::cosh(2.0 * l), ch2n = std::cosh(2.0 * n);
  const double num = 2.0 * ch2l * ch2n * sqr(std::cosh(s)) +
                     3.0 * std::cosh(2.0 * s) -
                     4.0 * std::sinh(l) * std::sinh(n) * std::sinh(2.0 * s) -
                     1.0;
  const double den =
      2.0 * ((ch2l + ch2n) * sqr(std::cosh(s)) - 2.0 * sqr(std::sinh(s)) +
             2.0 * std::sinh(l) * std::sinh(n) * std::sinh(2.0 * s));
  return num / den;
}

}  // namespace

TwoObserverReport two_observer_report(double s, double l, double n) {
  TwoObserverReport rep;
  rep.m_ln = m_ln_value(s, l, n);
  rep.g_ln = multimode::contangle_g(sqr(rep.m_ln));
  rep.g_l_ll = 4.0 * l * l;
  rep.g_n_nn = 4.0 * n * n;
  const Mat sigma = two_observer_state(s, l, n);
  rep.l_nbar_separable =
      nu_tilde_min(partial_trace(sigma, {1, 3}), {0}) >= 1.0 - 1e-9;
  rep.n_lbar_separable =
      nu_tilde_min(partial_trace(sigma, {0, 2}), {0}) >= 1.0 - 1e-9;
  rep.lbar_nbar_separable =
      nu_tilde_min(partial_trace(sigma, {0, 3}), {0}) >= 1.0 - 1e-9;
  if (std::tanh(s) > std::sinh(l) * std::sinh(n)) {
    rep.r_eff = std::acosh(std::cosh(l) * std::cosh(n) * std::sinh(s) /
                           (std::sinh(s) -
                            std::cosh(s) * std::sinh(l) * std::sinh(n)));
  } else {
    rep.r_eff = std::numeric_limits<double>::infinity();
  }
  const double det_l = sqr(std::cosh(l)) * std::cosh(2.0 * s) + sqr(std::sinh(l));
  const double det_n = sqr(std::cosh(n)) * std::cosh(2.0 * s) + sqr(std::sinh(n));
  const double det_ln = partial_trace(sigma, {1, 2}).determinant();
  rep.mutual_info = f_vn(det_l) + f_vn(det_n) - 2.0 * f_vn(std::pow(det_ln, 0.25));
  if (std::abs(l - n) < 1e-12) {
    const double m1 = sqr(std::cosh(l)) + std::cosh(2.0 * s) * sqr(std::sinh(l));
    rep.residual = multimode::contangle_g(sqr(m1)) - 4.0 * l * l;
  } else {
    rep.residual = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

double disentangling_acceleration(double s) {
  return std::asinh(std::sqrt(std::tanh(s)));
}

double information_defect(double a, double s) {
  return one_observer_report(s, a).mutual_info -
         two_observer_report(s, a, a).mutual_info;
}

FrequencyWindow entangled_frequency_window(double abar, double lambda,
                                           double nu) {
  const double el = std::exp(2.0 * M_PI * lambda / abar);
  const double en = std::exp(2.0 * M_PI * nu / abar);
  FrequencyWindow out;
  out.entangled = el + en - el * en < 0.0;
  if (!out.entangled) {
    out.m_ln = 1.0;
    out.g_tau = 0.0;
    return out;
  }
  const double l = acceleration_parameter(abar, lambda);
  const double n = acceleration_parameter(abar, nu);
  out.m_ln = (std::cosh(2.0 * l) * std::cosh(2.0 * n) -
              4.0 * std::sinh(l) * std::sinh(n) + 3.0) /
             (2.0 * sqr(std::sinh(l) + std::sinh(n)));
  out.g_tau = multimode::contangle_g(sqr(out.m_ln));
  return out;
}

}  // namespace gcv::relativistic
