#include "gcv/twomode.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace gcv::twomode {

namespace {

constexpr double kBoundaryBand = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sqr(double x) { return x * x; }

double arcsinh2_sqrt(double x_minus_1) {
  // arcsinh^2 sqrt(x - 1), evaluated as log(y + sqrt(y^2 + 1)) to avoid
  // cancellation for large arguments
  if (x_minus_1 <= 0.0) return 0.0;
  const double y = std::sqrt(x_minus_1);
  return sqr(std::log(y + std::sqrt(y * y + 1.0)));
}

}  // namespace

Mat StandardForm::cm() const {
  Mat sigma(4, 4);
  sigma << a, 0, c_plus, 0,
           0, a, 0, c_minus,
           c_plus, 0, b, 0,
           0, c_minus, 0, b;
  return sigma;
}

StandardFormResult to_standard_form(const Mat& sigma) {
  if (mode_count(sigma) != 2)
    throw std::invalid_argument("to_standard_form: two-mode CM expected");
  Mat local = Mat::Zero(4, 4);
  // single-mode Williamson: M = (sigma_k / a_k)^{-1/2} is symplectic
  for (int k = 0; k < 2; ++k) {
    const Mat blk = sigma.block<2, 2>(2 * k, 2 * k);
    const double ak = std::sqrt(blk.determinant());
    Eigen::SelfAdjointEigenSolver<Mat> es(blk / ak);
    local.block<2, 2>(2 * k, 2 * k) = es.operatorInverseSqrt();
  }
  Mat work = local * sigma * local.transpose();
  // rotations from the signed SVD of the cross block
  Eigen::JacobiSVD<Mat> svd(work.block<2, 2>(0, 2),
                            Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat u = svd.matrixU(), v = svd.matrixV();
  Vec d = svd.singularValues();
  if (u.determinant() < 0.0) {
    u.col(1) *= -1.0;
    d[1] *= -1.0;
  }
  if (v.determinant() < 0.0) {
    v.col(1) *= -1.0;
    d[1] *= -1.0;
  }
  Mat rots = Mat::Zero(4, 4);
  rots.block<2, 2>(0, 0) = u.transpose();
  rots.block<2, 2>(2, 2) = v.transpose();
  local = rots * local;
  work = rots * work * rots.transpose();

  StandardFormResult out;
  out.sf.a = work(0, 0);
  out.sf.b = work(2, 2);
  out.sf.c_plus = d[0];
  out.sf.c_minus = d[1];
  out.local = local;
  return out;
}

namespace {
double sympeig(const StandardForm& sf, double delta, bool minus) {
  const double det = sf.det_sigma();
  const double disc = std::max(delta * delta - 4.0 * det, 0.0);
  const double plus_val = 0.5 * (delta + std::sqrt(disc));
  if (!minus) return std::sqrt(std::max(plus_val, 0.0));
  // product form avoids the cancellation for small eigenvalues
  return std::sqrt(std::max(det / plus_val, 0.0));
}
}  // namespace

double nu_minus(const StandardForm& sf) { return sympeig(sf, sf.seralian(), true); }
double nu_plus(const StandardForm& sf) { return sympeig(sf, sf.seralian(), false); }
double tilde_nu_minus(const StandardForm& sf) {
  return sympeig(sf, sf.seralian_tilde(), true);
}
double tilde_nu_plus(const StandardForm& sf) {
  return sympeig(sf, sf.seralian_tilde(), false);
}

double log_negativity(const StandardForm& sf) {
  const double nt = tilde_nu_minus(sf);
  if (nt >= 1.0 - kBoundaryBand) return 0.0;
  return -std::log(nt);
}

double log_negativity(const Mat& sigma) { return log_negativity(sigma, {0}); }

double log_negativity(const Mat& sigma, const std::vector<int>& side) {
  const Vec nt = nu_tilde_spectrum(sigma, side);
  double en = 0.0;
  for (int i = 0; i < nt.size(); ++i)
    if (nt[i] < 1.0 - kBoundaryBand) en -= std::log(nt[i]);
  return en;
}

double negativity(const Mat& sigma, const std::vector<int>& side) {
  const Vec nt = nu_tilde_spectrum(sigma, side);
  double prod = 1.0;
  for (int i = 0; i < nt.size(); ++i)
    if (nt[i] < 1.0 - kBoundaryBand) prod /= nt[i];
  return 0.5 * (prod - 1.0);
}

double eof_symmetric(const StandardForm& sf) {
  if (!sf.symmetric())
    throw std::domain_error(
        "eof_symmetric: state is not symmetric; EoF is not computable here, "
        "use gaussian_em");
  const double nt = tilde_nu_minus(sf);
  if (nt >= 1.0 - kBoundaryBand) return 0.0;
  return eof_function_h(nt);
}

double epr_correlation(const StandardForm& sf) {
  return 2.0 * std::sqrt((sf.a - std::abs(sf.c_plus)) *
                         (sf.a - std::abs(sf.c_minus)));
}

StandardForm make_extremal(ExtremalKind kind, double mu1, double mu2,
                           double mu) {
  if (mu1 <= 0.0 || mu1 > 1.0 || mu2 <= 0.0 || mu2 > 1.0)
    throw std::invalid_argument("make_extremal: marginal purities in (0, 1]");
  const double mu_max = mu1 * mu2 / (mu1 * mu2 + std::abs(mu1 - mu2));
  StandardForm sf;
  sf.a = 1.0 / mu1;
  sf.b = 1.0 / mu2;
  switch (kind) {
    case ExtremalKind::GMEMS: {
      if (mu < mu1 * mu2 || mu > mu_max + 1e-12)
        throw std::invalid_argument("make_extremal: mu out of range");
      const double c = std::sqrt(std::max(1.0 / (mu1 * mu2) - 1.0 / mu, 0.0));
      sf.c_plus = c;
      sf.c_minus = -c;
      return sf;
    }
    case ExtremalKind::GMEMMS: {
      const double c =
          std::sqrt(std::max(1.0 / (mu1 * mu2) - 1.0 / mu_max, 0.0));
      sf.c_plus = c;
      sf.c_minus = -c;
      return sf;
    }
    case ExtremalKind::GLEMS: {
      if (mu < mu1 * mu2 || mu > mu_max + 1e-12)
        throw std::invalid_argument("make_extremal: mu out of range");
      // invert the purity parametrization at the Delta upper bound; the
      // partial-minimum-uncertainty branch applies where it is reachable
      const double delta =
          std::min(1.0 + 1.0 / (mu * mu),
                   sqr(mu1 + mu2) / sqr(mu1 * mu2) - 2.0 / mu);
      const double em = std::sqrt(std::max(
          sqr(delta - sqr(mu1 - mu2) / sqr(mu1 * mu2)) - 4.0 / (mu * mu), 0.0));
      const double ep = std::sqrt(std::max(
          sqr(delta - sqr(mu1 + mu2) / sqr(mu1 * mu2)) - 4.0 / (mu * mu), 0.0));
      sf.c_plus = 0.25 * std::sqrt(mu1 * mu2) * (em + ep);
      sf.c_minus = 0.25 * std::sqrt(mu1 * mu2) * (em - ep);
      return sf;
    }
  }
  throw std::logic_error("unreachable");
}

PurityClass classify_by_purities(double mu1, double mu2, double mu,
                                 double band) {
  const double lower = mu1 * mu2;
  const double upper = mu1 * mu2 / (mu1 * mu2 + std::abs(mu1 - mu2));
  const double sep = mu1 * mu2 / (mu1 + mu2 - mu1 * mu2);
  const double ent =
      mu1 * mu2 / std::sqrt(mu1 * mu1 + mu2 * mu2 - mu1 * mu1 * mu2 * mu2);
  if (mu < lower - band || mu > upper + band) return PurityClass::Unphysical;
  if (mu <= sep + band) return PurityClass::Separable;
  if (mu <= ent + band) return PurityClass::Coexistence;
  return PurityClass::Entangled;
}

NegativityBounds negativity_bounds(double mu1, double mu2, double mu) {
  const double s12 = mu1 + mu2;
  const double m2 = mu1 * mu1 * mu2 * mu2;
  const double arg_max =
      -1.0 / mu +
      (s12 / (2.0 * m2)) * (s12 - std::sqrt(std::max(s12 * s12 - 4.0 * m2 / mu, 0.0)));
  const double base = 1.0 / (mu1 * mu1) + 1.0 / (mu2 * mu2) -
                      1.0 / (2.0 * mu * mu) - 0.5;
  const double arg_min =
      base - std::sqrt(std::max(base * base - 1.0 / (mu * mu), 0.0));
  NegativityBounds out;
  out.en_max = std::max(0.0, -0.5 * std::log(arg_max));
  out.en_min = std::max(0.0, -0.5 * std::log(arg_min));
  out.en_avg = 0.5 * (out.en_max + out.en_min);
  out.rel_error = (out.en_max + out.en_min) > 0.0
                      ? (out.en_max - out.en_min) / (out.en_max + out.en_min)
                      : 0.0;
  return out;
}

StandardForm from_gem_params(const GemParams& p) {
  if (p.s < 1.0 || std::abs(p.d) > p.s - 1.0 || p.g < 2.0 * std::abs(p.d) + 1.0)
    throw std::invalid_argument("from_gem_params: outside physical region");
  const double ab = p.s * p.s - p.d * p.d;
  auto bracket = [&](double m2) {
    return 4.0 * m2 + 0.5 * (p.g * p.g + 1.0) * (p.lambda - 1.0) -
           (2.0 * p.d * p.d + p.g) * (p.lambda + 1.0);
  };
  const double b1 = bracket(p.d * p.d);
  const double b2 = bracket(p.s * p.s);
  const double r1 = std::sqrt(std::max(b1 * b1 - 4.0 * p.g * p.g, 0.0));
  const double r2 = std::sqrt(std::max(b2 * b2 - 4.0 * p.g * p.g, 0.0));
  StandardForm sf;
  sf.a = p.s + p.d;
  sf.b = p.s - p.d;
  sf.c_plus = (r1 + r2) / (4.0 * std::sqrt(ab));
  sf.c_minus = (r1 - r2) / (4.0 * std::sqrt(ab));
  return sf;
}

double m2_theta(const StandardForm& sf, double theta) {
  const double a = sf.a, b = sf.b, cp = sf.c_plus, cm = sf.c_minus;
  const double p = a * b - cm * cm;
  const double xi_m = cp * p - cm;
  const double xi_p = cp * p + cm;
  const double eta = (a - b * p) * (b - a * p);
  if (eta <= 0.0) return kInf;
  const double zeta = 2.0 * a * b * cm * cm * cm +
                      (a * a + b * b) * cp * cm * cm +
                      (a * a + b * b - 2.0 * a * a * b * b) * cm -
                      a * b * (a * a + b * b - 2.0) * cp;
  const double h1 = xi_m + std::sqrt(eta) * std::cos(theta);
  const double sin_coeff =
      (a * a - b * b) * std::sqrt(std::max(1.0 - xi_p * xi_p / eta, 0.0));
  // denominator bracket carries the overall 2(ab - c-^2) factor
  const double h2 =
      2.0 * p *
      ((a * a + b * b + 2.0 * cp * cm) - std::cos(theta) * zeta / std::sqrt(eta) +
       std::sin(theta) * sin_coeff);
  if (h2 <= 0.0) return kInf;
  const double m2 = 1.0 + h1 * h1 / h2;
  return m2 >= 1.0 ? m2 : kInf;
}

namespace {

// golden-section refinement of m2_theta on [lo, hi]
double golden_min_theta(const StandardForm& sf, double lo, double hi,
                        double* theta_out) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = m2_theta(sf, c), fd = m2_theta(sf, d);
  while (hi - lo > 1e-10) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = m2_theta(sf, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = m2_theta(sf, d);
    }
  }
  *theta_out = 0.5 * (lo + hi);
  return m2_theta(sf, *theta_out);
}

GaussianEm finish(double m2, double theta, double grad) {
  GaussianEm out;
  out.m_opt = std::sqrt(std::max(m2, 1.0));
  out.g_tau = arcsinh2_sqrt(m2 - 1.0);
  const double nt_opt = out.m_opt - std::sqrt(std::max(m2 - 1.0, 0.0));
  out.g_eof = eof_function_h(nt_opt);
  out.theta_opt = theta;
  out.grad_residual = grad;
  return out;
}

}  // namespace

GaussianEm gaussian_em(const StandardForm& sf) {
  const double nt = tilde_nu_minus(sf);
  if (nt >= 1.0 - kBoundaryBand) return finish(1.0, 0.0, 0.0);
  const double det = sf.det_sigma();
  if (det <= 1.0 + 1e-8) {
    // pure state: the optimal pure state is the state itself
    return finish(sf.a * sf.b, 0.0, 0.0);
  }
  if (sf.symmetric()) {
    // optimal pure state shares nu~- with the state
    const double m = 0.5 * (nt + 1.0 / nt);
    return finish(m * m, 0.0, 0.0);
  }
  // 720-point grid, then golden-section around every local bracket
  // (the stationarity equation has up to four physical solutions)
  constexpr int kGrid = 720;
  std::vector<double> vals(kGrid);
  for (int i = 0; i < kGrid; ++i)
    vals[i] = m2_theta(sf, 2.0 * M_PI * i / kGrid);
  double best = kInf, best_theta = 0.0;
  int refined = 0;
  for (int i = 0; i < kGrid && refined < 8; ++i) {
    const double prev = vals[(i + kGrid - 1) % kGrid];
    const double next = vals[(i + 1) % kGrid];
    if (vals[i] <= prev && vals[i] <= next && vals[i] < kInf) {
      ++refined;
      const double t0 = 2.0 * M_PI * (i - 1) / kGrid;
      const double t1 = 2.0 * M_PI * (i + 1) / kGrid;
      double theta;
      const double m2 = golden_min_theta(sf, t0, t1, &theta);
      if (m2 < best) {
        best = m2;
        best_theta = theta;
      }
    }
  }
  if (best >= kInf) {
    // no physical branch resolved on the grid; fall back to endpoints
    best = std::min(m2_theta(sf, 0.0), m2_theta(sf, M_PI));
    best_theta = m2_theta(sf, 0.0) < m2_theta(sf, M_PI) ? 0.0 : M_PI;
    if (best >= kInf) return finish(1.0, 0.0, 0.0);
  }
  const double dtheta = 1e-6;
  const double grad =
      std::abs(m2_theta(sf, best_theta + dtheta) -
               m2_theta(sf, best_theta - dtheta)) /
      (2.0 * dtheta);
  return finish(best, best_theta, grad);
}

GaussianEm gaussian_em(const Mat& sigma) {
  return gaussian_em(to_standard_form(sigma).sf);
}

double m2_opt_glems(double s, double d, double g) {
  if (g >= std::sqrt(2.0 * (s * s + d * d) - 1.0)) return 1.0;  // separable
  const StandardForm sf = from_gem_params({s, d, g, -1.0});
  const double p = sf.a * sf.b - sf.c_minus * sf.c_minus;
  const double big_a = sf.c_plus * p + sf.c_minus;  // xi_+
  const double big_b = sf.c_plus * p - sf.c_minus;  // xi_-
  auto value = [&](double u) {
    const double den = 2.0 * p * ((g * g - 1.0) * u + g * g + 1.0);
    if (den <= 0.0) return kInf;
    return 1.0 + sqr(big_a * u + big_b) / den;
  };
  double best = std::min(value(-1.0), value(1.0));
  if (std::abs(big_a) > 1e-14) {
    const double u_star =
        big_b / big_a - 2.0 * (g * g + 1.0) / (g * g - 1.0);
    if (u_star > -1.0 && u_star < 1.0) best = std::min(best, value(u_star));
  }
  return best;
}

double m2_opt_gmems(double s, double d, double g) {
  if (g >= 2.0 * s - 1.0) return 1.0;  // separable
  const double num =
      (g + 1.0) * s -
      std::sqrt(std::max((sqr(g - 1.0) - 4.0 * d * d) * (s * s - d * d - g), 0.0));
  return sqr(num) / (4.0 * sqr(d * d + g));
}

EmNegativityBounds em_vs_negativity_bounds(double nt) {
  EmNegativityBounds out;
  if (nt >= 1.0) {
    out.lower = 0.0;
    out.upper_conjectured = 0.0;
    return out;
  }
  out.lower = eof_function_h(nt);
  out.upper_conjectured =
      eof_function_h((1.0 - std::sqrt(1.0 - nt * nt)) / nt);
  return out;
}

std::optional<double> nodal_surface(int p, double mu1, double mu2) {
  const double cap = std::sqrt(3.0) / 2.0;
  if (mu1 <= 0.0 || mu2 <= 0.0 || mu1 > cap + 1e-12 || mu2 > cap + 1e-12)
    return std::nullopt;
  double mu_k = 0.0;
  if (p == 3) {
    mu_k = std::sqrt(6.0 / (3.0 / sqr(mu1) + 3.0 / sqr(mu2) - 2.0));
  } else if (p == 4) {
    const double m1s = sqr(mu1), m2s = sqr(mu2);
    const double inner = (m1s + m2s) * (m1s + m2s - m1s * m2s) + sqr(m1s * m2s);
    mu_k = std::sqrt(3.0) * mu1 * mu2 /
           std::sqrt(m1s + m2s - 2.0 * m1s * m2s + std::sqrt(inner));
  } else {
    throw std::invalid_argument("nodal_surface: p must be 3 or 4");
  }
  const double upper = mu1 * mu2 / (mu1 * mu2 + std::abs(mu1 - mu2));
  if (mu_k < mu1 * mu2 || mu_k > upper) return std::nullopt;
  return mu_k;
}

}  // namespace gcv::twomode
