#include "gcv/families.hpp"

#include <cmath>

namespace gcv::families {

namespace {

double sqr(double x) { return x * x; }

Mat fully_symmetric3(double a, double ep, double em) {
  multimode::FullySymmetricParams p{3, a, ep, em};
  return multimode::fully_symmetric_cm(p);
}

}  // namespace

bool triangle_feasible(double a1, double a2, double a3) {
  const double p1 = a1 - 1.0, p2 = a2 - 1.0, p3 = a3 - 1.0;
  if (p1 < 0.0 || p2 < 0.0 || p3 < 0.0) return false;
  return std::abs(p1 - p2) <= p3 + 1e-12 && p3 <= p1 + p2 + 1e-12;
}

Mat cm_of(const FamilyParams& family) {
  return std::visit(
      [](auto&& f) -> Mat {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Ghzw>) {
          const double a = f.a;
          if (a < 1.0) throw std::invalid_argument("ghzw: a >= 1");
          const double root = std::sqrt((a * a - 1.0) * (9.0 * a * a - 1.0));
          return fully_symmetric3(a, (a * a - 1.0 + root) / (4.0 * a),
                                  (a * a - 1.0 - root) / (4.0 * a));
        } else if constexpr (std::is_same_v<T, TState>) {
          const double a = f.a;
          if (a < 1.0) throw std::invalid_argument("tstate: a >= 1");
          const double root = std::sqrt(9.0 * a * a * (a * a - 2.0) + 25.0);
          return fully_symmetric3(a, (a * a - 5.0 + root) / (4.0 * a),
                                  (5.0 - 9.0 * a * a + root) / (12.0 * a));
        } else if constexpr (std::is_same_v<T, NoisyGhzw>) {
          const double a = noisy_ghzw_a(f.n, f.s);
          if (f.n < 1.0 || a < f.n)
            throw std::invalid_argument("noisy ghzw: need n >= 1 and a >= n");
          const double root =
              std::sqrt((a * a - f.n * f.n) * (9.0 * a * a - f.n * f.n));
          return fully_symmetric3(a, (a * a - f.n * f.n + root) / (4.0 * a),
                                  (a * a - f.n * f.n - root) / (4.0 * a));
        } else if constexpr (std::is_same_v<T, BassetHound>) {
          const double a = f.a;
          if (a < 1.0) throw std::invalid_argument("basset hound: a >= 1");
          Mat sigma = Mat::Zero(6, 6);
          sigma.block<2, 2>(0, 0) = a * Mat::Identity(2, 2);
          sigma.block<2, 2>(2, 2) = 0.5 * (a + 1.0) * Mat::Identity(2, 2);
          sigma.block<2, 2>(4, 4) = 0.5 * (a + 1.0) * Mat::Identity(2, 2);
          Mat eps12(2, 2);
          eps12 << std::sqrt((a * a - 1.0) / 2.0), 0, 0,
              -std::sqrt((a * a - 1.0) / 2.0);
          sigma.block<2, 2>(0, 2) = eps12;
          sigma.block<2, 2>(2, 0) = eps12;
          sigma.block<2, 2>(0, 4) = eps12;
          sigma.block<2, 2>(4, 0) = eps12;
          sigma.block<2, 2>(2, 4) = 0.5 * (a - 1.0) * Mat::Identity(2, 2);
          sigma.block<2, 2>(4, 2) = 0.5 * (a - 1.0) * Mat::Identity(2, 2);
          return sigma;
        } else if constexpr (std::is_same_v<T, PureThreeMode>) {
          if (!triangle_feasible(f.a1, f.a2, f.a3))
            throw std::domain_error("pure three-mode: triangle violation");
          const double a[3] = {f.a1, f.a2, f.a3};
          Mat sigma = Mat::Zero(6, 6);
          for (int i = 0; i < 3; ++i) {
            sigma(2 * i, 2 * i) = a[i];
            sigma(2 * i + 1, 2 * i + 1) = a[i];
          }
          for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
              const int k = 3 - i - j;
              const double t1 = std::sqrt(std::max(
                  (sqr(a[i] - a[j]) - sqr(a[k] - 1.0)) *
                      (sqr(a[i] - a[j]) - sqr(a[k] + 1.0)),
                  0.0));
              const double t2 = std::sqrt(std::max(
                  (sqr(a[i] + a[j]) - sqr(a[k] - 1.0)) *
                      (sqr(a[i] + a[j]) - sqr(a[k] + 1.0)),
                  0.0));
              const double den = 4.0 * std::sqrt(a[i] * a[j]);
              sigma(2 * i, 2 * j) = sigma(2 * j, 2 * i) = (t1 + t2) / den;
              sigma(2 * i + 1, 2 * j + 1) = sigma(2 * j + 1, 2 * i + 1) =
                  (t1 - t2) / den;
            }
          }
          return sigma;
        } else {
          static_assert(std::is_same_v<T, FourMode>);
          return multimode::four_mode_state(f.s, f.a);
        }
      },
      family);
}

double ghzw_pair_contangle(double a) {
  const Ghzw f{a};
  const Mat pair = partial_trace(cm_of(f), {0, 1});
  const double en = twomode::log_negativity(twomode::to_standard_form(pair).sf);
  return en * en;
}

double basset_pair_contangle(double a) {
  const double m = (3.0 * a + 1.0) / (a + 3.0);
  return multimode::contangle_g(m * m);
}

double residual_contangle_of(const FamilyParams& family) {
  return std::visit(
      [](auto&& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Ghzw>) {
          const double a = f.a;
          if (a <= 1.0) return 0.0;
          const double red = 0.5 * (3.0 * a * a - 1.0 -
                                    std::sqrt(9.0 * a * a * a * a -
                                              10.0 * a * a + 1.0));
          return multimode::contangle_g(a * a) - 0.5 * sqr(std::log(red));
        } else if constexpr (std::is_same_v<T, TState>) {
          const double a = f.a;
          if (a <= 1.0) return 0.0;
          const double r = std::sqrt(9.0 * a * a * (a * a - 2.0) + 25.0);
          const double inner =
              25.0 * r - 9.0 * std::pow(a, 4) + 3.0 * r * a * a + 6.0 * a * a -
              109.0 -
              std::sqrt(2.0) *
                  std::sqrt(81.0 * std::pow(a, 8) - 432.0 * std::pow(a, 6) +
                            954.0 * std::pow(a, 4) - 1704.0 * a * a + 2125.0 -
                            (3.0 * a * a - 11.0) * (3.0 * a * a - 7.0) *
                                (3.0 * a * a + 5.0) * r);
          const double arg =
              std::sqrt(inner / (18.0 * (3.0 * a * a - r + 3.0)));
          return sqr(std::asinh(arg));
        } else if constexpr (std::is_same_v<T, NoisyGhzw>) {
          const auto cls = classify_noisy_ghzw(f.n, f.s);
          if (cls.cls != SeparabilityClass::Class1) return 0.0;
          const double s2 = f.s * f.s;
          const double block =
              f.n * f.n *
              (4.0 * s2 * s2 + s2 + 4.0 -
               2.0 * (s2 - 1.0) * std::sqrt(4.0 * s2 * s2 + 10.0 * s2 + 4.0)) /
              (9.0 * s2);
          const double pair_log =
              -std::log(f.n * std::sqrt(s2 + 2.0) / (std::sqrt(3.0) * f.s));
          const double pair = std::max(0.0, pair_log);
          return 0.25 * sqr(std::log(block)) - 2.0 * pair * pair;
        } else if constexpr (std::is_same_v<T, BassetHound>) {
          const double a = f.a;
          if (a <= 1.0) return 0.0;
          const double g12 =
              sqr(std::asinh(0.5 * std::sqrt((a - 1.0) * (a + 3.0))));
          return g12 - basset_pair_contangle(a);
        } else if constexpr (std::is_same_v<T, PureThreeMode>) {
          return multimode::residual_contangle_3mode_pure(f.a1, f.a2, f.a3);
        } else {
          static_assert(std::is_same_v<T, FourMode>);
          return multimode::four_mode_analysis(f.s, f.a).residual;
        }
      },
      family);
}

NoisyGhzwClass classify_noisy_ghzw(double n, double s) {
  if (n < 1.0 || s < 0.0)
    throw std::invalid_argument("classify_noisy_ghzw: n >= 1, s >= 0");
  NoisyGhzwClass out;
  const double n2 = n * n;
  const double class1 =
      std::sqrt(9.0 * n2 * n2 - 2.0 * n2 + 9.0 +
                3.0 * (n2 - 1.0) * std::sqrt(9.0 * n2 * n2 + 14.0 * n2 + 9.0)) /
      (4.0 * n);
  if (s > class1)
    out.cls = SeparabilityClass::Class1;
  else if (s > n)
    out.cls = SeparabilityClass::Class4;
  else
    out.cls = SeparabilityClass::Class5;
  out.promiscuous =
      n < std::sqrt(3.0) && s > std::sqrt(2.0) * n / std::sqrt(3.0 - n2);
  return out;
}

double ghzw_a_from_squeezings(double r1, double r2) {
  return std::sqrt(4.0 * std::cosh(2.0 * (r1 + r2)) + 5.0) / 3.0;
}

double ghzw_rbar_from_a(double a) {
  return 0.25 * std::acosh((9.0 * a * a - 5.0) / 4.0);
}

double tstate_thermal_n(double r) {
  return std::sqrt(3.0 + std::exp(-4.0 * r)) - std::exp(-2.0 * r);
}

double tstate_a_from_squeezing(double r) {
  return std::sqrt(2.0 * std::exp(-2.0 * r) *
                       std::sqrt(3.0 + std::exp(-4.0 * r)) *
                       (std::exp(4.0 * r) - 3.0) +
                   6.0 * std::exp(-4.0 * r) + 11.0) /
         3.0;
}

double tstate_r_from_a(double a) {
  if (a < 1.0) throw std::invalid_argument("tstate_r_from_a: a >= 1");
  double lo = 0.0, hi = 20.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tstate_a_from_squeezing(mid) < a ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double noisy_ghzw_a(double n, double s) {
  return n * std::sqrt(2.0 * std::pow(s, 4) + 5.0 * s * s + 2.0) / (3.0 * s);
}

double noisy_ghzw_s_from_a(double n, double a) {
  const double disc = 9.0 * std::pow(a, 4) - 10.0 * a * a * n * n +
                      std::pow(n, 4);
  const double s2 =
      (9.0 * a * a - 5.0 * n * n + 3.0 * std::sqrt(std::max(disc, 0.0))) /
      (4.0 * n * n);
  return std::sqrt(s2);
}

optics::CircuitRecipe recipe_of(const FamilyParams& family) {
  using namespace optics;
  return std::visit(
      [](auto&& f) -> CircuitRecipe {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Ghzw>) {
          const double r = ghzw_rbar_from_a(f.a);
          return {SingleModeSqueezer{0, r}, SingleModeSqueezer{1, -r},
                  SingleModeSqueezer{2, -r}, BeamSplitter{0, 1, 1.0 / 3.0},
                  BeamSplitter{1, 2, 0.5}};
        } else if constexpr (std::is_same_v<T, TState>) {
          // inputs: mode 0 vacuum, modes 1, 2 thermal with n(r)
          const double r = tstate_r_from_a(f.a);
          return {SingleModeSqueezer{0, r}, BeamSplitter{0, 1, 1.0 / 3.0},
                  BeamSplitter{1, 2, 0.5}};
        } else if constexpr (std::is_same_v<T, NoisyGhzw>) {
          // inputs: three thermal modes with nu = n
          const double r = 0.5 * std::log(f.s);
          return {SingleModeSqueezer{0, r}, SingleModeSqueezer{1, -r},
                  SingleModeSqueezer{2, -r}, BeamSplitter{0, 1, 1.0 / 3.0},
                  BeamSplitter{1, 2, 0.5}};
        } else if constexpr (std::is_same_v<T, BassetHound>) {
          const double r = 0.5 * std::acosh(f.a);  // a = cosh(2r)
          return {TwoModeSqueezer{0, 1, r}, BeamSplitter{1, 2, 0.5}};
        } else if constexpr (std::is_same_v<T, PureThreeMode>) {
          const auto inv = allotment_inverse(f.a1, f.a2, f.a3);
          const double r = 0.5 * std::acosh(inv.m);
          return {TwoModeSqueezer{0, 1, r}, BeamSplitter{0, 2, inv.s},
                  BeamSplitter{0, 1, inv.t}, BeamSplitter{1, 2, 2.0 / 3.0}};
        } else {
          static_assert(std::is_same_v<T, FourMode>);
          return {TwoModeSqueezer{1, 2, f.s}, TwoModeSqueezer{0, 1, f.a},
                  TwoModeSqueezer{2, 3, f.a}};
        }
      },
      family);
}

Mat recipe_input_cm(const FamilyParams& family) {
  return std::visit(
      [](auto&& f) -> Mat {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, TState>) {
          const double n = tstate_thermal_n(tstate_r_from_a(f.a));
          Vec nu(3);
          nu << 1.0, n, n;
          return thermal_cm(nu);
        } else if constexpr (std::is_same_v<T, NoisyGhzw>) {
          Vec nu(3);
          nu << f.n, f.n, f.n;
          return thermal_cm(nu);
        } else if constexpr (std::is_same_v<T, FourMode>) {
          return Mat::Identity(8, 8);
        } else {
          return Mat::Identity(6, 6);
        }
      },
      family);
}

Mat allotment(double m, double s, double t) {
  using namespace optics;
  const double r = 0.5 * std::acosh(m);
  Mat sigma = Mat::Identity(6, 6);
  sigma = apply(sigma, TwoModeSqueezer{0, 1, r});
  sigma = apply(sigma, BeamSplitter{0, 2, s});
  sigma = apply(sigma, BeamSplitter{0, 1, t});
  sigma = apply(sigma, BeamSplitter{1, 2, 2.0 / 3.0});
  return sigma;
}

double allotment_m(double a1, double s, double t) {
  const double den = sqr(s * t + t - 1.0);
  const double rad = a1 * a1 * den +
                     4.0 * s * (t - 1.0) * t * (2.0 * t - 1.0) *
                         (2.0 * s * t - 1.0);
  return (t * (t * sqr(s - 1.0) + s - 1.0) + std::sqrt(std::max(rad, 0.0))) /
         den;
}

AllotmentInverse allotment_inverse(double a1, double a2, double a3) {
  if (!triangle_feasible(a1, a2, a3))
    throw std::domain_error("allotment_inverse: triangle violation");
  auto residual = [&](double s, double t, double* r2, double* r3) {
    const double m = allotment_m(a1, s, t);
    if (!(m >= 1.0) || !std::isfinite(m)) {
      *r2 = *r3 = 1e6;
      return 1e12;
    }
    const Mat sigma = allotment(m, s, t);
    *r2 = partial_trace(sigma, {1}).determinant() - a2 * a2;
    *r3 = partial_trace(sigma, {2}).determinant() - a3 * a3;
    return (*r2) * (*r2) + (*r3) * (*r3);
  };
  double best_s = 0.5, best_t = 0.5, best = 1e300;
  double r2, r3;
  for (int i = 1; i < 16; ++i) {
    for (int j = 1; j < 16; ++j) {
      const double s = i / 16.0, t = j / 16.0;
      const double v = residual(s, t, &r2, &r3);
      if (v < best) {
        best = v;
        best_s = s;
        best_t = t;
      }
    }
  }
  // damped Gauss-Newton with a numeric Jacobian
  double s = best_s, t = best_t;
  for (int it = 0; it < 200 && best > 1e-22; ++it) {
    const double h = 1e-7;
    double f2, f3;
    residual(s, t, &f2, &f3);
    double a2s, a3s, a2t, a3t;
    residual(std::min(s + h, 1.0 - 1e-12), t, &a2s, &a3s);
    residual(s, std::min(t + h, 1.0 - 1e-12), &a2t, &a3t);
    Eigen::Matrix2d jac;
    jac << (a2s - f2) / h, (a2t - f2) / h, (a3s - f3) / h, (a3t - f3) / h;
    Eigen::Vector2d rhs(f2, f3);
    Eigen::Vector2d step = jac.fullPivLu().solve(rhs);
    double damp = 1.0;
    for (int k = 0; k < 30; ++k) {
      const double ns = std::clamp(s - damp * step[0], 1e-9, 1.0 - 1e-9);
      const double nt = std::clamp(t - damp * step[1], 1e-9, 1.0 - 1e-9);
      const double v = residual(ns, nt, &r2, &r3);
      if (v < best) {
        best = v;
        s = ns;
        t = nt;
        break;
      }
      damp *= 0.5;
    }
    if (damp < 1e-9) break;
  }
  AllotmentInverse out;
  out.s = s;
  out.t = t;
  out.m = allotment_m(a1, s, t);
  residual(s, t, &r2, &r3);
  out.residual = std::max(std::abs(r2), std::abs(r3));
  if (out.residual > 1e-6)
    throw std::runtime_error("allotment_inverse: solver residual " +
                             std::to_string(out.residual));
  return out;
}

optics::CircuitRecipe generic_recipe(int n_modes,
                                     const std::vector<double>& params) {
  using namespace optics;
  const size_t expected = n_modes * (n_modes - 1) / 2;
  if (params.size() != expected)
    throw std::invalid_argument("generic_recipe: expected N(N-1)/2 params");
  CircuitRecipe recipe;
  size_t idx = 0;
  const double r0 = params[idx++];
  recipe.push_back(SingleModeSqueezer{0, r0});
  recipe.push_back(SingleModeSqueezer{1, -r0});
  recipe.push_back(BeamSplitter{0, 1, 0.5});
  std::vector<double> rk(n_modes, 0.0);
  for (int k = 2; k < n_modes; ++k) rk[k] = params[idx++];
  for (int k = 2; k < n_modes; ++k) {
    recipe.push_back(SingleModeSqueezer{k, rk[k]});
    for (int j = 1; j < k; ++j)
      recipe.push_back(BeamSplitter{j, k, params[idx++]});
  }
  return recipe;
}

optics::CircuitRecipe general_recipe(int n_modes,
                                     const std::vector<double>& params) {
  using namespace optics;
  const size_t expected = n_modes * n_modes - 2 * n_modes;
  if (params.size() != expected)
    throw std::invalid_argument("general_recipe: expected N^2-2N params");
  CircuitRecipe recipe;
  size_t idx = 0;
  const double r0 = params[idx++];
  recipe.push_back(SingleModeSqueezer{0, r0});
  recipe.push_back(SingleModeSqueezer{1, -r0});
  recipe.push_back(BeamSplitter{0, 1, 0.5});
  std::vector<double> rk(n_modes, 0.0);
  for (int k = 2; k < n_modes; ++k) rk[k] = params[idx++];
  int pair_rank = 0;
  const int last_pair = (n_modes - 1) * (n_modes - 2) / 2;
  for (int k = 2; k < n_modes; ++k) {
    recipe.push_back(SingleModeSqueezer{k, rk[k]});
    for (int j = 1; j < k; ++j) {
      ++pair_rank;
      recipe.push_back(BeamSplitter{j, k, params[idx++]});
      if (pair_rank < last_pair)  // every pair but the final one
        recipe.push_back(Seraphique{j, k, params[idx++]});
    }
  }
  return recipe;
}

}  // namespace gcv::families
