#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

#include "gcv/twomode.hpp"

using namespace gcv;
using namespace gcv::twomode;
using test::max_abs_diff;

TEST_CASE("standard form of known states") {
  const auto res = to_standard_form(two_mode_squeezed_cm(0.7));
  CHECK(res.sf.a == doctest::Approx(std::cosh(1.4)).epsilon(1e-12));
  CHECK(res.sf.b == doctest::Approx(std::cosh(1.4)).epsilon(1e-12));
  CHECK(res.sf.c_plus == doctest::Approx(std::sinh(1.4)).epsilon(1e-12));
  CHECK(res.sf.c_minus == doctest::Approx(-std::sinh(1.4)).epsilon(1e-12));
  Vec nu(2);
  nu << 1.4, 1.8;
  const auto prod = to_standard_form(thermal_cm(nu));
  CHECK(prod.sf.c_plus == doctest::Approx(0.0));
  CHECK(prod.sf.c_minus == doctest::Approx(0.0));
}

TEST_CASE("standard form preserves the four invariants and is reproduced by the locals") {
  StateSampler sampler(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Mat sigma = sampler.random_physical_cm(2, 2.5);
    const auto res = to_standard_form(sigma);
    const Mat mapped = res.local * sigma * res.local.transpose();
    CHECK(max_abs_diff(mapped, res.sf.cm()) < 1e-8);
    CHECK(res.sf.c_plus >= std::abs(res.sf.c_minus) - 1e-12);
    CHECK(res.sf.det_sigma() ==
          doctest::Approx(sigma.determinant()).epsilon(1e-9));
    CHECK(res.sf.a * res.sf.a ==
          doctest::Approx(sigma.block<2, 2>(0, 0).determinant())
              .epsilon(1e-9));
    CHECK(res.sf.b * res.sf.b ==
          doctest::Approx(sigma.block<2, 2>(2, 2).determinant())
              .epsilon(1e-9));
    CHECK(res.sf.c_plus * res.sf.c_minus ==
          doctest::Approx(sigma.block<2, 2>(0, 2).determinant())
              .epsilon(1e-8));
  }
}

TEST_CASE("tilde nu of the two-mode squeezed state") {
  for (double r : {0.1, 0.5, 1.5}) {
    const auto sf = to_standard_form(two_mode_squeezed_cm(r)).sf;
    CHECK(tilde_nu_minus(sf) ==
          doctest::Approx(std::exp(-2.0 * r)).epsilon(1e-10));
    CHECK(tilde_nu_plus(sf) ==
          doctest::Approx(std::exp(2.0 * r)).epsilon(1e-10));
  }
  // no correlations: nu~- = min(a, b)
  StandardForm sf;
  sf.a = 1.7;
  sf.b = 1.2;
  CHECK(tilde_nu_minus(sf) == doctest::Approx(1.2));
}

TEST_CASE("log negativity: E_N = 2r for the two-mode squeezed state") {
  for (double r : {0.1, 1.0, 2.5})
    CHECK(log_negativity(two_mode_squeezed_cm(r)) ==
          doctest::Approx(2.0 * r).epsilon(1e-10));
  CHECK(log_negativity(Mat::Identity(4, 4)) == 0.0);
  // N = (exp E_N - 1)/2
  const Mat sigma = two_mode_squeezed_cm(0.8);
  CHECK(negativity(sigma, {0}) ==
        doctest::Approx(0.5 * (std::exp(log_negativity(sigma)) - 1.0))
            .epsilon(1e-10));
}

TEST_CASE("PPT exactness on random states: nu~- < 1 iff E_N > 0 iff det gamma < 0 necessary") {
  StateSampler sampler(5);
  int entangled = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Mat sigma = sampler.random_physical_cm(2, 2.2);
    const auto sf = to_standard_form(sigma).sf;
    const double nt = tilde_nu_minus(sf);
    const double en = log_negativity(sf);
    if (nt < 1.0 - 1e-9) {
      ++entangled;
      CHECK(en > 0.0);
      // det gamma < 0 is necessary for entanglement
      CHECK(sf.c_plus * sf.c_minus < 0.0);
      if (sf.symmetric()) CHECK(eof_symmetric(sf) > 0.0);
    } else {
      CHECK(en == 0.0);
    }
  }
  CHECK(entangled > 100);
}

TEST_CASE("EoF of symmetric states, frozen value at r = 0.5") {
  const auto sf = to_standard_form(two_mode_squeezed_cm(0.5)).sf;
  // h(e^{-1}) computed independently
  CHECK(eof_symmetric(sf) == doctest::Approx(0.6594529591680367).epsilon(1e-12));
  StandardForm flat;
  flat.a = flat.b = 1.5;
  CHECK(eof_symmetric(flat) == 0.0);
  StandardForm skew;
  skew.a = 1.5;
  skew.b = 1.2;
  CHECK_THROWS_AS(eof_symmetric(skew), std::domain_error);
  // E_F and E_N induce the same ordering on symmetric states
  StateSampler sampler(7);
  for (int trial = 0; trial < 50; ++trial) {
    const double r1 = sampler.uniform(0.05, 1.5);
    const double r2 = sampler.uniform(0.05, 1.5);
    const auto sfa = to_standard_form(two_mode_squeezed_cm(r1)).sf;
    const auto sfb = to_standard_form(two_mode_squeezed_cm(r2)).sf;
    const bool en_order = log_negativity(sfa) < log_negativity(sfb);
    const bool ef_order = eof_symmetric(sfa) < eof_symmetric(sfb);
    CHECK(en_order == ef_order);
  }
}

TEST_CASE("EPR correlation equals 2 nu~- for entangled symmetric states") {
  for (double r : {0.3, 0.9}) {
    const auto sf = to_standard_form(two_mode_squeezed_cm(r)).sf;
    CHECK(epr_correlation(sf) ==
          doctest::Approx(2.0 * std::exp(-2.0 * r)).epsilon(1e-9));
  }
  StandardForm sep;
  sep.a = sep.b = 1.4;
  CHECK(epr_correlation(sep) >= 2.0);
}

TEST_CASE("extremal states at fixed purities") {
  const double mu1 = 0.6, mu2 = 0.7;
  // product state at the lower bound, both kinds coincide and separate
  const double mu_prod = mu1 * mu2;
  const auto gmems0 = make_extremal(ExtremalKind::GMEMS, mu1, mu2, mu_prod);
  const auto glems0 = make_extremal(ExtremalKind::GLEMS, mu1, mu2, mu_prod);
  CHECK(gmems0.c_plus == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(std::abs(glems0.c_plus) < 1e-6);
  CHECK(tilde_nu_minus(gmems0) >= 1.0 - 1e-9);
  const double mu = 0.75;
  const auto gmems = make_extremal(ExtremalKind::GMEMS, mu1, mu2, mu);
  const auto glems = make_extremal(ExtremalKind::GLEMS, mu1, mu2, mu);
  CHECK(gmems.mu() == doctest::Approx(mu).epsilon(1e-9));
  CHECK(glems.mu() == doctest::Approx(mu).epsilon(1e-9));
  // GLEMS spectrum is {1, 1/mu}
  CHECK(nu_minus(glems) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(nu_plus(glems) == doctest::Approx(1.0 / mu).epsilon(1e-9));
  // GMEMS dominates GLEMS in negativity
  CHECK(log_negativity(gmems) >= log_negativity(glems));
  // GMEMMS saturates the mu upper bound
  const auto memms = make_extremal(ExtremalKind::GMEMMS, mu1, mu2);
  const double mu_max = mu1 * mu2 / (mu1 * mu2 + std::abs(mu1 - mu2));
  CHECK(memms.mu() == doctest::Approx(mu_max).epsilon(1e-9));
}

TEST_CASE("symmetric GMEMS matches thermal-loss evolution of a squeezed state") {
  // pure-loss evolution of a two-mode squeezed state is a symmetric
  // squeezed thermal state, i.e. a GMEMS at its own purities
  const Mat tms = two_mode_squeezed_cm(0.9);
  const double g2 = std::exp(-0.8);
  Mat evolved = g2 * tms + (1.0 - g2) * Mat::Identity(4, 4);
  const auto sf = to_standard_form(evolved).sf;
  const auto gmems = make_extremal(ExtremalKind::GMEMS, 1.0 / sf.a, 1.0 / sf.b,
                                   sf.mu());
  CHECK(sf.c_plus == doctest::Approx(gmems.c_plus).epsilon(1e-8));
  CHECK(sf.c_minus == doctest::Approx(gmems.c_minus).epsilon(1e-8));
}

TEST_CASE("purity classification matches Table 1") {
  CHECK(classify_by_purities(0.6, 0.7, 0.3) == PurityClass::Unphysical);
  CHECK(classify_by_purities(0.6, 0.7, 0.99) == PurityClass::Unphysical);
  // mu <= mu1 mu2 / (mu1 + mu2 - mu1 mu2) -> separable
  const double sep = 0.6 * 0.7 / (0.6 + 0.7 - 0.42);
  CHECK(classify_by_purities(0.6, 0.7, sep - 1e-6) == PurityClass::Separable);
  const double ent = 0.6 * 0.7 / std::sqrt(0.36 + 0.49 - 0.36 * 0.49);
  CHECK(classify_by_purities(0.6, 0.7, ent + 1e-6) == PurityClass::Entangled);
  CHECK(classify_by_purities(0.6, 0.7, 0.5 * (sep + ent)) ==
        PurityClass::Coexistence);
}

TEST_CASE("negativity bounds bracket sampled states at fixed purities") {
  StateSampler sampler(11);
  for (int trial = 0; trial < 40; ++trial) {
    const double s = sampler.uniform(1.1, 3.0);
    const double d = sampler.uniform(-(s - 1.0), s - 1.0);
    const double g_lo = 2.0 * std::abs(d) + 1.0;
    const double g_hi = 2.0 * s - 1.0;  // GMEMS entangled bound
    if (g_hi <= g_lo) continue;
    const double g = sampler.uniform(g_lo + 1e-6, g_hi - 1e-6);
    const double mu1 = 1.0 / (s + d), mu2 = 1.0 / (s - d), mu = 1.0 / g;
    const auto bounds = negativity_bounds(mu1, mu2, mu);
    // sample lambda across the class
    for (double lambda : {-1.0, -0.4, 0.2, 1.0}) {
      const auto sf = from_gem_params({s, d, g, lambda});
      const double en = log_negativity(sf);
      CHECK(en <= bounds.en_max + 1e-8);
      CHECK(en >= bounds.en_min - 1e-8);
    }
    // the ends saturate
    CHECK(log_negativity(from_gem_params({s, d, g, 1.0})) ==
          doctest::Approx(bounds.en_max).epsilon(1e-7));
    CHECK(log_negativity(from_gem_params({s, d, g, -1.0})) ==
          doctest::Approx(bounds.en_min).epsilon(1e-7));
  }
}

TEST_CASE("gem parametrization reproduces GMEMS and GLEMS") {
  const double s = 2.0, d = 0.5, g = 2.4;
  const auto gm = from_gem_params({s, d, g, 1.0});
  const auto gmems =
      make_extremal(ExtremalKind::GMEMS, 1.0 / (s + d), 1.0 / (s - d), 1.0 / g);
  CHECK(gm.c_plus == doctest::Approx(gmems.c_plus).epsilon(1e-9));
  CHECK(gm.c_minus == doctest::Approx(gmems.c_minus).epsilon(1e-9));
  const auto gl = from_gem_params({s, d, g, -1.0});
  const auto glems =
      make_extremal(ExtremalKind::GLEMS, 1.0 / (s + d), 1.0 / (s - d), 1.0 / g);
  CHECK(gl.c_plus == doctest::Approx(glems.c_plus).epsilon(1e-9));
  CHECK(gl.c_minus == doctest::Approx(glems.c_minus).epsilon(1e-9));
}

namespace {

// independent brute-force oracle for the Gaussian EM: with the state in
// standard form, pure candidates are Gamma + Gamma^{-1} in qq/pp blocks;
// minimize Gamma_11 (Gamma^{-1})_11 under gamma_p^{-1} <= Gamma <= gamma_q
double brute_force_m2(const StandardForm& sf, std::mt19937_64& rng) {
  Eigen::Matrix2d gq, gp;
  gq << sf.a, sf.c_plus, sf.c_plus, sf.b;
  gp << sf.a, sf.c_minus, sf.c_minus, sf.b;
  const Eigen::Matrix2d gpi = gp.inverse();
  auto feasible = [&](const Eigen::Matrix2d& gamma) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> e1(gq - gamma);
    if (e1.eigenvalues().minCoeff() < -1e-11) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> e2(gamma - gpi);
    return e2.eigenvalues().minCoeff() >= -1e-11;
  };
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double best = sf.a * sf.b;  // the pure-state value bounds it
  Eigen::Matrix2d cur = gpi;
  // walk on the feasible set starting from the lower cone tip
  double step = 0.3;
  for (int it = 0; it < 40000; ++it) {
    Eigen::Matrix2d trial = cur;
    trial(0, 0) += step * (uni(rng) - 0.5);
    trial(1, 1) += step * (uni(rng) - 0.5);
    trial(0, 1) += step * (uni(rng) - 0.5);
    trial(1, 0) = trial(0, 1);
    if (!feasible(trial) || trial.determinant() <= 1e-12) continue;
    const double m2 = trial(0, 0) * trial.inverse()(0, 0);
    if (m2 < best) {
      best = m2;
      cur = trial;
    }
    if (it % 5000 == 4999) step *= 0.6;
  }
  return best;
}

}  // namespace

TEST_CASE("gaussian EM: numeric minimization against the brute-force oracle") {
  StateSampler sampler(13);
  std::mt19937_64 rng(99);
  int compared = 0;
  while (compared < 8) {
    const Mat sigma = sampler.random_physical_cm(2, 2.0);
    const auto sf = to_standard_form(sigma).sf;
    if (tilde_nu_minus(sf) > 0.97 || sf.symmetric(1e-3)) continue;
    ++compared;
    const auto em = gaussian_em(sf);
    const double brute = brute_force_m2(sf, rng);
    // the random walk gives an upper bound that should approach m2_opt
    CHECK(em.m_opt * em.m_opt <= brute + 1e-6);
    CHECK(brute - em.m_opt * em.m_opt < 2e-3);
  }
}

TEST_CASE("gaussian EM closed forms vs numeric minimization (GLEMS 720-grid + golden oracle)") {
  StateSampler sampler(17);
  double worst = 0.0;
  for (int trial = 0; trial < 250; ++trial) {
    const double s = sampler.uniform(1.05, 4.0);
    const double d = sampler.uniform(-(s - 1.0) * 0.999, (s - 1.0) * 0.999);
    const double g_lo = 2.0 * std::abs(d) + 1.0;
    const double g_glems = std::sqrt(2.0 * (s * s + d * d) - 1.0);
    const double g_gmems = 2.0 * s - 1.0;
    if (g_glems > g_lo + 1e-5) {
      const double g = sampler.uniform(g_lo + 1e-6, g_glems - 1e-6);
      const auto sf = from_gem_params({s, d, g, -1.0});
      const auto em = gaussian_em(sf);
      worst = std::max(worst,
                       std::abs(em.m_opt * em.m_opt - m2_opt_glems(s, d, g)));
    }
    if (g_gmems > g_lo + 1e-5) {
      const double g = sampler.uniform(g_lo + 1e-6, g_gmems - 1e-6);
      const auto sf = from_gem_params({s, d, g, 1.0});
      const auto em = gaussian_em(sf);
      worst = std::max(worst,
                       std::abs(em.m_opt * em.m_opt - m2_opt_gmems(s, d, g)));
    }
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("gaussian EM special values") {
  // separable -> m = 1
  StandardForm sep;
  sep.a = 1.5;
  sep.b = 1.1;
  CHECK(gaussian_em(sep).m_opt == doctest::Approx(1.0));
  // symmetric states: G_EoF equals the true EoF
  for (double r : {0.4, 1.1}) {
    const auto sf = to_standard_form(two_mode_squeezed_cm(r)).sf;
    const auto em = gaussian_em(sf);
    CHECK(em.g_eof == doctest::Approx(eof_symmetric(sf)).epsilon(1e-9));
  }
  // GMEMMS limit s -> infinity: m_max = 1 / nu~-
  const double s = 4e4, d = 1.2;
  const auto memms = make_extremal(ExtremalKind::GMEMMS, 1.0 / (s + d),
                                   1.0 / (s - d));
  const double nt = tilde_nu_minus(memms);
  const auto em = gaussian_em(memms);
  CHECK(em.m_opt == doctest::Approx(1.0 / nt).epsilon(1e-4));
}

TEST_CASE("EM vs negativity bounds: lower asserted, upper only counted") {
  StateSampler sampler(19);
  int upper_violations = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Mat sigma = sampler.random_physical_cm(2, 2.0);
    const auto sf = to_standard_form(sigma).sf;
    const double nt = tilde_nu_minus(sf);
    if (nt >= 1.0 - 1e-9) continue;
    const auto em = gaussian_em(sf);
    const auto bounds = em_vs_negativity_bounds(nt);
    CHECK(em.g_eof >= bounds.lower - 1e-9);
    if (em.g_eof > bounds.upper_conjectured + 1e-9) ++upper_violations;
  }
  // conjectured bound: report, never assert -- but zero is expected
  MESSAGE("conjectured upper-bound violations: ", upper_violations);
  CHECK(upper_violations == 0);
  // symmetric states saturate the lower bound
  const auto sf = to_standard_form(two_mode_squeezed_cm(0.6)).sf;
  const auto em = gaussian_em(sf);
  CHECK(em.g_eof ==
        doctest::Approx(em_vs_negativity_bounds(tilde_nu_minus(sf)).lower)
            .epsilon(1e-9));
}

TEST_CASE("ordering inversion exists below the extremal-ordering surface") {
  // find at least one purity triple where GMEMS beats GLEMS in negativity
  // but loses in the Gaussian EM
  StateSampler sampler(23);
  bool found = false;
  for (int trial = 0; trial < 4000 && !found; ++trial) {
    const double s = sampler.uniform(1.2, 5.0);
    const double d = sampler.uniform(0.0, (s - 1.0) * 0.98);
    const double g_lo = 2.0 * std::abs(d) + 1.0;
    const double g_hi = 2.0 * s - 1.0;
    if (g_hi <= g_lo + 1e-4) continue;
    const double g = sampler.uniform(g_lo + 1e-4, g_hi - 1e-4);
    const double en_gm = log_negativity(from_gem_params({s, d, g, 1.0}));
    const double en_gl = log_negativity(from_gem_params({s, d, g, -1.0}));
    if (en_gm <= en_gl) continue;
    const double m2_gm = m2_opt_gmems(s, d, g);
    const double m2_gl = m2_opt_glems(s, d, g);
    if (m2_gm < m2_gl - 1e-9) found = true;
  }
  CHECK(found);
}

TEST_CASE("nodal surface of the generalized-entropy inversion") {
  const double tip = std::sqrt(3.0) / 2.0;
  for (int p : {3, 4}) {
    const auto mu_k = nodal_surface(p, tip, tip);
    REQUIRE(mu_k.has_value());
    CHECK(*mu_k == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK_FALSE(nodal_surface(3, 0.9, 0.9).has_value());
  // mu1 = mu2 = 0.5, p = 3: direct evaluation of the closed form
  const auto mu_k = nodal_surface(3, 0.5, 0.5);
  REQUIRE(mu_k.has_value());
  CHECK(*mu_k == doctest::Approx(std::sqrt(6.0 / 22.0)).epsilon(1e-12));
  // equal-negativity cross-check: GMEMS at matched S_p vs GLEMS on the node
  const double mu1 = 0.5, mu2 = 0.5, p = 3.0;
  const auto glems = make_extremal(ExtremalKind::GLEMS, mu1, mu2, *mu_k);
  const double sp_target = generalized_entropy(glems.cm(), p);
  // scalar root-find for the GMEMS global purity matching S_p
  double lo = mu1 * mu2 + 1e-9;
  double hi = mu1 * mu2 / (mu1 * mu2 + std::abs(mu1 - mu2)) - 1e-12;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto cand = make_extremal(ExtremalKind::GMEMS, mu1, mu2, mid);
    (generalized_entropy(cand.cm(), p) > sp_target ? lo : hi) = mid;
  }
  const auto gmems = make_extremal(ExtremalKind::GMEMS, mu1, mu2,
                                   0.5 * (lo + hi));
  CHECK(log_negativity(gmems) ==
        doctest::Approx(log_negativity(glems)).epsilon(1e-6));
}

TEST_CASE("m2_theta stays above one on the physical branch") {
  StateSampler sampler(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat sigma = sampler.random_physical_cm(2, 2.0);
    const auto sf = to_standard_form(sigma).sf;
    if (tilde_nu_minus(sf) >= 1.0 - 1e-9 || sf.symmetric(1e-6)) continue;
    for (double theta : {0.0, 1.0, 2.0, 3.14, 4.5, 6.0}) {
      const double m2 = m2_theta(sf, theta);
      if (std::isfinite(m2)) CHECK(m2 >= 1.0);
    }
  }
}
