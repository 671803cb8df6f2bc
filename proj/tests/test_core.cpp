#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

using namespace gcv;
using test::max_abs_diff;

TEST_CASE("symplectic form squares to minus one") {
  for (int n : {1, 2, 5}) {
    const Mat omega = symplectic_form(n);
    CHECK(max_abs_diff(omega * omega, -Mat::Identity(2 * n, 2 * n)) == 0.0);
    CHECK(max_abs_diff(omega, -omega.transpose()) == 0.0);
  }
}

TEST_CASE("physicality of vacuum, sub-vacuum and squeezed states") {
  CHECK(check_physical(Mat::Identity(6, 6)).ok);
  CHECK_FALSE(check_physical(0.5 * Mat::Identity(2, 2)).ok);
  for (double r : {0.0, 0.3, 2.0})
    CHECK(check_physical(two_mode_squeezed_cm(r)).ok);
  CHECK_THROWS_AS(check_physical(symplectic_form(1)), std::invalid_argument);
}

TEST_CASE("symplectic spectrum basics") {
  const Vec vac = symplectic_spectrum(Mat::Identity(8, 8));
  for (int i = 0; i < 4; ++i) CHECK(vac[i] == doctest::Approx(1.0));
  Vec nu(1);
  nu << 3.7;
  CHECK(symplectic_spectrum(thermal_cm(nu))[0] == doctest::Approx(3.7));
  // product of nu^2 equals det sigma
  StateSampler sampler(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat sigma = sampler.random_physical_cm(4, 3.0);
    const Vec spec = symplectic_spectrum(sigma);
    double prod = 1.0;
    for (int i = 0; i < spec.size(); ++i) prod *= spec[i] * spec[i];
    CHECK(prod == doctest::Approx(sigma.determinant()).epsilon(1e-8));
  }
}

TEST_CASE("williamson reconstruction oracle on random states") {
  StateSampler sampler(7);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const Mat sigma = sampler.random_physical_cm(n, 2.5);
      const auto w = williamson(sigma);
      CHECK(check_symplectic(w.S, 1e-7).ok);
      Vec nu2(2 * n);
      for (int k = 0; k < n; ++k) nu2[2 * k] = nu2[2 * k + 1] = w.nu[k];
      const Mat recon = w.S.transpose() * nu2.asDiagonal() * w.S;
      CHECK(max_abs_diff(recon, sigma) <=
            kEpsRecon * sigma.cwiseAbs().maxCoeff());
      // spectrum matches the eigenvalue route
      const Vec direct = symplectic_spectrum(sigma);
      for (int k = 0; k < n; ++k)
        CHECK(w.nu[k] == doctest::Approx(direct[k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("williamson on thermal and two-mode squeezed states") {
  Vec nu(1);
  nu << 2.0;
  const auto w = williamson(thermal_cm(nu));
  CHECK(w.nu[0] == doctest::Approx(2.0));
  const auto w2 = williamson(two_mode_squeezed_cm(0.8));
  CHECK(w2.nu[0] == doctest::Approx(1.0));
  CHECK(w2.nu[1] == doctest::Approx(1.0));
}

TEST_CASE("euler decomposition reconstructs and orders z >= 1") {
  StateSampler sampler(11);
  for (int n : {1, 2, 4}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Mat s = sampler.random_symplectic(n);
      const auto e = euler_decompose(s);
      CHECK(check_symplectic(e.O_left).ok);
      CHECK(check_symplectic(e.O_right).ok);
      CHECK(max_abs_diff(e.O_left * e.O_left.transpose(),
                         Mat::Identity(2 * n, 2 * n)) < 1e-9);
      CHECK(max_abs_diff(e.O_right * e.O_right.transpose(),
                         Mat::Identity(2 * n, 2 * n)) < 1e-9);
      for (double z : e.z) CHECK(z >= 1.0 - 1e-10);
      CHECK(max_abs_diff(e.O_left * e.Z * e.O_right, s) <= 1e-8);
    }
  }
  // single-mode squeezer: Z carries e^r, orthogonal parts trivial up to sign
  Mat sq(2, 2);
  sq << std::exp(0.9), 0, 0, std::exp(-0.9);
  const auto e = euler_decompose(sq);
  CHECK(e.z[0] == doctest::Approx(std::exp(0.9)));
  // orthogonal symplectic input -> Z = 1
  const Mat o = StateSampler(3).random_orthogonal_symplectic(3);
  const auto eo = euler_decompose(o);
  for (double z : eo.z) CHECK(z == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS(euler_decompose(2.0 * Mat::Identity(4, 4)));
}

TEST_CASE("partial trace picks factors and keeps physicality") {
  Vec nu(2);
  nu << 1.5, 2.5;
  const Mat prod = thermal_cm(nu);
  CHECK(partial_trace(prod, {1})(0, 0) == doctest::Approx(2.5));
  const Mat tms = two_mode_squeezed_cm(0.6);
  const Mat red = partial_trace(tms, {0});
  CHECK(red(0, 0) == doctest::Approx(std::cosh(1.2)));
  CHECK(red(0, 1) == doctest::Approx(0.0));
  StateSampler sampler(5);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat sigma = sampler.random_physical_cm(4);
    CHECK(check_physical(partial_trace(sigma, {0, 2})).ok);
  }
}

TEST_CASE("pure three-mode marginals satisfy det sigma_ij = det sigma_k") {
  StateSampler sampler(19);
  const Mat sigma = sampler.random_pure_cm(3);
  for (int k = 0; k < 3; ++k) {
    std::vector<int> pair;
    for (int m = 0; m < 3; ++m)
      if (m != k) pair.push_back(m);
    CHECK(partial_trace(sigma, pair).determinant() ==
          doctest::Approx(partial_trace(sigma, {k}).determinant())
              .epsilon(1e-8));
  }
}

TEST_CASE("partial transpose arithmetic on the two-mode squeezed state") {
  for (double r : {0.2, 0.9, 1.7}) {
    const Vec nt = nu_tilde_spectrum(two_mode_squeezed_cm(r), {0});
    CHECK(nt[0] == doctest::Approx(std::exp(-2.0 * r)).epsilon(1e-10));
    CHECK(nt[1] == doctest::Approx(std::exp(2.0 * r)).epsilon(1e-10));
  }
  // separable product state stays physical after transposition
  Vec nu(2);
  nu << 1.3, 1.9;
  CHECK(nu_tilde_min(thermal_cm(nu), {0}) >= 1.0);
}

TEST_CASE("at most min(Na, Nb) tilde eigenvalues drop below one") {
  StateSampler sampler(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat sigma = sampler.random_pure_cm(3);
    const Vec nt = nu_tilde_spectrum(sigma, {0});
    int below = 0;
    for (int i = 0; i < nt.size(); ++i)
      if (nt[i] < 1.0 - 1e-9) ++below;
    CHECK(below <= 1);
  }
}

TEST_CASE("purity and entropies") {
  CHECK(purity(Mat::Identity(4, 4)) == doctest::Approx(1.0));
  CHECK(von_neumann_entropy(Mat::Identity(4, 4)) == doctest::Approx(0.0));
  Vec nu(1);
  nu << 2.0;
  const Mat th = thermal_cm(nu);
  CHECK(purity(th) == doctest::Approx(0.5));
  // S_L = 1 - mu for single modes
  CHECK(generalized_entropy(th, 2.0) == doctest::Approx(0.5).epsilon(1e-10));
  // reduced mode of a two-mode squeezed state: S_V = f(cosh 2s), frozen
  const Mat red = partial_trace(two_mode_squeezed_cm(1.0), {0});
  CHECK(von_neumann_entropy(red) ==
        doctest::Approx(1.6198220928977023).epsilon(1e-12));
  // S_p decreases with p at fixed state
  StateSampler sampler(31);
  const Mat sigma = sampler.random_physical_cm(2, 2.0);
  double prev = 1e9;
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const double sp = generalized_entropy(sigma, p);
    CHECK(sp <= prev + 1e-12);
    prev = sp;
  }
}

TEST_CASE("mutual information") {
  Vec nu(2);
  nu << 1.7, 1.2;
  CHECK(mutual_information(thermal_cm(nu), {0}) ==
        doctest::Approx(0.0).epsilon(1e-10));
  const Mat tms = two_mode_squeezed_cm(0.8);
  CHECK(mutual_information(tms, {0}) ==
        doctest::Approx(2.0 * von_neumann_entropy(partial_trace(tms, {0})))
            .epsilon(1e-9));
  StateSampler sampler(13);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(mutual_information(sampler.random_physical_cm(3), {0, 1}) >= -1e-9);
}

TEST_CASE("entropy extremes") {
  const auto pure = entropy_extremes(1.0, 3, 1.5);
  CHECK(pure.s_min == doctest::Approx(0.0));
  CHECK(pure.s_max == doctest::Approx(0.0));
  const auto lin = entropy_extremes(0.4, 2, 2.0);
  CHECK(lin.s_min == doctest::Approx(0.6));
  CHECK(lin.s_max == doctest::Approx(0.6));
  const auto vn = entropy_extremes(0.5, 2, 1.0);
  CHECK(vn.s_min == doctest::Approx(entropy_function_f(2.0)));
  CHECK(vn.s_max ==
        doctest::Approx(2.0 * entropy_function_f(std::pow(0.5, -0.5))));
  // p > 2 swaps the roles
  const auto p3 = entropy_extremes(0.5, 2, 3.0);
  const auto p15 = entropy_extremes(0.5, 2, 1.5);
  CHECK(p3.s_min <= p3.s_max);
  CHECK(p15.s_min <= p15.s_max);
}

TEST_CASE("phase-space schmidt of pure states") {
  // product of vacua
  const auto vac = phase_space_schmidt(Mat::Identity(8, 8), {0, 1});
  for (double r : vac.r) CHECK(r == doctest::Approx(0.0));
  // two-mode squeezed state across 1|1
  const auto one = phase_space_schmidt(two_mode_squeezed_cm(0.7), {0});
  CHECK(one.r.size() == 1);
  CHECK(one.r[0] == doctest::Approx(0.7).epsilon(1e-9));
  // random pure 4-mode state, 2|2 split: local symplectics map the state to
  // the schmidt form (reconstruction oracle)
  StateSampler sampler(3);
  const Mat sigma = sampler.random_pure_cm(4);
  const auto sm = phase_space_schmidt(sigma, {0, 1});
  const auto wa = williamson(partial_trace(sigma, {0, 1}));
  const auto wb = williamson(partial_trace(sigma, {2, 3}));
  Mat local = Mat::Zero(8, 8);
  local.topLeftCorner(4, 4) = wa.S.inverse().transpose();
  local.bottomRightCorner(4, 4) = wb.S.inverse().transpose();
  Mat mapped = local * sigma * local.transpose();
  // same non-unit spectra on both sides, pairwise cross blocks only
  for (int k = 0; k < 2; ++k) {
    CHECK(mapped(2 * k, 2 * k) ==
          doctest::Approx(std::cosh(2.0 * sm.r[1 - k])).epsilon(1e-7));
    CHECK(mapped(4 + 2 * k, 4 + 2 * k) ==
          doctest::Approx(mapped(2 * k, 2 * k)).epsilon(1e-7));
    // cross block determinant = 1 - cosh^2 = -sinh^2
    const double sh2 = mapped.block<2, 2>(2 * k, 4 + 2 * k).determinant();
    CHECK(sh2 == doctest::Approx(1.0 - std::pow(mapped(2 * k, 2 * k), 2))
                     .epsilon(1e-6));
  }
  // off-pair cross blocks vanish
  CHECK(mapped.block<2, 2>(0, 6).cwiseAbs().maxCoeff() < 1e-7);
  CHECK(mapped.block<2, 2>(2, 4).cwiseAbs().maxCoeff() < 1e-7);
  CHECK_THROWS(phase_space_schmidt(2.0 * Mat::Identity(4, 4), {0}));
}

TEST_CASE("pure state conditions and dof counting") {
  CHECK(pure_state_conditions(Mat::Identity(6, 6)).ok);
  CHECK(pure_state_conditions(two_mode_squeezed_cm(1.2)).ok);
  Vec nu(1);
  nu << 1.4;
  CHECK_FALSE(pure_state_conditions(thermal_cm(nu)).ok);
  StateSampler sampler(17);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(pure_state_conditions(sampler.random_pure_cm(4), 1e-7).ok);

  CHECK(dof_count(1) == 0);
  CHECK(dof_count(2) == 1);
  CHECK(dof_count(3) == 3);
  CHECK(dof_count(4) == 8);
  CHECK(dof_count(4, true) == 6);
  CHECK(dof_count(10) == 80);
}

TEST_CASE("local symplectics preserve spectra and sub-block determinants") {
  StateSampler sampler(29);
  const Mat sigma = sampler.random_physical_cm(3, 2.0);
  Mat local = Mat::Zero(6, 6);
  for (int k = 0; k < 3; ++k)
    local.block<2, 2>(2 * k, 2 * k) = sampler.random_symplectic(1);
  const Mat moved = local * sigma * local.transpose();
  const Vec s0 = symplectic_spectrum(sigma);
  const Vec s1 = symplectic_spectrum(moved);
  for (int k = 0; k < 3; ++k) {
    CHECK(s1[k] == doctest::Approx(s0[k]).epsilon(1e-9));
    CHECK(moved.block<2, 2>(2 * k, 2 * k).determinant() ==
          doctest::Approx(sigma.block<2, 2>(2 * k, 2 * k).determinant())
              .epsilon(1e-9));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(moved.block<2, 2>(2 * i, 2 * j).determinant() ==
            doctest::Approx(sigma.block<2, 2>(2 * i, 2 * j).determinant())
                .epsilon(1e-9));
}

TEST_CASE("reorder round trip") {
  StateSampler sampler(37);
  const Mat sigma = sampler.random_physical_cm(3);
  CHECK(max_abs_diff(reorder_to_qpqp(reorder_to_qqpp(sigma)), sigma) == 0.0);
}

TEST_CASE("homodyne conditioning keeps states physical") {
  StateSampler sampler(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat sigma = sampler.random_physical_cm(3);
    CHECK(check_physical(homodyne_condition(sigma, 2, Quadrature::Q), 1e-7).ok);
    CHECK(check_physical(homodyne_condition(sigma, 1, Quadrature::P), 1e-7).ok);
  }
}
