#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

#include "gcv/optics.hpp"

using namespace gcv;
using namespace gcv::optics;
using test::max_abs_diff;

TEST_CASE("every gate is symplectic with unit determinant") {
  std::vector<GateDescriptor> gates = {
      BeamSplitter{0, 2, 0.3},      TwoModeSqueezer{1, 2, 0.8},
      SingleModeSqueezer{1, -0.5},  Rotation{0, 1.1},
      Seraphique{0, 1, 0.7},        TwinBeam{1, 2, 0.4}};
  for (const auto& g : gates) {
    const Mat s = gate_matrix(g, 3);
    CHECK(check_symplectic(s, kEpsSym).ok);
    CHECK(std::abs(s.determinant() - 1.0) < 1e-9);
  }
  CHECK_THROWS(gate_matrix(BeamSplitter{0, 0, 0.5}, 3));
  CHECK_THROWS(gate_matrix(BeamSplitter{0, 5, 0.5}, 3));
}

TEST_CASE("beam splitter limits and orthogonality") {
  const Mat full = gate_matrix(BeamSplitter{0, 1, 1.0}, 2);
  Mat expect = Mat::Identity(4, 4);
  expect(2, 2) = expect(3, 3) = -1.0;
  CHECK(max_abs_diff(full, expect) < 1e-12);
  for (double tau : {0.0, 0.25, 0.5, 0.9}) {
    const Mat b = gate_matrix(BeamSplitter{0, 1, tau}, 2);
    CHECK(max_abs_diff(b * b.transpose(), Mat::Identity(4, 4)) < 1e-12);
  }
  // squeezers are symmetric positive definite
  const Mat sq = gate_matrix(TwoModeSqueezer{0, 1, 0.7}, 2);
  CHECK(is_symmetric(sq));
  CHECK(Eigen::SelfAdjointEigenSolver<Mat>(sq).eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("two-mode squeezer at r = 0 is the identity") {
  CHECK(max_abs_diff(gate_matrix(TwoModeSqueezer{0, 1, 0.0}, 2),
                     Mat::Identity(4, 4)) == 0.0);
}

TEST_CASE("seraphique is the beam splitter conjugated by a pi/2 rotation") {
  // with the (bbs) sign pattern and our rotation convention the relation
  // reads C = P B P, the transposition being absorbed by the conventions
  const double tau = 0.37;
  const Mat c = gate_matrix(Seraphique{0, 1, tau}, 2);
  const Mat p = gate_matrix(Rotation{1, M_PI / 2.0}, 2);
  const Mat b = gate_matrix(BeamSplitter{0, 1, tau}, 2);
  CHECK(max_abs_diff(c, p * b * p) < 1e-12);
}

TEST_CASE("twin beam box gives the two-mode squeezed state exactly") {
  for (double r : {0.0, 0.5, 1.3}) {
    const Mat t = gate_matrix(TwinBeam{0, 1, r}, 2);
    CHECK(max_abs_diff(t * t.transpose(), two_mode_squeezed_cm(r)) < 1e-12);
  }
}

TEST_CASE("apply preserves purity and physicality; rotations fix the vacuum") {
  const Mat vac = Mat::Identity(4, 4);
  CHECK(max_abs_diff(apply(vac, Rotation{0, 0.9}), vac) < 1e-14);
  StateSampler sampler(2);
  const Mat sigma = sampler.random_physical_cm(2);
  const Mat out = optics::apply(sigma, TwoModeSqueezer{0, 1, 0.6});
  CHECK(check_physical(out).ok);
  CHECK(purity(out) == doctest::Approx(purity(sigma)).epsilon(1e-9));
  // passive gates preserve the trace
  const Mat rot = optics::apply(sigma, BeamSplitter{0, 1, 0.3});
  CHECK(rot.trace() == doctest::Approx(sigma.trace()).epsilon(1e-12));
}

TEST_CASE("recipe application order matches the matrix composition") {
  CircuitRecipe recipe{SingleModeSqueezer{0, 0.4}, BeamSplitter{0, 1, 0.5},
                       Rotation{1, 0.3}};
  const Mat direct = optics::apply(Mat::Identity(4, 4), recipe);
  const Mat s = recipe_matrix(recipe, 2);
  CHECK(max_abs_diff(direct, s * s.transpose()) < 1e-12);
}

TEST_CASE("tritter reduces to the balanced beam splitter at N = 2") {
  CHECK(max_abs_diff(tritter(2), gate_matrix(BeamSplitter{0, 1, 0.5}, 2)) <
        1e-12);
  for (int n : {3, 4, 6}) {
    const Mat t = tritter(n);
    CHECK(check_symplectic(t).ok);
    CHECK(max_abs_diff(t * t.transpose(), Mat::Identity(2 * n, 2 * n)) < 1e-12);
    // the first input mode spreads with equal weight 1/sqrt(N) over all
    // output modes
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(t(2 * j, 0)) ==
            doctest::Approx(1.0 / std::sqrt(n)).epsilon(1e-12));
  }
}

TEST_CASE("thermal loss channel endpoints and physicality") {
  const Mat sigma0 = two_mode_squeezed_cm(0.8);
  const ThermalChannel ch{{1.0, 1.0}, {0.5, 0.5}};
  CHECK(max_abs_diff(thermal_loss_evolve(sigma0, ch, 0.0), sigma0) < 1e-12);
  const Mat late = thermal_loss_evolve(sigma0, ch, 60.0);
  Vec inf(2);
  inf << 2.0, 2.0;
  CHECK(max_abs_diff(late, thermal_cm(inf)) < 1e-10);
  for (double t : {0.1, 0.7, 2.0})
    CHECK(check_physical(thermal_loss_evolve(sigma0, ch, t)).ok);
}

TEST_CASE("disentanglement time: finite for thermal baths, infinite for loss") {
  const Mat sigma0 = two_mode_squeezed_cm(1.0);
  const ThermalChannel noisy{{1.0, 1.0}, {0.8, 0.8}};
  const auto t_dis = disentanglement_time(sigma0, noisy);
  REQUIRE(t_dis.has_value());
  const double eps = 1e-5;
  CHECK(nu_tilde_min(thermal_loss_evolve(sigma0, noisy, *t_dis - eps), {0}) <
        1.0);
  CHECK(nu_tilde_min(thermal_loss_evolve(sigma0, noisy, *t_dis + eps), {0}) >=
        1.0);
  const ThermalChannel lossy{{1.0, 1.0}, {0.0, 0.0}};
  CHECK_FALSE(disentanglement_time(sigma0, lossy).has_value());
}

TEST_CASE("equal-noise channels commute with orthogonal symplectics") {
  StateSampler sampler(9);
  const Mat sigma = sampler.random_physical_cm(3);
  const Mat o = sampler.random_orthogonal_symplectic(3);
  const ThermalChannel ch{{0.7, 0.7, 0.7}, {0.4, 0.4, 0.4}};
  const Mat lhs = thermal_loss_evolve(o * sigma * o.transpose(), ch, 0.9);
  const Mat rhs = o * thermal_loss_evolve(sigma, ch, 0.9) * o.transpose();
  CHECK(max_abs_diff(lhs, rhs) < 1e-9);
}
