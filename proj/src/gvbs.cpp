#include "gcv/gvbs.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace gcv::gvbs {

Mat building_block_cm(const BuildingBlock& b) {
  const double x = b.x, s = b.s;
  if (x < 1.0 || s < BuildingBlock::s_min(x) - 1e-12)
    throw std::invalid_argument("building block: need x >= 1, s >= (x+1)/2");
  const double tr = std::sqrt(std::max(
      16.0 * s * s * s * s - 8.0 * (x * x + 1.0) * s * s +
          (x * x - 1.0) * (x * x - 1.0),
      0.0));
  const double tp = (x * x - 1.0 + tr) / (4.0 * s);
  const double tm = (x * x - 1.0 - tr) / (4.0 * s);
  const double ur = 0.25 * std::sqrt((x * x - 1.0) / (s * x));
  const double u1 = std::sqrt(std::max((x - 2.0 * s) * (x - 2.0 * s) - 1.0, 0.0));
  const double u2 = std::sqrt(std::max((x + 2.0 * s) * (x + 2.0 * s) - 1.0, 0.0));
  const double up = ur * (u1 + u2);
  const double um = ur * (u1 - u2);
  Mat g = Mat::Zero(6, 6);
  g.block<2, 2>(0, 0) = s * Mat::Identity(2, 2);
  g.block<2, 2>(2, 2) = s * Mat::Identity(2, 2);
  g.block<2, 2>(4, 4) = x * Mat::Identity(2, 2);
  Mat ess(2, 2), esx(2, 2);
  ess << tp, 0, 0, tm;
  esx << up, 0, 0, um;
  g.block<2, 2>(0, 2) = ess;
  g.block<2, 2>(2, 0) = ess;
  g.block<2, 2>(0, 4) = esx;
  g.block<2, 2>(4, 0) = esx;
  g.block<2, 2>(2, 4) = esx;
  g.block<2, 2>(4, 2) = esx;
  return g;
}

Mat construct(const GvbsSpec& spec) {
  const int n = spec.n_sites;
  if (n < 2) throw std::invalid_argument("gvbs: N >= 2 sites");
  const Mat g = building_block_cm(spec.block);
  // input space: site i owns slots 2i (mode 1) and 2i+1 (mode 2)
  Mat gss = Mat::Zero(4 * n, 4 * n);
  Mat gx = Mat::Zero(2 * n, 2 * n);
  Mat gsx = Mat::Zero(4 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    gss.block<2, 2>(4 * i, 4 * i) = g.block<2, 2>(0, 0);
    gss.block<2, 2>(4 * i + 2, 4 * i + 2) = g.block<2, 2>(2, 2);
    gss.block<2, 2>(4 * i, 4 * i + 2) = g.block<2, 2>(0, 2);
    gss.block<2, 2>(4 * i + 2, 4 * i) = g.block<2, 2>(2, 0);
    gx.block<2, 2>(2 * i, 2 * i) = g.block<2, 2>(4, 4);
    gsx.block<2, 2>(4 * i, 2 * i) = g.block<2, 2>(0, 4);
    gsx.block<2, 2>(4 * i + 2, 2 * i) = g.block<2, 2>(2, 4);
  }
  // bond i pairs the ancilla facing (site i, slot 2) with the one facing
  // (site i+1, slot 1); X is the pairing structure with X^2 = 1
  Mat xpair = Mat::Zero(4 * n, 4 * n);
  Mat z2(2, 2);
  z2 << 1, 0, 0, -1;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const int ma = 2 * i + 1;  // input-space mode index
    const int mb = 2 * j;
    xpair.block<2, 2>(2 * ma, 2 * mb) = z2;
    xpair.block<2, 2>(2 * mb, 2 * ma) = z2;
  }
  if (spec.r_bond) {
    const double c = std::cosh(2.0 * *spec.r_bond);
    const double sh = std::sinh(2.0 * *spec.r_bond);
    const Mat m = gss + c * Mat::Identity(4 * n, 4 * n) + sh * xpair;
    Eigen::LDLT<Mat> solver(m);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("gvbs: singular Gss + theta Gin theta");
    return gx - gsx.transpose() * solver.solve(gsx);
  }
  // ideal EPR bonds: lim M^{-1} = Q (Q^T Gss Q)^{-1} Q^T with Q spanning
  // the -1 eigenspace of the pairing
  Eigen::SelfAdjointEigenSolver<Mat> es(xpair);
  Mat q(4 * n, 2 * n);
  int col = 0;
  for (int i = 0; i < 4 * n; ++i)
    if (es.eigenvalues()[i] < 0.0) q.col(col++) = es.eigenvectors().col(i);
  if (col != 2 * n) throw std::runtime_error("gvbs: pairing rank mismatch");
  const Mat red = q.transpose() * gss * q;
  Eigen::LDLT<Mat> solver(red);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("gvbs: singular reduced input block");
  return gx - gsx.transpose() * q * solver.solve(q.transpose() * gsx);
}

int ring_distance(int i, int j, int n) {
  const int d = std::abs(i - j) % n;
  return std::min(d, n - d);
}

double pair_nu_tilde(const Mat& gvbs_cm, int k) {
  const Mat red = partial_trace(gvbs_cm, {0, k});
  return nu_tilde_min(red, {0});
}

std::vector<double> thresholds(int n_sites, double x,
                               std::optional<double> r_bond, double s_max) {
  std::vector<double> out;
  out.push_back(BuildingBlock::s_min(x));  // s_1 exactly
  for (int k = 2; k <= n_sites / 2; ++k) {
    auto entangled = [&](double s) {
      const Mat cm = construct({n_sites, {x, s}, r_bond});
      return pair_nu_tilde(cm, k) < 1.0;
    };
    double lo = BuildingBlock::s_min(x), hi = s_max;
    if (!entangled(hi)) {
      out.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    for (int it = 0; it < 100 && hi - lo > 1e-10 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      (entangled(mid) ? hi : lo) = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

double short_range_asymptote(int n_sites) {
  const double frac = (n_sites - 2.0) / n_sites;
  return n_sites % 2 == 0 ? frac : std::sqrt(frac);
}

int bond_bound(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("bond_bound: N >= 1");
  if (n_modes == 1) return 0;
  return static_cast<int>((std::sqrt(4.0 * n_modes - 3.0) - 1.0) / 4.0);
}

bool single_bond_sufficient(int n_modes) {
  // one bond per site carries (2M+1)2M/2 = 3 parameters per site
  return 6 >= n_modes - 1;
}

int invariant_parameter_count(int n_modes) {
  return (n_modes - n_modes % 2) / 2;
}

int bond_bound_invariant(int n_modes) {
  const int theta = invariant_parameter_count(n_modes);
  return static_cast<int>((std::sqrt(8.0 * theta + 1.0) - 1.0) / 4.0);
}

optics::CircuitRecipe building_block_recipe(double x, double s) {
  using namespace optics;
  if (x < 1.0 || s < BuildingBlock::s_min(x) - 1e-12)
    throw std::invalid_argument("building_block_recipe: out of range");
  // twin-beam squeezings inverting the standard form (x = cosh 2 r13)
  const double r13 = std::acosh(std::sqrt(0.5 * (x + 1.0)));
  const double inner =
      std::sqrt(std::max(x * (-x * x + 2.0 * x + 4.0 * s * s - 1.0), 0.0)) /
          (4.0 * x) +
      0.5;
  const double r12 = std::acosh(std::sqrt(inner));
  return {TwinBeam{0, 2, r13}, TwinBeam{0, 1, r12}};
}

}  // namespace gcv::gvbs
