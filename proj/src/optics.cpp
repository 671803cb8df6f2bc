#include "gcv/optics.hpp"

#include <cmath>

namespace gcv::optics {

namespace {

void check_pair(int i, int j, int n) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("gate: mode indices must be distinct, in range");
}

void embed2(Mat& s, int i, const Mat& block) {
  s.block<2, 2>(2 * i, 2 * i) = block;
}

void embed4(Mat& s, int i, int j, const Mat& block) {
  s.block<2, 2>(2 * i, 2 * i) = block.block<2, 2>(0, 0);
  s.block<2, 2>(2 * i, 2 * j) = block.block<2, 2>(0, 2);
  s.block<2, 2>(2 * j, 2 * i) = block.block<2, 2>(2, 0);
  s.block<2, 2>(2 * j, 2 * j) = block.block<2, 2>(2, 2);
}

Mat bs_block(double tau) {
  const double a = std::sqrt(tau), b = std::sqrt(1.0 - tau);
  Mat m(4, 4);
  m << a, 0, b, 0,
       0, a, 0, b,
       b, 0, -a, 0,
       0, b, 0, -a;
  return m;
}

Mat tms_block(double r) {
  const double c = std::cosh(r), s = std::sinh(r);
  Mat m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return m;
}

Mat seraphique_block(double tau) {
  const double a = std::sqrt(tau), b = std::sqrt(1.0 - tau);
  Mat m(4, 4);
  m << a, 0, 0, b,
       0, a, -b, 0,
       0, b, a, 0,
       -b, 0, 0, a;
  return m;
}

}  // namespace

Mat gate_matrix(const GateDescriptor& g, int n_modes) {
  Mat s = Mat::Identity(2 * n_modes, 2 * n_modes);
  std::visit(
      [&](auto&& gate) {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, BeamSplitter>) {
          check_pair(gate.i, gate.j, n_modes);
          embed4(s, gate.i, gate.j, bs_block(gate.tau));
        } else if constexpr (std::is_same_v<T, TwoModeSqueezer>) {
          check_pair(gate.i, gate.j, n_modes);
          embed4(s, gate.i, gate.j, tms_block(gate.r));
        } else if constexpr (std::is_same_v<T, SingleModeSqueezer>) {
          if (gate.i < 0 || gate.i >= n_modes)
            throw std::invalid_argument("gate: mode index out of range");
          Mat z(2, 2);
          z << std::exp(gate.r), 0, 0, std::exp(-gate.r);
          embed2(s, gate.i, z);
        } else if constexpr (std::is_same_v<T, Rotation>) {
          Mat rot(2, 2);
          rot << std::cos(gate.theta), std::sin(gate.theta),
                 -std::sin(gate.theta), std::cos(gate.theta);
          embed2(s, gate.i, rot);
        } else if constexpr (std::is_same_v<T, Seraphique>) {
          check_pair(gate.i, gate.j, n_modes);
          embed4(s, gate.i, gate.j, seraphique_block(gate.tau));
        } else if constexpr (std::is_same_v<T, TwinBeam>) {
          check_pair(gate.i, gate.j, n_modes);
          Mat sq(4, 4);
          sq.setZero();
          sq(0, 0) = std::exp(gate.r);
          sq(1, 1) = std::exp(-gate.r);
          sq(2, 2) = std::exp(-gate.r);
          sq(3, 3) = std::exp(gate.r);
          embed4(s, gate.i, gate.j, bs_block(0.5) * sq);
        }
      },
      g);
  return s;
}

Mat apply(const Mat& sigma, const GateDescriptor& g) {
  const Mat s = gate_matrix(g, mode_count(sigma));
  return s * sigma * s.transpose();
}

Mat apply(const Mat& sigma, const CircuitRecipe& recipe) {
  Mat out = sigma;
  for (const auto& g : recipe) out = gcv::optics::apply(out, g);
  return out;
}

Mat recipe_matrix(const CircuitRecipe& recipe, int n_modes) {
  Mat s = Mat::Identity(2 * n_modes, 2 * n_modes);
  for (const auto& g : recipe) s = gate_matrix(g, n_modes) * s;
  return s;
}

Mat tritter(int n_modes) {
  if (n_modes < 2) throw std::invalid_argument("tritter: N >= 2");
  Mat s = Mat::Identity(2 * n_modes, 2 * n_modes);
  // rightmost factor B_{1,2}(tau = 1/N) acts first
  for (int k = n_modes; k >= 2; --k) {
    const int i = n_modes - k;  // 0-based mode pair (i, i+1)
    s = gate_matrix(BeamSplitter{i, i + 1, 1.0 / k}, n_modes) * s;
  }
  return s;
}

Mat thermal_loss_evolve(const Mat& sigma0, const ThermalChannel& ch, double t) {
  const int n = mode_count(sigma0);
  if (static_cast<int>(ch.gamma.size()) != n ||
      static_cast<int>(ch.nbar.size()) != n)
    throw std::invalid_argument("thermal_loss_evolve: channel size mismatch");
  Vec g2(2 * n), inf(2 * n);
  for (int k = 0; k < n; ++k) {
    if (ch.gamma[k] <= 0.0 || ch.nbar[k] < 0.0)
      throw std::invalid_argument("thermal_loss_evolve: need gamma > 0, nbar >= 0");
    const double decay = std::exp(-ch.gamma[k] * t);
    g2[2 * k] = g2[2 * k + 1] = decay;
    inf[2 * k] = inf[2 * k + 1] = 2.0 * ch.nbar[k] + 1.0;
  }
  Mat out = sigma0;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      out(i, j) = std::sqrt(g2[i] * g2[j]) * sigma0(i, j) +
                  (i == j ? (1.0 - g2[i]) * inf[i] : 0.0);
  return out;
}

std::optional<double> disentanglement_time(const Mat& sigma0,
                                           const ThermalChannel& ch,
                                           double t_max) {
  if (mode_count(sigma0) != 2)
    throw std::invalid_argument("disentanglement_time: two-mode input expected");
  auto margin = [&](double t) {
    return nu_tilde_min(thermal_loss_evolve(sigma0, ch, t), {0}) - 1.0;
  };
  if (margin(0.0) >= 0.0) return 0.0;
  // pure-loss channels approach nu~ = 1 from below and never cross it
  if (margin(t_max) <= 1e-9) return std::nullopt;
  double lo = 0.0, hi = t_max;
  while (hi - lo > 1e-9 / ch.gamma[0]) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gcv::optics
