#ifndef GCV_OPTICS_HPP
#define GCV_OPTICS_HPP

#include <variant>
#include <vector>

#include "gcv/core.hpp"

// Symplectic representations of the optical gates used by the engineering
// recipes, plus the thermal-loss channel.
namespace gcv::optics {

struct BeamSplitter {
  int i, j;
  double tau;  // transmittivity in [0, 1]
};
struct TwoModeSqueezer {
  int i, j;
  double r;
};
struct SingleModeSqueezer {
  int i;
  double r;
};
struct Rotation {
  int i;
  double theta;
};
// counter-beam-splitter C = P_j^T B P_j with P_j the pi/2 rotation on mode j
struct Seraphique {
  int i, j;
  double tau;
};
// twin-beam box T = B(1/2) (S_i(r) + S_j(-r))
struct TwinBeam {
  int i, j;
  double r;
};

using GateDescriptor = std::variant<BeamSplitter, TwoModeSqueezer,
                                    SingleModeSqueezer, Rotation, Seraphique,
                                    TwinBeam>;

using CircuitRecipe = std::vector<GateDescriptor>;

// The gate's 2x2/4x4 block embedded in a 2N x 2N identity.
Mat gate_matrix(const GateDescriptor& g, int n_modes);

Mat apply(const Mat& sigma, const GateDescriptor& g);
// Gates compose in application order: sigma <- S_k ... S_1 sigma S_1^T ... S_k^T.
Mat apply(const Mat& sigma, const CircuitRecipe& recipe);
Mat recipe_matrix(const CircuitRecipe& recipe, int n_modes);

// N-splitter: B_{N-1,N}(tau=1/2) ... B_{1,2}(tau=1/N), rightmost first.
// N = 2 reduces to the balanced beam-splitter.
Mat tritter(int n_modes);

struct ThermalChannel {
  std::vector<double> gamma;  // coupling per mode, > 0
  std::vector<double> nbar;   // mean thermal photons per mode, >= 0
};

// sigma(t) = G_t^2 sigma0 + (1 - G_t^2) sigma_inf with G_t = e^{-gamma t/2}.
Mat thermal_loss_evolve(const Mat& sigma0, const ThermalChannel& ch, double t);

// Time at which a two-mode state crosses nu_tilde = 1 under the channel;
// bisection on gamma*t, empty if it stays entangled forever (nbar = 0).
std::optional<double> disentanglement_time(const Mat& sigma0,
                                           const ThermalChannel& ch,
                                           double t_max = 1e3);

}  // namespace gcv::optics

#endif
