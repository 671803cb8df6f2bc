#ifndef GCV_PROTOCOLS_HPP
#define GCV_PROTOCOLS_HPP

#include "gcv/core.hpp"

// Teleportation, teleportation networks and telecloning: fidelities,
// optimal gains and biases, operational entanglement measures.
namespace gcv::protocols {

constexpr double kClassicalFidelity = 0.5;

struct TeleportSetup {
  Mat input;        // CM of the unknown input state (identity = coherent)
  Mat resource;     // CM holding sender and receiver modes
  int sender = 0;
  int receiver = 1;
};

// F = 2 / sqrt(det Sigma), Sigma = 2 sigma_in + xi a xi + b + xi e + e^T xi.
double fidelity(const TeleportSetup& setup);
// Convenience: teleport coherent states through a two-mode resource.
double fidelity_coherent(const Mat& resource, int sender = 0, int receiver = 1);

struct TwoPartyOptimal {
  double d_opt;    // squeezing bias (r1 - r2)/2
  double f_opt;    // 1 / (1 + nu~-)
  double nu_tilde; // sqrt(n1 n2) e^{-2 rbar}
};
TwoPartyOptimal optimal_two_party(double n1, double n2, double rbar);

// Symmetric N-mode resource built from one momentum-squeezed and N-1
// position-squeezed thermal modes through the N-splitter.
Mat network_resource(int n_parties, double n1, double n2, double r1, double r2);

struct NetworkOptimal {
  double g_opt;
  double d_opt;
  double f_opt;
  double nu_tilde_n;   // generalized symplectic eigenvalue
  double e_t;          // entanglement of teleportation
  double e_f_loc;      // localizable entanglement of formation
};
NetworkOptimal network_optimal(int n_parties, double n1, double n2,
                               double rbar);

// Fidelity through the variance route at explicit gain/bias; used to
// cross-check the closed forms.
double network_fidelity_variance_route(int n_parties, double n1, double n2,
                                       double rbar, double d, double gain);

// Rejects resources that are not fully symmetric: the closed network
// formulas do not hold for nonsymmetric states.
NetworkOptimal network_optimal_from_resource(const Mat& resource_fs,
                                             double tol = 1e-9);

struct GhzwVariants {
  double f2_red;  // two-party fidelity after discarding one mode
  double f2_uni;  // two-party fidelity after unitary localization
};
GhzwVariants ghzw_two_party_variants(double rbar);

// 1 -> 2 telecloning. Symmetric uses the basset hound resource (optimum
// F = 2/3 at a = 3); asymmetric uses pure three-mode resources with
// a2 = 1 + (a-1) t, a3 = a - a2 + 1.
double telecloning_symmetric(double a);
struct AsymTelecloning {
  double f_bob;
  double f_claire;
};
AsymTelecloning telecloning_asymmetric(double a, double t);
// feasibility window for F_bob >= 2/3 while F_claire >= 1/2
bool asym_window(double a, double* t_lo = nullptr, double* t_hi = nullptr);

// E_T <-> residual contangle equivalence for pure GHZ/W resources.
double residual_contangle_from_et(double e_t);

}  // namespace gcv::protocols

#endif
