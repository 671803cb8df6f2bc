#ifndef GCV_MULTIMODE_HPP
#define GCV_MULTIMODE_HPP

#include "gcv/core.hpp"
#include "gcv/twomode.hpp"

// Symmetric multimode states, unitary localization, block entanglement,
// contangle / Gaussian tangle and the monogamy machinery.
namespace gcv::multimode {

// g[x] = arcsinh^2 sqrt(x - 1): contangle of a pure pair with m^2 = x.
double contangle_g(double m2);
// w[x] = (sqrt(x-1) + sqrt(x) - 1)^2 / 4: squared negativity counterpart.
double tangle_w(double m2);

struct FullySymmetricParams {
  int n_modes;
  double b;   // local element, >= 1
  double z1;  // standard-form off-diagonal covariances
  double z2;
};

// z1, z2 closing the state to a pure one at given (N, b).
FullySymmetricParams fully_symmetric_pure(int n_modes, double b);
Mat fully_symmetric_cm(const FullySymmetricParams& p);

// {nu_minus x (N-1), nu_plus} of a fully symmetric state.
std::pair<double, double> fully_symmetric_spectrum(
    const FullySymmetricParams& p);

struct Localized {
  Mat sigma_eq;                 // correlated two-mode core
  std::vector<double> thermal;  // symplectic eigenvalues of the decoupled modes
  double residual;              // largest leftover cross correlation
};

// Unitary localization of a bisymmetric state across split_a | rest:
// Williamson on both blocks concentrates all correlations on one pair.
Localized unitary_localize(const Mat& sigma, const std::vector<int>& split_a);

// E_N between mode 0 and modes 1..K of a fully symmetric pure L-mode state.
double block_log_negativity(const FullySymmetricParams& p, int k);
// b -> infinity limit of the above (finite for K < N = L - 1).
double block_log_negativity_limit(int n_rest, int k);

// Pure-state 1 x rest contangle: g[det sigma_probe].
double contangle_pure_1n(const Mat& sigma_pure, int probe);

// Two-mode (mixed) Gaussian contangle / tangle via the Gaussian EM.
double gaussian_contangle(const Mat& sigma_two_mode);
double gaussian_tangle(const Mat& sigma_two_mode);

enum class Measure { Contangle, Tangle };

// E^{probe|rest} - sum_j E^{probe|j} for pure N-mode states.
double monogamy_residual(const Mat& sigma_pure, int probe, Measure measure);

// Genuine tripartite entanglement of a pure three-mode state: minimum over
// probe modes, closed-form procedure (probe = smallest local mixedness).
double residual_contangle_3mode_pure(const Mat& sigma3_pure);

// Same from the local mixednesses directly.
double residual_contangle_3mode_pure(double a1, double a2, double a3);

// Gaussian contangle of the reduced (GLEMS) pair (a | s+d) inside a pure
// three-mode state; the closed-form branch selector of the procedure.
double glems_pair_m(double a, double s, double d);

// Mixed fully symmetric three-mode states: residual via unitary
// localization; 1x1 terms from the symmetric-state closed form.
double residual_contangle_3mode_symmetric(const Mat& sigma3);

struct FourModeReport {
  double g_12;               // = g_34 = 4a^2
  double g_12_34;            // block entanglement, 4s^2
  bool pair_13_separable;
  bool pair_24_separable;
  bool pair_14_separable;
  double m_23;               // piecewise GMEMS value
  double residual;           // G(1|(234)) - G(1|2)
  double tripartite_bound;   // upper bound on G(1|2|3)
};

Mat four_mode_state(double s, double a);
FourModeReport four_mode_analysis(double s, double a);

}  // namespace gcv::multimode

#endif
