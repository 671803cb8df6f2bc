#ifndef GCV_TWOMODE_HPP
#define GCV_TWOMODE_HPP

#include "gcv/core.hpp"

// Two-mode layer: standard form, symplectic invariants, negativities,
// entanglement of formation, extremal states at fixed purities, and the
// Gaussian entanglement measures with their closed forms.
namespace gcv::twomode {

// Standard form (a, 0, c+, 0 / 0, a, 0, c- / ...) with the canonical
// orientation c+ >= |c-|; unique up to a common sign flip of (c+, c-).
struct StandardForm {
  double a = 1.0;
  double b = 1.0;
  double c_plus = 0.0;
  double c_minus = 0.0;

  Mat cm() const;
  double det_sigma() const {
    return (a * b - c_plus * c_plus) * (a * b - c_minus * c_minus);
  }
  double seralian() const { return a * a + b * b + 2.0 * c_plus * c_minus; }
  double seralian_tilde() const { return a * a + b * b - 2.0 * c_plus * c_minus; }
  double mu() const { return 1.0 / std::sqrt(det_sigma()); }
  bool symmetric(double tol = 1e-9) const { return std::abs(a - b) <= tol; }
};

struct StandardFormResult {
  StandardForm sf;
  Mat local;  // S1 + S2 with local * sigma * local^T in standard form
};

StandardFormResult to_standard_form(const Mat& sigma);

// Symplectic eigenvalues of sigma and of its partial transpose.
double nu_minus(const StandardForm& sf);
double nu_plus(const StandardForm& sf);
double tilde_nu_minus(const StandardForm& sf);
double tilde_nu_plus(const StandardForm& sf);

// E_N = max{0, -log nu~-}; the boundary band |nu~- - 1| <= 1e-9 maps to 0.
double log_negativity(const StandardForm& sf);
double log_negativity(const Mat& sigma);          // any N, 1 x rest on mode 0
double log_negativity(const Mat& sigma, const std::vector<int>& side);
double negativity(const Mat& sigma, const std::vector<int>& side);

// EoF of symmetric states, E_F = max{0, h(nu~-)}. Throws on |a-b| > tol:
// for nonsymmetric states use gaussian_em instead.
double eof_symmetric(const StandardForm& sf);

// Maximal EPR correlation reachable by local operations,
// xi = 2 sqrt((a-|c+|)(a-|c-|)); equals 2 nu~- for entangled symmetric states.
double epr_correlation(const StandardForm& sf);

enum class ExtremalKind { GMEMS, GLEMS, GMEMMS };

// Standard form of the extremal-negativity states at fixed purities.
// GMEMMS ignores mu and uses mu_max(mu1, mu2).
StandardForm make_extremal(ExtremalKind kind, double mu1, double mu2,
                           double mu = 1.0);

enum class PurityClass { Unphysical, Separable, Coexistence, Entangled };
PurityClass classify_by_purities(double mu1, double mu2, double mu,
                                 double band = 1e-9);

struct NegativityBounds {
  double en_max;
  double en_min;
  double en_avg;
  double rel_error;  // (max - min) / (max + min)
};
NegativityBounds negativity_bounds(double mu1, double mu2, double mu);

// (s, d, g, lambda) parametrization spanning all entangled states at fixed
// purities; lambda = -1 GLEMS, +1 GMEMS.
struct GemParams {
  double s;
  double d;
  double g;
  double lambda;
};
StandardForm from_gem_params(const GemParams& p);

// Single-mode determinant of the candidate optimal pure state at angle theta.
// Returns +inf outside the physical branch.
double m2_theta(const StandardForm& sf, double theta);

struct GaussianEm {
  double m_opt;          // sqrt of minimal single-mode determinant, >= 1
  double g_tau;          // Gaussian contangle arcsinh^2 sqrt(m^2 - 1)
  double g_eof;          // Gaussian EoF h(nu~- of the optimal pure state)
  double theta_opt;      // minimizing angle (0 when closed form used)
  double grad_residual;  // |dm2/dtheta| at the numeric optimum
};

// Numeric minimization of m2_theta: 720-point grid, golden-section
// refinement around the best brackets, tol 1e-10 in theta.
GaussianEm gaussian_em(const StandardForm& sf);
GaussianEm gaussian_em(const Mat& sigma);

// Closed forms for the extremal classes.
double m2_opt_glems(double s, double d, double g);
double m2_opt_gmems(double s, double d, double g);

struct EmNegativityBounds {
  double lower;            // proven: G_EoF >= h(exp(-E_N))
  double upper_conjectured;  // evaluated only, never asserted
};
EmNegativityBounds em_vs_negativity_bounds(double tilde_nu_minus_of_state);

// Nodal surface mu_p^kappa(mu1, mu2) where GMEMS and GLEMS entanglement
// coincide at fixed global S_p; defined for p in {3, 4}.
std::optional<double> nodal_surface(int p, double mu1, double mu2);

}  // namespace gcv::twomode

#endif
