#ifndef GCV_CORE_HPP
#define GCV_CORE_HPP

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Covariance-matrix toolkit for N-mode Gaussian states.
//
// Conventions (fixed throughout): hbar = 2 so the vacuum CM is the identity;
// quadratures interleaved as (q1, p1, ..., qN, pN). The symplectic form is
// Omega = diag_blocks([[0, 1], [-1, 0]]).
namespace gcv {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Tolerances for double-precision dense algebra at N <= ~20.
constexpr double kEpsPhys = 1e-9;    // physicality: min eig of sigma + i Omega
constexpr double kEpsSym = 1e-9;     // symplecticity residual
constexpr double kEpsRecon = 1e-8;   // Williamson / Euler reconstruction

struct DiagnosedBool {
  bool ok;
  double value;       // the margin that was tested (e.g. min eigenvalue)
  std::string detail;
  explicit operator bool() const { return ok; }
};

// N-mode symplectic form, interleaved ordering.
Mat symplectic_form(int n_modes);

// Permutation that maps interleaved (q1,p1,...) to blocked (q1..qN,p1..pN).
// reorder_to_qqpp(sigma) = P sigma P^T.
Mat reorder_to_qqpp(const Mat& sigma);
Mat reorder_to_qpqp(const Mat& sigma_qqpp);

bool is_symmetric(const Mat& m, double tol = 1e-12);
int mode_count(const Mat& sigma);

// Uncertainty check: sigma + i Omega >= -eps.  Requires symmetric input.
DiagnosedBool check_physical(const Mat& sigma, double eps = kEpsPhys);

// Symplectic matrix check: ||S^T Omega S - Omega||_max <= eps.
DiagnosedBool check_symplectic(const Mat& S, double eps = kEpsSym);

// Symplectic eigenvalues, ascending. sigma must be positive definite.
Vec symplectic_spectrum(const Mat& sigma);

struct Williamson {
  Mat S;    // symplectic with sigma = S^T diag(nu x (1,1)) S
  Vec nu;   // ascending
};

// Williamson normal form. The returned S satisfies
// S^T * kron(diag(nu), I2) * S = sigma within kEpsRecon * ||sigma||.
// S_diag := S^{-T} Williamson-diagonalizes: S_diag sigma S_diag^T = diag.
Williamson williamson(const Mat& sigma);

struct Euler {
  Mat O_left;   // orthogonal symplectic
  Mat Z;        // direct sum of diag(z, 1/z), z >= 1
  Mat O_right;  // orthogonal symplectic
  std::vector<double> z;
};

// Bloch-Messiah/Euler decomposition S = O_left * Z * O_right.
Euler euler_decompose(const Mat& S);

Mat partial_trace(const Mat& sigma, const std::vector<int>& keep);

// Phase-space partial transpose: flips the momenta of the listed modes.
Mat partial_transpose(const Mat& sigma, const std::vector<int>& side);

// Symplectic spectrum of the partial transpose, ascending.
Vec nu_tilde_spectrum(const Mat& sigma, const std::vector<int>& side);
double nu_tilde_min(const Mat& sigma, const std::vector<int>& side);

double purity(const Mat& sigma);

// f(x) of the von Neumann entropy; f(1) = 0, natural log.
double entropy_function_f(double x);
// g_p(x) = 2^p / ((x+1)^p - (x-1)^p)
double schatten_gp(double x, double p);
// h(x) of the symmetric-state EoF; h(1) = 0.
double eof_function_h(double x);

double von_neumann_entropy(const Mat& sigma);
// S_p = (1 - prod g_p(nu_i)) / (p - 1), p > 1.
double generalized_entropy(const Mat& sigma, double p);

// I = S_V(A) + S_V(B) - S_V(AB); the split lists the modes of side A.
double mutual_information(const Mat& sigma, const std::vector<int>& split_a);

struct EntropyRange {
  double s_min;
  double s_max;
};

// Extremal S_p at fixed purity mu for N-mode states. p == 1 selects the
// von Neumann entropy. For p > 2 the roles of the extremal spectra swap.
EntropyRange entropy_extremes(double mu, int n_modes, double p);

struct SchmidtModes {
  std::vector<double> r;  // two-mode squeezing parameters, descending
  int vacua;              // modes of the larger block left in vacuum
};

// Phase-space Schmidt decomposition of a pure state across split_a | rest.
SchmidtModes phase_space_schmidt(const Mat& sigma_pure,
                                 const std::vector<int>& split_a);

// Pure-state condition -Omega sigma Omega sigma = 1 within tol.
DiagnosedBool pure_state_conditions(const Mat& sigma, double tol = 1e-7);

// Locally invariant parameters of a pure N-mode state.
int dof_count(int n_modes, bool block_diagonal = false);

enum class Quadrature { Q, P };

// Conditional CM after an ideal homodyne detection of one quadrature of a
// mode (outcome independent): A - C (X B X)^+ C^T on the remaining modes.
Mat homodyne_condition(const Mat& sigma, int mode, Quadrature quad);

// Thermal state diag(nu_1, nu_1, ..., nu_N, nu_N).
Mat thermal_cm(const Vec& nu);
// Two-mode squeezed CM, Eq. form cosh/sinh(2r).
Mat two_mode_squeezed_cm(double r);

}  // namespace gcv

#endif
