#ifndef GCV_GVBS_HPP
#define GCV_GVBS_HPP

#include "gcv/optics.hpp"

// Gaussian valence bond states on translationally invariant rings:
// Schur-complement construction, correlation-range thresholds, and the
// optical recipe for the three-mode building block.
namespace gcv::gvbs {

// Pure 2x1-bisymmetric building block in standard form; modes 1, 2 are the
// input port (diagonal s), mode 3 the output port (diagonal x).
struct BuildingBlock {
  double x;
  double s;
  static double s_min(double x) { return 0.5 * (x + 1.0); }
};

Mat building_block_cm(const BuildingBlock& b);

struct GvbsSpec {
  int n_sites;
  BuildingBlock block;
  // bond squeezing; empty means ideal EPR bonds (analytic limit of the
  // Schur complement, stable at any bond strength)
  std::optional<double> r_bond;
};

// N-mode GVBS on a ring, CM in the interleaved ordering.
Mat construct(const GvbsSpec& spec);

// Ring distance min(|i-j|, N - |i-j|).
int ring_distance(int i, int j, int n);

// nu~- of the distance-k pair reduction.
double pair_nu_tilde(const Mat& gvbs_cm, int k);

// s_k(x): the input-port mixedness above which all pairs at distance <= k
// are entangled; s_1 = s_min exactly, the rest by bisection.
std::vector<double> thresholds(int n_sites, double x,
                               std::optional<double> r_bond = std::nullopt,
                               double s_max = 50.0);

// Nearest-neighbour nu~ at s = s_min as x -> infinity:
// (N-2)/N for even N, sqrt((N-2)/N) for odd.
double short_range_asymptote(int n_sites);

// Paper-quoted lower bound M >= IntPart[(sqrt(4N-3)-1)/4] on the number of
// EPR bonds per site needed to represent a generic block-diagonal pure state.
int bond_bound(int n_modes);
// Exact sufficiency test of a single bond: (2M+1)2M >= N-1 with M = 1.
bool single_bond_sufficient(int n_modes);
// Translationally invariant parameter count Theta_N = (N - N mod 2) / 2.
int invariant_parameter_count(int n_modes);
int bond_bound_invariant(int n_modes);

// Twin-beam recipe reproducing the building block up to local symplectics.
optics::CircuitRecipe building_block_recipe(double x, double s);

}  // namespace gcv::gvbs

#endif
