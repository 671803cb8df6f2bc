#ifndef GCV_FAMILIES_HPP
#define GCV_FAMILIES_HPP

#include "gcv/multimode.hpp"
#include "gcv/optics.hpp"

// Named three- and four-mode families: closed-form CMs, entanglement
// formulas, and the optical recipes that reproduce them.
namespace gcv::families {

struct Ghzw {
  double a;  // local mixedness, >= 1
};
struct TState {
  double a;
};
struct NoisyGhzw {
  double n;  // thermal parameter, >= 1 (symplectic eigenvalues all n)
  double s;  // effective squeezing s = e^{2r}
};
struct BassetHound {
  double a;
};
struct PureThreeMode {
  double a1, a2, a3;  // must satisfy |ai'-aj'| <= ak' <= ai'+aj', a' = a - 1
};
struct FourMode {
  double s, a;
};

using FamilyParams = std::variant<Ghzw, TState, NoisyGhzw, BassetHound,
                                  PureThreeMode, FourMode>;

bool triangle_feasible(double a1, double a2, double a3);

Mat cm_of(const FamilyParams& family);

// Residual Gaussian contangle from the families' closed forms.
double residual_contangle_of(const FamilyParams& family);

// GHZ/W reduced pair contangle saturates to log^2(3)/4 as a -> infinity;
// basset hound 1|l pairs saturate to log^2(3 + 2 sqrt 2).
double ghzw_pair_contangle(double a);
double basset_pair_contangle(double a);

enum class SeparabilityClass { Class1, Class4, Class5 };
struct NoisyGhzwClass {
  SeparabilityClass cls;
  bool promiscuous;  // n < sqrt(3) and s > sqrt(2) n / sqrt(3 - n^2)
};
NoisyGhzwClass classify_noisy_ghzw(double n, double s);

// Optical recipes. Applying the recipe to recipe_input_cm reproduces cm_of
// up to local symplectics (same local determinants and pairwise nu~-).
optics::CircuitRecipe recipe_of(const FamilyParams& family);

// Vacuum for most families; T states and noisy GHZ/W start from thermal
// inputs.
Mat recipe_input_cm(const FamilyParams& family);

// Conversions used by the recipes.
double ghzw_a_from_squeezings(double r1, double r2);
double ghzw_rbar_from_a(double a);
double tstate_a_from_squeezing(double r);
double tstate_r_from_a(double a);
double tstate_thermal_n(double r);
double noisy_ghzw_a(double n, double s);
double noisy_ghzw_s_from_a(double n, double a);

// Allotment box: two-mode squeezing m = cosh 2r on modes 1,2 plus vacuum,
// then B13(tau=s), B12(tau=t), B23(tau=2/3).
Mat allotment(double m, double s, double t);
double allotment_m(double a1, double s, double t);

struct AllotmentInverse {
  double m, s, t;
  double residual;  // max |det sigma_i - a_i^2| achieved by the solver
};
// Numerically invert (a1, a2, a3) -> (m, s, t); throws on infeasible targets.
AllotmentInverse allotment_inverse(double a1, double a2, double a3);

// Generic-entanglement scheme: 1 + (N-2) squeezers and (N-1)(N-2)/2
// beam-splitters; params must hold N(N-1)/2 values ordered as
// (s, r_3..r_N, b_{2,3}, b_{2,4}, b_{3,4}, b_{2,5}, ...).
optics::CircuitRecipe generic_recipe(int n_modes,
                                     const std::vector<double>& params);
// Seraphique variant with (N^2 - 2N) parameters.
optics::CircuitRecipe general_recipe(int n_modes,
                                     const std::vector<double>& params);

}  // namespace gcv::families

#endif
