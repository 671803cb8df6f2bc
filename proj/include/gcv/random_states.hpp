#ifndef GCV_RANDOM_STATES_HPP
#define GCV_RANDOM_STATES_HPP

#include <random>

#include "gcv/core.hpp"

namespace gcv {

// Seeded generators used by the property suites and the CLI sweeps.
// Orthogonal symplectics come from Haar-random U(N) mapped to the compact
// subgroup; squeezings are bounded in [1, e^2].
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  Mat random_orthogonal_symplectic(int n_modes);
  Mat random_symplectic(int n_modes, double z_max = std::exp(2.0));
  // S^T D S with thermal D; nu_max controls the mixedness.
  Mat random_physical_cm(int n_modes, double nu_max = 2.0);
  Mat random_pure_cm(int n_modes);

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gcv

#endif
