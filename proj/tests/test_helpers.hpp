#ifndef GCV_TEST_HELPERS_HPP
#define GCV_TEST_HELPERS_HPP

#include <doctest.h>

#include "gcv/core.hpp"
#include "gcv/random_states.hpp"

namespace gcv::test {

inline double max_abs_diff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// independent golden-section minimizer used as the oracle against the
// library's internal refinement
template <typename F>
double golden_min(F f, double lo, double hi, double tol = 1e-12) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
    }
  }
  return f(0.5 * (lo + hi));
}

}  // namespace gcv::test

#endif
