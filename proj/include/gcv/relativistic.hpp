#ifndef GCV_RELATIVISTIC_HPP
#define GCV_RELATIVISTIC_HPP

#include "gcv/core.hpp"

// Unruh-frame transformations of a two-mode squeezed resource: one- and
// two-observer correlation analyses across the Rindler horizons.
namespace gcv::relativistic {

// cosh r = (1 - e^{-2 pi w / a})^{-1/2}
double acceleration_parameter(double a_phys, double omega);

// Pure three-mode state of (Alice, Rob, anti-Rob); s is the inertial
// squeezing, r the acceleration parameter of Rob.
Mat one_observer_state(double s, double r);

struct OneObserverReport {
  double m_a_rr;       // m_{A|(R antiR)} = cosh 2s
  double m_r_arr;      // m_{R|(A antiR)}
  double m_rr_ar;      // m_{antiR|(A R)}
  double m_ar;         // reduced pair A|R
  double g_ar;         // contangle of A|R
  double g_r_rr;       // contangle R|antiR = 4 r^2
  double residual;     // residual contangle, piecewise in r*
  double mutual_info;  // I(sigma_{A|R})
  double m_ar_cap;     // s -> infinity value 1 + 2/sinh^2 r
  double g_cap;        // arcsinh^2 [2 cosh r / sinh^2 r]
};
OneObserverReport one_observer_report(double s, double r);

// Pure four-mode state ordered (anti-Leo, Leo, Nadia, anti-Nadia).
Mat two_observer_state(double s, double l, double n);

struct TwoObserverReport {
  double m_ln;             // accessible pair Leo|Nadia (1 when separable)
  double g_ln;
  double g_l_ll;           // Leo|anti-Leo = 4 l^2
  double g_n_nn;           // Nadia|anti-Nadia = 4 n^2
  bool l_nbar_separable;   // always true
  bool n_lbar_separable;
  bool lbar_nbar_separable;
  double r_eff;            // equivalent single-observer acceleration (inf if gone)
  double mutual_info;      // I(sigma_{L|N})
  double residual;         // equal-acceleration four-partite residual
};
TwoObserverReport two_observer_report(double s, double l, double n);

// threshold acceleration killing the L|N entanglement at equal parameters
double disentangling_acceleration(double s);

// difference of mutual informations between the one- and two-observer
// settings at equal acceleration parameter
double information_defect(double a, double s);

struct FrequencyWindow {
  bool entangled;
  double m_ln;    // s -> infinity pair parameter of the surviving modes
  double g_tau;
};
// Two observers at common acceleration abar probing field modes of
// frequencies lambda and nu, maximally entangled inertial state.
FrequencyWindow entangled_frequency_window(double abar, double lambda,
                                           double nu);

}  // namespace gcv::relativistic

#endif
