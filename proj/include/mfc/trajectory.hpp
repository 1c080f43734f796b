#pragma once

#include <cmath>
#include <stdexcept>

namespace mfc {

/// Smooth rest-to-rest reference step: a degree-6 polynomial in normalized
/// time sigma = (t - t0)/(t1 - t0), constant outside [t0, t1].
///
/// Boundary conditions: value, first, second and fourth derivative vanish at
/// the start (gentle entry), value, first and second derivative at the end.
/// Closed form: y0 + (y1 - y0) * (5 s^3 - 9 s^5 + 5 s^6), whose derivative
/// 15 s^2 (1-s)^2 (2s+1) (y1-y0) keeps the profile monotone on [t0, t1].
class PolySmoothStep {
public:
  PolySmoothStep(double t0, double t1, double y0, double y1)
      : t0_(t0), t1_(t1), y0_(y0), y1_(y1) {
    if (!(t1 > t0)) throw std::invalid_argument("PolySmoothStep: t1 must exceed t0");
  }

  double start_time() const { return t0_; }
  double end_time() const { return t1_; }
  double start_value() const { return y0_; }
  double end_value() const { return y1_; }
  double span() const { return std::abs(y1_ - y0_); }

  /// order-th derivative (0, 1 or 2) of the reference at time t.
  double eval(double t, int order) const {
    if (order < 0 || order > 2) throw std::invalid_argument("eval: order must be 0, 1 or 2");
    if (t <= t0_) return order == 0 ? y0_ : 0.0;
    if (t >= t1_) return order == 0 ? y1_ : 0.0;
    const double T = t1_ - t0_;
    const double s = (t - t0_) / T;
    const double d = y1_ - y0_;
    switch (order) {
      case 0: return y0_ + d * (s * s * s * (5.0 + s * s * (-9.0 + 5.0 * s)));
      case 1: return d * (s * s * (15.0 + s * s * (-45.0 + 30.0 * s))) / T;
      default: return d * (s * (30.0 + s * s * (-180.0 + 150.0 * s))) / (T * T);
    }
  }

private:
  double t0_, t1_, y0_, y1_;
};

/// Controller-side estimates of the mass-spring parameters; only the mass is
/// assumed exact.
struct MassSpringEstimates {
  double m = 0.5;
  double k1_hat = 2.0;
  double k3_hat = 7.0;
  double d_hat = 2.5;
};

/// Open-loop nominal control for the restricted mass-spring model,
/// obtained by flatness: u* = m y''* + k1^ y* + k3^ y*^3 + d^ y'*.
inline double flat_feedforward_mass_spring(const MassSpringEstimates& p, double y_ref,
                                           double ydot_ref, double yddot_ref) {
  return p.m * yddot_ref + p.k1_hat * y_ref + p.k3_hat * y_ref * y_ref * y_ref +
         p.d_hat * ydot_ref;
}

}  // namespace mfc
