#pragma once

namespace mfc {

/// Classic PI/PID gains. No sign restriction: the sampled-equivalence gain
/// map produces negative values on purpose.
struct ClassicGains {
  double k_p = 0.0;
  double k_i = 0.0;
  double k_d = 0.0;
};

/// Discrete controller memory; all zero at scenario reset.
struct PidState {
  double int_e = 0.0;
  double e_prev = 0.0;
  double u_prev = 0.0;

  void reset() { int_e = 0.0; e_prev = 0.0; u_prev = 0.0; }
};

/// Positional PI: accumulates int_e += e h, returns k_p e + k_i int_e.
inline double pi_positional(const ClassicGains& g, double e, PidState& s, double h) {
  s.int_e += e * h;
  return g.k_p * e + g.k_i * s.int_e;
}

/// Velocity-form PI: u = u_prev + k_p (e - e_prev) + k_i h e.
/// Telescopes to the positional form when both start from rest.
inline double pi_velocity(const ClassicGains& g, double e, PidState& s, double h) {
  const double u = s.u_prev + g.k_p * (e - s.e_prev) + g.k_i * h * e;
  s.e_prev = e;
  s.u_prev = u;
  return u;
}

/// Tracking PID used as the heat-exchanger baseline:
///   u = ydot_ref - (k_p e + k_i int_e + k_d e_rate),   e = y - y*.
/// The error terms enter negatively so that the loop is negative feedback on
/// a positive-gain plant. e_rate is the raw backward difference of e,
/// deliberately unfiltered.
inline double pid_heat_exchanger(const ClassicGains& g, double e, double e_rate,
                                 double int_e, double ydot_ref) {
  return ydot_ref - (g.k_p * e + g.k_i * int_e + g.k_d * e_rate);
}

}  // namespace mfc
