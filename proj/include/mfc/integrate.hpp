#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfc {

enum class IntegratorMethod { ExplicitEuler, Rk4 };

/// Fixed-step integrator selection. dt must divide the controller period.
struct IntegratorSpec {
  IntegratorMethod method = IntegratorMethod::Rk4;
  double dt = 1e-3;
};

namespace detail {

template <class State>
bool all_finite(const State& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i])) return false;
  return true;
}

}  // namespace detail

/// One explicit-Euler step of x' = f(t, x) with f(t, x, dxdt).
template <class State, class Derivs>
State euler_step(Derivs&& f, double t, State x, double dt) {
  State k = x;
  f(t, x, k);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += dt * k[i];
  return x;
}

/// One classic fourth-order Runge-Kutta step.
template <class State, class Derivs>
State rk4_step(Derivs&& f, double t, State x, double dt) {
  State k1 = x, k2 = x, k3 = x, k4 = x, tmp = x;

  f(t, x, k1);
  for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
  f(t + 0.5 * dt, tmp, k2);
  for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
  f(t + 0.5 * dt, tmp, k3);
  for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + dt * k3[i];
  f(t + dt, tmp, k4);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return x;
}

/// One step with the input held constant over dt (zero-order hold).
/// plant_derivs has signature f(t, x, u, dxdt).
template <class State, class PlantDerivs>
State step_integrate(PlantDerivs&& plant_derivs, const State& x, double u, double t,
                     const IntegratorSpec& spec) {
  auto f = [&](double tt, const State& xx, State& dxdt) { plant_derivs(tt, xx, u, dxdt); };
  return spec.method == IntegratorMethod::Rk4 ? rk4_step(f, t, x, spec.dt)
                                              : euler_step(f, t, x, spec.dt);
}

inline const char* to_string(IntegratorMethod m) {
  return m == IntegratorMethod::Rk4 ? "rk4" : "euler";
}

inline IntegratorMethod integrator_from_string(const std::string& s) {
  if (s == "rk4") return IntegratorMethod::Rk4;
  if (s == "euler") return IntegratorMethod::ExplicitEuler;
  throw std::invalid_argument("unknown integrator method: " + s);
}

}  // namespace mfc
