#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfc/trajectory.hpp"

namespace mfc {

/// Mass-spring benchmark with discontinuous friction:
///   m y'' = -k1 y - k3 y^3 + Fr(y') - d y' + u
/// where Fr(y') = -sign(y') (0.3 + 0.4 (y' + 0.25)^2) - d y' away from
/// y' = 0 and Fr(0) = 0.  The -d y' inside Fr and the separate -d y' of the
/// equation are both applied, as the benchmark defines them.
///
/// The hatted estimates are never read by the plant dynamics; they feed the
/// flatness feedforward only.
class MassSpringPlant {
public:
  using State = std::array<double, 2>;  // [y, ydot]

  struct Params {
    double m = 0.5;
    double k1 = 3.0;
    double k3 = 10.0;
    double d = 5.0;
    MassSpringEstimates estimates{};
    double y0 = 0.0;
    double ydot0 = 0.0;
  };

  MassSpringPlant() : MassSpringPlant(Params{}) {}
  explicit MassSpringPlant(const Params& p) : p_(p) {
    if (!(p.m > 0.0)) throw std::invalid_argument("MassSpringPlant: mass must be positive");
  }

  const Params& params() const { return p_; }
  const MassSpringEstimates& estimates() const { return p_.estimates; }

  State initial() const { return {p_.y0, p_.ydot0}; }
  double output(const State& x) const { return x[0]; }

  double friction(double ydot) const {
    if (ydot > 0.0) return -0.3 - 0.4 * (ydot + 0.25) * (ydot + 0.25) - p_.d * ydot;
    if (ydot < 0.0) return 0.3 + 0.4 * (ydot + 0.25) * (ydot + 0.25) - p_.d * ydot;
    return 0.0;
  }

  void derivs(double /*t*/, const State& x, double u, State& dxdt) const {
    const double y = x[0], ydot = x[1];
    dxdt[0] = ydot;
    dxdt[1] = (-p_.k1 * y - p_.k3 * y * y * y + friction(ydot) - p_.d * ydot + u) / p_.m;
  }

  /// Restricted model used to derive the feedforward:
  ///   m y'' = -k1^ y - k3^ y^3 - d^ y' + u  (no friction term).
  void restricted_derivs(double /*t*/, const State& x, double u, State& dxdt) const {
    const auto& h = p_.estimates;
    dxdt[0] = x[1];
    dxdt[1] = (-h.k1_hat * x[0] - h.k3_hat * x[0] * x[0] * x[0] - h.d_hat * x[1] + u) / h.m;
  }

  static const std::vector<std::string>& extra_names() {
    static const std::vector<std::string> names{"ydot"};
    return names;
  }
  void extras(const State& x, double /*t*/, std::vector<double>& out) const {
    out.assign({x[1]});
  }

private:
  Params p_;
};

}  // namespace mfc
