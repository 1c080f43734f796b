#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfc {

/// x'' + c x' + 4 x = u.  c = 3 is the damped benchmark, c = 0 the harmonic
/// oscillator that defeats the order-1 model.
class SecondOrderPlant {
public:
  using State = std::array<double, 2>;  // [x, xdot]

  explicit SecondOrderPlant(double c = 3.0, double x0 = 0.0, double xdot0 = 0.0)
      : c_(c), x0_{x0, xdot0} {
    if (c < 0.0) throw std::invalid_argument("SecondOrderPlant: damping c must be >= 0");
  }

  double damping() const { return c_; }
  State initial() const { return x0_; }
  double output(const State& x) const { return x[0]; }

  void derivs(double /*t*/, const State& x, double u, State& dxdt) const {
    dxdt[0] = x[1];
    dxdt[1] = u - c_ * x[1] - 4.0 * x[0];
  }

  static const std::vector<std::string>& extra_names() {
    static const std::vector<std::string> names{"xdot"};
    return names;
  }
  void extras(const State& x, double /*t*/, std::vector<double>& out) const {
    out.assign({x[1]});
  }

private:
  double c_;
  State x0_;
};

}  // namespace mfc
