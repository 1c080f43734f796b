#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mfc {

/// The phenomenological short-horizon model y^(nu) = F + alpha * u.
/// nu and alpha are operator choices; f_hat is refreshed every controller
/// period by one of the estimators below.
struct UltraLocalModel {
  int nu = 1;         // derivation order; the shipped control laws assume 1
  double alpha = 1.0; // input scaling, nonzero
  double f_hat = 0.0; // current estimate of F

  UltraLocalModel() = default;
  UltraLocalModel(int nu_, double alpha_, double f0 = 0.0)
      : nu(nu_), alpha(alpha_), f_hat(f0) {
    if (alpha == 0.0) throw std::invalid_argument("UltraLocalModel: alpha must be nonzero");
    if (nu < 1) throw std::invalid_argument("UltraLocalModel: nu must be positive");
  }
};

/// Gains of the intelligent controllers. k_i = 0 selects the iP law.
struct IntelligentGains {
  double k_p = 0.0;
  double k_i = 0.0;
};

/// Tracking error and its running integral. int_e is the left-rectangle
/// cumulative sum: the sample e(kh) is counted from tick k+1 on.
struct TrackingState {
  double e = 0.0;
  double int_e = 0.0;

  void accumulate(double h) { int_e += e * h; }
  void reset() { e = 0.0; int_e = 0.0; }
};

/// iP law: u = -(f_hat - ydot_ref + k_p e) / alpha.
inline double ip_control(const UltraLocalModel& model, const IntelligentGains& gains,
                         double ydot_ref, const TrackingState& tracking) {
  return -(model.f_hat - ydot_ref + gains.k_p * tracking.e) / model.alpha;
}

/// iPI law: u = -(f_hat - ydot_ref + k_p e + k_i int_e) / alpha.
inline double ipi_control(const UltraLocalModel& model, const IntelligentGains& gains,
                          double ydot_ref, const TrackingState& tracking) {
  return -(model.f_hat - ydot_ref + gains.k_p * tracking.e + gains.k_i * tracking.int_e) /
         model.alpha;
}

/// One step of the windowed F estimator: the integrand
///   g = -alpha u + ydot_ref - k_p e - k_i int_e
/// is pushed into a ring buffer spanning the last delta seconds and the
/// buffered mean is returned (a discrete moving-average realization of the
/// window integral). Before the first push the estimate is 0; until the
/// buffer fills, only the samples seen so far are averaged.
class EstimatorWindow {
public:
  EstimatorWindow(double delta, double h) : delta_(delta), h_(h) {
    if (!(delta > 0.0) || !(h > 0.0)) throw std::invalid_argument("EstimatorWindow: delta and h must be positive");
    if (h > delta) throw std::invalid_argument("EstimatorWindow: h must not exceed delta");
    capacity_ = static_cast<std::size_t>(std::ceil(delta / h));
    if (capacity_ < 1) capacity_ = 1;
    buffer_.reserve(capacity_);
  }

  double delta() const { return delta_; }
  double sample_period() const { return h_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return buffer_.size(); }

  void reset() { buffer_.clear(); next_ = 0; }

  double push(double g) {
    if (buffer_.size() < capacity_) {
      buffer_.push_back(g);
    } else {
      buffer_[next_] = g;
      next_ = (next_ + 1) % capacity_;
    }
    return mean();
  }

  double mean() const {
    if (buffer_.empty()) return 0.0;
    double sum = 0.0;
    for (double v : buffer_) sum += v;
    return sum / static_cast<double>(buffer_.size());
  }

private:
  double delta_, h_;
  std::size_t capacity_ = 1;
  std::size_t next_ = 0;
  std::vector<double> buffer_;
};

/// Signals entering one windowed-estimator update; u is the control that was
/// held over the period ending at the current sample.
struct FSample {
  double u = 0.0;
  double ydot_ref = 0.0;
  double e = 0.0;
  double int_e = 0.0;
};

inline double estimate_f_window(EstimatorWindow& window, const FSample& s, double alpha,
                                const IntelligentGains& gains) {
  const double g = -alpha * s.u + s.ydot_ref - gains.k_p * s.e - gains.k_i * s.int_e;
  return window.push(g);
}

/// Shifted estimator: F ~ ydot(t) - alpha u(t-h), with ydot the backward
/// difference of the measured output supplied by the caller.
inline double estimate_f_shifted(double ydot_measured, double u_prev, double alpha) {
  return ydot_measured - alpha * u_prev;
}

/// Gains making the sampled velocity-form PI reproduce the iP law that uses
/// the shifted estimator, sample for sample: k_p = -1/(alpha h),
/// k_i = -K_P/(alpha h). The correspondence is exact when the reference
/// derivative fed to the iP side is the backward difference of y*.
inline std::pair<double, double> pi_equivalent_gains(double alpha, double h, double big_kp) {
  if (alpha == 0.0) throw std::invalid_argument("pi_equivalent_gains: alpha must be nonzero");
  if (!(h > 0.0)) throw std::invalid_argument("pi_equivalent_gains: h must be positive");
  return {-1.0 / (alpha * h), -big_kp / (alpha * h)};
}

}  // namespace mfc
