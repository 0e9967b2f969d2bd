#pragma once

#include <cmath>
#include <cstdint>

#include "lgpf/errors.hpp"

namespace lgpf {

// Uniform time grid t_k = t0 + k*dt, k = 0..n_steps. All stored paths have
// n_steps+1 grid points; per-step quantities (increments) have n_steps rows.
class TimeGrid {
 public:
  TimeGrid(double dt, int n_steps, double t0 = 0.0) : t0_(t0), dt_(dt), n_steps_(n_steps) {
    if (!(dt > 0.0)) throw GridMismatch("TimeGrid: dt must be > 0");
    if (n_steps < 1) throw GridMismatch("TimeGrid: n_steps must be >= 1");
  }

  // Builds the grid from a horizon T = t0 + n*dt; T must be an integer
  // multiple of dt (to 1e-9 relative).
  static TimeGrid from_horizon(double horizon, double dt, double t0 = 0.0) {
    if (!(dt > 0.0)) throw GridMismatch("TimeGrid: dt must be > 0");
    const double span = horizon - t0;
    const long long n = std::llround(span / dt);
    if (n < 1 || std::abs(t0 + static_cast<double>(n) * dt - horizon) >
                     1e-9 * std::max(1.0, std::abs(horizon))) {
      throw GridMismatch("TimeGrid: horizon is not a positive multiple of dt");
    }
    return TimeGrid(dt, static_cast<int>(n), t0);
  }

  double t0() const { return t0_; }
  double dt() const { return dt_; }
  int n_steps() const { return n_steps_; }
  int n_points() const { return n_steps_ + 1; }
  double time(int k) const { return t0_ + k * dt_; }
  double horizon() const { return time(n_steps_); }

  // Grid index of time t; throws if t is not (close to) a grid point.
  int index_of(double t) const {
    const long long k = std::llround((t - t0_) / dt_);
    if (k < 0 || k > n_steps_ ||
        std::abs(time(static_cast<int>(k)) - t) > 1e-9 * std::max(1.0, std::abs(t))) {
      throw GridMismatch("TimeGrid: time is not on the grid");
    }
    return static_cast<int>(k);
  }

  bool operator==(const TimeGrid& other) const {
    return t0_ == other.t0_ && dt_ == other.dt_ && n_steps_ == other.n_steps_;
  }

 private:
  double t0_;
  double dt_;
  int n_steps_;
};

}  // namespace lgpf
