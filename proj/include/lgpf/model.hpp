#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "lgpf/errors.hpp"
#include "lgpf/time_grid.hpp"

namespace lgpf {

// A matrix-valued map of time, evaluated at grid times only. Either a single
// constant matrix or one matrix per grid point (n_steps+1 entries).
class MatrixSchedule {
 public:
  MatrixSchedule() = default;

  static MatrixSchedule constant(Eigen::MatrixXd m) {
    MatrixSchedule s;
    s.values_.push_back(std::move(m));
    s.constant_ = true;
    return s;
  }

  static MatrixSchedule table(std::vector<Eigen::MatrixXd> per_grid_point) {
    if (per_grid_point.empty()) throw DimensionMismatch("MatrixSchedule: empty table");
    MatrixSchedule s;
    s.values_ = std::move(per_grid_point);
    s.constant_ = false;
    return s;
  }

  bool is_constant() const { return constant_; }
  int table_size() const { return constant_ ? 0 : static_cast<int>(values_.size()); }
  Eigen::Index rows() const { return values_.front().rows(); }
  Eigen::Index cols() const { return values_.front().cols(); }

  const Eigen::MatrixXd& at(int k) const {
    if (constant_) return values_.front();
    if (k < 0 || k >= static_cast<int>(values_.size()))
      throw GridMismatch("MatrixSchedule: index outside the table");
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  std::vector<Eigen::MatrixXd> values_;
  bool constant_ = true;
};

// Raw model description as read from a config; validated by make_schedule.
struct ModelSpec {
  int dim_x = 0;
  int dim_z = 0;
  MatrixSchedule A;  // d x d drift
  MatrixSchedule C;  // m x d observation
  MatrixSchedule Q;  // d x d process-noise covariance, SPD
  MatrixSchedule R;  // m x m observation-noise covariance, SPD
  Eigen::VectorXd m0;
  Eigen::MatrixXd Sigma0;
};

// Validated time-varying linear-Gaussian state-space model
//   dX = A_t X dt + dB,   dZ = C_t X dt + dW,   X_0 ~ N(m0, Sigma0),
// with cov(dB) = Q_t dt, cov(dW) = R_t dt.
class ModelSchedule {
 public:
  int dim_x() const { return dim_x_; }
  int dim_z() const { return dim_z_; }

  const Eigen::MatrixXd& A(int k) const { return A_.at(k); }
  const Eigen::MatrixXd& C(int k) const { return C_.at(k); }
  const Eigen::MatrixXd& Q(int k) const { return Q_.at(k); }
  const Eigen::MatrixXd& R(int k) const { return R_.at(k); }

  const Eigen::VectorXd& prior_mean() const { return m0_; }
  const Eigen::MatrixXd& prior_cov() const { return Sigma0_; }

  // Largest per-grid-point table length among the four maps (0 if all
  // constant). A grid used with this schedule must have n_points() equal to
  // this when nonzero; checked by require_grid.
  int table_points() const;
  void require_grid(const TimeGrid& grid) const;

  friend ModelSchedule make_schedule(const ModelSpec& spec);

 private:
  int dim_x_ = 0;
  int dim_z_ = 0;
  MatrixSchedule A_, C_, Q_, R_;
  Eigen::VectorXd m0_;
  Eigen::MatrixXd Sigma0_;
};

// Validates dimensions and positive definiteness (Q, R, Sigma0 must be
// symmetric PD at every tabulated point). Throws NonPositiveDefinite naming
// the offending matrix and index, or DimensionMismatch.
ModelSchedule make_schedule(const ModelSpec& spec);

// One realized path of the hidden state and the observation increments.
struct Trajectory {
  Trajectory(TimeGrid g, std::uint64_t s) : grid(g), seed(s) {}

  TimeGrid grid;
  Eigen::MatrixXd x;   // (n_steps+1) x d, states at grid points
  Eigen::MatrixXd dz;  // n_steps x m, dz_k = C_k x_k dt + dw_k
  Eigen::MatrixXd db;  // n_steps x d, realized process-noise increments
  Eigen::MatrixXd dw;  // n_steps x m, realized observation-noise increments
  std::uint64_t seed;
};

// Euler-Maruyama simulation of the model: X_0 ~ N(m0, Sigma0),
// X_{k+1} = X_k + A_k X_k dt + dB_k, dZ_k = C_k X_k dt + dW_k.
// Fully reproducible from the seed.
Trajectory simulate_truth(const ModelSchedule& schedule, const TimeGrid& grid,
                          std::uint64_t seed);

// Lower-triangular Cholesky factor of an SPD matrix; throws
// NonPositiveDefinite with `what` in the message otherwise.
Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& m, const std::string& what);

}  // namespace lgpf
