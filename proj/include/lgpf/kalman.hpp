#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lgpf/model.hpp"
#include "lgpf/time_grid.hpp"

namespace lgpf {

// Kalman-Bucy filter output on a grid: conditional mean m_t, covariance
// Sigma_t (symmetric PD) and gain K_t = Sigma_t C_tᵀ R_t⁻¹ at every grid
// point. The covariance path is the single source of truth for Sigma_t
// shared by the duality and ensemble modules.
struct KalmanPath {
  explicit KalmanPath(TimeGrid g) : grid(g) {}

  TimeGrid grid;
  Eigen::MatrixXd mean;              // (n_steps+1) x d
  std::vector<Eigen::MatrixXd> cov;  // n_steps+1 entries, d x d
  std::vector<Eigen::MatrixXd> gain; // n_steps+1 entries, d x m
};

// K = Sigma Cᵀ R⁻¹ via a Cholesky solve of R (no explicit inverse).
// Throws SingularMatrix if R is numerically singular.
Eigen::MatrixXd kalman_gain(const Eigen::MatrixXd& cov, const Eigen::MatrixXd& c,
                            const Eigen::MatrixXd& r);

// Classical RK4 on the dynamic Riccati equation
//   dSigma/dt = A Sigma + Sigma Aᵀ + Q - Sigma Cᵀ R⁻¹ C Sigma,
// Sigma(0) = prior covariance, symmetrized after every step. Midpoint stages
// use the average of the adjacent grid-time schedule values. Throws
// LostPositivity if any eigenvalue of Sigma_t drops below -1e-10.
std::vector<Eigen::MatrixXd> integrate_riccati(const ModelSchedule& schedule,
                                               const TimeGrid& grid);

// Full filter: covariance from integrate_riccati, mean by the Euler step
//   m_{k+1} = m_k + A_k m_k dt + K_k (dz_k - C_k m_k dt).
KalmanPath run_kalman(const ModelSchedule& schedule, const TimeGrid& grid,
                      const Eigen::MatrixXd& dz);

}  // namespace lgpf
