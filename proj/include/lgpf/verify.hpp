#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lgpf/duality.hpp"
#include "lgpf/ensemble.hpp"
#include "lgpf/kalman.hpp"
#include "lgpf/model.hpp"

namespace lgpf {

// Result of one executable identity/exactness check. passed <=> metric <= tolerance.
struct CheckReport {
  std::string name;
  bool passed = false;
  double metric = 0.0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> details;  // per-time / per-seed breakdown

  static CheckReport make(std::string name, double metric, double tolerance,
                          std::vector<std::pair<std::string, double>> details = {}) {
    CheckReport r;
    r.name = std::move(name);
    r.metric = metric;
    r.tolerance = tolerance;
    r.passed = metric <= tolerance;
    r.details = std::move(details);
    return r;
  }
};

// Conservation of the xi quadratic form (gamma-weighted):
//   xi_tᵀ Sigma_t xi_t - xi_Tᵀ Sigma_T xi_T
//     + ∫_t^T (γ₁² xiᵀQxi + γ₂² xiᵀ K R Kᵀ xi) ds = 0 for all t,
// reported as a max-over-t residual relative to aᵀ Sigma_T a.
CheckReport check_conservation(const ModelSchedule& schedule, const KalmanPath& kalman,
                               const Eigen::VectorXd& a, double horizon,
                               const HomotopyParams& gammas, double tolerance = 1e-5);

// Substitutes the Riccati solution into the gamma-parameterized variance ODE
//   dS/dt = A S + S Aᵀ + (1-γ₁²)/2 (Q Σ⁻¹ S + S Σ⁻¹ Q)
//           - (1+γ₂²)/2 (K C S + S Cᵀ Kᵀ) + γ₁² Q + γ₂² K R Kᵀ
// with S := Sigma_t and reports the max central-difference residual.
CheckReport check_variance_ode(const ModelSchedule& schedule, const KalmanPath& kalman,
                               const HomotopyParams& gammas, double tolerance = 1e-4);

// Monte Carlo exactness of the finite-N filter against the Kalman-Bucy
// reference: per homotopy point, the log-log decay slope of the final
// mean/covariance errors over n_list (expected N^{-1/2}), and at the largest
// N the fraction of seeds whose mean error stays inside the CLT envelope
// 4·sqrt(tr(Sigma_T)/N). Seed loop runs under OpenMP.
std::vector<CheckReport> exactness_report(const ModelSchedule& schedule, const TimeGrid& grid,
                                          const std::vector<HomotopyParams>& gammas_list,
                                          const std::vector<int>& n_list,
                                          const std::vector<std::uint64_t>& seeds,
                                          GainMode gain_mode = GainMode::Empirical);

// Pathwise equivalence S̄_T = aᵀ X̄_T: evaluates the estimator sum and a
// single-particle oracle-gain run on one shared set of draws, at the given
// grid and at half the step size (same underlying increments, pairwise
// aggregated). Emits a pathwise report (tolerance 10·dt) and an order-1
// shrinkage report (ratio within [1.5, 2.5]).
std::vector<CheckReport> estimator_particle_equivalence(const ModelSchedule& schedule,
                                                        const TimeGrid& grid,
                                                        const Eigen::VectorXd& a,
                                                        const HomotopyParams& gammas,
                                                        std::uint64_t seed);

// LQ optimality probe: the closed-form control attains cost aᵀ Sigma_T a
// (relative tolerance 1e-4), every seeded perturbation strictly increases the
// cost, and the budget identity
//   c_Tᵀ Sigma_0 c_T + ∫ (vᵀQv + wᵀRw) dt = aᵀ Sigma_T a
// holds to 1e-5 relative.
std::vector<CheckReport> moo_optimality_probe(const ModelSchedule& schedule,
                                              const KalmanPath& kalman, const Eigen::VectorXd& a,
                                              double horizon, int n_perturbations,
                                              std::uint64_t seed, const HomotopyParams& gammas);

}  // namespace lgpf
