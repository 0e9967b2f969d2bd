#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lgpf/kalman.hpp"
#include "lgpf/model.hpp"
#include "lgpf/time_grid.hpp"

namespace lgpf {

// Homotopy parameters (gamma1, gamma2), each a constant or a per-grid-point
// table. (0,0) is the deterministic filter, (1,0) the stochastic filter,
// (1,1) the classic ensemble form; any finite values are admissible.
class HomotopyParams {
 public:
  HomotopyParams() : HomotopyParams(0.0, 0.0) {}

  HomotopyParams(double g1, double g2);
  static HomotopyParams tables(std::vector<double> g1, std::vector<double> g2);

  double gamma1(int k) const { return g1_.size() == 1 ? g1_[0] : pick(g1_, k); }
  double gamma2(int k) const { return g2_.size() == 1 ? g2_[0] : pick(g2_, k); }
  bool is_constant() const { return g1_.size() == 1 && g2_.size() == 1; }

  // Short label like "g0_0.5" used in report names and file names; requires
  // constant parameters.
  std::string label() const;

 private:
  static double pick(const std::vector<double>& v, int k);

  std::vector<double> g1_, g2_;
};

// Backward transition-matrix flows on [0, T]:
//   dPhi/dt = (-Aᵀ + Cᵀ Kᵀ) Phi,                       Phi(T;T) = I
//   dPsi/dt = (-Aᵀ + (1+γ₂²)/2 Cᵀ Kᵀ
//                  - (1-γ₁²)/2 Sigma⁻¹ Q) Psi,          Psi(T;T) = I
struct TransitionPath {
  TransitionPath(TimeGrid g, int h, HomotopyParams gam)
      : grid(g), horizon_index(h), gammas(std::move(gam)) {}

  TimeGrid grid;
  int horizon_index;  // grid index of T
  HomotopyParams gammas;
  std::vector<Eigen::MatrixXd> phi;  // horizon_index+1 entries, d x d
  std::vector<Eigen::MatrixXd> psi;  // horizon_index+1 entries, d x d
};

// Optimal estimator parameters for the direction a and horizon T:
//   b_T = Phi(0;T) a, c_T = Psi(0;T) a, u_t = Kᵀ Phi(t;T) a,
//   v_t = γ₁ Psi(t;T) a, w_t = γ₂ Kᵀ Psi(t;T) a.
struct DualSolution {
  DualSolution(TimeGrid g, int h, HomotopyParams gam)
      : grid(g), horizon_index(h), gammas(std::move(gam)) {}

  TimeGrid grid;
  int horizon_index;
  HomotopyParams gammas;
  Eigen::VectorXd a;
  Eigen::VectorXd b_T;
  Eigen::VectorXd c_T;
  Eigen::MatrixXd u;  // (horizon_index+1) x m
  Eigen::MatrixXd v;  // (horizon_index+1) x d
  Eigen::MatrixXd w;  // (horizon_index+1) x m
};

// Path of the dual process y_t or the backward process xi_t, terminal value a.
struct DualProcessPath {
  enum class Kind { DualY, Xi };

  DualProcessPath(Kind k, TimeGrid g, int h) : kind(k), grid(g), horizon_index(h) {}

  Kind kind;
  TimeGrid grid;
  int horizon_index;
  Eigen::MatrixXd values;  // (horizon_index+1) x d
};

// Phi(t;T) for every grid time t <= T. The horizon must be a grid time; the
// gain path comes from `kalman`.
std::vector<Eigen::MatrixXd> integrate_phi(const KalmanPath& kalman,
                                           const ModelSchedule& schedule, double horizon);

// Psi(t;T) for every grid time t <= T, for the given homotopy parameters.
// Throws SingularMatrix if a Sigma_t solve fails.
std::vector<Eigen::MatrixXd> integrate_psi(const KalmanPath& kalman,
                                           const ModelSchedule& schedule, double horizon,
                                           const HomotopyParams& gammas);

// Both flows bundled for export.
TransitionPath transition_path(const KalmanPath& kalman, const ModelSchedule& schedule,
                               double horizon, const HomotopyParams& gammas);

// Assembles the optimal estimator parameters (Theorems above the flows).
DualSolution optimal_dual_params(const KalmanPath& kalman, const ModelSchedule& schedule,
                                 const Eigen::VectorXd& a, double horizon,
                                 const HomotopyParams& gammas);

// Dual process dy/dt = -Aᵀ y + Cᵀ u under optimal feedback u = Kᵀ y,
// integrated backward from y_T = a; equals Phi(t;T) a.
DualProcessPath dual_process(const KalmanPath& kalman, const ModelSchedule& schedule,
                             const Eigen::VectorXd& a, double horizon);

// Backward process xi_t = Psi(t;T) a.
DualProcessPath xi_process(const KalmanPath& kalman, const ModelSchedule& schedule,
                           const Eigen::VectorXd& a, double horizon,
                           const HomotopyParams& gammas);

// Quadratic form q(t) = xi_tᵀ Sigma_t xi_t along a xi path.
Eigen::VectorXd xi_quadratic_form(const DualProcessPath& xi, const KalmanPath& kalman);

// y path under a prescribed (open-loop) control u on the grid, backward from
// y_T = a: dy/dt = -Aᵀ y + Cᵀ u_t.
Eigen::MatrixXd integrate_dual_open_loop(const ModelSchedule& schedule, const TimeGrid& grid,
                                         const Eigen::MatrixXd& u, const Eigen::VectorXd& a,
                                         double horizon);

// LQ cost y_0ᵀ Sigma_0 y_0 + ∫ (yᵀ Q y + uᵀ R u) dt by trapezoidal
// quadrature. The caller supplies a (y, u) pair solving the dual ODE; a
// finite-difference residual check warns on stderr if it does not.
double lq_cost(const ModelSchedule& schedule, const DualProcessPath& y,
               const Eigen::MatrixXd& u);

// S̄_T = b_Tᵀ m0 + c_Tᵀ(x̄0 - m0) + Σ u_kᵀ dz_k + Σ v_kᵀ db̄_k + Σ w_kᵀ dw̄_k
// with left-endpoint (Itô) sums over k = 0..horizon_index-1.
double evaluate_estimator(const DualSolution& sol, const Eigen::MatrixXd& dz,
                          const Eigen::VectorXd& x0_bar, const Eigen::MatrixXd& db_bar,
                          const Eigen::MatrixXd& dw_bar, const Eigen::VectorXd& prior_mean);

}  // namespace lgpf
