#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "lgpf/duality.hpp"
#include "lgpf/kalman.hpp"
#include "lgpf/model.hpp"
#include "lgpf/time_grid.hpp"

namespace lgpf {

// Particle ensemble at a single time; one column per particle.
struct Ensemble {
  double t = 0.0;
  Eigen::MatrixXd particles;  // d x N

  int n() const { return static_cast<int>(particles.cols()); }
  int dim() const { return static_cast<int>(particles.rows()); }
};

// Empirical mean and covariance with the 1/(N-1) normalization.
struct EnsembleStats {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

enum class GainMode { Oracle, Empirical };

// Execution policy for the per-particle update kernel. Serial is the
// reference implementation; Parallel runs the same arithmetic under OpenMP
// and produces bit-identical results (per-particle counter RNG streams,
// deterministic reductions).
enum class ExecPolicy { Serial, Parallel };

struct FilterRun {
  FilterRun(TimeGrid g, HomotopyParams gam, GainMode m, std::uint64_t s)
      : grid(g), gammas(std::move(gam)), gain_mode(m), seed(s) {}

  TimeGrid grid;
  HomotopyParams gammas;
  GainMode gain_mode;
  std::uint64_t seed;
  std::vector<EnsembleStats> stats_path;       // n_steps+1 entries
  Ensemble final_state;
  std::vector<Eigen::MatrixXd> particle_path;  // empty unless requested (d x N per point)
};

// N i.i.d. draws from N(m0, Sigma0), reproducible from the seed.
// Throws InvalidCount for n < 2 (sample covariance undefined below that).
Ensemble init_ensemble(const ModelSchedule& schedule, int n, std::uint64_t seed);

// mean = (1/N) Σ x_i, cov = 1/(N-1) Σ (x_i - mean)(x_i - mean)ᵀ.
EnsembleStats ensemble_stats(const Ensemble& e);

// One Euler-Maruyama step of the homotopy McKean-Vlasov sde
//   dX̄ = A X̄ dt + γ₁ dB̄ + (1-γ₁²)/2 Q Σ⁻¹ (X̄ - m̄) dt
//        + K (dZ - C((1+γ₂²) X̄ + (1-γ₂²) m̄)/2 dt + γ₂ dW̄)
// for every particle, with the gain source (K, Σ, m̄) frozen for the step.
// Noise is drawn per particle from streams keyed by (seed, particle, step);
// db/dw may instead be supplied explicitly (d x N and m x N).
void homotopy_step(Ensemble& e, const ModelSchedule& schedule, const TimeGrid& grid,
                   int step_index, const Eigen::MatrixXd& gain, const Eigen::MatrixXd& cov,
                   const Eigen::VectorXd& mean_field, const HomotopyParams& gammas,
                   const Eigen::VectorXd& dz_k, std::uint64_t seed,
                   ExecPolicy policy = ExecPolicy::Serial);

void homotopy_step_with_noise(Ensemble& e, const ModelSchedule& schedule, const TimeGrid& grid,
                              int step_index, const Eigen::MatrixXd& gain,
                              const Eigen::MatrixXd& cov, const Eigen::VectorXd& mean_field,
                              const HomotopyParams& gammas, const Eigen::VectorXd& dz_k,
                              const Eigen::MatrixXd& db, const Eigen::MatrixXd& dw,
                              ExecPolicy policy = ExecPolicy::Serial);

// Runs the homotopy filter over the whole grid. Oracle mode runs the
// Kalman-Bucy filter internally on the same dz and feeds (K_t, Sigma_t, m_t);
// empirical mode recomputes (K⁽ᴺ⁾, Σ⁽ᴺ⁾, m⁽ᴺ⁾) from the ensemble each step,
// with the Σ⁽ᴺ⁾ inverse regularized by 1e-8·tr(Σ⁽ᴺ⁾)/d·I.
// Oracle mode accepts n >= 1; empirical mode needs n >= 2 and, while the
// Q Σ⁻¹ term is active (γ₁ ≠ ±1), n > d — otherwise
// SingularEmpiricalCovariance.
FilterRun run_filter(const ModelSchedule& schedule, const TimeGrid& grid,
                     const Eigen::MatrixXd& dz, int n, const HomotopyParams& gammas,
                     GainMode gain_mode, std::uint64_t seed,
                     ExecPolicy policy = ExecPolicy::Parallel,
                     bool keep_particle_path = false);

// Single particle driven by explicit noise increments (n_steps x d / x m)
// with the oracle gain source from `kalman`; returns the (n_steps+1) x d
// path. Uses the same step kernel as run_filter.
Eigen::MatrixXd propagate_particle(const ModelSchedule& schedule, const KalmanPath& kalman,
                                   const HomotopyParams& gammas, const Eigen::MatrixXd& dz,
                                   const Eigen::MatrixXd& db, const Eigen::MatrixXd& dw,
                                   const Eigen::VectorXd& x0);

}  // namespace lgpf
