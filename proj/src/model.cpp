#include "lgpf/model.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <sstream>

#include "lgpf/rng.hpp"

namespace lgpf {

namespace {

std::string slot_name(const std::string& what, int k, bool table) {
  if (!table) return what;
  std::ostringstream os;
  os << what << " at grid point " << k;
  return os.str();
}

// Symmetric positive definite check via LLT; rejects asymmetric, non-finite
// and non-PD matrices.
void check_spd(const Eigen::MatrixXd& m, const std::string& what) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(what + " must be square, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  if (!m.allFinite()) throw NonPositiveDefinite(what + " has non-finite entries");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) throw NonPositiveDefinite(what + " is not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw NonPositiveDefinite(what + " is not positive definite");
}

void check_shape(const MatrixSchedule& s, Eigen::Index rows, Eigen::Index cols,
                 const std::string& what) {
  const int n = s.is_constant() ? 1 : s.table_size();
  for (int k = 0; k < n; ++k) {
    const Eigen::MatrixXd& m = s.at(k);
    if (m.rows() != rows || m.cols() != cols)
      throw DimensionMismatch(slot_name(what, k, !s.is_constant()) + " has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(rows) + "x" +
                              std::to_string(cols));
    if (!m.allFinite())
      throw DimensionMismatch(slot_name(what, k, !s.is_constant()) + " has non-finite entries");
  }
}

void check_spd_schedule(const MatrixSchedule& s, const std::string& what) {
  const int n = s.is_constant() ? 1 : s.table_size();
  for (int k = 0; k < n; ++k) check_spd(s.at(k), slot_name(what, k, !s.is_constant()));
}

}  // namespace

Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& m, const std::string& what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw NonPositiveDefinite(what + " is not positive definite");
  return llt.matrixL();
}

int ModelSchedule::table_points() const {
  int n = 0;
  for (const MatrixSchedule* s : {&A_, &C_, &Q_, &R_}) n = std::max(n, s->table_size());
  return n;
}

void ModelSchedule::require_grid(const TimeGrid& grid) const {
  for (const MatrixSchedule* s : {&A_, &C_, &Q_, &R_}) {
    if (!s->is_constant() && s->table_size() != grid.n_points())
      throw GridMismatch("schedule table has " + std::to_string(s->table_size()) +
                         " entries but the grid has " + std::to_string(grid.n_points()) +
                         " points");
  }
}

ModelSchedule make_schedule(const ModelSpec& spec) {
  if (spec.dim_x < 1 || spec.dim_z < 1)
    throw DimensionMismatch("make_schedule: dim_x and dim_z must be >= 1");
  const Eigen::Index d = spec.dim_x;
  const Eigen::Index m = spec.dim_z;

  check_shape(spec.A, d, d, "A");
  check_shape(spec.C, m, d, "C");
  check_shape(spec.Q, d, d, "Q");
  check_shape(spec.R, m, m, "R");
  if (spec.m0.size() != d)
    throw DimensionMismatch("m0 has length " + std::to_string(spec.m0.size()) + ", expected " +
                            std::to_string(d));
  if (spec.Sigma0.rows() != d || spec.Sigma0.cols() != d)
    throw DimensionMismatch("Sigma0 must be dim_x x dim_x");
  if (!spec.m0.allFinite()) throw DimensionMismatch("m0 has non-finite entries");

  check_spd_schedule(spec.Q, "Q");
  check_spd_schedule(spec.R, "R");
  check_spd(spec.Sigma0, "Sigma0");

  ModelSchedule s;
  s.dim_x_ = spec.dim_x;
  s.dim_z_ = spec.dim_z;
  s.A_ = spec.A;
  s.C_ = spec.C;
  s.Q_ = spec.Q;
  s.R_ = spec.R;
  s.m0_ = spec.m0;
  s.Sigma0_ = 0.5 * (spec.Sigma0 + spec.Sigma0.transpose());
  return s;
}

Trajectory simulate_truth(const ModelSchedule& schedule, const TimeGrid& grid,
                          std::uint64_t seed) {
  schedule.require_grid(grid);
  const int d = schedule.dim_x();
  const int m = schedule.dim_z();
  const int n = grid.n_steps();
  const double dt = grid.dt();
  const double sqdt = std::sqrt(dt);

  // Cholesky factors of Q_k, R_k once per (distinct) grid point
  const bool q_const = schedule.table_points() == 0 || schedule.Q(0).data() == schedule.Q(1).data();
  std::vector<Eigen::MatrixXd> lq, lr;
  {
    const int nq = (schedule.table_points() == 0) ? 1 : grid.n_points();
    lq.reserve(nq);
    lr.reserve(nq);
    for (int k = 0; k < nq; ++k) {
      lq.push_back(cholesky_factor(schedule.Q(k), "Q"));
      lr.push_back(cholesky_factor(schedule.R(k), "R"));
    }
  }
  (void)q_const;
  auto lq_at = [&](int k) -> const Eigen::MatrixXd& { return lq.size() == 1 ? lq[0] : lq[k]; };
  auto lr_at = [&](int k) -> const Eigen::MatrixXd& { return lr.size() == 1 ? lr[0] : lr[k]; };

  Trajectory tr(grid, seed);
  tr.x.resize(n + 1, d);
  tr.dz.resize(n, m);
  tr.db.resize(n, d);
  tr.dw.resize(n, m);

  Eigen::VectorXd z(std::max(d, m));
  rng::NormalStream init(rng::substream(seed, rng::kTruthInit));
  init.fill(z.data(), d);
  Eigen::VectorXd x = schedule.prior_mean() + cholesky_factor(schedule.prior_cov(), "Sigma0") *
                                                  z.head(d);
  tr.x.row(0) = x.transpose();

  for (int k = 0; k < n; ++k) {
    rng::NormalStream sb(rng::substream(seed, rng::kTruthProcess, k));
    sb.fill(z.data(), d);
    const Eigen::VectorXd db = sqdt * (lq_at(k) * z.head(d));
    rng::NormalStream sw(rng::substream(seed, rng::kTruthObs, k));
    sw.fill(z.data(), m);
    const Eigen::VectorXd dw = sqdt * (lr_at(k) * z.head(m));

    const Eigen::VectorXd dz = (schedule.C(k) * x) * dt + dw;
    const Eigen::VectorXd x_next = x + (schedule.A(k) * x) * dt + db;

    tr.db.row(k) = db.transpose();
    tr.dw.row(k) = dw.transpose();
    tr.dz.row(k) = dz.transpose();
    tr.x.row(k + 1) = x_next.transpose();
    x = x_next;
  }
  return tr;
}

}  // namespace lgpf
