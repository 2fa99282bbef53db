#include "spinnet/bell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace spinnet {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865475244;

struct RowClusters {
  int count = 0;                 // distinct values found (capped at 3)
  double lo = 0.0, hi = 0.0;     // cluster centers when count == 2
  std::vector<int> member;       // 0 -> hi cluster, 1 -> lo cluster
};

RowClusters cluster_row(const Eigen::VectorXd& row, double tol) {
  const int m = static_cast<int>(row.size());
  const double thr = tol * std::max(row.cwiseAbs().maxCoeff(), 1e-300);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return row[a] < row[b]; });

  std::vector<std::vector<int>> groups;
  for (int idx : order) {
    if (groups.empty() || row[idx] - row[groups.back().back()] > thr)
      groups.push_back({idx});
    else
      groups.back().push_back(idx);
  }

  RowClusters rc;
  rc.count = static_cast<int>(groups.size());
  if (rc.count != 2) return rc;
  auto center = [&](const std::vector<int>& grp) {
    double s = 0.0;
    for (int idx : grp) s += row[idx];
    return s / static_cast<double>(grp.size());
  };
  rc.lo = center(groups[0]);
  rc.hi = center(groups[1]);
  rc.member.assign(m, 0);
  for (int idx : groups[0]) rc.member[idx] = 1;
  return rc;
}

void check_time_grid(double tmax, int samples) {
  if (!(tmax > 0.0))
    throw Error(ErrorKind::InvalidInput, "time horizon must be positive");
  if (samples < 2)
    throw Error(ErrorKind::InvalidInput, "need at least two time samples");
}

}  // namespace

double entanglement_bound(int stratum_size) {
  if (stratum_size <= 0)
    throw Error(ErrorKind::InvalidInput, "stratum size must be positive");
  return 1.0 / std::sqrt(static_cast<double>(stratum_size));
}

std::vector<FeasibleRow> scan_feasible_rows(const Eigen::MatrixXd& pmat, double tol) {
  std::vector<FeasibleRow> rows;
  for (int i = 1; i < pmat.rows(); ++i) {
    RowClusters rc = cluster_row(pmat.row(i), tol);
    if (rc.count != 2) continue;
    if (std::abs(rc.lo * rc.hi + 1.0) > tol) continue;
    FeasibleRow fr;
    fr.stratum = i;
    fr.p_plus = rc.hi;
    fr.p_minus = rc.lo;
    fr.assignment = std::move(rc.member);
    rows.push_back(std::move(fr));
  }
  return rows;
}

BellDesign design_couplings(const SpectralData& sd, const FeasibleRow& row,
                            double xi0, const std::vector<int>& windings,
                            double tstar) {
  const int m = static_cast<int>(sd.eigenvalues.size());
  if (!(tstar > 0.0))
    throw Error(ErrorKind::InvalidInput, "readout time must be positive");
  if (row.stratum < 1 || row.stratum >= m)
    throw Error(ErrorKind::InvalidInput, "target stratum outside polynomial table");
  if (!windings.empty() && static_cast<int>(windings.size()) != m)
    throw DimensionMismatch("need one winding per support point");

  // The two row values must be roots of Y^2 + 2 cos(xi_delta) Y - 1.
  const double cosxi = -(row.p_plus + row.p_minus) / 2.0;
  if (std::abs(cosxi) > 1.0 + 1e-12)
    throw InfeasibleRow("row values " + std::to_string(row.p_plus) + ", " +
                        std::to_string(row.p_minus) +
                        " admit no phase offset: |p+ + p-| exceeds 2");
  const double xi_delta = std::acos(std::clamp(cosxi, -1.0, 1.0));

  BellDesign de;
  de.stratum = row.stratum;
  de.xi0 = xi0;
  de.xi_delta = xi_delta;
  de.windings = windings.empty() ? std::vector<int>(m, 0) : windings;
  de.tstar = tstar;
  de.tau.resize(m);
  for (int l = 0; l < m; ++l) {
    const double p = sd.pmat(row.stratum, l);
    de.tau[l] = 2.0 * kPi * de.windings[l] + xi0 +
                std::atan2(p * std::sin(xi_delta), 1.0 + p * std::cos(xi_delta));
  }
  de.couplings = sd.pmat * (sd.weights.asDiagonal() * de.tau);

  // Consistency: each support point must carry a pure phase, and the
  // couplings must reproduce the phase targets through the polynomial table.
  for (int l = 0; l < m; ++l) {
    const double p = sd.pmat(row.stratum, l);
    const double r = std::abs(Cx(1.0 + p * std::cos(xi_delta), p * std::sin(xi_delta))) *
                     kInvSqrt2;
    if (std::abs(r - 1.0) > 1e-10)
      throw Error(ErrorKind::Numeric,
                  "design consistency: support point " + std::to_string(l) +
                      " does not land on the unit circle");
  }
  const Eigen::VectorXd back = sd.pmat.transpose() * de.couplings;
  const double tau_scale = std::max(1.0, de.tau.cwiseAbs().maxCoeff());
  if ((back - de.tau).cwiseAbs().maxCoeff() > 1e-9 * tau_scale)
    throw Error(ErrorKind::Numeric, "design consistency: phase targets not reproduced");
  return de;
}

Eigen::MatrixXd hamiltonian_matrix(const Graph& g, const SzegoJacobi& c,
                                   const BellDesign& design) {
  if (design.couplings.size() != c.d() + 1)
    throw DimensionMismatch("coupling vector does not match coefficient count");
  return polynomial_combination(c, g.adjacency.cast<double>(), design.couplings) /
         design.tstar;
}

Eigen::VectorXcd evolve_spectral(const SpectralData& sd, const Eigen::VectorXd& tau,
                                 double s) {
  const int m = static_cast<int>(sd.eigenvalues.size());
  if (tau.size() != m)
    throw DimensionMismatch("need one phase target per support point");
  Eigen::VectorXcd weighted(m);
  for (int l = 0; l < m; ++l)
    weighted[l] = std::exp(Cx(0.0, -tau[l] * s)) * sd.weights[l];
  return sd.pmat.cast<Cx>() * weighted;
}

Eigen::VectorXcd evolve_dense(const Eigen::MatrixXcd& H, int origin, double t) {
  const int n = static_cast<int>(H.rows());
  if (H.cols() != n) throw DimensionMismatch("Hamiltonian must be square");
  if (origin < 0 || origin >= n)
    throw VertexOutOfRange("origin index " + std::to_string(origin) +
                           " outside [0, " + std::to_string(n) + ")");
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw NotHermitian("Hamiltonian is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("dense eigensolve did not converge");
  Eigen::VectorXcd coeffs = solver.eigenvectors().adjoint().col(origin);
  for (int k = 0; k < n; ++k)
    coeffs[k] *= std::exp(Cx(0.0, -solver.eigenvalues()[k] * t));
  return solver.eigenvectors() * coeffs;
}

double concurrence_pair(const Eigen::VectorXcd& v, int m, int k) {
  return 2.0 * std::abs(v[m]) * std::abs(v[k]);
}

double concurrence_stratum(const Eigen::VectorXcd& gamma, int stratum,
                           int stratum_size) {
  return 2.0 * std::abs(gamma[0]) * std::abs(gamma[stratum]) /
         std::sqrt(static_cast<double>(stratum_size));
}

namespace {

VerifyReport verify_core(const SzegoJacobi& c, const BellDesign& design) {
  const SpectralData sd = spectral_data(c);
  VerifyReport rep;
  const Eigen::VectorXcd gamma = evolve_spectral(sd, design.tau, 1.0);
  rep.gamma0_abs = std::abs(gamma[0]);
  rep.gammai_abs = std::abs(gamma[design.stratum]);
  rep.saturation = 2.0 * rep.gamma0_abs * rep.gammai_abs;

  // Small oracle: evolve under the polynomial of the dense tridiagonal matrix.
  const Eigen::MatrixXd hsub =
      polynomial_combination(c, jacobi_dense(c), design.couplings) / design.tstar;
  const Eigen::VectorXcd sub =
      evolve_dense(hsub.cast<Cx>(), 0, design.tstar);
  rep.jacobi_deviation = (gamma - sub).cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace

VerifyReport verify_design(const SzegoJacobi& c, const BellDesign& design) {
  VerifyReport rep = verify_core(c, design);
  constexpr double kTol = 1e-8;
  rep.pass = std::abs(rep.gamma0_abs - kInvSqrt2) <= kTol &&
             std::abs(rep.gammai_abs - kInvSqrt2) <= kTol &&
             rep.jacobi_deviation <= kTol;
  return rep;
}

VerifyReport verify_design(const Graph& g, int origin, const SzegoJacobi& c,
                           const BellDesign& design) {
  VerifyReport rep = verify_core(c, design);
  const Stratification strat = stratify(g, origin);
  if (design.stratum > strat.diameter)
    throw Error(ErrorKind::InvalidInput, "design stratum exceeds the stratification");

  const SpectralData sd = spectral_data(c);
  const Eigen::VectorXcd gamma = evolve_spectral(sd, design.tau, 1.0);
  const Eigen::MatrixXd h = hamiltonian_matrix(g, c, design);
  const Eigen::VectorXcd psi = evolve_dense(h.cast<Cx>(), origin, design.tstar);
  const Eigen::VectorXcd projected =
      stratum_states(g, strat).transpose().cast<Cx>() * psi;
  rep.dense_deviation = (gamma - projected).cwiseAbs().maxCoeff();

  const int ni = strat.sizes[design.stratum];
  rep.bound = entanglement_bound(ni);
  rep.concurrence = rep.saturation / std::sqrt(static_cast<double>(ni));

  constexpr double kTol = 1e-8;
  rep.pass = std::abs(rep.gamma0_abs - kInvSqrt2) <= kTol &&
             std::abs(rep.gammai_abs - kInvSqrt2) <= kTol &&
             rep.jacobi_deviation <= kTol && *rep.dense_deviation <= kTol;
  return rep;
}

AmplitudeTrajectory sample_trajectory(const SpectralData& sd, const BellDesign& design,
                                      double tmax, int samples,
                                      std::optional<int> stratum_size) {
  check_time_grid(tmax, samples);
  AmplitudeTrajectory tr;
  tr.times.resize(samples);
  tr.concurrence.resize(samples);
  tr.gamma.reserve(samples);
  const double norm =
      stratum_size ? 1.0 / std::sqrt(static_cast<double>(*stratum_size)) : 1.0;
  for (int s = 0; s < samples; ++s) {
    const double t = tmax * static_cast<double>(s) / (samples - 1);
    tr.times[s] = t;
    tr.gamma.push_back(evolve_spectral(sd, design.tau, t / design.tstar));
    const Eigen::VectorXcd& gm = tr.gamma.back();
    tr.concurrence[s] =
        2.0 * std::abs(gm[0]) * std::abs(gm[design.stratum]) * norm;
  }
  return tr;
}

}  // namespace spinnet
