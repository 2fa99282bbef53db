#pragma once

// Bell pair engineering on a stratified network: decide which strata admit a
// maximally entangled pair with the reference site, synthesize the coupling
// strengths that produce it at a chosen readout time, and simulate or certify
// the resulting single-excitation dynamics.

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spinnet/graph.hpp"
#include "spinnet/spectral.hpp"

namespace spinnet {

// A polynomial row that takes at most two distinct values whose product is -1.
struct FeasibleRow {
  int stratum = 0;
  double p_plus = 0.0;              // positive cluster center
  double p_minus = 0.0;             // negative cluster center
  std::vector<int> assignment;      // per support point: 0 -> p_plus, 1 -> p_minus
};

struct BellDesign {
  int stratum = 0;
  double xi0 = 0.0;
  double xi_delta = 0.0;
  std::vector<int> windings;   // integer turns added per support point
  Eigen::VectorXd tau;         // accumulated phase targets at the readout time
  Eigen::VectorXd couplings;   // J_0..J_d
  double tstar = 1.0;
};

struct VerifyReport {
  double gamma0_abs = 0.0;
  double gammai_abs = 0.0;
  double saturation = 0.0;  // 2 |gamma_0 gamma_i|, concurrence over bound
  std::optional<double> concurrence;
  std::optional<double> bound;
  double jacobi_deviation = 0.0;              // against the small dense oracle
  std::optional<double> dense_deviation;      // against the full graph evolution
  bool pass = false;
};

struct AmplitudeTrajectory {
  Eigen::VectorXd times;
  std::vector<Eigen::VectorXcd> gamma;
  Eigen::VectorXd concurrence;  // bound-normalized when the stratum size is unknown
};

double entanglement_bound(int stratum_size);

// Scans rows 1..d of the polynomial table for the two-value condition.
// Clustering is relative to the largest magnitude in the row.
std::vector<FeasibleRow> scan_feasible_rows(const Eigen::MatrixXd& pmat,
                                            double tol = 1e-8);

// Phase targets and coupling strengths for a Bell pair on the given row.
BellDesign design_couplings(const SpectralData& sd, const FeasibleRow& row,
                            double xi0 = 0.0, const std::vector<int>& windings = {},
                            double tstar = 1.0);

// H = (1/tstar) sum_k J_k P_k(A) as a dense real symmetric matrix.
Eigen::MatrixXd hamiltonian_matrix(const Graph& g, const SzegoJacobi& c,
                                   const BellDesign& design);

// Stratum amplitudes at scaled time s = t / tstar from the spectral sum.
Eigen::VectorXcd evolve_spectral(const SpectralData& sd, const Eigen::VectorXd& tau,
                                 double s);

// exp(-i H t) applied to a basis vector, via dense eigendecomposition.
Eigen::VectorXcd evolve_dense(const Eigen::MatrixXcd& H, int origin, double t);

double concurrence_pair(const Eigen::VectorXcd& v, int m, int k);

double concurrence_stratum(const Eigen::VectorXcd& gamma, int stratum,
                           int stratum_size);

// Certifies a design against both the small tridiagonal oracle and, when the
// graph is given, the full dense evolution projected onto stratum states.
VerifyReport verify_design(const Graph& g, int origin, const SzegoJacobi& c,
                           const BellDesign& design);
VerifyReport verify_design(const SzegoJacobi& c, const BellDesign& design);

// Samples the trajectory over [0, tmax]. The stratum size feeds the
// concurrence column; leave it empty for coefficient-only inputs.
AmplitudeTrajectory sample_trajectory(const SpectralData& sd, const BellDesign& design,
                                      double tmax, int samples,
                                      std::optional<int> stratum_size = {});

}  // namespace spinnet
