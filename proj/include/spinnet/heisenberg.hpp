#pragma once

// Full many-body realization: an isotropic exchange Hamiltonian whose pair
// couplings depend only on the graph distance, its restriction to the
// single-excitation sector, and the check that the full dynamics reproduces
// the sector dynamics up to a global phase.

#include <vector>

#include <Eigen/Dense>

#include "spinnet/graph.hpp"

namespace spinnet {

// Affine fit of the one-excitation restriction of a single distance class:
// restriction = slope * A_i + shift * identity.
struct ClassRestriction {
  int cls = 0;
  double slope = 0.0;
  double shift = 0.0;
  double residual = 0.0;
};

// H = (1 / 2 tstar) sum_{i>=1} J_i sum_{dist(k,l)=i, k<l} sigma_k . sigma_l
// over all qubit pairs, dense in the 2^n computational basis. Basis state
// |k> has qubit k up and the rest down.
Eigen::MatrixXd heisenberg_hamiltonian(const Graph& g,
                                       const Eigen::VectorXd& couplings,
                                       double tstar);

// Fits every distance class; throws when a residual exceeds the tolerance.
std::vector<ClassRestriction> sector_restriction_check(const Graph& g,
                                                       double tol = 1e-10);

// Max-abs entry of the commutator with total z magnetization; exactly zero
// for exchange Hamiltonians.
double magnetization_commutator_residual(const Eigen::MatrixXd& H, int n_qubits);

// Evolves |origin> under the full Hamiltonian (couplings rescaled by the
// fitted slopes) and under the sector matrix built from distance matrices,
// and returns the max amplitude deviation after removing the global phase
// produced by the identity shifts.
double full_vs_sector_evolution(const Graph& g, const Eigen::VectorXd& couplings,
                                double tstar, double t, int origin = 0);

}  // namespace spinnet
