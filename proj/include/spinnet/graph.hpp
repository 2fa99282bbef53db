#pragma once

// Undirected graph machinery for stratified spin networks: breadth-first
// stratification around a reference site, regularity checks on the strata,
// and extraction of the three-term coupling coefficients that the rest of
// the toolkit runs on.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinnet/errors.hpp"

namespace spinnet {

// Simple connected graph with precomputed all-pairs shortest-path distances.
// Instances come from build_graph() and are treated as immutable afterwards.
struct Graph {
  int n = 0;
  Eigen::MatrixXi adjacency;  // 0/1, symmetric, zero diagonal
  Eigen::MatrixXi distances;  // finite for connected graphs
  int diameter = 0;           // max over all vertex pairs
};

// Distance matrices A_0..A_d: (A_i)_{xy} = 1 iff dist(x,y) = i.
// A_0 is the identity and the sum over i is the all-ones matrix.
struct DistanceMatrices {
  std::vector<Eigen::MatrixXi> mats;
};

struct Stratification {
  int origin = 0;
  std::vector<std::vector<int>> strata;  // V_0..V_d, ascending vertex ids
  std::vector<int> sizes;                // n_i = |V_i|
  int diameter = 0;                      // eccentricity of the origin
};

// Neighbor counts of a vertex in stratum l towards strata l-1, l, l+1.
struct StratumDegrees {
  int down = 0;
  int flat = 0;
  int up = 0;
  bool operator==(const StratumDegrees&) const = default;
};

// A stratification is regular when the degree triple depends only on the
// stratum index. The witness is a same-stratum vertex pair whose triples
// differ, present exactly when is_isg is false.
struct IsgVerdict {
  bool is_isg = false;
  std::vector<StratumDegrees> degrees;
  std::optional<std::pair<int, int>> witness;
};

// Three-term coefficients: omega_1..omega_d (strictly positive) and
// alpha_0..alpha_d, indexed from zero in the vectors.
struct SzegoJacobi {
  std::vector<double> omega;
  std::vector<double> alpha;
  int d() const { return static_cast<int>(omega.size()); }
};

// Builds a graph from an edge list. Duplicate edges collapse; self loops and
// out-of-range endpoints are rejected, as are disconnected graphs.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

DistanceMatrices distance_matrices(const Graph& g);

Stratification stratify(const Graph& g, int origin);

IsgVerdict isg_check(const Graph& g, int origin);

// Coefficient extraction from per-stratum degrees; every value is an exact
// integer. Cross-checked internally against the matrix elements of the
// adjacency operator between normalized stratum states.
SzegoJacobi szego_jacobi(const Graph& g, int origin);

// The last stratum holds a single vertex.
bool is_antipodal(const Stratification& s);

// omega reads the same from both ends and alpha is centrally symmetric.
bool is_reflective(const SzegoJacobi& c, double rel_tol = 1e-9);

// Unit-norm stratum indicator states as columns of an n-by-(d+1) matrix.
Eigen::MatrixXd stratum_states(const Graph& g, const Stratification& s);

}  // namespace spinnet
