#pragma once

// Distance combinatorics beyond a single origin: intersection numbers, the
// product identity on distance matrices, coefficient extraction from the
// intersection table, and the polynomial identity A_i = P_i(A).

#include <optional>
#include <string>
#include <vector>

#include "spinnet/graph.hpp"

namespace spinnet {

struct IntersectionNumbers {
  int d = 0;
  std::vector<int> stratum_sizes;  // n_i = p[0][i][i]
  // p[k][i][j] = number of z at distance i from x and j from y, dist(x,y) = k
  std::vector<std::vector<std::vector<long long>>> p;
};

// Two same-distance pairs whose (i, j) walk counts differ.
struct SchemeWitness {
  int x = 0, y = 0, x2 = 0, y2 = 0;
  int i = 0, j = 0;
  long long count_xy = 0, count_x2y2 = 0;
};

struct SchemeVerdict {
  bool is_scheme = false;
  std::optional<SchemeWitness> witness;
  std::optional<IntersectionNumbers> table;
};

struct NotScheme : Error {
  NotScheme(const std::string& msg, const SchemeWitness& w)
      : Error(ErrorKind::NotScheme, msg), witness(w) {}
  SchemeWitness witness;
};

SchemeVerdict analyze_scheme(const Graph& g);

// Table access that throws NotScheme (with witness) on failure.
IntersectionNumbers intersection_numbers(const Graph& g);

// Max-abs entry of A_i A_j - sum_k p[k][i][j] A_k over all i, j; exact
// integer arithmetic, zero for a scheme.
long long bose_mesner_residual(const DistanceMatrices& dm,
                               const IntersectionNumbers& in);

// Coefficients from the intersection table alone; cross-validated elsewhere
// against the per-origin extraction.
SzegoJacobi scheme_szego_jacobi(const IntersectionNumbers& in);

// Max-abs deviation of A_i - sqrt(n_i) P_i(A) over all distance classes.
double adjacency_polynomial_check(const Graph& g, const SzegoJacobi& c);

}  // namespace spinnet
