#include "spinnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace spinnet {

namespace {

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.adjacency(u, v)) adj[u].push_back(v);
  return adj;
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside [0, " +
                           std::to_string(n) + ")");
}

}  // namespace

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0) throw Error(ErrorKind::InvalidInput, "vertex count must be positive");

  Graph g;
  g.n = n;
  g.adjacency = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw SelfLoop("self loop at vertex " + std::to_string(u));
    g.adjacency(u, v) = 1;  // duplicates collapse here
    g.adjacency(v, u) = 1;
  }

  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacency(u, v)) adj[u].push_back(v);

  g.distances = Eigen::MatrixXi::Constant(n, n, -1);
  for (int s = 0; s < n; ++s) {
    g.distances(s, s) = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (g.distances(s, v) < 0) {
          g.distances(s, v) = g.distances(s, u) + 1;
          q.push(v);
        }
      }
    }
  }

  g.diameter = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (g.distances(u, v) < 0)
        throw Disconnected("no walk between vertices " + std::to_string(u) +
                           " and " + std::to_string(v));
      g.diameter = std::max(g.diameter, g.distances(u, v));
    }
  return g;
}

DistanceMatrices distance_matrices(const Graph& g) {
  DistanceMatrices dm;
  dm.mats.reserve(g.diameter + 1);
  for (int i = 0; i <= g.diameter; ++i)
    dm.mats.push_back((g.distances.array() == i).cast<int>().matrix());
  return dm;
}

Stratification stratify(const Graph& g, int origin) {
  check_vertex(origin, g.n);
  Stratification s;
  s.origin = origin;
  s.diameter = g.distances.row(origin).maxCoeff();
  s.strata.assign(s.diameter + 1, {});
  for (int v = 0; v < g.n; ++v) s.strata[g.distances(origin, v)].push_back(v);
  s.sizes.resize(s.diameter + 1);
  for (int l = 0; l <= s.diameter; ++l) s.sizes[l] = static_cast<int>(s.strata[l].size());
  return s;
}

IsgVerdict isg_check(const Graph& g, int origin) {
  const Stratification s = stratify(g, origin);
  const auto adj = adjacency_lists(g);

  IsgVerdict verdict;
  verdict.degrees.resize(s.diameter + 1);
  for (int l = 0; l <= s.diameter; ++l) {
    bool first = true;
    StratumDegrees ref;
    for (int x : s.strata[l]) {
      StratumDegrees deg;
      for (int y : adj[x]) {
        int ly = g.distances(origin, y);
        if (ly == l - 1)
          ++deg.down;
        else if (ly == l)
          ++deg.flat;
        else
          ++deg.up;
      }
      if (first) {
        ref = deg;
        first = false;
      } else if (deg != ref) {
        verdict.is_isg = false;
        verdict.degrees.clear();
        verdict.witness = {s.strata[l].front(), x};
        return verdict;
      }
    }
    verdict.degrees[l] = ref;
  }
  verdict.is_isg = true;
  return verdict;
}

SzegoJacobi szego_jacobi(const Graph& g, int origin) {
  const Stratification s = stratify(g, origin);
  const IsgVerdict verdict = isg_check(g, origin);
  if (!verdict.is_isg) {
    auto [a, b] = *verdict.witness;
    throw NotIsg("stratification from vertex " + std::to_string(origin) +
                 " is not regular: vertices " + std::to_string(a) + " and " +
                 std::to_string(b) + " share a stratum but differ in degrees");
  }

  const int d = s.diameter;
  SzegoJacobi c;
  c.alpha.resize(d + 1);
  c.omega.resize(d);
  for (int l = 0; l <= d; ++l) c.alpha[l] = verdict.degrees[l].flat;
  // Edge counting between consecutive strata gives
  //   omega_l = up(l-1) * down(l),
  // which agrees with (n_l / n_{l-1}) * down(l)^2 and stays an exact integer.
  for (int l = 1; l <= d; ++l)
    c.omega[l - 1] =
        static_cast<double>(verdict.degrees[l - 1].up) * verdict.degrees[l].down;

  // Cross-check against the adjacency matrix elements between stratum states.
  const Eigen::MatrixXd phi = stratum_states(g, s);
  const Eigen::MatrixXd aphi = g.adjacency.cast<double>() * phi;
  constexpr double kTol = 1e-10;
  for (int l = 1; l <= d; ++l) {
    double direct = phi.col(l).dot(aphi.col(l - 1));
    if (std::abs(direct - std::sqrt(c.omega[l - 1])) > kTol)
      throw Error(ErrorKind::Numeric,
                  "internal: stratum coupling mismatch at index " + std::to_string(l));
  }
  for (int l = 0; l <= d; ++l) {
    double direct = phi.col(l).dot(aphi.col(l));
    if (std::abs(direct - c.alpha[l]) > kTol)
      throw Error(ErrorKind::Numeric,
                  "internal: stratum diagonal mismatch at index " + std::to_string(l));
  }
  return c;
}

bool is_antipodal(const Stratification& s) { return s.sizes.back() == 1; }

bool is_reflective(const SzegoJacobi& c, double rel_tol) {
  const int d = c.d();
  auto close = [rel_tol](double a, double b) {
    return std::abs(a - b) <= rel_tol * std::max({std::abs(a), std::abs(b), 1.0});
  };
  for (int i = 1; i <= d; ++i)
    if (!close(c.omega[i - 1], c.omega[d - i])) return false;
  for (int i = 0; i <= d; ++i)
    if (!close(c.alpha[i], c.alpha[d - i])) return false;
  return true;
}

Eigen::MatrixXd stratum_states(const Graph& g, const Stratification& s) {
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(g.n, s.diameter + 1);
  for (int l = 0; l <= s.diameter; ++l) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(s.sizes[l]));
    for (int v : s.strata[l]) phi(v, l) = norm;
  }
  return phi;
}

}  // namespace spinnet
