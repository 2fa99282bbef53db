#include "spinnet/scheme.hpp"

#include <cmath>
#include <string>

#include "spinnet/spectral.hpp"

namespace spinnet {

SchemeVerdict analyze_scheme(const Graph& g) {
  const int d = g.diameter;
  const DistanceMatrices dm = distance_matrices(g);

  SchemeVerdict verdict;
  IntersectionNumbers table;
  table.d = d;
  table.p.assign(d + 1, std::vector<std::vector<long long>>(
                            d + 1, std::vector<long long>(d + 1, 0)));

  // First pair seen at each distance, the comparison representative.
  std::vector<std::pair<int, int>> rep(d + 1, {-1, -1});
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int k = g.distances(x, y);
      if (rep[k].first < 0) rep[k] = {x, y};
    }

  for (int i = 0; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      const Eigen::MatrixXi prod = dm.mats[i] * dm.mats[j];
      std::vector<long long> value(d + 1, -1);
      for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
          const int k = g.distances(x, y);
          if (value[k] < 0) {
            value[k] = prod(x, y);
          } else if (prod(x, y) != value[k]) {
            verdict.is_scheme = false;
            verdict.witness = SchemeWitness{rep[k].first, rep[k].second, x, y,
                                            i, j, value[k], prod(x, y)};
            return verdict;
          }
        }
      for (int k = 0; k <= d; ++k) {
        table.p[k][i][j] = value[k];
        table.p[k][j][i] = value[k];
      }
    }

  table.stratum_sizes.resize(d + 1);
  for (int i = 0; i <= d; ++i)
    table.stratum_sizes[i] = static_cast<int>(table.p[0][i][i]);

  verdict.is_scheme = true;
  verdict.table = std::move(table);
  return verdict;
}

IntersectionNumbers intersection_numbers(const Graph& g) {
  SchemeVerdict verdict = analyze_scheme(g);
  if (!verdict.is_scheme) {
    const SchemeWitness& w = *verdict.witness;
    throw NotScheme("walk counts through distances (" + std::to_string(w.i) + ", " +
                        std::to_string(w.j) + ") differ between pairs (" +
                        std::to_string(w.x) + "," + std::to_string(w.y) + ") and (" +
                        std::to_string(w.x2) + "," + std::to_string(w.y2) + "): " +
                        std::to_string(w.count_xy) + " vs " +
                        std::to_string(w.count_x2y2),
                    w);
  }
  return std::move(*verdict.table);
}

long long bose_mesner_residual(const DistanceMatrices& dm,
                               const IntersectionNumbers& in) {
  const int d = in.d;
  if (static_cast<int>(dm.mats.size()) != d + 1)
    throw DimensionMismatch("distance matrices do not match the table depth");
  long long worst = 0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      Eigen::MatrixXi residual = dm.mats[i] * dm.mats[j];
      for (int k = 0; k <= d; ++k)
        residual -= static_cast<int>(in.p[k][i][j]) * dm.mats[k];
      worst = std::max(worst,
                       static_cast<long long>(residual.cwiseAbs().maxCoeff()));
    }
  return worst;
}

SzegoJacobi scheme_szego_jacobi(const IntersectionNumbers& in) {
  const int d = in.d;
  SzegoJacobi c;
  c.alpha.resize(d + 1);
  c.omega.resize(d);
  for (int i = 0; i <= d; ++i) c.alpha[i] = static_cast<double>(in.p[i][1][i]);
  // Matching the three-term action on stratum states:
  //   omega_i = (n_{i-1} / n_i) * (p^{i-1}_{1,i})^2, an exact integer.
  for (int i = 1; i <= d; ++i) {
    const double cross = static_cast<double>(in.p[i - 1][1][i]);
    c.omega[i - 1] = static_cast<double>(in.stratum_sizes[i - 1]) * cross * cross /
                     static_cast<double>(in.stratum_sizes[i]);
  }
  return c;
}

double adjacency_polynomial_check(const Graph& g, const SzegoJacobi& c) {
  const int d = c.d();
  const DistanceMatrices dm = distance_matrices(g);
  if (static_cast<int>(dm.mats.size()) != d + 1)
    throw DimensionMismatch("coefficient depth does not match the graph diameter");

  // A_i e_o sums the stratum while P_i(A) e_o lands on the unit stratum
  // state, so the identity carries a sqrt(n_i) scale.
  const std::vector<int> sizes = stratify(g, 0).sizes;

  const Eigen::MatrixXd A = g.adjacency.cast<double>();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(g.n, g.n);
  double worst = (dm.mats[0].cast<double>() - eye).cwiseAbs().maxCoeff();
  if (d == 0) return worst;

  Eigen::MatrixXd prev = eye;
  Eigen::MatrixXd cur = (A - c.alpha[0] * eye) / std::sqrt(c.omega[0]);
  worst = std::max(worst, (dm.mats[1].cast<double>() - std::sqrt(double(sizes[1])) * cur)
                              .cwiseAbs()
                              .maxCoeff());
  for (int i = 1; i < d; ++i) {
    Eigen::MatrixXd next =
        (A * cur - c.alpha[i] * cur - std::sqrt(c.omega[i - 1]) * prev) /
        std::sqrt(c.omega[i]);
    prev.swap(cur);
    cur.swap(next);
    worst = std::max(
        worst, (dm.mats[i + 1].cast<double>() - std::sqrt(double(sizes[i + 1])) * cur)
                   .cwiseAbs()
                   .maxCoeff());
  }
  return worst;
}

}  // namespace spinnet
