#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "spinnet/catalog.hpp"
#include "spinnet/graph.hpp"

using namespace spinnet;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return build_graph(n, e);
}

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), VertexOutOfRange);
  CHECK_THROWS_AS(build_graph(3, {{0, -1}}), VertexOutOfRange);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), SelfLoop);
  CHECK_THROWS_AS(build_graph(4, {{0, 1}, {2, 3}}), Disconnected);
  CHECK_THROWS_AS(build_graph(2, {}), Disconnected);
}

TEST_CASE("duplicate edges collapse") {
  const Graph g = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.adjacency(0, 1) == 1);
  CHECK(g.adjacency(1, 0) == 1);
  CHECK(g.adjacency.sum() == 2);
}

TEST_CASE("distances and diameter on a six cycle") {
  const Graph g = catalog::cycle(6);
  CHECK(g.n == 6);
  CHECK(g.diameter == 3);
  CHECK(g.distances(0, 3) == 3);
  CHECK(g.distances(2, 5) == 3);
  CHECK(g.distances(1, 2) == 1);
  CHECK(g.distances(4, 4) == 0);
}

TEST_CASE("distance matrices partition the vertex pairs") {
  const Graph g = catalog::hypercube(3);
  const DistanceMatrices dm = distance_matrices(g);
  REQUIRE(static_cast<int>(dm.mats.size()) == g.diameter + 1);
  CHECK(dm.mats[0] == Eigen::MatrixXi::Identity(g.n, g.n));
  Eigen::MatrixXi sum = Eigen::MatrixXi::Zero(g.n, g.n);
  for (const auto& m : dm.mats) sum += m;
  CHECK(sum == Eigen::MatrixXi::Ones(g.n, g.n));
}

TEST_CASE("stratification of the six cycle") {
  const Graph g = catalog::cycle(6);
  const Stratification s = stratify(g, 0);
  REQUIRE(s.diameter == 3);
  CHECK(s.sizes == std::vector<int>{1, 2, 2, 1});
  CHECK(s.strata[0] == std::vector<int>{0});
  CHECK(s.strata[1] == std::vector<int>{1, 5});
  CHECK(s.strata[2] == std::vector<int>{2, 4});
  CHECK(s.strata[3] == std::vector<int>{3});
  CHECK(is_antipodal(s));
}

TEST_CASE("odd cycles are not antipodal") {
  const Graph g = catalog::cycle(5);
  const Stratification s = stratify(g, 0);
  CHECK(s.sizes == std::vector<int>{1, 2, 2});
  CHECK_FALSE(is_antipodal(s));
}

TEST_CASE("path from an endpoint is stratum regular") {
  const Graph g = path(4);
  const IsgVerdict v = isg_check(g, 0);
  CHECK(v.is_isg);
  CHECK_FALSE(v.witness.has_value());
  REQUIRE(v.degrees.size() == 4);
  CHECK(v.degrees[1] == StratumDegrees{1, 0, 1});
  CHECK(v.degrees[3] == StratumDegrees{1, 0, 0});

  const SzegoJacobi c = szego_jacobi(g, 0);
  CHECK(c.omega == std::vector<double>{1, 1, 1});
  CHECK(c.alpha == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("path from an inner vertex fails with a witness") {
  const Graph g = path(4);
  const IsgVerdict v = isg_check(g, 1);
  CHECK_FALSE(v.is_isg);
  REQUIRE(v.witness.has_value());
  const auto [a, b] = *v.witness;
  // The two distance-one vertices 0 and 2 disagree on their upward degree.
  CHECK(std::min(a, b) == 0);
  CHECK(std::max(a, b) == 2);
  CHECK_THROWS_AS(szego_jacobi(g, 1), NotIsg);
}

TEST_CASE("six cycle coefficients") {
  const Graph g = catalog::cycle(6);
  const SzegoJacobi c = szego_jacobi(g, 0);
  CHECK(c.d() == 3);
  CHECK(c.omega == std::vector<double>{2, 1, 2});
  CHECK(c.alpha == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("three cube coefficients") {
  const SzegoJacobi c = szego_jacobi(catalog::hypercube(3), 0);
  CHECK(c.omega == std::vector<double>{3, 4, 3});
  CHECK(c.alpha == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("triangle carries a flat term") {
  const SzegoJacobi c = szego_jacobi(triangle(), 0);
  CHECK(c.omega == std::vector<double>{2});
  CHECK(c.alpha == std::vector<double>{0, 1});
  CHECK_FALSE(is_reflective(c));
}

TEST_CASE("five cycle coefficients and reflectivity") {
  const SzegoJacobi c = szego_jacobi(catalog::cycle(5), 0);
  CHECK(c.omega == std::vector<double>{2, 1});
  CHECK(c.alpha == std::vector<double>{0, 0, 1});
  CHECK_FALSE(is_reflective(c));
}

TEST_CASE("reflectivity convention") {
  CHECK(is_reflective({{2, 1, 2}, {0, 0, 0, 0}}));
  CHECK(is_reflective({{4, 3, 6, 4, 6, 3, 4}, std::vector<double>(8, 0)}));
  CHECK(is_reflective({{16, 36, 36, 16}, {0, 6, 8, 6, 0}}));
  CHECK(is_reflective({{5, 4, 4, 5}, {0, 0, 3, 0, 0}}));
  CHECK_FALSE(is_reflective({{4, 2, 2, 2, 2}, std::vector<double>(6, 0)}));
  CHECK_FALSE(is_reflective({{4, 4}, {0, 2, 1}}));
}

TEST_CASE("edge counting between consecutive strata balances") {
  for (const char* name : {"cycle:6", "cycle:8", "hypercube:4", "johnson:5,2"}) {
    CAPTURE(name);
    const Graph g = std::get<Graph>(catalog::resolve(name));
    const Stratification s = stratify(g, 0);
    const IsgVerdict v = isg_check(g, 0);
    REQUIRE(v.is_isg);
    for (int l = 0; l + 1 <= s.diameter; ++l)
      CHECK(s.sizes[l] * v.degrees[l].up == s.sizes[l + 1] * v.degrees[l + 1].down);
  }
}

TEST_CASE("stratum states reproduce the coefficients as matrix elements") {
  const Graph g = catalog::hypercube(3);
  const Stratification s = stratify(g, 0);
  const SzegoJacobi c = szego_jacobi(g, 0);
  const Eigen::MatrixXd phi = stratum_states(g, s);

  // Columns are orthonormal indicators.
  const Eigen::MatrixXd gram = phi.transpose() * phi;
  CHECK((gram - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::MatrixXd t = phi.transpose() * g.adjacency.cast<double>() * phi;
  for (int l = 0; l <= 3; ++l) CHECK(t(l, l) == doctest::Approx(c.alpha[l]).epsilon(1e-12));
  for (int l = 1; l <= 3; ++l) {
    CHECK(t(l, l - 1) == doctest::Approx(std::sqrt(c.omega[l - 1])).epsilon(1e-12));
    CHECK(t(l - 1, l) == doctest::Approx(std::sqrt(c.omega[l - 1])).epsilon(1e-12));
  }
  // Off-tridiagonal elements vanish.
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      if (std::abs(i - j) > 1) CHECK(std::abs(t(i, j)) < 1e-12);
}

TEST_CASE("coefficients do not depend on the origin for vertex transitive graphs") {
  const Graph g = catalog::cycle(6);
  const SzegoJacobi ref = szego_jacobi(g, 0);
  for (int origin = 1; origin < g.n; ++origin) {
    const SzegoJacobi c = szego_jacobi(g, origin);
    CHECK(c.omega == ref.omega);
    CHECK(c.alpha == ref.alpha);
  }
  const Graph q = catalog::hypercube(4);
  const SzegoJacobi qref = szego_jacobi(q, 0);
  CHECK(szego_jacobi(q, 7).omega == qref.omega);
  CHECK(szego_jacobi(q, 15).omega == qref.omega);
}

TEST_CASE("coefficients survive relabeling") {
  // Reverse the labels of the six cycle: vertex v -> 5 - v.
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 6; ++v) edges.push_back({5 - v, 5 - ((v + 1) % 6)});
  const Graph g = build_graph(6, edges);
  const SzegoJacobi c = szego_jacobi(g, 5);  // image of vertex 0
  CHECK(c.omega == std::vector<double>{2, 1, 2});
  CHECK(c.alpha == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("distance matrices map the origin onto scaled stratum states") {
  for (const auto& entry : catalog::entries()) {
    if (!entry.constructible) continue;
    CAPTURE(entry.name);
    const Graph g = std::get<Graph>(catalog::resolve(entry.name));
    const Stratification s = stratify(g, 0);
    const Eigen::MatrixXd phi = stratum_states(g, s);
    const DistanceMatrices dm = distance_matrices(g);
    Eigen::VectorXd e0 = Eigen::VectorXd::Zero(g.n);
    e0[0] = 1.0;
    for (int i = 0; i <= s.diameter; ++i) {
      const Eigen::VectorXd got = dm.mats[i].cast<double>() * e0;
      const Eigen::VectorXd want = std::sqrt(double(s.sizes[i])) * phi.col(i);
      CHECK((got - want).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("restratifying from the antipode mirrors sizes and coefficients") {
  for (const char* name : {"cycle:6", "hypercube:3", "hypercube:4"}) {
    CAPTURE(name);
    const Graph g = std::get<Graph>(catalog::resolve(name));
    const Stratification s = stratify(g, 0);
    REQUIRE(is_antipodal(s));
    const int antipode = s.strata.back().front();
    const int d = s.diameter;

    const Stratification s2 = stratify(g, antipode);
    REQUIRE(s2.diameter == d);
    for (int i = 0; i <= d; ++i) CHECK(s2.sizes[i] == s.sizes[d - i]);

    const SzegoJacobi c = szego_jacobi(g, 0);
    const SzegoJacobi c2 = szego_jacobi(g, antipode);
    for (int i = 1; i <= d; ++i) CHECK(c2.omega[i - 1] == c.omega[d + 1 - i - 1]);
    for (int i = 0; i <= d; ++i) CHECK(c2.alpha[i] == c.alpha[d - i]);
  }
}

TEST_CASE("johnson strata") {
  const Stratification s52 = stratify(catalog::johnson(5, 2), 0);
  CHECK(s52.sizes == std::vector<int>{1, 6, 3});
  const Stratification s63 = stratify(catalog::johnson(6, 3), 0);
  CHECK(s63.sizes == std::vector<int>{1, 9, 9, 1});
  CHECK(is_antipodal(s63));
}
