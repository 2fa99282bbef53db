#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "spinnet/bell.hpp"
#include "spinnet/catalog.hpp"
#include "spinnet/graph.hpp"
#include "spinnet/spectral.hpp"

using namespace spinnet;
using std::numbers::pi;

namespace {

SzegoJacobi free_coeffs(std::vector<double> omega) {
  std::vector<double> alpha(omega.size() + 1, 0.0);
  return SzegoJacobi{std::move(omega), std::move(alpha)};
}

std::vector<int> strata_of(const std::vector<FeasibleRow>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.push_back(r.stratum);
  return out;
}

const FeasibleRow& row_for(const std::vector<FeasibleRow>& rows, int stratum) {
  for (const auto& r : rows)
    if (r.stratum == stratum) return r;
  REQUIRE(false);
  return rows.front();
}

}  // namespace

TEST_CASE("entanglement bound") {
  CHECK(entanglement_bound(1) == doctest::Approx(1.0));
  CHECK(entanglement_bound(2) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(entanglement_bound(9) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("feasible strata of the reference networks") {
  CHECK(strata_of(scan_feasible_rows(spectral_data(free_coeffs({1})).pmat)) ==
        std::vector<int>{1});
  CHECK(strata_of(scan_feasible_rows(spectral_data(free_coeffs({2, 1, 2})).pmat)) ==
        std::vector<int>{2, 3});
  CHECK(strata_of(scan_feasible_rows(spectral_data(free_coeffs({4, 2, 2, 4})).pmat)) ==
        std::vector<int>{4});
  CHECK(strata_of(scan_feasible_rows(spectral_data(free_coeffs({4, 2, 2, 2, 2})).pmat)) ==
        std::vector<int>{3, 4});
}

TEST_CASE("feasible rows carry the two cluster values") {
  const SpectralData sd = spectral_data(free_coeffs({2, 1, 2}));
  const auto rows = scan_feasible_rows(sd.pmat);
  const FeasibleRow& r2 = row_for(rows, 2);
  CHECK(r2.p_plus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r2.p_minus == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r2.p_plus * r2.p_minus == doctest::Approx(-1.0).epsilon(1e-9));
  const FeasibleRow& r3 = row_for(rows, 3);
  CHECK(r3.p_plus == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r3.p_minus == doctest::Approx(-1.0).epsilon(1e-9));
  REQUIRE(r3.assignment.size() == 4);
  // Top row alternates, so the assignment does too.
  CHECK(r3.assignment == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("two site design") {
  const SpectralData sd = spectral_data(free_coeffs({1}));
  const auto rows = scan_feasible_rows(sd.pmat);
  const BellDesign d = design_couplings(sd, row_for(rows, 1));
  CHECK(d.xi_delta == doctest::Approx(pi / 2).epsilon(1e-12));
  CHECK(d.tau[0] == doctest::Approx(-pi / 4).epsilon(1e-12));
  CHECK(d.tau[1] == doctest::Approx(pi / 4).epsilon(1e-12));
  CHECK(std::abs(d.couplings[0]) <= 1e-12);
  CHECK(d.couplings[1] == doctest::Approx(pi / 4).epsilon(1e-12));

  const Eigen::VectorXcd gamma = evolve_spectral(sd, d.tau, 1.0);
  CHECK(std::abs(gamma[0] - std::complex<double>(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(gamma[1] - std::complex<double>(0, -1 / std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("four cycle design") {
  const SpectralData sd = spectral_data(free_coeffs({2, 2}));
  const BellDesign d = design_couplings(sd, row_for(scan_feasible_rows(sd.pmat), 2));
  CHECK(std::abs(d.couplings[0]) <= 1e-12);
  CHECK(std::abs(d.couplings[1]) <= 1e-12);
  CHECK(d.couplings[2] == doctest::Approx(pi / 4).epsilon(1e-12));

  const Eigen::VectorXcd gamma = evolve_spectral(sd, d.tau, 1.0);
  CHECK(std::abs(gamma[0]) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(gamma[1]) < 1e-12);
  CHECK(std::abs(gamma[2]) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("couplings solve the phase target system") {
  // P^T J = tau has a unique solution; the weighted projection must match it.
  const SzegoJacobi c = free_coeffs({4, 2, 2, 2, 2});
  const SpectralData sd = spectral_data(c);
  for (const auto& row : scan_feasible_rows(sd.pmat)) {
    const BellDesign d = design_couplings(sd, row);
    const Eigen::VectorXd solved =
        sd.pmat.transpose().colPivHouseholderQr().solve(d.tau);
    CHECK((solved - d.couplings).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("hamiltonian matrix for the two site chain is the scaled adjacency") {
  const Graph g = catalog::hypercube(1);
  const SzegoJacobi c = szego_jacobi(g, 0);
  const SpectralData sd = spectral_data(c);
  const BellDesign d = design_couplings(sd, row_for(scan_feasible_rows(sd.pmat), 1));
  const Eigen::MatrixXd h = hamiltonian_matrix(g, c, d);
  const Eigen::MatrixXd want = (pi / 4) * g.adjacency.cast<double>();
  CHECK((h - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("hamiltonian matrix for the four cycle couples antipodes only") {
  const Graph g = catalog::cycle(4);
  const SzegoJacobi c = szego_jacobi(g, 0);
  const SpectralData sd = spectral_data(c);
  const BellDesign d = design_couplings(sd, row_for(scan_feasible_rows(sd.pmat), 2));
  const Eigen::MatrixXd h = hamiltonian_matrix(g, c, d);
  const DistanceMatrices dm = distance_matrices(g);
  const Eigen::MatrixXd want = (pi / 4) * dm.mats[2].cast<double>();
  CHECK((h - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rescaling the readout time rescales the couplings") {
  const SpectralData sd = spectral_data(free_coeffs({2, 1, 2}));
  const auto row = row_for(scan_feasible_rows(sd.pmat), 3);
  const BellDesign d1 = design_couplings(sd, row, 0.0, {}, 1.0);
  const BellDesign d2 = design_couplings(sd, row, 0.0, {}, 2.5);
  CHECK((d1.couplings - d2.couplings).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(d2.tstar == 2.5);
}

TEST_CASE("probability is conserved along the trajectory") {
  const SpectralData sd = spectral_data(free_coeffs({2, 1, 2}));
  const auto row = row_for(scan_feasible_rows(sd.pmat), 3);
  const BellDesign d = design_couplings(sd, row);
  const AmplitudeTrajectory tr = sample_trajectory(sd, d, 1.0, 11, 1);
  REQUIRE(tr.times.size() == 11);
  CHECK(tr.times[0] == 0.0);
  CHECK(tr.times[10] == doctest::Approx(1.0));
  for (int s = 0; s < 11; ++s)
    CHECK(tr.gamma[s].squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tr.concurrence[10] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("winding numbers change couplings but not the readout state") {
  const SpectralData sd = spectral_data(free_coeffs({4, 2, 2, 2, 2}));
  const auto row = row_for(scan_feasible_rows(sd.pmat), 4);
  const BellDesign base = design_couplings(sd, row);
  const BellDesign wound = design_couplings(sd, row, 0.0, {1, 0, -2, 0, 3, -1});
  CHECK((base.couplings - wound.couplings).cwiseAbs().maxCoeff() > 0.1);
  const Eigen::VectorXcd g1 = evolve_spectral(sd, base.tau, 1.0);
  const Eigen::VectorXcd g2 = evolve_spectral(sd, wound.tau, 1.0);
  CHECK((g1 - g2).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("the phase offset rotates the readout state globally") {
  const SpectralData sd = spectral_data(free_coeffs({2, 2}));
  const auto row = row_for(scan_feasible_rows(sd.pmat), 2);
  const BellDesign base = design_couplings(sd, row, 0.0);
  const BellDesign shifted = design_couplings(sd, row, 0.7);
  const Eigen::VectorXcd g1 = evolve_spectral(sd, base.tau, 1.0);
  const Eigen::VectorXcd g2 = evolve_spectral(sd, shifted.tau, 1.0);
  const std::complex<double> phase = std::polar(1.0, -0.7);
  CHECK((g1 * phase - g2).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("designs on saturating rows verify") {
  for (const char* name : {"cycle:4", "cycle:6", "cycle:8", "hypercube:3", "hypercube:4"}) {
    CAPTURE(name);
    const Graph g = std::get<Graph>(catalog::resolve(name));
    const SzegoJacobi c = szego_jacobi(g, 0);
    const SpectralData sd = spectral_data(c);
    const auto rows = scan_feasible_rows(sd.pmat);
    REQUIRE_FALSE(rows.empty());
    const BellDesign d = design_couplings(sd, rows.back());
    const VerifyReport rep = verify_design(g, 0, c, d);
    CHECK(rep.pass);
    CHECK(rep.saturation == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rep.gamma0_abs == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK(rep.gammai_abs == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK(rep.jacobi_deviation < 1e-8);
    REQUIRE(rep.dense_deviation.has_value());
    CHECK(*rep.dense_deviation < 1e-8);
    REQUIRE(rep.concurrence.has_value());
    REQUIRE(rep.bound.has_value());
    CHECK(*rep.concurrence == doctest::Approx(*rep.bound).epsilon(1e-8));
  }
}

TEST_CASE("every mirror symmetric catalog entry saturates at its antipode") {
  for (const auto& entry : spinnet::catalog::entries()) {
    const auto resolved = spinnet::catalog::resolve(entry.name);
    const SzegoJacobi c = std::holds_alternative<Graph>(resolved)
                              ? szego_jacobi(std::get<Graph>(resolved), 0)
                              : std::get<SzegoJacobi>(resolved);
    if (!is_reflective(c)) continue;
    CAPTURE(entry.name);
    const SpectralData sd = spectral_data(c);
    const auto rows = scan_feasible_rows(sd.pmat);
    REQUIRE_FALSE(rows.empty());
    REQUIRE(rows.back().stratum == c.d());
    const BellDesign d = design_couplings(sd, rows.back());
    const VerifyReport rep = verify_design(c, d);
    CHECK(rep.pass);
    CHECK(rep.saturation >= 1.0 - 1e-8);
  }
}

TEST_CASE("coefficient only verification reports saturation without concurrence") {
  const SzegoJacobi c = free_coeffs({4, 2, 2, 2, 2});
  const SpectralData sd = spectral_data(c);
  const BellDesign d = design_couplings(sd, row_for(scan_feasible_rows(sd.pmat), 4));
  const VerifyReport rep = verify_design(c, d);
  CHECK(rep.pass);
  CHECK(rep.saturation == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_FALSE(rep.concurrence.has_value());
  CHECK_FALSE(rep.dense_deviation.has_value());
}

TEST_CASE("rows whose cluster values cannot lie on the unit circle are rejected") {
  const SpectralData sd = spectral_data(free_coeffs({2, 2}));
  FeasibleRow bad;
  bad.stratum = 1;
  bad.p_plus = 3.0;
  bad.p_minus = -1.0 / 3.0;
  bad.assignment = {1, 0, 0};
  CHECK_THROWS_AS(design_couplings(sd, bad), InfeasibleRow);
}

TEST_CASE("pair and stratum concurrence") {
  Eigen::VectorXcd v(3);
  v << std::complex<double>(1 / std::sqrt(2.0), 0), 0.0,
      std::complex<double>(0, -1 / std::sqrt(2.0));
  CHECK(concurrence_pair(v, 0, 2) == doctest::Approx(1.0));
  CHECK(concurrence_stratum(v, 2, 1) == doctest::Approx(1.0));
  CHECK(concurrence_stratum(v, 2, 4) == doctest::Approx(0.5));
}

TEST_CASE("dense evolution requires a hermitian matrix") {
  Eigen::MatrixXcd h(2, 2);
  h << 0.0, 1.0, 2.0, 0.0;
  CHECK_THROWS_AS(evolve_dense(h, 0, 1.0), NotHermitian);
}
