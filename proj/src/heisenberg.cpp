#include "spinnet/heisenberg.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <string>

#include "spinnet/bell.hpp"

namespace spinnet {

namespace {

using Cx = std::complex<double>;

void check_qubits(const Graph& g, int cap, const char* what) {
  if (g.n > cap)
    throw TooManyQubits(std::string(what) + " capped at " + std::to_string(cap) +
                        " qubits, got " + std::to_string(g.n));
}

// Adds coeff * sigma_k . sigma_l to H in the computational basis:
// diagonal +-1 from the zz term, off-diagonal 2 between flipped pairs.
void add_exchange(Eigen::MatrixXd& H, int n, int k, int l, double coeff) {
  const int dim = 1 << n;
  const int bk = 1 << k, bl = 1 << l;
  for (int m = 0; m < dim; ++m) {
    const bool upk = m & bk, upl = m & bl;
    if (upk == upl) {
      H(m, m) += coeff;
    } else {
      H(m, m) -= coeff;
      H(m ^ bk ^ bl, m) += 2.0 * coeff;
    }
  }
}

// One-excitation restriction of the unit-coupling operator of one distance
// class, (1/2) sum_{dist=i, k<l} sigma_k . sigma_l, assembled directly.
Eigen::MatrixXd class_restriction(const Graph& g, int cls) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int k = 0; k < g.n; ++k)
    for (int l = k + 1; l < g.n; ++l) {
      if (g.distances(k, l) != cls) continue;
      // Pair term on basis |m>: diagonal -1/2 when m is an endpoint,
      // +1/2 otherwise; swaps the endpoints with amplitude 1.
      for (int m = 0; m < g.n; ++m)
        r(m, m) += (m == k || m == l) ? -0.5 : 0.5;
      r(k, l) += 1.0;
      r(l, k) += 1.0;
    }
  return r;
}

}  // namespace

Eigen::MatrixXd heisenberg_hamiltonian(const Graph& g,
                                       const Eigen::VectorXd& couplings,
                                       double tstar) {
  check_qubits(g, 14, "dense assembly");
  if (couplings.size() != g.diameter + 1)
    throw DimensionMismatch("need one coupling per distance class");
  if (!(tstar > 0.0))
    throw Error(ErrorKind::InvalidInput, "readout time must be positive");

  const int dim = 1 << g.n;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k < g.n; ++k)
    for (int l = k + 1; l < g.n; ++l) {
      const int cls = g.distances(k, l);
      if (cls < 1) continue;
      const double coeff = couplings[cls] / (2.0 * tstar);
      if (coeff != 0.0) add_exchange(H, g.n, k, l, coeff);
    }
  return H;
}

std::vector<ClassRestriction> sector_restriction_check(const Graph& g, double tol) {
  const DistanceMatrices dm = distance_matrices(g);
  std::vector<ClassRestriction> fits;
  for (int cls = 1; cls <= g.diameter; ++cls) {
    const Eigen::MatrixXd r = class_restriction(g, cls);
    const Eigen::MatrixXd ai = dm.mats[cls].cast<double>();
    // Least squares over (slope, shift); A_i and the identity are orthogonal
    // under the Frobenius inner product since A_i has a zero diagonal.
    ClassRestriction fit;
    fit.cls = cls;
    fit.slope = (r.cwiseProduct(ai)).sum() / ai.squaredNorm();
    fit.shift = r.trace() / static_cast<double>(g.n);
    fit.residual = (r - fit.slope * ai -
                    fit.shift * Eigen::MatrixXd::Identity(g.n, g.n))
                       .cwiseAbs()
                       .maxCoeff();
    if (fit.residual > tol)
      throw RestrictionNotAffine("distance class " + std::to_string(cls) +
                                 " restriction is not affine in its distance "
                                 "matrix (residual " +
                                 std::to_string(fit.residual) + ")");
    fits.push_back(fit);
  }
  return fits;
}

double magnetization_commutator_residual(const Eigen::MatrixXd& H, int n_qubits) {
  const int dim = 1 << n_qubits;
  if (H.rows() != dim || H.cols() != dim)
    throw DimensionMismatch("Hamiltonian does not match the qubit count");
  double worst = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const double dz = 0.5 * (std::popcount(static_cast<unsigned>(a)) -
                               std::popcount(static_cast<unsigned>(b)));
      worst = std::max(worst, std::abs(H(a, b) * dz));
    }
  return worst;
}

double full_vs_sector_evolution(const Graph& g, const Eigen::VectorXd& couplings,
                                double tstar, double t, int origin) {
  check_qubits(g, 12, "full evolution");
  if (origin < 0 || origin >= g.n)
    throw VertexOutOfRange("origin " + std::to_string(origin) + " outside [0, " +
                           std::to_string(g.n) + ")");

  const auto fits = sector_restriction_check(g);
  Eigen::VectorXd rescaled = couplings;
  double shift_rate = -couplings[0] / tstar;
  for (const auto& fit : fits) {
    rescaled[fit.cls] = couplings[fit.cls] / fit.slope;
    shift_rate += rescaled[fit.cls] * fit.shift / tstar;
  }

  const Eigen::MatrixXd hfull = heisenberg_hamiltonian(g, rescaled, tstar);
  const Eigen::VectorXcd psi_full =
      evolve_dense(hfull.cast<Cx>(), 1 << origin, t);

  const DistanceMatrices dm = distance_matrices(g);
  Eigen::MatrixXd hsec =
      couplings[0] * Eigen::MatrixXd::Identity(g.n, g.n) / tstar;
  for (int cls = 1; cls <= g.diameter; ++cls)
    hsec += couplings[cls] * dm.mats[cls].cast<double>() / tstar;
  const Eigen::VectorXcd psi_sec = evolve_dense(hsec.cast<Cx>(), origin, t);

  // The identity shifts amount to one global phase on the sector.
  const Cx phase = std::exp(Cx(0.0, -shift_rate * t));
  double dev = 0.0;
  const int dim = 1 << g.n;
  for (int m = 0; m < dim; ++m) {
    const unsigned um = static_cast<unsigned>(m);
    if (std::popcount(um) == 1) {
      const int k = std::countr_zero(um);
      dev = std::max(dev, std::abs(psi_full[m] - phase * psi_sec[k]));
    } else {
      dev = std::max(dev, std::abs(psi_full[m]));
    }
  }
  return dev;
}

}  // namespace spinnet
