#pragma once

// Spectral side of the three-term coefficients: the symmetric tridiagonal
// matrix they define, its eigenvalues (the support points), the weights of
// the induced distribution, and the orthonormal polynomial table evaluated
// on that support.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "spinnet/errors.hpp"
#include "spinnet/graph.hpp"

namespace spinnet {

struct JacobiMatrix {
  Eigen::VectorXd diag;     // alpha_0..alpha_d
  Eigen::VectorXd offdiag;  // sqrt(omega_1)..sqrt(omega_d)
  int size() const { return static_cast<int>(diag.size()); }
};

// Support points ascending; pmat(i, l) = P_i(a_l) with P_0 identically one.
struct SpectralData {
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd weights;
  Eigen::MatrixXd pmat;
};

JacobiMatrix jacobi_matrix(const SzegoJacobi& c);

// Tridiagonal symmetric eigensolve. Every eigenvalue is checked against the
// monic recurrence residual and the spectrum must be simple.
Eigen::VectorXd eigenvalues(const JacobiMatrix& jm);

// Weights via the quotient of the shifted polynomial and the derivative of
// the monic one, cross-checked against squared first components of the
// tridiagonal eigenvectors.
Eigen::VectorXd weights(const SzegoJacobi& c, const Eigen::VectorXd& evals);

Eigen::MatrixXd p_matrix(const SzegoJacobi& c, const Eigen::VectorXd& evals);

// Convenience composition of the three steps above.
SpectralData spectral_data(const SzegoJacobi& c);

// Max-abs entry of P diag(w) P^T minus the identity.
double orthogonality_residual(const SpectralData& sd);

std::complex<double> expectation(const SpectralData& sd,
                                 const std::function<std::complex<double>(double)>& g);

// True when every entry of the last polynomial row is +-1 within tol.
bool reflective_spectrum_check(const SpectralData& sd, double tol = 1e-8);

// P_0(x)..P_d(x) by the normalized three-term recurrence.
std::vector<double> polynomials_at(const SzegoJacobi& c, double x);

// P_i(A) v for i = 0..d by the same recurrence applied to a vector.
std::vector<Eigen::VectorXd> apply_polynomials(const SzegoJacobi& c,
                                               const Eigen::MatrixXd& A,
                                               const Eigen::VectorXd& v);

// sum_k coeffs_k P_k(A), accumulated with a rolling recurrence.
Eigen::MatrixXd polynomial_combination(const SzegoJacobi& c, const Eigen::MatrixXd& A,
                                       const Eigen::VectorXd& coeffs);

// Dense symmetric matrix form of jacobi_matrix, used as the small evolution
// oracle for coefficient-only inputs.
Eigen::MatrixXd jacobi_dense(const SzegoJacobi& c);

}  // namespace spinnet
