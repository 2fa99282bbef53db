#include "spinnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spinnet {

namespace {

void check_coefficients(const SzegoJacobi& c) {
  if (c.alpha.size() != c.omega.size() + 1)
    throw DimensionMismatch("alpha must hold one more entry than omega (got " +
                            std::to_string(c.alpha.size()) + " and " +
                            std::to_string(c.omega.size()) + ")");
  for (std::size_t i = 0; i < c.omega.size(); ++i)
    if (!(c.omega[i] > 0.0))
      throw NonPositiveOmega("omega_" + std::to_string(i + 1) + " = " +
                             std::to_string(c.omega[i]) + " must be positive");
}

// Monic recurrence value p_{d+1}(x) together with the largest intermediate
// magnitude, for residual scaling.
std::pair<double, double> monic_tail(const SzegoJacobi& c, double x) {
  const int d = c.d();
  double p = 1.0;
  double cur = x - c.alpha[0];  // p_1
  double scale = std::max(1.0, std::abs(cur));
  for (int i = 1; i <= d; ++i) {
    double next = (x - c.alpha[i]) * cur - c.omega[i - 1] * p;
    p = cur;
    cur = next;
    scale = std::max(scale, std::abs(cur));
  }
  return {cur, scale};
}

// Derivative of the monic polynomial of degree d+1 at x.
double monic_tail_derivative(const SzegoJacobi& c, double x) {
  const int d = c.d();
  double p = 1.0, dp = 0.0;
  double q = x - c.alpha[0], dq = 1.0;
  for (int i = 1; i <= d; ++i) {
    double qn = (x - c.alpha[i]) * q - c.omega[i - 1] * p;
    double dqn = q + (x - c.alpha[i]) * dq - c.omega[i - 1] * dp;
    p = q;
    dp = dq;
    q = qn;
    dq = dqn;
  }
  return dq;
}

// Shifted-coefficient polynomial of degree d (first coefficient pair dropped).
double shifted_value(const SzegoJacobi& c, double x) {
  const int d = c.d();
  if (d == 0) return 1.0;
  double prev = 1.0;
  double cur = x - c.alpha[1];
  for (int i = 1; i < d; ++i) {
    double next = (x - c.alpha[i + 1]) * cur - c.omega[i] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

JacobiMatrix jacobi_matrix(const SzegoJacobi& c) {
  check_coefficients(c);
  JacobiMatrix jm;
  const int d = c.d();
  jm.diag = Eigen::Map<const Eigen::VectorXd>(c.alpha.data(), d + 1);
  jm.offdiag.resize(d);
  for (int i = 0; i < d; ++i) jm.offdiag[i] = std::sqrt(c.omega[i]);
  return jm;
}

Eigen::VectorXd eigenvalues(const JacobiMatrix& jm) {
  const int m = jm.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(jm.diag, jm.offdiag, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("tridiagonal eigensolve did not converge");
  Eigen::VectorXd a = solver.eigenvalues();

  const double amax = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (int l = 1; l < m; ++l)
    if (a[l] - a[l - 1] < 1e-8 * amax)
      throw ConvergenceFailure("support points " + std::to_string(l - 1) + " and " +
                               std::to_string(l) + " collide");

  SzegoJacobi c;
  c.alpha.assign(jm.diag.data(), jm.diag.data() + m);
  c.omega.resize(m - 1);
  for (int i = 0; i + 1 < m; ++i) c.omega[i] = jm.offdiag[i] * jm.offdiag[i];
  for (int l = 0; l < m; ++l) {
    auto [tail, scale] = monic_tail(c, a[l]);
    if (std::abs(tail) > 1e-8 * scale)
      throw ConvergenceFailure("support point " + std::to_string(l) +
                               " fails the recurrence residual check");
  }
  return a;
}

Eigen::VectorXd weights(const SzegoJacobi& c, const Eigen::VectorXd& evals) {
  check_coefficients(c);
  const int m = c.d() + 1;
  if (evals.size() != m)
    throw DimensionMismatch("expected " + std::to_string(m) + " support points, got " +
                            std::to_string(evals.size()));

  Eigen::VectorXd w(m);
  for (int l = 0; l < m; ++l)
    w[l] = shifted_value(c, evals[l]) / monic_tail_derivative(c, evals[l]);

  // Independent route: squared first components of the normalized
  // tridiagonal eigenvectors, column order ascending as in evals.
  const JacobiMatrix jm = jacobi_matrix(c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(jm.diag, jm.offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("tridiagonal eigensolve did not converge");
  constexpr double kTol = 1e-9;
  for (int l = 0; l < m; ++l) {
    double first = solver.eigenvectors()(0, l);
    if (std::abs(w[l] - first * first) > kTol)
      throw WeightMismatch("weight " + std::to_string(l) +
                           " disagrees between quotient and eigenvector routes");
  }
  return w;
}

Eigen::MatrixXd p_matrix(const SzegoJacobi& c, const Eigen::VectorXd& evals) {
  check_coefficients(c);
  const int m = c.d() + 1;
  if (evals.size() != m)
    throw DimensionMismatch("expected " + std::to_string(m) + " support points, got " +
                            std::to_string(evals.size()));
  Eigen::MatrixXd pm(m, m);
  for (int l = 0; l < m; ++l) {
    auto vals = polynomials_at(c, evals[l]);
    for (int i = 0; i < m; ++i) pm(i, l) = vals[i];
  }
  return pm;
}

SpectralData spectral_data(const SzegoJacobi& c) {
  SpectralData sd;
  sd.eigenvalues = eigenvalues(jacobi_matrix(c));
  sd.weights = weights(c, sd.eigenvalues);
  sd.pmat = p_matrix(c, sd.eigenvalues);
  return sd;
}

double orthogonality_residual(const SpectralData& sd) {
  const int m = static_cast<int>(sd.eigenvalues.size());
  Eigen::MatrixXd gram =
      sd.pmat * sd.weights.asDiagonal() * sd.pmat.transpose() -
      Eigen::MatrixXd::Identity(m, m);
  return gram.cwiseAbs().maxCoeff();
}

std::complex<double> expectation(const SpectralData& sd,
                                 const std::function<std::complex<double>(double)>& g) {
  std::complex<double> acc = 0.0;
  for (int l = 0; l < sd.eigenvalues.size(); ++l)
    acc += g(sd.eigenvalues[l]) * sd.weights[l];
  return acc;
}

bool reflective_spectrum_check(const SpectralData& sd, double tol) {
  const int d = static_cast<int>(sd.pmat.rows()) - 1;
  for (int l = 0; l < sd.pmat.cols(); ++l)
    if (std::abs(std::abs(sd.pmat(d, l)) - 1.0) > tol) return false;
  return true;
}

std::vector<double> polynomials_at(const SzegoJacobi& c, double x) {
  check_coefficients(c);
  const int d = c.d();
  std::vector<double> vals(d + 1);
  vals[0] = 1.0;
  if (d == 0) return vals;
  vals[1] = (x - c.alpha[0]) / std::sqrt(c.omega[0]);
  for (int i = 1; i < d; ++i)
    vals[i + 1] = ((x - c.alpha[i]) * vals[i] - std::sqrt(c.omega[i - 1]) * vals[i - 1]) /
                  std::sqrt(c.omega[i]);
  return vals;
}

std::vector<Eigen::VectorXd> apply_polynomials(const SzegoJacobi& c,
                                               const Eigen::MatrixXd& A,
                                               const Eigen::VectorXd& v) {
  check_coefficients(c);
  const int d = c.d();
  std::vector<Eigen::VectorXd> out;
  out.reserve(d + 1);
  out.push_back(v);
  if (d == 0) return out;
  out.push_back((A * v - c.alpha[0] * v) / std::sqrt(c.omega[0]));
  for (int i = 1; i < d; ++i)
    out.push_back((A * out[i] - c.alpha[i] * out[i] -
                   std::sqrt(c.omega[i - 1]) * out[i - 1]) /
                  std::sqrt(c.omega[i]));
  return out;
}

Eigen::MatrixXd polynomial_combination(const SzegoJacobi& c, const Eigen::MatrixXd& A,
                                       const Eigen::VectorXd& coeffs) {
  check_coefficients(c);
  const int d = c.d();
  if (coeffs.size() != d + 1)
    throw DimensionMismatch("expected " + std::to_string(d + 1) + " coefficients, got " +
                            std::to_string(coeffs.size()));
  if (A.rows() != A.cols())
    throw DimensionMismatch("matrix argument must be square");

  const int n = static_cast<int>(A.rows());
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd acc = coeffs[0] * eye;
  if (d == 0) return acc;
  Eigen::MatrixXd prev = eye;
  Eigen::MatrixXd cur = (A - c.alpha[0] * eye) / std::sqrt(c.omega[0]);
  acc += coeffs[1] * cur;
  for (int i = 1; i < d; ++i) {
    Eigen::MatrixXd next =
        (A * cur - c.alpha[i] * cur - std::sqrt(c.omega[i - 1]) * prev) /
        std::sqrt(c.omega[i]);
    prev.swap(cur);
    cur.swap(next);
    acc += coeffs[i + 1] * cur;
  }
  return acc;
}

Eigen::MatrixXd jacobi_dense(const SzegoJacobi& c) {
  const JacobiMatrix jm = jacobi_matrix(c);
  const int m = jm.size();
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(m, m);
  dense.diagonal() = jm.diag;
  for (int i = 0; i + 1 < m; ++i) {
    dense(i, i + 1) = jm.offdiag[i];
    dense(i + 1, i) = jm.offdiag[i];
  }
  return dense;
}

}  // namespace spinnet
