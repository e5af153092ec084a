#include "polygas/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "polygas/errors.hpp"
#include "polygas/special_fn.hpp"

namespace polygas {
namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mu0 times the squared first eigenvector components.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
  const auto n = diag.size();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    J(i, i) = diag(i);
    if (i + 1 < n) J(i, i + 1) = J(i + 1, i) = off(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) fail(ErrorCode::Numerical, "quadrature: eigen-decomposition failed");
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    q.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    q.weights[i] = mu0 * v0 * v0;
  }
  return q;
}

}  // namespace

QuadratureRule gauss_hermite(int n) {
  if (n < 1) fail(ErrorCode::Domain, "gauss_hermite: n must be >= 1");
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n), e(std::max(n - 1, 1));
  for (int i = 1; i < n; ++i) e(i - 1) = std::sqrt(0.5 * i);
  return golub_welsch(d, e, std::sqrt(std::numbers::pi));
}

QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1) fail(ErrorCode::Domain, "gauss_laguerre: n must be >= 1");
  if (!(alpha > -1.0)) fail(ErrorCode::Domain, "gauss_laguerre: alpha must be > -1");
  Eigen::VectorXd d(n), e(std::max(n - 1, 1));
  for (int i = 0; i < n; ++i) d(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) e(i - 1) = std::sqrt(i * (i + alpha));
  return golub_welsch(d, e, gamma_fn(alpha + 1.0));
}

}  // namespace polygas
