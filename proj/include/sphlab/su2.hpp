#pragma once

// Spin-j representations of SU(2) in the weight basis m = j, j-1, ..., -j.
//
// D^j(U) = exp(-i alpha J_z) exp(-i beta J_y) exp(-i gamma J_z), where the
// half-angles are read directly off U so that half-integer spins are exact:
//   U = [[e^{-i(a+g)/2} cos(b/2), -e^{-i(a-g)/2} sin(b/2)],
//        [e^{ i(a-g)/2} sin(b/2),  e^{ i(a+g)/2} cos(b/2)]].

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "sphlab/group.hpp"

namespace sphlab {

struct SpinMatrices {
  CMatrix jx;
  CMatrix jy;
  CMatrix jz;
};

/// Hermitian angular momentum matrices for spin two_j / 2.
inline SpinMatrices spin_matrices(int two_j) {
  const int d = two_j + 1;
  const double j = 0.5 * two_j;
  CMatrix jplus = CMatrix::Zero(d, d);
  CMatrix jz = CMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const double m = j - a;
    jz(a, a) = m;
    if (a > 0) jplus(a - 1, a) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const CMatrix jminus = jplus.adjoint();
  const Complex im(0.0, 1.0);
  return {0.5 * (jplus + jminus), (jplus - jminus) / (2.0 * im), jz};
}

/// Evaluator for the spin-j irrep of SU(2). The J_y eigen-factorization is
/// computed once at construction.
class SpinRep {
 public:
  explicit SpinRep(int two_j) : two_j_(two_j) {
    if (two_j < 0) throw Error(ErrorCode::domain, "spin must be nonnegative");
    const SpinMatrices s = spin_matrices(two_j);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(s.jy);
    jy_vectors_ = eig.eigenvectors();
    jy_values_ = eig.eigenvalues();
    m_values_.resize(two_j + 1);
    for (int a = 0; a <= two_j; ++a) m_values_(a) = 0.5 * two_j - a;
  }

  int two_j() const { return two_j_; }
  int dim() const { return two_j_ + 1; }

  /// exp(-i beta J_y).
  CMatrix small_d(double beta) const {
    if (beta == 0.0) return CMatrix::Identity(dim(), dim());
    const Complex im(0.0, 1.0);
    Eigen::VectorXcd phases(jy_values_.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(-im * beta * jy_values_(i));
    return jy_vectors_ * phases.asDiagonal() * jy_vectors_.adjoint();
  }

  CMatrix from_euler(double alpha, double beta, double gamma) const {
    const Complex im(0.0, 1.0);
    Eigen::VectorXcd left(dim()), right(dim());
    for (Eigen::Index a = 0; a < left.size(); ++a) {
      left(a) = std::exp(-im * alpha * m_values_(a));
      right(a) = std::exp(-im * gamma * m_values_(a));
    }
    return left.asDiagonal() * small_d(beta) * right.asDiagonal();
  }

  CMatrix operator()(const Eigen::Matrix2cd& u) const {
    const double arg00 = std::arg(u(0, 0));
    const double arg10 = std::arg(u(1, 0));
    const double beta = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
    return from_euler(arg10 - arg00, beta, -arg00 - arg10);
  }

 private:
  int two_j_;
  CMatrix jy_vectors_;
  Eigen::VectorXd jy_values_;
  Eigen::VectorXd m_values_;
};

}  // namespace sphlab
