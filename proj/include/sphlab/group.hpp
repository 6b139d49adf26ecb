#pragma once

// Orthogonal group elements and the so(n) basis.
//
// Conventions used throughout the library:
//   * Matrices act on column vectors; the origin of the sphere S^n is the
//     last standard basis vector e_{n+1}.
//   * K = SO(n) or O(n) sits inside G = SO(n+1) as the top-left n x n block
//     (see embed_K_in_G).
//   * I_{ki} (1 <= i < k <= n) has +1 at (i,k) and -1 at (k,i), 1-based.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "sphlab/angles.hpp"
#include "sphlab/config.hpp"
#include "sphlab/error.hpp"

namespace sphlab {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

enum class GroupTag { SO2, SO3, SO4, O2, O3 };

inline int group_dimension(GroupTag tag) {
  switch (tag) {
    case GroupTag::SO2:
    case GroupTag::O2: return 2;
    case GroupTag::SO3:
    case GroupTag::O3: return 3;
    case GroupTag::SO4: return 4;
  }
  return 0;
}

inline bool is_special(GroupTag tag) {
  return tag == GroupTag::SO2 || tag == GroupTag::SO3 || tag == GroupTag::SO4;
}

inline std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::SO2: return "SO(2)";
    case GroupTag::SO3: return "SO(3)";
    case GroupTag::SO4: return "SO(4)";
    case GroupTag::O2: return "O(2)";
    case GroupTag::O3: return "O(3)";
  }
  return "?";
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// An orthogonal matrix with its cached determinant sign.
class GroupElement {
 public:
  explicit GroupElement(Matrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
      throw Error(ErrorCode::dimension, "group element must be a nonempty square matrix");
    }
    const auto n = matrix_.rows();
    const double defect = max_abs(Matrix(matrix_.transpose() * matrix_ - Matrix::Identity(n, n)));
    if (!(defect <= orthogonality_tolerance())) {
      throw Error(ErrorCode::contract_violation,
                  "matrix is not orthogonal (max |g^T g - I| = " + std::to_string(defect) + ")");
    }
    const double det = matrix_.determinant();
    det_sign_ = det > 0 ? 1 : -1;
    if (std::abs(det - det_sign_) > determinant_tolerance) {
      throw Error(ErrorCode::contract_violation, "determinant is not +-1");
    }
  }

  static GroupElement identity(std::size_t n) {
    return GroupElement(Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  }

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  int det_sign() const { return det_sign_; }
  double operator()(Eigen::Index r, Eigen::Index c) const { return matrix_(r, c); }

  GroupElement inverse() const { return GroupElement(matrix_.transpose(), det_sign_); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::dimension, "group elements of different size");
    return GroupElement(a.matrix_ * b.matrix_);
  }

 private:
  GroupElement(Matrix m, int sign) : matrix_(std::move(m)), det_sign_(sign) {}

  Matrix matrix_;
  int det_sign_ = 1;
};

/// Basis element I_{ki} of so(n), indices 1-based with i < k.
struct LieBasisElement {
  std::size_t k;
  std::size_t i;
  std::size_t n;

  Matrix matrix() const {
    if (!(1 <= i && i < k && k <= n)) {
      throw Error(ErrorCode::domain, "I_{ki} requires 1 <= i < k <= n");
    }
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    m(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(i - 1)) = -1.0;
    m(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(k - 1)) = 1.0;
    return m;
  }
};

inline Matrix lie_basis(std::size_t n, std::size_t k, std::size_t i) { return LieBasisElement{k, i, n}.matrix(); }

/// All I_{ki}, ordered by k then i.
inline std::vector<LieBasisElement> lie_basis_elements(std::size_t n) {
  std::vector<LieBasisElement> out;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t i = 1; i < k; ++i) out.push_back({k, i, n});
  }
  return out;
}

enum class RootSign { plus_plus, minus_minus, plus_minus, minus_plus };

/// Root vector X_{+-e_j +- e_k} of so(2l, C) for the Cartan subalgebra spanned by
/// I_{21}, I_{43}, ..., I_{2l,2l-1}.
inline CMatrix root_vector(std::size_t ell, std::size_t j, std::size_t k, RootSign sign) {
  if (!(1 <= j && j < k && k <= ell)) throw Error(ErrorCode::domain, "root vector requires 1 <= j < k <= l");
  const std::size_t n = 2 * ell;
  const Matrix a = lie_basis(n, 2 * k - 1, 2 * j - 1);
  const Matrix b = lie_basis(n, 2 * k, 2 * j);
  const Matrix c = lie_basis(n, 2 * k - 1, 2 * j);
  const Matrix d = lie_basis(n, 2 * k, 2 * j - 1);
  const Complex im(0.0, 1.0);
  switch (sign) {
    case RootSign::plus_plus: return (a - b).cast<Complex>() - im * (c + d).cast<Complex>();
    case RootSign::minus_minus: return (a - b).cast<Complex>() + im * (c + d).cast<Complex>();
    case RootSign::plus_minus: return (a + b).cast<Complex>() - im * (c - d).cast<Complex>();
    case RootSign::minus_plus: return (a + b).cast<Complex>() + im * (c - d).cast<Complex>();
  }
  return {};
}

/// Root vectors for the positive system {e_j + e_k, e_j - e_k : j < k}.
inline std::vector<CMatrix> positive_root_vectors(std::size_t ell) {
  std::vector<CMatrix> out;
  for (std::size_t j = 1; j <= ell; ++j) {
    for (std::size_t k = j + 1; k <= ell; ++k) {
      out.push_back(root_vector(ell, j, k, RootSign::plus_plus));
      out.push_back(root_vector(ell, j, k, RootSign::plus_minus));
    }
  }
  return out;
}

inline void require_antisymmetric(const Matrix& x) {
  if (x.rows() != x.cols()) throw Error(ErrorCode::contract_violation, "Lie algebra element must be square");
  if (max_abs(Matrix(x + x.transpose())) > 1e-12) {
    throw Error(ErrorCode::contract_violation, "Lie algebra element is not antisymmetric");
  }
}

/// Matrix exponential of an antisymmetric matrix. Closed forms for n = 2, 3;
/// scaling and squaring with a Taylor kernel otherwise.
inline GroupElement exp_so(const Matrix& x) {
  require_antisymmetric(x);
  const auto n = x.rows();
  if (n == 1) return GroupElement::identity(1);
  if (n == 2) {
    const double t = 0.5 * (x(0, 1) - x(1, 0));
    Matrix r(2, 2);
    r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
    return GroupElement(r);
  }
  if (n == 3) {
    const double wx = 0.5 * (x(2, 1) - x(1, 2));
    const double wy = 0.5 * (x(0, 2) - x(2, 0));
    const double wz = 0.5 * (x(1, 0) - x(0, 1));
    Matrix w(3, 3);
    w << 0, -wz, wy, wz, 0, -wx, -wy, wx, 0;
    const double theta = std::sqrt(wx * wx + wy * wy + wz * wz);
    double a;  // sin(t)/t
    double b;  // (1 - cos t)/t^2
    if (theta < 1e-4) {
      const double t2 = theta * theta;
      a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
      b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
    } else {
      a = std::sin(theta) / theta;
      b = (1.0 - std::cos(theta)) / (theta * theta);
    }
    return GroupElement(Matrix(Matrix::Identity(3, 3) + a * w + b * w * w));
  }
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Matrix xs = x * scale;
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k < 64; ++k) {
    term = term * xs / static_cast<double>(k);
    sum += term;
    if (max_abs(term) < 1e-16) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return GroupElement(sum);
}

/// exp(theta I_{ki}) in SO(n): a rotation in the (i,k) coordinate plane.
inline GroupElement plane_rotation(std::size_t n, std::size_t k, std::size_t i, double theta) {
  if (!(1 <= i && i < k && k <= n)) throw Error(ErrorCode::domain, "plane rotation requires 1 <= i < k <= n");
  Matrix m = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const auto ii = static_cast<Eigen::Index>(i - 1);
  const auto kk = static_cast<Eigen::Index>(k - 1);
  m(ii, ii) = std::cos(theta);
  m(kk, kk) = std::cos(theta);
  m(ii, kk) = std::sin(theta);
  m(kk, ii) = -std::sin(theta);
  return GroupElement(m);
}

/// Counterclockwise rotation about the z axis, exp(alpha L_z).
inline GroupElement rotation_z(double alpha) {
  Matrix m(3, 3);
  m << std::cos(alpha), -std::sin(alpha), 0, std::sin(alpha), std::cos(alpha), 0, 0, 0, 1;
  return GroupElement(m);
}

inline GroupElement rotation_y(double beta) {
  Matrix m(3, 3);
  m << std::cos(beta), 0, std::sin(beta), 0, 1, 0, -std::sin(beta), 0, std::cos(beta);
  return GroupElement(m);
}

/// Z(alpha) Y(beta) Z(gamma).
inline GroupElement euler_zyz(double alpha, double beta, double gamma) {
  return GroupElement(Matrix(rotation_z(alpha).matrix() * rotation_y(beta).matrix() * rotation_z(gamma).matrix()));
}

/// The element a generating O(n)/SO(n): diag(1,...,1,-1) for even n, -I for odd n.
inline GroupElement coset_representative(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  if (n % 2 == 1) return GroupElement(Matrix(-Matrix::Identity(nn, nn)));
  Matrix m = Matrix::Identity(nn, nn);
  m(nn - 1, nn - 1) = -1.0;
  return GroupElement(m);
}

/// O(n) -> SO(n+1): k |-> diag(k, det k).
inline GroupElement embed_K_in_G(const GroupElement& k) {
  const auto n = static_cast<Eigen::Index>(k.dim());
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n) = k.matrix();
  m(n, n) = static_cast<double>(k.det_sign());
  return GroupElement(m);
}

/// Sphere distance between g.o and o, where o is the last basis vector.
inline double geodesic_angle(const GroupElement& g) {
  const auto n = static_cast<Eigen::Index>(g.dim()) - 1;
  double c = g(n, n);
  if (std::abs(c) > 1.0 + 1e-6) throw Error(ErrorCode::domain, "diagonal entry outside [-1,1]");
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

}  // namespace sphlab
