#pragma once

// Unit quaternions, the double covers SU(2) -> SO(3) and SU(2) x SU(2) -> SO(4).
//
// R^4 is identified with the quaternions by (x1, x2, x3, x4) <-> x4 + x1 i + x2 j + x3 k,
// so the origin e4 of S^3 is the quaternion 1 and SO(3) (top-left block) is the
// stabilizer {x |-> q x conj(q)}. A pair (qL, qR) acts on R^4 by x |-> qL x conj(qR).

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <utility>

#include "sphlab/group.hpp"

namespace sphlab {

struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Quaternion normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
  }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  double operator[](int i) const { return i == 0 ? w : i == 1 ? x : i == 2 ? y : z; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  static Quaternion basis(int i) {
    Quaternion q{0, 0, 0, 0};
    (i == 0 ? q.w : i == 1 ? q.x : i == 2 ? q.y : q.z) = 1.0;
    return q;
  }
};

inline Quaternion quaternion_from_r4(const Eigen::Vector4d& v) { return {v(3), v(0), v(1), v(2)}; }
inline Eigen::Vector4d r4_from_quaternion(const Quaternion& q) { return {q.x, q.y, q.z, q.w}; }

/// Homomorphism Sp(1) -> SU(2); i, j, k map to -i sigma_x, -i sigma_y, -i sigma_z.
inline Eigen::Matrix2cd su2_matrix(const Quaternion& q) {
  const Complex im(0.0, 1.0);
  Eigen::Matrix2cd u;
  u << q.w - im * q.z, -q.y - im * q.x, q.y - im * q.x, q.w + im * q.z;
  return u;
}

/// Rotation v |-> q v conj(q) of R^3 (pure quaternions).
inline Matrix rotation_matrix(const Quaternion& q) {
  const auto [w, x, y, z] = std::array{q.w, q.x, q.y, q.z};
  Matrix r(3, 3);
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
       2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
       2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

/// One of the two unit quaternions covering a rotation (Shepperd's method).
inline Quaternion quaternion_from_rotation(const Matrix& r) {
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  Quaternion q;
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + tr);
    q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 - r(0, 0) + r(1, 1) - r(2, 2));
    q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 - r(0, 0) - r(1, 1) + r(2, 2));
    q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
  }
  return q.normalized();
}

/// The SO(4) matrix of x |-> qL x conj(qR).
inline Matrix so4_matrix(const Quaternion& left, const Quaternion& right) {
  Matrix m(4, 4);
  const Quaternion rc = right.conj();
  for (int j = 0; j < 4; ++j) {
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e(j) = 1.0;
    m.col(j) = r4_from_quaternion(left * quaternion_from_r4(e) * rc);
  }
  return m;
}

struct QuaternionPair {
  Quaternion left;
  Quaternion right;
};

namespace detail {
// coefficients[s][t] = so4_matrix(basis(s), basis(t)); g = sum_{s,t} a_s b_t coefficients[s][t].
inline const std::array<std::array<Matrix, 4>, 4>& so4_bilinear_table() {
  static const auto table = [] {
    std::array<std::array<Matrix, 4>, 4> t;
    for (int s = 0; s < 4; ++s)
      for (int u = 0; u < 4; ++u) t[s][u] = so4_matrix(Quaternion::basis(s), Quaternion::basis(u));
    return t;
  }();
  return table;
}
}  // namespace detail

/// Lift g in SO(4) to (qL, qR) with g = so4_matrix(qL, qR). The sign of the pair is
/// fixed by making the first coordinate of qL above 1e-8 in magnitude positive.
inline QuaternionPair so4_lift(const GroupElement& g) {
  if (g.dim() != 4 || g.det_sign() != 1) throw Error(ErrorCode::wrong_group, "so4_lift expects an element of SO(4)");
  const auto& table = detail::so4_bilinear_table();
  // The 16 matrices in the table are orthogonal with squared norm 4, so
  // A_{st} = <g, table[s][t]> / 4 is the rank-one matrix a b^T.
  Eigen::Matrix4d assoc;
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) assoc(s, t) = 0.25 * g.matrix().cwiseProduct(table[s][t]).sum();
  Eigen::Index row = 0;
  assoc.rowwise().norm().maxCoeff(&row);
  Eigen::Vector4d b = assoc.row(row).transpose().normalized();
  Eigen::Vector4d a = (assoc * b).normalized();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a(i)) > 1e-8) {
      if (a(i) < 0) {
        a = -a;
        b = -b;
      }
      break;
    }
  }
  QuaternionPair pair{{a(0), a(1), a(2), a(3)}, {b(0), b(1), b(2), b(3)}};
  if (max_abs(Matrix(so4_matrix(pair.left, pair.right) - g.matrix())) > 1e-10) {
    throw Error(ErrorCode::wrong_group, "failed to lift element of SO(4)");
  }
  return pair;
}

}  // namespace sphlab
