#pragma once

// Seeded random group elements. Quaternion-based draws are Haar distributed on
// SO(3) and SO(4); every sample is a function of the seed and the call order.

#include <Eigen/Dense>

#include <cstdint>
#include <numbers>
#include <random>

#include "sphlab/group.hpp"
#include "sphlab/quaternion.hpp"

namespace sphlab {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Quaternion unit_quaternion() {
    Quaternion q{normal(), normal(), normal(), normal()};
    return q.normalized();
  }

  GroupElement so2() { return plane_rotation(2, 2, 1, uniform(0.0, 2.0 * std::numbers::pi)); }
  GroupElement so3() { return GroupElement(rotation_matrix(unit_quaternion())); }
  GroupElement so4() {
    const Quaternion left = unit_quaternion();
    const Quaternion right = unit_quaternion();
    return GroupElement(so4_matrix(left, right));
  }

  GroupElement special_orthogonal(std::size_t n) {
    switch (n) {
      case 2: return so2();
      case 3: return so3();
      case 4: return so4();
      default: break;
    }
    throw Error(ErrorCode::unsupported_group, "random elements implemented for SO(2), SO(3), SO(4)");
  }

  /// Element of O(n): a Haar SO(n) element times the coset representative with probability 1/2.
  GroupElement orthogonal(std::size_t n) {
    GroupElement k = special_orthogonal(n);
    if (uniform(0.0, 1.0) < 0.5) return k;
    return k * coset_representative(n);
  }

  /// Random antisymmetric matrix with standard normal entries above the diagonal.
  Matrix antisymmetric(std::size_t n) {
    const auto nn = static_cast<Eigen::Index>(n);
    Matrix x = Matrix::Zero(nn, nn);
    for (Eigen::Index i = 0; i < nn; ++i)
      for (Eigen::Index j = i + 1; j < nn; ++j) {
        x(i, j) = normal();
        x(j, i) = -x(i, j);
      }
    return x;
  }

  /// Haar-random unitary r x r matrix (QR of a complex Gaussian matrix, phases fixed).
  CMatrix unitary(int r) {
    CMatrix z(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) z(i, j) = Complex(normal(), normal());
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(r, r);
    const CMatrix upper = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < r; ++i) {
      const Complex d = upper(i, i);
      if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sphlab
