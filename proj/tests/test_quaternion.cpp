#include <catch_amalgamated.hpp>

#include <cmath>

#include "sphlab/quaternion.hpp"
#include "sphlab/sampling.hpp"
#include "sphlab/su2.hpp"

using namespace sphlab;

namespace {
double qdist(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}
}  // namespace

TEST_CASE("Hamilton product table") {
  const Quaternion one = Quaternion::basis(0), i = Quaternion::basis(1), j = Quaternion::basis(2),
                   k = Quaternion::basis(3);
  CHECK(qdist(i * j, k) == 0.0);
  CHECK(qdist(j * k, i) == 0.0);
  CHECK(qdist(k * i, j) == 0.0);
  CHECK(qdist(i * i, -one) == 0.0);
  CHECK(qdist(i * j * k, -one) == 0.0);
}

TEST_CASE("R4 identification puts the real part last") {
  const Eigen::Vector4d e4(0, 0, 0, 1);
  CHECK(qdist(quaternion_from_r4(e4), Quaternion::basis(0)) == 0.0);
  const Eigen::Vector4d v(1, 2, 3, 4);
  CHECK(r4_from_quaternion(quaternion_from_r4(v)) == v);
}

TEST_CASE("su2_matrix is a homomorphism into SU(2)") {
  Sampler s(21);
  for (int t = 0; t < 20; ++t) {
    const Quaternion p = s.unit_quaternion(), q = s.unit_quaternion();
    const Eigen::Matrix2cd u = su2_matrix(p);
    CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-14);
    CHECK((su2_matrix(p * q) - su2_matrix(p) * su2_matrix(q)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("rotation_matrix and its inverse") {
  Sampler s(22);
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = s.unit_quaternion();
    const Matrix r = rotation_matrix(q);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-14);
    const Quaternion back = quaternion_from_rotation(r);
    CHECK(std::min(qdist(back, q), qdist(back, -q)) < 1e-14);
    CHECK(max_abs(Matrix(rotation_matrix(back) - r)) < 1e-14);
  }
}

TEST_CASE("so4_matrix maps x to qL x conj(qR)") {
  Sampler s(23);
  const Quaternion l = s.unit_quaternion(), r = s.unit_quaternion();
  const Matrix g = so4_matrix(l, r);
  const Eigen::Vector4d v(0.3, -1.2, 0.5, 2.0);
  const Eigen::Vector4d expected = r4_from_quaternion(l * quaternion_from_r4(v) * r.conj());
  CHECK((g * v - expected).cwiseAbs().maxCoeff() < 1e-14);
  // SO(3) sits inside as the diagonal pairs.
  const Quaternion q = s.unit_quaternion();
  Matrix block = Matrix::Identity(4, 4);
  block.topLeftCorner(3, 3) = rotation_matrix(q);
  CHECK(max_abs(Matrix(so4_matrix(q, q) - block)) < 1e-14);
}

TEST_CASE("so4_lift recovers the pair up to a common sign") {
  Sampler s(24);
  for (int t = 0; t < 100; ++t) {
    const Quaternion l = s.unit_quaternion(), r = s.unit_quaternion();
    const QuaternionPair p = so4_lift(GroupElement(so4_matrix(l, r)));
    const double plus = std::max(qdist(p.left, l), qdist(p.right, r));
    const double minus = std::max(qdist(p.left, -l), qdist(p.right, -r));
    CHECK(std::min(plus, minus) < 1e-12);
  }
  const QuaternionPair minus_identity = so4_lift(GroupElement(Matrix(-Matrix::Identity(4, 4))));
  CHECK(max_abs(Matrix(so4_matrix(minus_identity.left, minus_identity.right) + Matrix::Identity(4, 4))) < 1e-14);
  REQUIRE_THROWS_AS(so4_lift(GroupElement::identity(3)), Error);
}

TEST_CASE("spin matrices satisfy the angular momentum algebra") {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const SpinMatrices m = spin_matrices(two_j);
    const Complex i(0, 1);
    CHECK(max_abs(CMatrix(m.jx * m.jy - m.jy * m.jx - i * m.jz)) < 1e-13);
    const double j = 0.5 * two_j;
    const CMatrix casimir = m.jx * m.jx + m.jy * m.jy + m.jz * m.jz;
    CHECK(max_abs(CMatrix(casimir - j * (j + 1) * CMatrix::Identity(two_j + 1, two_j + 1))) < 1e-12);
  }
}

TEST_CASE("SpinRep spin 1/2 is the defining SU(2) matrix") {
  Sampler s(25);
  const SpinRep half(1);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Matrix2cd u = su2_matrix(s.unit_quaternion());
    CHECK(max_abs(CMatrix(half(u) - u)) < 1e-13);
  }
}

TEST_CASE("SpinRep is a unitary homomorphism") {
  Sampler s(26);
  for (int two_j : {2, 3, 4, 7}) {
    const SpinRep rep(two_j);
    for (int t = 0; t < 10; ++t) {
      const Quaternion p = s.unit_quaternion(), q = s.unit_quaternion();
      const CMatrix a = rep(su2_matrix(p)), b = rep(su2_matrix(q));
      CHECK(max_abs(CMatrix(rep(su2_matrix(p * q)) - a * b)) < 1e-12);
      CHECK(max_abs(CMatrix(a.adjoint() * a - CMatrix::Identity(two_j + 1, two_j + 1))) < 1e-12);
    }
  }
  CHECK(max_abs(CMatrix(SpinRep(4)(Eigen::Matrix2cd::Identity()) - CMatrix::Identity(5, 5))) == 0.0);
}
