#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "sphlab/group.hpp"
#include "sphlab/sampling.hpp"

using namespace sphlab;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;

Matrix rot2(double t) {
  Matrix m(2, 2);
  m << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return m;
}
}  // namespace

TEST_CASE("GroupElement validates orthogonality and determinant") {
  Matrix bad = Matrix::Identity(3, 3);
  bad(0, 1) = 1e-3;
  REQUIRE_THROWS_AS(GroupElement(bad), Error);
  REQUIRE_THROWS_AS(GroupElement(Matrix::Zero(2, 3)), Error);
  const GroupElement r(Matrix(-Matrix::Identity(3, 3)));
  CHECK(r.det_sign() == -1);
  CHECK(GroupElement::identity(4).det_sign() == 1);
}

TEST_CASE("GroupElement::inverse is the transpose") {
  Sampler s(3);
  const GroupElement g = s.orthogonal(4);
  CHECK(max_abs(Matrix((g * g.inverse()).matrix() - Matrix::Identity(4, 4))) < 1e-14);
  CHECK(g.inverse().det_sign() == g.det_sign());
}

TEST_CASE("lie basis sign convention") {
  const Matrix i21 = lie_basis(2, 2, 1);
  CHECK(i21(0, 1) == 1.0);
  CHECK(i21(1, 0) == -1.0);
  CHECK(lie_basis_elements(4).size() == 6);
  for (const auto& e : lie_basis_elements(3)) CHECK(max_abs(Matrix(e.matrix() + e.matrix().transpose())) == 0.0);
}

TEST_CASE("exp_so closed forms") {
  CHECK(max_abs(Matrix(exp_so(Matrix::Zero(3, 3)).matrix() - Matrix::Identity(3, 3))) == 0.0);
  Matrix expected(2, 2);
  expected << 0, 1, -1, 0;
  CHECK(max_abs(Matrix(exp_so(0.5 * pi * lie_basis(2, 2, 1)).matrix() - expected)) < 1e-15);
  CHECK(max_abs(Matrix(exp_so(pi * lie_basis(2, 2, 1)).matrix() + Matrix::Identity(2, 2))) < 1e-15);
}

TEST_CASE("exp_so agrees with a plain Taylor series") {
  Sampler s(11);
  for (std::size_t n : {3u, 4u, 5u}) {
    const Matrix x = 0.7 * s.antisymmetric(n);
    Matrix series = Matrix::Identity(n, n), term = Matrix::Identity(n, n);
    for (int k = 1; k < 60; ++k) {
      term = term * x / k;
      series += term;
    }
    CHECK(max_abs(Matrix(exp_so(x).matrix() - series)) < 1e-13);
  }
  Matrix tiny = Matrix::Zero(3, 3);
  tiny(0, 1) = 1e-9;
  tiny(1, 0) = -1e-9;
  CHECK(max_abs(Matrix(exp_so(tiny).matrix() - (Matrix::Identity(3, 3) + tiny))) < 1e-17);
}

TEST_CASE("exp_so rejects non-antisymmetric input") {
  REQUIRE_THROWS_AS(exp_so(Matrix::Identity(3, 3)), Error);
}

TEST_CASE("plane_rotation is exp of the basis element") {
  for (double t : {0.3, 1.7, -2.4}) {
    CHECK(max_abs(Matrix(plane_rotation(2, 2, 1, t).matrix() - rot2(t))) < 1e-15);
    CHECK(max_abs(Matrix(plane_rotation(4, 3, 1, t).matrix() - exp_so(t * lie_basis(4, 3, 1)).matrix())) < 1e-14);
  }
}

TEST_CASE("euler_zyz composes z and y rotations") {
  const GroupElement g = euler_zyz(0.4, 1.1, -0.8);
  const GroupElement h = rotation_z(0.4) * rotation_y(1.1) * rotation_z(-0.8);
  CHECK(max_abs(Matrix(g.matrix() - h.matrix())) < 1e-15);
  CHECK(rotation_z(0.5)(1, 0) > 0.0);
}

TEST_CASE("embed_K_in_G") {
  CHECK(max_abs(Matrix(embed_K_in_G(GroupElement::identity(3)).matrix() - Matrix::Identity(4, 4))) == 0.0);
  const GroupElement a2 = embed_K_in_G(coset_representative(2));
  CHECK(max_abs(Matrix(a2.matrix() - Eigen::Vector3d(1, -1, -1).asDiagonal().toDenseMatrix())) == 0.0);
  const GroupElement a3 = embed_K_in_G(coset_representative(3));
  CHECK(max_abs(Matrix(a3.matrix() + Matrix::Identity(4, 4))) == 0.0);
  Sampler s(5);
  for (int i = 0; i < 10; ++i) CHECK(embed_K_in_G(s.orthogonal(3)).det_sign() == 1);
}

TEST_CASE("geodesic_angle") {
  CHECK(geodesic_angle(GroupElement::identity(3)) == 0.0);
  CHECK_THAT(geodesic_angle(plane_rotation(3, 3, 2, pi / 3)), WithinAbs(pi / 3, 1e-15));
  CHECK_THAT(geodesic_angle(GroupElement(Matrix(Eigen::Vector3d(1, -1, -1).asDiagonal()))), WithinAbs(pi, 0.0));
}

TEST_CASE("projective_angle folds at pi/2") {
  CHECK(projective_angle(0.0) == 0.0);
  CHECK_THAT(projective_angle(pi / 4), WithinAbs(pi / 2, 1e-15));
  CHECK_THAT(projective_angle(3 * pi / 4), WithinAbs(pi / 2, 1e-15));
  REQUIRE_THROWS_AS(projective_angle(-0.1), Error);
  REQUIRE_THROWS_AS(projective_angle(4.0), Error);
}

TEST_CASE("positive root vectors are eigenvectors of the Cartan element") {
  // [H, X] = (root . x) X for H = i(x1 I21 + x2 I43).
  const double x1 = 0.7, x2 = -0.3;
  const CMatrix h = Complex(0, 1) * (x1 * lie_basis(4, 2, 1) + x2 * lie_basis(4, 4, 3)).cast<Complex>();
  const auto roots = positive_root_vectors(2);
  REQUIRE(roots.size() == 2);
  const double values[] = {x1 + x2, x1 - x2};
  for (std::size_t r = 0; r < 2; ++r) {
    const CMatrix bracket = h * roots[r] - roots[r] * h;
    CHECK(max_abs(CMatrix(bracket - values[r] * roots[r])) < 1e-14);
  }
}

TEST_CASE("Sampler is deterministic per seed") {
  Sampler a(99), b(99);
  for (int i = 0; i < 5; ++i) CHECK(a.special_orthogonal(4).matrix() == b.special_orthogonal(4).matrix());
  Sampler c(7);
  const CMatrix u = c.unitary(4);
  CHECK(max_abs(CMatrix(u.adjoint() * u - CMatrix::Identity(4, 4))) < 1e-14);
}
