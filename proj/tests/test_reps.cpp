#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "sphlab/reps.hpp"
#include "sphlab/sampling.hpp"

using namespace sphlab;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;

double homomorphism_defect(const UnitaryRep& rho, const GroupElement& g, const GroupElement& h) {
  return max_abs(CMatrix(rho(g * h) - rho(g) * rho(h)));
}

double unitarity_defect(const UnitaryRep& rho, const GroupElement& g) {
  const CMatrix r = rho(g);
  return max_abs(CMatrix(r.adjoint() * r - CMatrix::Identity(rho.dim(), rho.dim())));
}
}  // namespace

TEST_CASE("so2_irrep values") {
  Sampler s(1);
  for (int t = 0; t < 5; ++t) CHECK(so2_irrep(0)(s.so2())(0, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(so2_irrep(2)(plane_rotation(2, 2, 1, pi))(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(so2_irrep(3)(plane_rotation(2, 2, 1, 0.4))(0, 0) - std::exp(Complex(0, 1.2))) < 1e-15);
  const UnitaryRep rho = so2_irrep(5);
  for (int t = 0; t < 10; ++t) CHECK(homomorphism_defect(rho, s.so2(), s.so2()) < 1e-14);
}

TEST_CASE("so3_irrep characters") {
  CHECK(so3_irrep(0)(euler_zyz(0.3, 1.0, 2.0))(0, 0) == Complex(1.0, 0.0));
  for (double t : {0.0, 0.5, 2.0, pi}) {
    CHECK_THAT(so3_irrep(1)(rotation_z(t)).trace().real(), WithinAbs(1.0 + 2.0 * std::cos(t), 1e-12));
    // Conjugate rotations share the character.
    const GroupElement axis = euler_zyz(0.7, 1.3, -0.2);
    const GroupElement g = axis * rotation_z(t) * axis.inverse();
    double expected = 0.0;
    for (int m = -3; m <= 3; ++m) expected += std::cos(m * t);
    CHECK_THAT(so3_irrep(3)(g).trace().real(), WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("so3_irrep J_z basis convention") {
  // D(rotation_z(alpha)) = diag(e^{-i m alpha}) with m = l, ..., -l.
  const UnitaryRep rho = so3_irrep(2);
  const CMatrix d = rho(rotation_z(0.6));
  for (int a = 0; a < 5; ++a) CHECK(std::abs(d(a, a) - std::exp(Complex(0, -(2 - a) * 0.6))) < 1e-14);
}

TEST_CASE("so3_irrep spin 1 is equivalent to the defining representation") {
  Sampler s(2);
  const UnitaryRep rho = so3_irrep(1);
  for (int t = 0; t < 10; ++t) {
    const GroupElement g = s.so3();
    CHECK_THAT(rho(g).trace().real(), WithinAbs(g.matrix().trace(), 1e-12));
    CHECK_THAT(rho(g).trace().imag(), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("irreps are unitary homomorphisms") {
  Sampler s(3);
  std::vector<UnitaryRep> reps{so3_irrep(1), so3_irrep(2), so3_irrep(4)};
  for (int p = 0; p <= 3; ++p)
    for (int q = -p; q <= p; ++q) reps.push_back(so4_irrep(p, q));
  for (const UnitaryRep& rho : reps) {
    const std::size_t n = static_cast<std::size_t>(group_dimension(rho.group()));
    CHECK(max_abs(CMatrix(rho(GroupElement::identity(n)) - CMatrix::Identity(rho.dim(), rho.dim()))) < 1e-15);
    for (int t = 0; t < 5; ++t) {
      const GroupElement g = s.special_orthogonal(n), h = s.special_orthogonal(n);
      CHECK(homomorphism_defect(rho, g, h) < 1e-10);
      CHECK(unitarity_defect(rho, g) < 1e-10);
    }
  }
}

TEST_CASE("so4_irrep dimensions and the defining representation") {
  CHECK(so4_irrep(2, 1).dim() == 8);
  CHECK(so4_irrep(3, -2).dim() == 12);
  Sampler s(4);
  for (int t = 0; t < 10; ++t) {
    const GroupElement g = s.so4();
    CHECK(so4_irrep(0, 0)(g)(0, 0) == Complex(1.0, 0.0));
    CHECK_THAT(so4_irrep(1, 0)(g).trace().real(), WithinAbs(g.matrix().trace(), 1e-12));
  }
  REQUIRE_THROWS_AS(so4_irrep(1, 2), Error);
}

TEST_CASE("representations reject elements of the wrong group") {
  REQUIRE_THROWS_AS(so3_irrep(1)(GroupElement::identity(4)), Error);
  REQUIRE_THROWS_AS(so3_irrep(1)(GroupElement(Matrix(-Matrix::Identity(3, 3)))), Error);
  try {
    so4_irrep(1, 0)(GroupElement::identity(3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::wrong_group);
  }
}

TEST_CASE("O-type representations") {
  Sampler s(5);
  const OType eps = OType::odd_tensor(HighestWeight::so3(2), true);
  const OType one = OType::odd_tensor(HighestWeight::so3(2), false);
  const Character chi_eps = o_type_character(eps), chi_pi = so_character(HighestWeight::so3(2));
  const GroupElement minus = coset_representative(3);
  for (int t = 0; t < 5; ++t) {
    const GroupElement k = s.so3();
    CHECK(std::abs(chi_eps.xi(minus * k) + chi_pi.xi(k)) < 1e-12);
    CHECK(std::abs(o_type_character(one).xi(minus * k) - chi_pi.xi(k)) < 1e-12);
  }

  const Character trivial_plus = o_type_character(OType::self_conjugate(HighestWeight::so2(0), 1));
  for (int t = 0; t < 5; ++t) CHECK(trivial_plus.xi(s.orthogonal(2)) == Complex(1.0, 0.0));

  const OType doubled = OType::doubled(HighestWeight::so2(2));
  const UnitaryRep gamma = o_type_rep(doubled);
  CHECK(gamma.dim() == 2);
  const GroupElement a = coset_representative(2);
  for (int t = 0; t < 5; ++t) {
    const GroupElement k = s.so2();
    CHECK(std::abs(gamma(k * a).trace()) < 1e-15);
    CHECK(std::abs(gamma(k).trace() - 2.0 * std::cos(2.0 * std::atan2(k(0, 1), k(0, 0)))) < 1e-12);
  }
  for (const UnitaryRep& rho : {gamma, o_type_rep(eps), o_type_rep(OType::self_conjugate(HighestWeight::so2(0), -1))}) {
    const std::size_t n = static_cast<std::size_t>(group_dimension(rho.group()));
    for (int t = 0; t < 10; ++t) {
      const GroupElement g = s.orthogonal(n), h = s.orthogonal(n);
      CHECK(homomorphism_defect(rho, g, h) < 1e-12);
      CHECK(unitarity_defect(rho, g) < 1e-12);
    }
  }
}

TEST_CASE("self-conjugate types check the registered intertwiner") {
  const OType plus = OType::self_conjugate(HighestWeight::so2(0), 1);
  REQUIRE_THROWS_AS(o_type_rep(plus, CMatrix::Constant(1, 1, -1.0)), Error);
  REQUIRE_THROWS_AS(o_type_rep(plus, CMatrix::Constant(1, 1, 0.5)), Error);
  REQUIRE_THROWS_AS(o_type_rep(plus, CMatrix::Identity(2, 2)), Error);
  CHECK(o_type_rep(plus, CMatrix::Constant(1, 1, 1.0))(coset_representative(2))(0, 0) == Complex(1.0, 0.0));
}

TEST_CASE("twisted_by_reflection conjugates by a") {
  Sampler s(6);
  const UnitaryRep rho = so4_irrep(2, 1);
  const UnitaryRep tw = twisted_by_reflection(rho);
  const Matrix a = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
  for (int t = 0; t < 5; ++t) {
    const GroupElement g = s.so4();
    CHECK(max_abs(CMatrix(tw(g) - rho(GroupElement(Matrix(a * g.matrix() * a))))) == 0.0);
  }
}

TEST_CASE("differentiated representation") {
  const DifferentiatedRep d2 = differentiate(so2_irrep(3));
  CHECK(max_abs(d2(Matrix(Matrix::Zero(2, 2)))) == 0.0);
  CHECK(std::abs(d2(lie_basis(2, 2, 1))(0, 0) - Complex(0, 3)) < 1e-8);

  // Bracket compatibility on so(3): d rho([X, Y]) = [d rho X, d rho Y].
  Sampler s(7);
  const DifferentiatedRep d = differentiate(so3_irrep(2));
  for (int t = 0; t < 5; ++t) {
    const Matrix x = s.antisymmetric(3), y = s.antisymmetric(3);
    const CMatrix lhs = d(Matrix(x * y - y * x));
    const CMatrix rhs = d(x) * d(y) - d(y) * d(x);
    CHECK(max_abs(CMatrix(lhs - rhs)) < 1e-6);
  }
  // Complex linearity.
  const Matrix x = s.antisymmetric(3);
  CHECK(max_abs(CMatrix(d(CMatrix(Complex(0, 1) * x.cast<Complex>())) - Complex(0, 1) * d(x))) < 1e-12);
}

TEST_CASE("highest weight extraction on SO(4)") {
  CHECK(highest_weight_extract(so4_irrep(0, 0), 2) == HighestWeight::so4(0, 0));
  // The defining matrix representation.
  const UnitaryRep defining(GroupTag::SO4, std::monostate{}, 4,
                            [](const GroupElement& g) { return CMatrix(g.matrix().cast<Complex>()); });
  CHECK(highest_weight_extract(defining, 2) == HighestWeight::so4(1, 0));
  for (int p = 0; p <= 3; ++p)
    for (int q = -p; q <= p; ++q) {
      const WeightExtraction w = extract_highest_weight(so4_irrep(p, q), 2);
      CHECK(w.weight == HighestWeight::so4(p, q));
      CHECK(std::abs(w.eigenvalues[0] - p) < 1e-8);
      CHECK(std::abs(w.eigenvalues[1] - q) < 1e-8);
    }
}

TEST_CASE("highest weight extraction errors") {
  REQUIRE_THROWS_AS(highest_weight_extract(so3_irrep(1), 2), Error);
  // A direct sum has a two-dimensional kernel.
  const UnitaryRep a = so4_irrep(1, 0), b = so4_irrep(1, 1);
  const UnitaryRep sum(GroupTag::SO4, std::monostate{}, 7, [a, b](const GroupElement& g) {
    CMatrix out = CMatrix::Zero(7, 7);
    out.topLeftCorner(4, 4) = a(g);
    out.bottomRightCorner(3, 3) = b(g);
    return out;
  });
  try {
    highest_weight_extract(sum, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::multiplicity);
  }
}

TEST_CASE("SO(2) extraction reports minus the label") {
  // d rho(I_{21}) = i m, so the Cartan element i I_{21} acts by -m.
  for (int m : {-2, 0, 1, 3}) CHECK(highest_weight_extract(so2_irrep(m), 1) == HighestWeight::so2(-m));
}
