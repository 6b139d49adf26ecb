#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "sphlab/spherical.hpp"
#include "sphlab/verify.hpp"

using namespace sphlab;
using Catch::Matchers::WithinAbs;

namespace {

VerifyConfig config_with_basis(std::uint64_t basis_seed) {
  VerifyConfig cfg;
  cfg.basis_seed = basis_seed;
  return cfg;
}

}  // namespace

TEST_CASE("projector of trivial tau") {
  const IsotypicComponent c = projector(so3_irrep(0), so_ktype(HighestWeight::so2(0)), haar_rule(GroupTag::SO2, 1));
  CHECK(c.rank == 1);
  CHECK(std::abs(c.projector(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("projector ranks follow branching") {
  for (int ell = 0; ell <= 4; ++ell) {
    const UnitaryRep tau = so3_irrep(ell);
    const QuadratureRule rule = haar_rule(GroupTag::SO2, 2 * ell + 1);
    for (int m = -ell - 1; m <= ell + 1; ++m) {
      const IsotypicComponent c = projector(tau, so_ktype(HighestWeight::so2(m)), rule);
      CHECK(c.rank == (std::abs(m) <= ell ? 1 : 0));
      CHECK(c.idempotence_defect < 1e-12);
      CHECK(c.adjoint_defect < 1e-12);
    }
  }
  for (int p = 0; p <= 2; ++p)
    for (int q = -p; q <= p; ++q) {
      const UnitaryRep tau = so4_irrep(p, q);
      const QuadratureRule rule = haar_rule(GroupTag::SO3, 2 * p + 1);
      for (int j = 0; j <= p + 1; ++j) {
        const IsotypicComponent c = projector(tau, so_ktype(HighestWeight::so3(j)), rule);
        CHECK(c.rank == (std::abs(q) <= j && j <= p ? 2 * j + 1 : 0));
      }
    }
}

TEST_CASE("projector spectrum stays near 0 and 1") {
  const IsotypicComponent c = projector(so4_irrep(3, 1), so_ktype(HighestWeight::so3(2)), haar_rule(GroupTag::SO3, 7));
  for (Eigen::Index i = 0; i < c.spectrum.size(); ++i) {
    const double v = c.spectrum(i);
    CHECK(std::min(std::abs(v), std::abs(v - 1.0)) < 1e-10);
  }
}

TEST_CASE("projector flags an under-resolved rule") {
  try {
    // Aliasing on an equispaced SO(2) rule still gives a projector, so use SO(3).
    projector(so4_irrep(3, 0), so_ktype(HighestWeight::so3(2)), haar_rule(GroupTag::SO3, 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::quadrature_underresolved);
  }
}

TEST_CASE("projector checks the rule against the K-type") {
  REQUIRE_THROWS_AS(projector(so3_irrep(1), so_ktype(HighestWeight::so2(0)), haar_rule(GroupTag::O2, 3)), Error);
  REQUIRE_THROWS_AS(projector(so4_irrep(1, 0), so_ktype(HighestWeight::so2(0)), haar_rule(GroupTag::SO2, 3)), Error);
}

TEST_CASE("spherical function at the identity") {
  const SphericalFunction phi =
      make_spherical_function(so4_irrep(2, 1), so_ktype(HighestWeight::so3(2)), haar_rule(GroupTag::SO3, 5));
  CHECK(max_abs(CMatrix(spherical_eval(phi, GroupElement::identity(4)) - CMatrix::Identity(5, 5))) < 1e-12);
}

TEST_CASE("spherical function of a missing K-type is an error") {
  REQUIRE_THROWS_AS(
      make_spherical_function(so3_irrep(1), so_ktype(HighestWeight::so2(2)), haar_rule(GroupTag::SO2, 3)), Error);
}

TEST_CASE("trivial-type spherical function is the sphere zonal function") {
  Sampler s(31);
  for (int ell = 0; ell <= 4; ++ell) {
    const SphericalFunction phi =
        make_spherical_function(so3_irrep(ell), so_ktype(HighestWeight::so2(0)), haar_rule(GroupTag::SO2, 2 * ell + 1));
    for (int t = 0; t < 10; ++t) {
      const GroupElement g = s.so3();
      const double expected = zonal(ZonalParams::sphere(2), ell, geodesic_angle(g));
      CHECK(std::abs(phi(g)(0, 0) - expected) < 1e-9);
    }
  }
}

TEST_CASE("trivial O(2)-type spherical function is the projective zonal function") {
  const SphericalFunction phi = make_spherical_function(
      so3_irrep(2), o_ktype(OType::self_conjugate(HighestWeight::so2(0), 1)), haar_rule(GroupTag::O2, 5));
  for (int i = 0; i <= 20; ++i) {
    const double theta = std::numbers::pi * i / 20.0;
    const GroupElement g = plane_rotation(3, 3, 2, theta);
    CHECK(std::abs(phi(g)(0, 0) - zonal(ZonalParams::projective(2), 1, projective_angle(theta))) < 1e-10);
  }
}

TEST_CASE("functional equation examples") {
  const QuadratureRule so2 = haar_rule(GroupTag::SO2, 5);
  const SphericalFunction phi = make_spherical_function(so3_irrep(2), so_ktype(HighestWeight::so2(1)), so2);
  const GroupElement e = GroupElement::identity(3);
  CHECK(functional_equation_residual(phi, e, e, so2) < 1e-10);
  Sampler s(32);
  for (int t = 0; t < 5; ++t) CHECK(functional_equation_residual(phi, s.so3(), s.so3(), so2) < 1e-9);

  const QuadratureRule o3 = haar_rule(GroupTag::O3, 5);
  for (bool eps : {false, true}) {
    const KType delta = o_ktype(OType::odd_tensor(HighestWeight::so3(1), eps));
    const IsotypicComponent c = projector(so4_irrep(2, 1), delta, o3);
    if (c.rank == 0) continue;
    const SphericalFunction psi(so4_irrep(2, 1), delta, c);
    for (int t = 0; t < 5; ++t) CHECK(functional_equation_residual(psi, s.so4(), s.so4(), o3) < 1e-8);
  }
}

TEST_CASE("functional equation fails for a non-spherical function") {
  // Using the wrong character breaks the identity, so the check has teeth.
  const QuadratureRule so2 = haar_rule(GroupTag::SO2, 5);
  const SphericalFunction phi = make_spherical_function(so3_irrep(2), so_ktype(HighestWeight::so2(1)), so2);
  const SphericalFunction wrong(phi.tau(), so_ktype(HighestWeight::so2(2)), phi.component());
  Sampler s(33);
  CHECK(functional_equation_residual(wrong, s.so3(), s.so3(), so2) > 1e-3);
}

TEST_CASE("with_basis validates the new basis") {
  const SphericalFunction phi =
      make_spherical_function(so4_irrep(2, 0), so_ktype(HighestWeight::so3(1)), haar_rule(GroupTag::SO3, 5));
  Sampler s(34);
  const CMatrix u = s.unitary(3);
  const SphericalFunction rotated = phi.with_basis(phi.basis() * u);
  const GroupElement g = s.so4();
  CHECK(max_abs(CMatrix(rotated(g) - u.adjoint() * phi(g) * u)) < 1e-12);
  REQUIRE_THROWS_AS(phi.with_basis(2.0 * phi.basis()), Error);
  REQUIRE_THROWS_AS(phi.with_basis(CMatrix(CMatrix::Identity(9, 3))), Error);
}

TEST_CASE("par examples") {
  const VerificationReport trivial = check_theorem_par(0, 0, 0);
  CHECK(trivial.verdict);
  CHECK(trivial.residual == 0.0);

  const VerificationReport r10 = check_theorem_par(1, 0, 0);
  CHECK(r10.verdict);
  CHECK(r10.residual < 1e-8);
  CHECK(r10.detail("sign") == -1.0);
  CHECK(r10.delta == "(0)xeps");

  const VerificationReport r11 = check_theorem_par(1, 1, 1);
  CHECK(r11.verdict);
  CHECK(r11.detail("sign") == 1.0);
  CHECK(r11.detail("projector_gap") < 1e-9);

  try {
    check_theorem_par(1, 0, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::theorem_precondition);
  }
}

TEST_CASE("impar examples") {
  const VerificationReport r0 = check_theorem_impar(0, 0);
  CHECK(r0.verdict);
  CHECK(r0.residual == 0.0);
  CHECK(r0.detail("A") == 1.0);

  const VerificationReport r1 = check_theorem_impar(1, 0);
  CHECK(r1.verdict);
  CHECK(r1.residual < 1e-9);
  CHECK_THAT(r1.detail("A"), WithinAbs(-1.0, 1e-12));

  const VerificationReport r2 = check_theorem_impar(2, 0);
  CHECK(r2.verdict);
  CHECK(r2.residual < 1e-9);
  CHECK_THAT(r2.detail("A"), WithinAbs(1.0, 1e-12));

  REQUIRE_THROWS_AS(check_theorem_impar(2, 1), Error);
}

TEST_CASE("matrix examples") {
  for (auto [ell, m] : {std::pair{1, 1}, std::pair{3, 2}}) {
    const VerificationReport r = check_theorem_matrix(ell, m);
    CHECK(r.verdict);
    CHECK(r.residual < 1e-8);
    CHECK(r.detail("rank_gamma") == 2.0);
    // At g = e the off-diagonal blocks are Phi(a), which vanishes.
    CHECK(r.detail("identity_offblock") < 1e-12);
  }
  REQUIRE_THROWS_AS(check_theorem_matrix(2, 0), Error);
  REQUIRE_THROWS_AS(check_theorem_matrix(2, 3), Error);
}

TEST_CASE("weights examples") {
  for (int p = 1; p <= 2; ++p)
    for (int q = -p; q <= p; ++q) {
      if (q == 0) continue;
      const VerificationReport r = check_theorem_weights(p, q);
      CHECK(r.verdict);
      CHECK(r.detail("twisted_m1") == p);
      CHECK(r.detail("twisted_m2") == -q);
    }
}

TEST_CASE("zonal group examples") {
  VerifyConfig cfg;
  cfg.samples = 20;
  CHECK(check_zonal_on_group(2, 0, cfg).residual == 0.0);
  CHECK(check_zonal_on_group(2, 1, cfg).residual < 1e-9);
  CHECK(check_zonal_on_group(3, 2, cfg).residual < 1e-8);
  REQUIRE_THROWS_AS(check_zonal_on_group(4, 1, cfg), Error);
}

TEST_CASE("verdicts do not depend on the basis of E(pi)") {
  for (std::uint64_t seed : {101u, 202u}) {
    const VerifyConfig cfg = config_with_basis(seed);
    CHECK(check_theorem_par(2, 1, 2, cfg).verdict);
    CHECK(check_theorem_par(3, 0, 1, cfg).verdict);
    CHECK(check_theorem_impar(3, 0, cfg).verdict);
    CHECK(check_theorem_matrix(4, 3, cfg).verdict);
    CHECK(all_passed(verify_functional_equation(3, 2, cfg, HighestWeight::so4(2, 1))));
  }
}

TEST_CASE("reports are reproducible under a fixed seed") {
  const VerificationReport a = check_theorem_par(2, 0, 1);
  const VerificationReport b = check_theorem_par(2, 0, 1);
  CHECK(a.residual == b.residual);
  CHECK(a.details == b.details);
}

TEST_CASE("tolerance overrides") {
  VerifyConfig cfg;
  cfg.tolerance_overrides["matrix"] = 1e-30;
  const VerificationReport r = check_theorem_matrix(2, 1, cfg);
  CHECK(r.tolerance == 1e-30);
  CHECK_FALSE(r.verdict);
  REQUIRE_THROWS_AS(cfg.tol("no-such-tolerance"), Error);
}

TEST_CASE("band override changes the rule") {
  VerifyConfig cfg;
  cfg.band_override = 11;
  const VerificationReport r = check_theorem_impar(2, 0, cfg);
  CHECK(r.quadrature.band_limit == 11);
  CHECK(r.verdict);
}

TEST_CASE("measured O(n) multiplicities are zero or one") {
  const auto reports = verify_functional_equation(2, 3);
  int measured = 0;
  for (const auto& r : reports) {
    if (r.theorem != "multiplicity") continue;
    ++measured;
    const double m = r.detail("multiplicity");
    CHECK((m == 0.0 || m == 1.0));
  }
  CHECK(measured > 0);
  CHECK(all_passed(reports));
}
