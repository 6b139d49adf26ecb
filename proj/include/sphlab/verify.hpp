#pragma once

// Sweeps over label ranges. Each returns one report per checked instance.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "sphlab/jacobi.hpp"
#include "sphlab/sampling.hpp"
#include "sphlab/spherical.hpp"

namespace sphlab {

inline std::vector<VerificationReport> verify_jacobi(const VerifyConfig& cfg = {}, int k_max = 20, int samples = 50) {
  std::vector<VerificationReport> out;
  for (double alpha : {0.0, 0.5, 1.0, 1.5}) {
    VerificationReport r = detail::start_report("jacobi", 0, "k<=" + std::to_string(k_max),
                                                "alpha=" + std::to_string(alpha), cfg.tol("jacobi"), cfg, nullptr);
    Sampler sampler(cfg.seed);
    double residual = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      for (int s = 0; s < samples; ++s) residual = std::max(residual, check_identity_a(k, alpha, sampler.uniform(-1.0, 1.0)));
    }
    r.add("alpha", alpha);
    r.add("evaluations", static_cast<double>((k_max + 1) * samples));
    r.residual = residual;
    r.verdict = residual < r.tolerance;
    out.push_back(std::move(r));
  }
  return out;
}

/// Scalar check on random theta for each n, then the group check for small j.
inline std::vector<VerificationReport> verify_zonal_correspondence(const VerifyConfig& cfg = {}, int j_max = 10,
                                                                   int theta_samples = 100, int group_j_max = 4,
                                                                   int group_samples = 20) {
  std::vector<VerificationReport> out;
  for (int n : {2, 3}) {
    VerificationReport r = detail::start_report("zonal-correspondence", n, "j<=" + std::to_string(j_max), "trivial",
                                                cfg.tol("zonal"), cfg, nullptr);
    Sampler sampler(cfg.seed);
    double residual = 0.0;
    for (int s = 0; s < theta_samples; ++s) {
      const double theta = sampler.uniform(0.0, std::numbers::pi);
      for (int j = 0; j <= j_max; ++j) residual = std::max(residual, check_zonal_correspondence(n, j, theta));
    }
    r.residual = residual;
    r.verdict = residual < r.tolerance;
    out.push_back(std::move(r));
  }
  VerifyConfig group_cfg = cfg;
  group_cfg.samples = group_samples;
  for (int n : {2, 3}) {
    for (int j = 0; j <= group_j_max; ++j) out.push_back(check_zonal_on_group(n, j, group_cfg));
  }
  return out;
}

/// SO(n+1) irreps with first label <= max_label.
inline std::vector<HighestWeight> tau_labels(int n, int max_label) {
  if (n != 2 && n != 3) throw Error(ErrorCode::unsupported_group, "only n = 2, 3 are implemented");
  return weights_up_to(static_cast<std::size_t>(n) + 1, max_label);
}

/// SO(n)-types occurring in tau.
inline std::vector<HighestWeight> admissible_so_types(const HighestWeight& tau) {
  std::vector<HighestWeight> out;
  const int top = tau.entries.front();
  for (const HighestWeight& pi : weights_up_to(tau.group_dim() - 1, top)) {
    if (branching_contains(tau, pi)) out.push_back(pi);
  }
  return out;
}

/// O(n)-types built from SO(n)-types of tau, without repeats.
inline std::vector<OType> candidate_o_types(const HighestWeight& tau) {
  std::vector<OType> out;
  std::set<std::string> seen;
  for (const HighestWeight& pi : admissible_so_types(tau)) {
    for (const OType& t : o_types_from_so_type(pi)) {
      if (seen.insert(to_string(t)).second) out.push_back(t);
    }
  }
  return out;
}

namespace detail {

inline VerificationReport functional_report(const UnitaryRep& tau, const KType& delta, const QuadratureRule& rule,
                                            const IsotypicComponent& comp, int n,
                                            const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                                            const VerifyConfig& cfg) {
  VerificationReport r = start_report("functional-equation", n, to_string(tau.label()), delta.label,
                                      cfg.tol("functional"), cfg, &rule);
  r.add("rank", comp.rank);
  r.add("multiplicity", comp.multiplicity());
  r.add("idempotence_defect", comp.idempotence_defect);
  r.add("adjoint_defect", comp.adjoint_defect);
  const SphericalFunction phi = maybe_rebased(SphericalFunction(tau, delta, comp), cfg);
  const double at_identity =
      max_abs(CMatrix(phi(GroupElement::identity(static_cast<std::size_t>(n) + 1)) -
                      CMatrix::Identity(phi.rank(), phi.rank())));
  r.add("identity_defect", at_identity);
  r.residual = functional_equation_residual(phi, pairs, rule);
  const bool projector_ok = std::max(comp.idempotence_defect, comp.adjoint_defect) < cfg.tol("projector");
  r.verdict = r.residual < r.tolerance && at_identity < cfg.tol("identity") && projector_ok;
  if (!projector_ok) r.note = "projector defect above tolerance";
  return r;
}

inline VerificationReport multiplicity_report(const HighestWeight& tau, const KType& delta, const QuadratureRule& rule,
                                              const IsotypicComponent& comp, int n, bool expect_one,
                                              const VerifyConfig& cfg) {
  VerificationReport r = start_report("multiplicity", n, to_string(tau), delta.label, cfg.tol("spectrum"), cfg, &rule);
  const double mult = comp.multiplicity();
  const double rounded = std::round(mult);
  r.add("rank", comp.rank);
  r.add("degree", comp.delta_degree);
  r.add("multiplicity", mult);
  r.residual = std::abs(mult - rounded);
  r.verdict = r.residual == 0.0 && (expect_one ? rounded == 1.0 : (rounded == 0.0 || rounded == 1.0));
  return r;
}

}  // namespace detail

/// Functional equation for every spherical function of SO(n+1) irreps with labels <= max_label,
/// over SO(n)-types and over every O(n)-type that occurs, plus measured multiplicities.
inline std::vector<VerificationReport> verify_functional_equation(int n, int max_label, const VerifyConfig& cfg = {},
                                                                  std::optional<HighestWeight> only_tau = std::nullopt) {
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::vector<HighestWeight> taus = only_tau ? std::vector<HighestWeight>{*only_tau} : tau_labels(n, max_label);
  const auto pairs = sample_pairs(nn, cfg.samples, cfg.seed);
  const GroupTag so_tag = n == 2 ? GroupTag::SO2 : GroupTag::SO3;
  const GroupTag o_tag = n == 2 ? GroupTag::O2 : GroupTag::O3;
  const double spectrum = cfg.tol("spectrum");
  std::vector<VerificationReport> out;
  for (const HighestWeight& tau_w : taus) {
    const UnitaryRep tau = so_irrep(tau_w);
    const int band = cfg.band(tau_w.entries.front());
    const QuadratureRule so_rule = haar_rule(so_tag, band);
    const QuadratureRule o_rule = haar_rule(o_tag, band);
    for (const HighestWeight& pi : admissible_so_types(tau_w)) {
      const KType delta = so_ktype(pi);
      const IsotypicComponent comp = projector(tau, delta, so_rule, spectrum);
      out.push_back(detail::multiplicity_report(tau_w, delta, so_rule, comp, n, true, cfg));
      if (comp.rank > 0) out.push_back(detail::functional_report(tau, delta, so_rule, comp, n, pairs, cfg));
    }
    for (const OType& gamma : candidate_o_types(tau_w)) {
      const KType delta = o_ktype(gamma);
      const IsotypicComponent comp = projector(tau, delta, o_rule, spectrum);
      out.push_back(detail::multiplicity_report(tau_w, delta, o_rule, comp, n, false, cfg));
      if (comp.rank > 0) out.push_back(detail::functional_report(tau, delta, o_rule, comp, n, pairs, cfg));
    }
  }
  return out;
}

inline std::vector<VerificationReport> verify_par(int max_p = 3, const VerifyConfig& cfg = {}) {
  std::vector<VerificationReport> out;
  for (const HighestWeight& tau : tau_labels(3, max_p)) {
    for (const HighestWeight& pi : admissible_so_types(tau)) {
      out.push_back(check_theorem_par(tau.entries[0], tau.entries[1], pi.entries[0], cfg));
    }
  }
  return out;
}

inline std::vector<VerificationReport> verify_impar(int max_l = 6, const VerifyConfig& cfg = {}) {
  std::vector<VerificationReport> out;
  for (int ell = 0; ell <= max_l; ++ell) out.push_back(check_theorem_impar(ell, 0, cfg));
  return out;
}

inline std::vector<VerificationReport> verify_matrix(int max_l = 6, const VerifyConfig& cfg = {}) {
  std::vector<VerificationReport> out;
  for (int ell = 1; ell <= max_l; ++ell) {
    for (int m = 1; m <= ell; ++m) out.push_back(check_theorem_matrix(ell, m, cfg));
  }
  return out;
}

inline std::vector<VerificationReport> verify_weights(int max_p = 2, const VerifyConfig& cfg = {}) {
  std::vector<VerificationReport> out;
  for (int p = 1; p <= max_p; ++p) {
    for (int q = -p; q <= p; ++q) {
      if (q != 0) out.push_back(check_theorem_weights(p, q, cfg));
    }
  }
  return out;
}

}  // namespace sphlab
