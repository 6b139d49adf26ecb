#pragma once

// Matrix-valued spherical functions of (SO(n+1), SO(n)) and (SO(n+1), O(n)).
//
// For a unitary irrep tau of G = SO(n+1) and a K-type delta,
//   P_delta = int_K chi_delta(k^{-1}) tau(k) dk
// is the orthogonal projector onto the isotypic component E(delta), and with an
// orthonormal basis B of E(delta), Phi(g) = B^* tau(g) B.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphlab/group.hpp"
#include "sphlab/jacobi.hpp"
#include "sphlab/quadrature.hpp"
#include "sphlab/report.hpp"
#include "sphlab/reps.hpp"
#include "sphlab/sampling.hpp"
#include "sphlab/weights.hpp"

namespace sphlab {

/// Settings shared by every verifier. Tolerances are looked up by name; names
/// without an override use the defaults below.
struct VerifyConfig {
  std::uint64_t seed = 20260417;
  int samples = 25;
  std::optional<int> band_override;
  /// When set, the basis of E(pi) is replaced by B U for a random unitary U drawn from this seed.
  std::optional<std::uint64_t> basis_seed;
  std::map<std::string, double> tolerance_overrides;

  static const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> defaults = {
        {"alignment", 1e-8},   // tau(a) B_pi inside E(pi_phi)
        {"basis", 1e-10},      // B^* B = I
        {"functional", 1e-8},  // spherical function functional equation
        {"identity", 1e-10},   // Phi(e) = I
        {"impar", 1e-8},
        {"involution", 1e-9},  // A^2 = I
        {"jacobi", 1e-10},
        {"matrix", 1e-8},
        {"par", 1e-8},
        {"projector", 1e-9},   // P^2 = P, P^* = P, projector equality
        {"sign", 1e-8},        // Phi(-I) = +-I
        {"spectrum", 1e-6},    // projector eigenvalues near {0, 1}
        {"weights", 1e-6},
        {"zonal", 1e-10},
        {"zonal_group", 1e-8},
    };
    return defaults;
  }

  double tol(const std::string& name) const {
    if (auto it = tolerance_overrides.find(name); it != tolerance_overrides.end()) return it->second;
    if (auto it = default_tolerances().find(name); it != default_tolerances().end()) return it->second;
    throw Error(ErrorCode::validation, "unknown tolerance name '" + name + "'");
  }

  /// Quadrature band for a tau whose restriction to K has labels <= max_label.
  int band(int max_label) const { return band_override ? *band_override : 2 * max_label + 1; }
};

/// A K-type: SO(n)- or O(n)-irrep class together with its character.
struct KType {
  GroupTag group;
  std::string label;
  Character character;
};

inline KType so_ktype(const HighestWeight& w) {
  const std::size_t n = w.group_dim();
  const GroupTag tag = n == 2 ? GroupTag::SO2 : n == 3 ? GroupTag::SO3 : GroupTag::SO4;
  return {tag, to_string(w), so_character(w)};
}

inline KType o_ktype(const OType& t, const std::optional<CMatrix>& intertwiner = std::nullopt) {
  const GroupTag tag = t.n() == 2 ? GroupTag::O2 : GroupTag::O3;
  return {tag, to_string(t), o_type_character(t, intertwiner)};
}

struct IsotypicComponent {
  CMatrix projector;
  /// Orthonormal basis of the range, d_tau x rank.
  CMatrix basis;
  int rank = 0;
  int delta_degree = 1;
  Eigen::VectorXd spectrum;
  double idempotence_defect = 0.0;
  double adjoint_defect = 0.0;

  /// rank / d(delta): the multiplicity of delta in tau.
  double multiplicity() const { return static_cast<double>(rank) / delta_degree; }
};

namespace detail {

/// acc += c * m, in real arithmetic; the generic complex product is several times slower here.
inline void accumulate(CMatrix& acc, Complex c, const CMatrix& m) {
  const double cr = c.real(), ci = c.imag();
  double* out = reinterpret_cast<double*>(acc.data());
  const double* in = reinterpret_cast<const double*>(m.data());
  for (Eigen::Index e = 0; e < m.size(); ++e) {
    const double re = in[2 * e], im = in[2 * e + 1];
    out[2 * e] += cr * re - ci * im;
    out[2 * e + 1] += cr * im + ci * re;
  }
}

}  // namespace detail

/// P = sum_i w_i chi_delta(k_i^{-1}) tau(embed(k_i)), split at eigenvalue 1/2.
inline IsotypicComponent projector(const UnitaryRep& tau, const KType& delta, const QuadratureRule& rule,
                                   double spectrum_tol = 1e-6) {
  if (rule.group != delta.group) {
    throw Error(ErrorCode::contract_violation, "quadrature rule is on " + to_string(rule.group) + " but the K-type is of " +
                                                   to_string(delta.group));
  }
  if (static_cast<std::size_t>(group_dimension(tau.group())) != rule.nodes.front().dim() + 1) {
    throw Error(ErrorCode::dimension, "tau must be a representation of SO(n+1)");
  }
  const int d = tau.dim();
  CMatrix p = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const GroupElement& k = rule.nodes[i];
    detail::accumulate(p, rule.weights[i] * delta.character.chi(k.inverse()), tau(embed_K_in_G(k)));
  }
  IsotypicComponent comp;
  comp.delta_degree = delta.character.degree();
  comp.idempotence_defect = max_abs(CMatrix(p * p - p));
  comp.adjoint_defect = max_abs(CMatrix(p - p.adjoint()));
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(CMatrix(0.5 * (p + p.adjoint())));
  comp.spectrum = eig.eigenvalues();
  for (Eigen::Index i = 0; i < comp.spectrum.size(); ++i) {
    const double lambda = comp.spectrum(i);
    if (std::min(std::abs(lambda), std::abs(lambda - 1.0)) > spectrum_tol) {
      throw Error(ErrorCode::quadrature_underresolved,
                  "projector eigenvalue " + std::to_string(lambda) + " is not near 0 or 1");
    }
    if (lambda > 0.5) ++comp.rank;
  }
  comp.basis = eig.eigenvectors().rightCols(comp.rank);
  comp.projector = std::move(p);
  return comp;
}

class SphericalFunction {
 public:
  SphericalFunction(UnitaryRep tau, KType delta, IsotypicComponent comp)
      : tau_(std::move(tau)), delta_(std::move(delta)), comp_(std::move(comp)), basis_(comp_.basis) {
    if (comp_.rank == 0) {
      throw Error(ErrorCode::domain, "K-type " + delta_.label + " does not occur in " + to_string(tau_.label()));
    }
  }

  CMatrix operator()(const GroupElement& g) const { return basis_.adjoint() * tau_(g) * basis_; }

  /// Same function in another orthonormal basis of E(delta).
  SphericalFunction with_basis(CMatrix basis, double tol = 1e-8) const {
    if (basis.rows() != basis_.rows() || basis.cols() != basis_.cols()) {
      throw Error(ErrorCode::dimension, "replacement basis has the wrong shape");
    }
    const auto r = basis.cols();
    if (max_abs(CMatrix(basis.adjoint() * basis - CMatrix::Identity(r, r))) > tol) {
      throw Error(ErrorCode::contract_violation, "replacement basis is not orthonormal");
    }
    if (max_abs(CMatrix(comp_.projector * basis - basis)) > tol) {
      throw Error(ErrorCode::contract_violation, "replacement basis leaves the isotypic component");
    }
    SphericalFunction out = *this;
    out.basis_ = std::move(basis);
    return out;
  }

  int rank() const { return comp_.rank; }
  const CMatrix& basis() const { return basis_; }
  const IsotypicComponent& component() const { return comp_; }
  const UnitaryRep& tau() const { return tau_; }
  const KType& delta() const { return delta_; }

 private:
  UnitaryRep tau_;
  KType delta_;
  IsotypicComponent comp_;
  CMatrix basis_;
};

inline SphericalFunction make_spherical_function(const UnitaryRep& tau, const KType& delta, const QuadratureRule& rule,
                                                 double spectrum_tol = 1e-6) {
  return SphericalFunction(tau, delta, projector(tau, delta, rule, spectrum_tol));
}

inline CMatrix spherical_eval(const SphericalFunction& phi, const GroupElement& g) { return phi(g); }

namespace detail {

struct NodeCache {
  std::vector<GroupElement> embedded;
  std::vector<Complex> weighted_chi;  // w_i chi_delta(k_i^{-1})
};

inline NodeCache cache_nodes(const KType& delta, const QuadratureRule& rule) {
  NodeCache cache;
  cache.embedded.reserve(rule.size());
  cache.weighted_chi.reserve(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    cache.embedded.push_back(embed_K_in_G(rule.nodes[i]));
    cache.weighted_chi.push_back(rule.weights[i] * delta.character.chi(rule.nodes[i].inverse()));
  }
  return cache;
}

inline double functional_residual(const SphericalFunction& phi, const NodeCache& cache, const GroupElement& x,
                                  const GroupElement& y) {
  CMatrix integral = CMatrix::Zero(phi.rank(), phi.rank());
  for (std::size_t i = 0; i < cache.embedded.size(); ++i) {
    accumulate(integral, cache.weighted_chi[i], phi(x * cache.embedded[i] * y));
  }
  return max_abs(CMatrix(phi(x) * phi(y) - integral));
}

}  // namespace detail

/// max |Phi(x) Phi(y) - sum_i w_i chi_delta(k_i^{-1}) Phi(x k_i y)|.
inline double functional_equation_residual(const SphericalFunction& phi, const GroupElement& x, const GroupElement& y,
                                           const QuadratureRule& rule) {
  if (rule.group != phi.delta().group) throw Error(ErrorCode::contract_violation, "rule does not match the K-type");
  return detail::functional_residual(phi, detail::cache_nodes(phi.delta(), rule), x, y);
}

/// Max functional-equation residual over several (x, y) pairs.
inline double functional_equation_residual(const SphericalFunction& phi,
                                           const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                                           const QuadratureRule& rule) {
  if (rule.group != phi.delta().group) throw Error(ErrorCode::contract_violation, "rule does not match the K-type");
  const detail::NodeCache cache = detail::cache_nodes(phi.delta(), rule);
  double worst = 0.0;
  for (const auto& [x, y] : pairs) worst = std::max(worst, detail::functional_residual(phi, cache, x, y));
  return worst;
}

/// Random elements of SO(n+1) followed by the structured points e and a (a = -I for odd n).
inline std::vector<GroupElement> sample_elements(std::size_t n, int count, std::uint64_t seed) {
  Sampler sampler(seed);
  std::vector<GroupElement> out;
  for (int i = 0; i < count; ++i) out.push_back(sampler.special_orthogonal(n + 1));
  out.push_back(GroupElement::identity(n + 1));
  out.push_back(embed_K_in_G(coset_representative(n)));
  return out;
}

inline std::vector<std::pair<GroupElement, GroupElement>> sample_pairs(std::size_t n, int count, std::uint64_t seed) {
  Sampler sampler(seed);
  std::vector<std::pair<GroupElement, GroupElement>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    GroupElement x = sampler.special_orthogonal(n + 1);
    GroupElement y = sampler.special_orthogonal(n + 1);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

namespace detail {

inline VerificationReport start_report(std::string theorem, int n, std::string tau, std::string delta, double tol,
                                       const VerifyConfig& cfg, const QuadratureRule* rule) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.n = n;
  r.tau = std::move(tau);
  r.delta = std::move(delta);
  r.tolerance = tol;
  r.seed = cfg.seed;
  if (rule) r.quadrature = {to_string(rule->group), rule->band_limit, rule->size()};
  return r;
}

inline SphericalFunction maybe_rebased(const SphericalFunction& phi, const VerifyConfig& cfg) {
  if (!cfg.basis_seed) return phi;
  Sampler sampler(*cfg.basis_seed);
  return phi.with_basis(phi.basis() * sampler.unitary(phi.rank()));
}

/// Re-express phi in the basis P_phi * target, where target spans the same space.
/// Returns the function and the unitarity defect of the change of basis.
inline std::pair<std::optional<SphericalFunction>, double> align_to(const SphericalFunction& phi, const CMatrix& target) {
  if (target.cols() != phi.rank()) return {std::nullopt, 1.0};
  const CMatrix u = phi.basis().adjoint() * target;
  const double defect = max_abs(CMatrix(u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())));
  try {
    return {phi.with_basis(phi.basis() * u), defect};
  } catch (const Error&) {
    return {std::nullopt, defect};
  }
}

}  // namespace detail

/// n = 3: Phi^{tau,pi} and Phi^{tau,gamma} coincide, gamma = pi (x) 1 or pi (x) eps by the sign of Phi(-I).
inline VerificationReport check_theorem_par(int p, int q, int j, const VerifyConfig& cfg = {}) {
  const HighestWeight tau_w = HighestWeight::so4(p, q);
  const HighestWeight pi_w = HighestWeight::so3(j);
  if (!validate_weight(tau_w) || !validate_weight(pi_w) || !branching_contains(tau_w, pi_w)) {
    throw Error(ErrorCode::theorem_precondition,
                "SO(3) type " + to_string(pi_w) + " does not occur in SO(4) irrep " + to_string(tau_w) +
                    " (needs |q| <= j <= p)");
  }
  const UnitaryRep tau = so4_irrep(p, q);
  const int band = cfg.band(p);
  const QuadratureRule so_rule = haar_rule(GroupTag::SO3, band);
  const QuadratureRule o_rule = haar_rule(GroupTag::O3, band);
  const double spectrum = cfg.tol("spectrum");

  const SphericalFunction phi_pi =
      detail::maybe_rebased(make_spherical_function(tau, so_ktype(pi_w), so_rule, spectrum), cfg);
  const GroupElement minus_identity = embed_K_in_G(coset_representative(3));
  const CMatrix at_minus = phi_pi(minus_identity);
  const double sign = at_minus.trace().real() >= 0.0 ? 1.0 : -1.0;
  const double sign_defect =
      max_abs(CMatrix(at_minus - sign * CMatrix::Identity(phi_pi.rank(), phi_pi.rank())));
  if (sign_defect > cfg.tol("sign")) {
    throw Error(ErrorCode::theorem_precondition, "Phi(-I) is not +-I (defect " + std::to_string(sign_defect) + ")");
  }

  const OType gamma = OType::odd_tensor(pi_w, sign < 0);
  const OType other = OType::odd_tensor(pi_w, sign > 0);
  VerificationReport report = detail::start_report("par", 3, to_string(tau_w), to_string(gamma), cfg.tol("par"), cfg, &o_rule);
  const IsotypicComponent comp_gamma = projector(tau, o_ktype(gamma), o_rule, spectrum);
  const IsotypicComponent comp_other = projector(tau, o_ktype(other), o_rule, spectrum);
  const double projector_gap = max_abs(CMatrix(phi_pi.component().projector - comp_gamma.projector));
  report.add("sign", sign);
  report.add("sign_defect", sign_defect);
  report.add("projector_gap", projector_gap);
  report.add("rank_pi", phi_pi.rank());
  report.add("rank_gamma", comp_gamma.rank);
  report.add("rank_other", comp_other.rank);

  if (comp_gamma.rank != phi_pi.rank()) {
    report.residual = 1.0;
    report.note = "rank of P_gamma differs from rank of P_pi";
    return report;
  }
  const auto [phi_gamma, unitarity] = detail::align_to(SphericalFunction(tau, o_ktype(gamma), comp_gamma), phi_pi.basis());
  report.add("alignment_defect", unitarity);
  if (!phi_gamma) {
    report.residual = 1.0;
    report.note = "E(gamma) and E(pi) differ";
    return report;
  }
  double residual = 0.0;
  for (const GroupElement& g : sample_elements(3, cfg.samples, cfg.seed)) {
    residual = std::max(residual, max_abs(CMatrix(phi_pi(g) - (*phi_gamma)(g))));
  }
  report.residual = residual;
  report.verdict = residual < report.tolerance && projector_gap < cfg.tol("projector") && comp_other.rank == 0;
  return report;
}

/// n = 2, pi trivial: A = Phi^{tau,pi}(a) is an involution and Phi^{tau,pi} = Phi^{tau, pi.eps_A}.
/// On success the report's "A" detail is the registered intertwiner (1 x 1 here).
inline VerificationReport check_theorem_impar(int ell, int m, const VerifyConfig& cfg = {}) {
  if (m != 0) throw Error(ErrorCode::theorem_precondition, "the self-conjugate case for n = 2 needs pi = (0)");
  if (ell < 0) throw Error(ErrorCode::theorem_precondition, "SO(3) label must be nonnegative");
  const HighestWeight pi_w = HighestWeight::so2(0);
  const UnitaryRep tau = so3_irrep(ell);
  const int band = cfg.band(ell);
  const QuadratureRule so_rule = haar_rule(GroupTag::SO2, band);
  const QuadratureRule o_rule = haar_rule(GroupTag::O2, band);
  const double spectrum = cfg.tol("spectrum");

  const SphericalFunction phi_pi =
      detail::maybe_rebased(make_spherical_function(tau, so_ktype(pi_w), so_rule, spectrum), cfg);
  const GroupElement a = embed_K_in_G(coset_representative(2));
  const CMatrix amat = phi_pi(a);
  const auto r = phi_pi.rank();
  const double a_squared_defect = max_abs(CMatrix(amat * amat - CMatrix::Identity(r, r)));
  const double sign = amat.trace().real() >= 0.0 ? 1.0 : -1.0;

  VerificationReport report = detail::start_report("impar", 2, to_string(tau.label()), to_string(pi_w), cfg.tol("impar"),
                                                   cfg, &o_rule);
  report.add("A", amat.trace().real() / static_cast<double>(r));
  report.add("a_squared_defect", a_squared_defect);
  if (a_squared_defect > cfg.tol("involution")) {
    report.residual = a_squared_defect;
    report.note = "A^2 != I";
    return report;
  }
  const OType gamma = OType::self_conjugate(pi_w, static_cast<int>(sign));
  const OType opposite = OType::self_conjugate(pi_w, -static_cast<int>(sign));
  report.delta = to_string(gamma);
  const KType gamma_type = o_ktype(gamma, amat);
  const IsotypicComponent comp_gamma = projector(tau, gamma_type, o_rule, spectrum);
  const IsotypicComponent comp_opposite = projector(tau, o_ktype(opposite), o_rule, spectrum);
  const double projector_gap = max_abs(CMatrix(phi_pi.component().projector - comp_gamma.projector));
  report.add("projector_gap", projector_gap);
  report.add("rank_gamma", comp_gamma.rank);
  report.add("rank_opposite", comp_opposite.rank);
  if (comp_gamma.rank != r) {
    report.residual = 1.0;
    report.note = "rank of P_gamma differs from rank of P_pi";
    return report;
  }
  const auto [phi_gamma, unitarity] = detail::align_to(SphericalFunction(tau, gamma_type, comp_gamma), phi_pi.basis());
  report.add("alignment_defect", unitarity);
  if (!phi_gamma) {
    report.residual = 1.0;
    report.note = "E(gamma) and E(pi) differ";
    return report;
  }
  double residual = 0.0;
  for (const GroupElement& g : sample_elements(2, cfg.samples, cfg.seed)) {
    residual = std::max(residual, max_abs(CMatrix(phi_pi(g) - (*phi_gamma)(g))));
  }
  report.residual = residual;
  report.verdict = residual < report.tolerance && projector_gap < cfg.tol("projector") && comp_opposite.rank == 0;
  return report;
}

/// n = 2, pi = (m), m != 0: with basis(E(pi_phi)) := tau(a) basis(E(pi)),
///   Phi^{tau,gamma}(g) = [[Phi^{tau,pi}(g), Phi^{tau,pi}(ga)], [Phi^{tau,pi_phi}(ga), Phi^{tau,pi_phi}(g)]]
/// for the doubled O(2) type gamma = {pi, pi_phi}.
inline VerificationReport check_theorem_matrix(int ell, int m, const VerifyConfig& cfg = {}) {
  if (!(m != 0 && std::abs(m) <= ell)) throw Error(ErrorCode::theorem_precondition, "needs 0 < |m| <= l");
  const HighestWeight pi_w = HighestWeight::so2(m);
  const HighestWeight pi_phi_w = phi_action(pi_w);
  const UnitaryRep tau = so3_irrep(ell);
  const int band = cfg.band(ell);
  const QuadratureRule so_rule = haar_rule(GroupTag::SO2, band);
  const QuadratureRule o_rule = haar_rule(GroupTag::O2, band);
  const double spectrum = cfg.tol("spectrum");
  const OType gamma = OType::doubled(pi_w);
  VerificationReport report =
      detail::start_report("matrix", 2, to_string(tau.label()), to_string(gamma), cfg.tol("matrix"), cfg, &o_rule);

  const SphericalFunction phi_pi =
      detail::maybe_rebased(make_spherical_function(tau, so_ktype(pi_w), so_rule, spectrum), cfg);
  const SphericalFunction phi_phi_own = make_spherical_function(tau, so_ktype(pi_phi_w), so_rule, spectrum);
  const GroupElement a = embed_K_in_G(coset_representative(2));
  const CMatrix aligned_phi_basis = tau(a) * phi_pi.basis();
  const double alignment_defect =
      max_abs(CMatrix(phi_phi_own.component().projector * aligned_phi_basis - aligned_phi_basis));
  report.add("alignment_defect", alignment_defect);
  if (alignment_defect > cfg.tol("alignment")) {
    report.residual = alignment_defect;
    report.note = "tau(a) basis(E(pi)) does not span E(pi_phi)";
    return report;
  }
  const SphericalFunction phi_phi = phi_phi_own.with_basis(aligned_phi_basis);

  const IsotypicComponent comp_gamma = projector(tau, o_ktype(gamma), o_rule, spectrum);
  report.add("rank_gamma", comp_gamma.rank);
  report.add("multiplicity_gamma", comp_gamma.multiplicity());
  const int r = phi_pi.rank();
  if (comp_gamma.rank != 2 * r) {
    report.residual = 1.0;
    report.note = "rank of P_gamma is not 2 d(pi)";
    return report;
  }
  CMatrix block_basis(tau.dim(), 2 * r);
  block_basis << phi_pi.basis(), phi_phi.basis();
  const auto [phi_gamma, unitarity] = detail::align_to(SphericalFunction(tau, o_ktype(gamma), comp_gamma), block_basis);
  report.add("basis_defect", unitarity);
  if (!phi_gamma) {
    report.residual = 1.0;
    report.note = "E(pi) + tau(a)E(pi) is not E(gamma)";
    return report;
  }
  double residual = 0.0;
  for (const GroupElement& g : sample_elements(2, cfg.samples, cfg.seed)) {
    const GroupElement ga = g * a;
    CMatrix block(2 * r, 2 * r);
    block << phi_pi(g), phi_pi(ga), phi_phi(ga), phi_phi(g);
    residual = std::max(residual, max_abs(CMatrix((*phi_gamma)(g) - block)));
  }
  report.add("identity_offblock", max_abs(phi_pi(a)));
  report.residual = residual;
  report.verdict = residual < report.tolerance;
  return report;
}

/// Highest weight of rho o Ad(a) is phi_action of the highest weight of rho, for SO(4) irreps.
inline VerificationReport check_theorem_weights(int p, int q, const VerifyConfig& cfg = {}) {
  const HighestWeight label = HighestWeight::so4(p, q);
  VerificationReport report =
      detail::start_report("weights", 4, to_string(label), "Ad(a)", cfg.tol("weights"), cfg, nullptr);
  const UnitaryRep rho = so4_irrep(p, q);
  try {
    const WeightExtraction plain = extract_highest_weight(rho, 2, cfg.tol("weights"));
    const WeightExtraction twisted = extract_highest_weight(twisted_by_reflection(rho), 2, cfg.tol("weights"));
    double residual = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      residual = std::max(residual, std::abs(plain.eigenvalues[i] - plain.weight.entries[i]));
      residual = std::max(residual, std::abs(twisted.eigenvalues[i] - twisted.weight.entries[i]));
    }
    report.add("extracted_m1", plain.weight.entries[0]);
    report.add("extracted_m2", plain.weight.entries[1]);
    report.add("twisted_m1", twisted.weight.entries[0]);
    report.add("twisted_m2", twisted.weight.entries[1]);
    report.residual = residual;
    const bool labels_match = plain.weight == label;
    const bool twist_matches = twisted.weight == phi_action(plain.weight);
    report.verdict = labels_match && twist_matches && residual < report.tolerance;
    if (!labels_match) report.note = "extracted weight " + to_string(plain.weight) + " differs from the label";
    else if (!twist_matches) report.note = "twisted weight " + to_string(twisted.weight) + " is not phi of the weight";
  } catch (const Error& e) {
    report.residual = 1.0;
    report.note = e.what();
  }
  return report;
}

/// Zonal check on the group: the trivial-type spherical functions of degree-2j tau,
/// for K = SO(n) and K = O(n), agree with each other and with the projective zonal
/// function at the projective distance of g.
inline VerificationReport check_zonal_on_group(int n, int j, const VerifyConfig& cfg = {}) {
  if (n != 2 && n != 3) throw Error(ErrorCode::unsupported_group, "zonal group check implemented for n = 2, 3");
  const int degree = 2 * j;
  const UnitaryRep tau = n == 2 ? so3_irrep(degree) : so4_irrep(degree, 0);
  const HighestWeight trivial = n == 2 ? HighestWeight::so2(0) : HighestWeight::so3(0);
  const OType trivial_o = n == 2 ? OType::self_conjugate(trivial, 1) : OType::odd_tensor(trivial, false);
  const int band = cfg.band(degree);
  const QuadratureRule so_rule = haar_rule(n == 2 ? GroupTag::SO2 : GroupTag::SO3, band);
  const QuadratureRule o_rule = haar_rule(n == 2 ? GroupTag::O2 : GroupTag::O3, band);
  VerificationReport report = detail::start_report("zonal-group", n, to_string(tau.label()), to_string(trivial_o),
                                                   cfg.tol("zonal_group"), cfg, &o_rule);
  const double spectrum = cfg.tol("spectrum");
  const SphericalFunction phi_so = make_spherical_function(tau, so_ktype(trivial), so_rule, spectrum);
  const SphericalFunction phi_o = make_spherical_function(tau, o_ktype(trivial_o), o_rule, spectrum);
  const ZonalParams projective = ZonalParams::projective(n);
  const ZonalParams sphere = ZonalParams::sphere(n);
  Sampler sampler(cfg.seed);
  std::vector<GroupElement> points{GroupElement::identity(static_cast<std::size_t>(n) + 1)};
  for (int i = 0; i < cfg.samples; ++i) points.push_back(sampler.special_orthogonal(static_cast<std::size_t>(n) + 1));
  double residual = 0.0;
  double sphere_residual = 0.0;
  for (const GroupElement& g : points) {
    const Complex v_so = phi_so(g)(0, 0);
    const Complex v_o = phi_o(g)(0, 0);
    const double theta = geodesic_angle(g);
    const double expected = zonal(projective, j, projective_angle(theta));
    residual = std::max({residual, std::abs(v_so - expected), std::abs(v_so - v_o)});
    sphere_residual = std::max(sphere_residual, std::abs(v_so - zonal(sphere, degree, theta)));
  }
  report.add("sphere_residual", sphere_residual);
  report.residual = std::max(residual, sphere_residual);
  report.verdict = report.residual < report.tolerance;
  return report;
}

}  // namespace sphlab
