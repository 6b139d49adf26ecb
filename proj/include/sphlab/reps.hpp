#pragma once

// Explicit unitary irreps of SO(2), SO(3), SO(4) and of the O(2), O(3) types.
//
// SO(2): m |-> e^{i m theta} with exp(theta I_{21}) = [[cos, sin], [-sin, cos]].
// SO(3): spin-l matrices D^l in the J_z basis, evaluated through the SU(2) lift.
// SO(4): x |-> qL x conj(qR) lifts g to (qL, qR); the irrep with highest weight
//        (p, q) is spin (p-q)/2 on qL tensored with spin (p+q)/2 on qR. This
//        dictionary is the one highest_weight_extract reports (the defining
//        representation has weight (1,0)).

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sphlab/group.hpp"
#include "sphlab/quaternion.hpp"
#include "sphlab/su2.hpp"
#include "sphlab/weights.hpp"

namespace sphlab {

using RepLabel = std::variant<std::monostate, HighestWeight, OType>;

inline std::string to_string(const RepLabel& label) {
  if (const auto* w = std::get_if<HighestWeight>(&label)) return to_string(*w);
  if (const auto* t = std::get_if<OType>(&label)) return to_string(*t);
  return "unlabeled";
}

/// A finite-dimensional unitary representation given by its evaluator.
class UnitaryRep {
 public:
  using Evaluator = std::function<CMatrix(const GroupElement&)>;

  UnitaryRep(GroupTag group, RepLabel label, int dim, Evaluator eval)
      : group_(group), label_(std::move(label)), dim_(dim), eval_(std::move(eval)) {}

  GroupTag group() const { return group_; }
  const RepLabel& label() const { return label_; }
  int dim() const { return dim_; }

  CMatrix operator()(const GroupElement& g) const {
    if (g.dim() != static_cast<std::size_t>(group_dimension(group_))) {
      throw Error(ErrorCode::wrong_group, "element of size " + std::to_string(g.dim()) + " passed to a " +
                                              to_string(group_) + " representation");
    }
    if (is_special(group_) && g.det_sign() != 1) {
      throw Error(ErrorCode::wrong_group, "reflection passed to a " + to_string(group_) + " representation");
    }
    return eval_(g);
  }

 private:
  GroupTag group_;
  RepLabel label_;
  int dim_;
  Evaluator eval_;
};

/// xi = trace, chi = d * xi.
class Character {
 public:
  explicit Character(UnitaryRep rep) : rep_(std::move(rep)) {}

  int degree() const { return rep_.dim(); }
  Complex xi(const GroupElement& k) const { return rep_(k).trace(); }
  Complex chi(const GroupElement& k) const { return static_cast<double>(degree()) * xi(k); }
  const UnitaryRep& rep() const { return rep_; }

 private:
  UnitaryRep rep_;
};

inline UnitaryRep so2_irrep(int m) {
  return UnitaryRep(GroupTag::SO2, HighestWeight::so2(m), 1, [m](const GroupElement& g) {
    const double theta = std::atan2(g(0, 1), g(0, 0));
    CMatrix out(1, 1);
    out(0, 0) = m == 0 ? Complex(1.0, 0.0) : std::exp(Complex(0.0, m * theta));
    return out;
  });
}

inline UnitaryRep so3_irrep(int ell) {
  if (ell < 0) throw Error(ErrorCode::domain, "SO(3) label must be nonnegative");
  auto spin = std::make_shared<const SpinRep>(2 * ell);
  return UnitaryRep(GroupTag::SO3, HighestWeight::so3(ell), 2 * ell + 1, [spin](const GroupElement& g) {
    return (*spin)(su2_matrix(quaternion_from_rotation(g.matrix())));
  });
}

namespace detail {
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  CMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index l = 0; l < bc; ++l)
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const Complex s = a(i, j);
        // Written out to avoid the NaN-recovery path of std::complex multiplication.
        for (Eigen::Index k = 0; k < br; ++k) {
          const Complex t = b(k, l);
          out(i * br + k, j * bc + l) = {s.real() * t.real() - s.imag() * t.imag(), s.real() * t.imag() + s.imag() * t.real()};
        }
      }
  return out;
}
}  // namespace detail

inline UnitaryRep so4_irrep(int p, int q) {
  if (!(p >= std::abs(q))) throw Error(ErrorCode::validation, "SO(4) label needs p >= |q|");
  auto left = std::make_shared<const SpinRep>(p - q);
  auto right = std::make_shared<const SpinRep>(p + q);
  return UnitaryRep(GroupTag::SO4, HighestWeight::so4(p, q), (p + q + 1) * (p - q + 1),
                    [left, right](const GroupElement& g) {
                      const QuaternionPair lift = so4_lift(g);
                      return detail::kron((*left)(su2_matrix(lift.left)), (*right)(su2_matrix(lift.right)));
                    });
}

/// The irrep of SO(n), n in {2, 3, 4}, with the given highest weight.
inline UnitaryRep so_irrep(const HighestWeight& w) {
  require_valid(w);
  switch (w.group_dim()) {
    case 2: return so2_irrep(w.entries[0]);
    case 3: return so3_irrep(w.entries[0]);
    case 4: return so4_irrep(w.entries[0], w.entries[1]);
    default: break;
  }
  throw Error(ErrorCode::unsupported_group, "no irreps implemented for SO(" + std::to_string(w.group_dim()) + ")");
}

/// Realization of an O(n) type, n in {2, 3}.
///   pi (x) 1, pi (x) eps: g = k (-I)^s |-> (+-1)^s pi(k)
///   pi . eps_A:            k a |-> pi(k) A
///   doubled:               k |-> diag(pi(k), pi_phi(k)), k a |-> [[0, pi(k)], [pi_phi(k), 0]]
/// For the self-conjugate type the intertwiner A must be supplied unless pi is
/// one-dimensional, in which case A = sign. A is expressed in the basis of so_irrep(pi).
inline UnitaryRep o_type_rep(const OType& type, const std::optional<CMatrix>& intertwiner = std::nullopt) {
  const std::size_t n = type.n();
  if (n != 2 && n != 3) throw Error(ErrorCode::unsupported_group, "O(n) types implemented for n = 2, 3");
  const GroupTag tag = n == 2 ? GroupTag::O2 : GroupTag::O3;
  const UnitaryRep pi = so_irrep(type.weight);
  const GroupElement a = coset_representative(n);
  const int d = static_cast<int>(type.dimension);

  switch (type.variant) {
    case OVariant::odd_tensor_trivial:
    case OVariant::odd_tensor_epsilon: {
      const double eps = type.variant == OVariant::odd_tensor_epsilon ? -1.0 : 1.0;
      return UnitaryRep(tag, type, d, [pi, eps](const GroupElement& g) -> CMatrix {
        if (g.det_sign() > 0) return pi(g);
        return eps * pi(GroupElement(Matrix(-g.matrix())));
      });
    }
    case OVariant::even_self_conjugate: {
      CMatrix amat;
      if (intertwiner) {
        amat = *intertwiner;
        if (amat.rows() != pi.dim() || amat.cols() != pi.dim()) {
          throw Error(ErrorCode::contract_violation, "intertwiner has the wrong size");
        }
        if (max_abs(CMatrix(amat * amat - CMatrix::Identity(pi.dim(), pi.dim()))) > 1e-9) {
          throw Error(ErrorCode::contract_violation, "intertwiner must satisfy A^2 = I");
        }
        if (pi.dim() == 1 && amat(0, 0).real() * type.sign < 0) {
          throw Error(ErrorCode::contract_violation, "one-dimensional intertwiner disagrees with the type's sign");
        }
      } else if (pi.dim() == 1) {
        amat = CMatrix::Constant(1, 1, Complex(static_cast<double>(type.sign), 0.0));
      } else {
        throw Error(ErrorCode::incomplete_type, "no intertwiner registered for " + to_string(type));
      }
      return UnitaryRep(tag, type, d, [pi, a, amat](const GroupElement& g) -> CMatrix {
        if (g.det_sign() > 0) return pi(g);
        return pi(g * a) * amat;
      });
    }
    case OVariant::even_doubled: {
      return UnitaryRep(tag, type, d, [pi, a](const GroupElement& g) -> CMatrix {
        const int m = pi.dim();
        CMatrix out = CMatrix::Zero(2 * m, 2 * m);
        const GroupElement k = g.det_sign() > 0 ? g : g * a;
        const CMatrix pk = pi(k);
        const CMatrix pk_phi = pi(a * k * a);
        if (g.det_sign() > 0) {
          out.topLeftCorner(m, m) = pk;
          out.bottomRightCorner(m, m) = pk_phi;
        } else {
          out.topRightCorner(m, m) = pk;
          out.bottomLeftCorner(m, m) = pk_phi;
        }
        return out;
      });
    }
  }
  throw Error(ErrorCode::validation, "unknown O(n) type");
}

inline Character o_type_character(const OType& type, const std::optional<CMatrix>& intertwiner = std::nullopt) {
  return Character(o_type_rep(type, intertwiner));
}

inline Character so_character(const HighestWeight& w) { return Character(so_irrep(w)); }

/// g |-> rho(a g a) for the reflection a = diag(1, ..., 1, -1).
inline UnitaryRep twisted_by_reflection(const UnitaryRep& rho) {
  const std::size_t n = static_cast<std::size_t>(group_dimension(rho.group()));
  Matrix am = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  am(static_cast<Eigen::Index>(n) - 1, static_cast<Eigen::Index>(n) - 1) = -1.0;
  const Matrix a = am;
  return UnitaryRep(rho.group(), std::monostate{}, rho.dim(),
                    [rho, a](const GroupElement& g) { return rho(GroupElement(Matrix(a * g.matrix() * a))); });
}

/// d rho on the complexified Lie algebra, by central differences with one
/// Richardson step over t in {1e-3, 5e-4}.
class DifferentiatedRep {
 public:
  static constexpr double step = 1e-3;

  explicit DifferentiatedRep(UnitaryRep rep) : rep_(std::move(rep)) {}

  const UnitaryRep& rep() const { return rep_; }

  CMatrix operator()(const Matrix& x) const {
    require_antisymmetric(x);
    if (max_abs(x) == 0.0) return CMatrix::Zero(rep_.dim(), rep_.dim());
    const CMatrix coarse = central(x, step);
    const CMatrix fine = central(x, 0.5 * step);
    return (4.0 * fine - coarse) / 3.0;
  }

  CMatrix operator()(const CMatrix& x) const {
    const Matrix re = x.real();
    const Matrix im = x.imag();
    return (*this)(re) + Complex(0.0, 1.0) * (*this)(im);
  }

 private:
  CMatrix central(const Matrix& x, double t) const {
    return (rep_(exp_so(Matrix(t * x))) - rep_(exp_so(Matrix(-t * x)))) / (2.0 * t);
  }

  UnitaryRep rep_;
};

inline DifferentiatedRep differentiate(const UnitaryRep& rho) { return DifferentiatedRep(rho); }

struct WeightExtraction {
  HighestWeight weight;
  /// Unrounded eigenvalues of d rho(i I_{2j,2j-1}) on the highest weight vector.
  std::vector<double> eigenvalues;
  /// Smallest singular value above the kernel threshold (spectral gap of the root system).
  double kernel_gap = 0.0;
};

/// Highest weight of an irrep of SO(2l): the joint eigenvalues of d rho(i I_{2j,2j-1})
/// on the vector annihilated by d rho(X_{e_j +- e_k}), j < k.
inline WeightExtraction extract_highest_weight(const UnitaryRep& rho, std::size_t ell, double tol = 1e-6) {
  if (static_cast<std::size_t>(group_dimension(rho.group())) != 2 * ell || !is_special(rho.group())) {
    throw Error(ErrorCode::dimension, "highest weight extraction needs a representation of SO(2l)");
  }
  const DifferentiatedRep drho(rho);
  const int d = rho.dim();
  const std::vector<CMatrix> roots = positive_root_vectors(ell);
  Eigen::VectorXcd vec;
  double gap = 0.0;
  if (roots.empty()) {
    if (d != 1) throw Error(ErrorCode::multiplicity, "common kernel has dimension " + std::to_string(d));
    vec = Eigen::VectorXcd::Ones(1);
  } else {
    CMatrix stacked(static_cast<Eigen::Index>(roots.size()) * d, d);
    for (std::size_t r = 0; r < roots.size(); ++r) stacked.middleRows(static_cast<Eigen::Index>(r) * d, d) = drho(roots[r]);
    Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
    const Eigen::VectorXd s = svd.singularValues();
    int kernel = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) < tol) ++kernel;
      else gap = s(i);
    }
    if (kernel == 0) throw Error(ErrorCode::reducible, "no vector is annihilated by the positive root vectors");
    if (kernel > 1) throw Error(ErrorCode::multiplicity, "common kernel has dimension " + std::to_string(kernel));
    vec = svd.matrixV().col(d - 1);
  }
  WeightExtraction out;
  out.kernel_gap = gap;
  out.weight.parity = Parity::even;
  for (std::size_t j = 1; j <= ell; ++j) {
    const CMatrix h = Complex(0.0, 1.0) * lie_basis(2 * ell, 2 * j, 2 * j - 1).cast<Complex>();
    const Complex value = vec.dot(drho(h) * vec);
    const double rounded = std::round(value.real());
    if (std::abs(value - Complex(rounded, 0.0)) > tol) {
      throw Error(ErrorCode::reducible, "non-integral weight " + std::to_string(value.real()));
    }
    out.eigenvalues.push_back(value.real());
    out.weight.entries.push_back(static_cast<int>(rounded));
  }
  return out;
}

inline HighestWeight highest_weight_extract(const UnitaryRep& rho, std::size_t ell) {
  return extract_highest_weight(rho, ell).weight;
}

}  // namespace sphlab
