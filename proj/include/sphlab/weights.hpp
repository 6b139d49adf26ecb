#pragma once

// Highest weights of SO(n) irreps and the SO(n) -> O(n) type catalog.
// Everything here is exact integer arithmetic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "sphlab/error.hpp"

namespace sphlab {

/// Even parity labels so(2l), odd parity labels so(2l+1).
enum class Parity { even, odd };

struct HighestWeight {
  std::vector<int> entries;
  Parity parity = Parity::odd;

  /// n of the group SO(n) this weight labels.
  std::size_t group_dim() const { return 2 * entries.size() + (parity == Parity::odd ? 1 : 0); }
  std::size_t rank() const { return entries.size(); }

  static HighestWeight for_group(std::size_t n, std::vector<int> entries) {
    if (entries.size() != n / 2) throw Error(ErrorCode::dimension, "weight length must be floor(n/2)");
    return {std::move(entries), n % 2 == 0 ? Parity::even : Parity::odd};
  }
  static HighestWeight so2(int m) { return {{m}, Parity::even}; }
  static HighestWeight so3(int j) { return {{j}, Parity::odd}; }
  static HighestWeight so4(int p, int q) { return {{p, q}, Parity::even}; }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

inline std::string to_string(const HighestWeight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.entries[i]);
  }
  return s + ")";
}

inline bool validate_weight(const HighestWeight& w) {
  const auto& m = w.entries;
  if (m.empty()) return w.parity == Parity::odd;
  for (std::size_t i = 0; i + 2 < m.size(); ++i) {
    if (m[i] < m[i + 1]) return false;
  }
  if (w.parity == Parity::even) {
    return m.size() == 1 || m[m.size() - 2] >= std::abs(m.back());
  }
  if (m.size() >= 2 && m[m.size() - 2] < m.back()) return false;
  return m.back() >= 0;
}

inline void require_valid(const HighestWeight& w) {
  if (!validate_weight(w)) throw Error(ErrorCode::validation, "not a dominant weight: " + to_string(w));
}

/// Highest weight of pi o phi, phi(k) = a k a. Negates the last entry for even
/// parity and is the identity for odd parity.
inline HighestWeight phi_action(const HighestWeight& w) {
  require_valid(w);
  HighestWeight out = w;
  if (w.parity == Parity::even && !out.entries.empty()) out.entries.back() = -out.entries.back();
  return out;
}

inline bool is_phi_equivalent(const HighestWeight& w) {
  if (w.parity == Parity::odd || w.entries.empty()) return true;
  return w.entries.back() == 0;
}

/// Weyl dimension formula, exact in integers.
inline std::int64_t weyl_dimension(const HighestWeight& w) {
  require_valid(w);
  const auto l = static_cast<std::int64_t>(w.rank());
  std::int64_t num = 1;
  std::int64_t den = 1;
  if (w.parity == Parity::even) {
    // D_l: rho_i = l - i, roots e_i +- e_j.
    for (std::int64_t i = 0; i < l; ++i) {
      for (std::int64_t j = i + 1; j < l; ++j) {
        const std::int64_t li = w.entries[i] + (l - 1 - i);
        const std::int64_t lj = w.entries[j] + (l - 1 - j);
        const std::int64_t ri = l - 1 - i;
        const std::int64_t rj = l - 1 - j;
        num *= (li - lj) * (li + lj);
        den *= (ri - rj) * (ri + rj);
      }
    }
  } else {
    // B_l with everything doubled: 2 rho_i = 2l - 2i + 1, roots e_i +- e_j and e_i.
    for (std::int64_t i = 0; i < l; ++i) {
      const std::int64_t li = 2 * w.entries[i] + 2 * (l - 1 - i) + 1;
      const std::int64_t ri = 2 * (l - 1 - i) + 1;
      num *= li;
      den *= ri;
      for (std::int64_t j = i + 1; j < l; ++j) {
        const std::int64_t lj = 2 * w.entries[j] + 2 * (l - 1 - j) + 1;
        const std::int64_t rj = 2 * (l - 1 - j) + 1;
        num *= (li - lj) * (li + lj);
        den *= (ri - rj) * (ri + rj);
      }
    }
  }
  return num / den;
}

/// Interlacing rule for SO(n+1) restricted to SO(n); multiplicities are 0 or 1.
inline bool branching_contains(const HighestWeight& tau, const HighestWeight& pi) {
  if (tau.group_dim() != pi.group_dim() + 1) {
    throw Error(ErrorCode::dimension, "branching needs SO(n+1) and SO(n) weights");
  }
  require_valid(tau);
  require_valid(pi);
  const auto& m = tau.entries;
  const auto& k = pi.entries;
  if (tau.parity == Parity::odd) {
    // SO(2l+1) > SO(2l): m1 >= k1 >= m2 >= ... >= m_l >= |k_l|
    for (std::size_t i = 0; i < m.size(); ++i) {
      const int ki = i + 1 == k.size() ? std::abs(k[i]) : k[i];
      if (!(m[i] >= ki)) return false;
      if (i + 1 < m.size() && !(k[i] >= m[i + 1])) return false;
    }
    return true;
  }
  // SO(2l) > SO(2l-1): m1 >= k1 >= m2 >= ... >= k_{l-1} >= |m_l|
  for (std::size_t i = 0; i < k.size(); ++i) {
    const int next = i + 2 == m.size() ? std::abs(m[i + 1]) : m[i + 1];
    if (!(m[i] >= k[i] && k[i] >= next)) return false;
  }
  return true;
}

/// All dominant weights of SO(n) with first entry at most max_first, ordered by
/// first entry, then lexicographically descending.
inline std::vector<HighestWeight> weights_up_to(std::size_t n, int max_first) {
  const std::size_t l = n / 2;
  const Parity parity = n % 2 == 0 ? Parity::even : Parity::odd;
  std::vector<HighestWeight> out;
  if (l == 0) return {HighestWeight{{}, parity}};
  for (int first = 0; first <= max_first; ++first) {
    std::vector<int> cur(l, 0);
    cur[0] = first;
    auto fill = [&](auto&& self, std::size_t i) -> void {
      if (i == l) {
        HighestWeight w{cur, parity};
        if (validate_weight(w)) out.push_back(std::move(w));
        return;
      }
      for (int v = first; v >= -first; --v) {
        cur[i] = v;
        self(self, i + 1);
      }
    };
    if (l == 1) {
      for (int v : {first, -first}) {
        HighestWeight w{{v}, parity};
        if (validate_weight(w) && (out.empty() || !(out.back() == w))) out.push_back(std::move(w));
      }
    } else {
      fill(fill, 1);
    }
  }
  return out;
}

enum class OVariant { odd_tensor_trivial, odd_tensor_epsilon, even_self_conjugate, even_doubled };

inline std::string to_string(OVariant v) {
  switch (v) {
    case OVariant::odd_tensor_trivial: return "odd_tensor_trivial";
    case OVariant::odd_tensor_epsilon: return "odd_tensor_epsilon";
    case OVariant::even_self_conjugate: return "even_self_conjugate";
    case OVariant::even_doubled: return "even_doubled";
  }
  return "?";
}

/// Label of an irreducible O(n) representation built from SO(n) data.
///   odd n:  pi (x) 1 or pi (x) epsilon
///   even n: pi . epsilon_{+-A} when pi ~ pi_phi (sign records which class),
///           or the doubled type on V_pi x V_pi for the unordered pair {pi, pi_phi}.
struct OType {
  OVariant variant = OVariant::odd_tensor_trivial;
  /// pi; for the doubled type, the lexicographically larger member of the pair.
  HighestWeight weight;
  /// +-1 for even_self_conjugate, 0 otherwise.
  int sign = 0;
  std::int64_t dimension = 1;

  std::size_t n() const { return weight.group_dim(); }

  std::optional<HighestWeight> partner() const {
    if (variant == OVariant::even_doubled) return phi_action(weight);
    return std::nullopt;
  }

  bool contains_so_type(const HighestWeight& w) const {
    return w == weight || (variant == OVariant::even_doubled && w == phi_action(weight));
  }

  static OType odd_tensor(const HighestWeight& pi, bool epsilon) {
    require_valid(pi);
    if (pi.group_dim() % 2 == 0) throw Error(ErrorCode::validation, "tensor types exist only for odd n");
    return {epsilon ? OVariant::odd_tensor_epsilon : OVariant::odd_tensor_trivial, pi, 0, weyl_dimension(pi)};
  }

  static OType self_conjugate(const HighestWeight& pi, int sign) {
    require_valid(pi);
    if (pi.group_dim() % 2 == 1) throw Error(ErrorCode::validation, "self-conjugate types exist only for even n");
    if (!is_phi_equivalent(pi)) throw Error(ErrorCode::validation, "self-conjugate type needs m_l = 0");
    if (sign != 1 && sign != -1) throw Error(ErrorCode::validation, "sign must be +1 or -1");
    return {OVariant::even_self_conjugate, pi, sign, weyl_dimension(pi)};
  }

  static OType doubled(const HighestWeight& pi) {
    require_valid(pi);
    if (pi.group_dim() % 2 == 1) throw Error(ErrorCode::validation, "doubled types exist only for even n");
    if (is_phi_equivalent(pi)) throw Error(ErrorCode::validation, "doubled type needs m_l != 0");
    const HighestWeight other = phi_action(pi);
    const HighestWeight& canonical = std::lexicographical_compare(pi.entries.begin(), pi.entries.end(),
                                                                  other.entries.begin(), other.entries.end())
                                         ? other
                                         : pi;
    return {OVariant::even_doubled, canonical, 0, 2 * weyl_dimension(pi)};
  }

  friend bool operator==(const OType&, const OType&) = default;
};

inline std::string to_string(const OType& t) {
  switch (t.variant) {
    case OVariant::odd_tensor_trivial: return to_string(t.weight) + "x1";
    case OVariant::odd_tensor_epsilon: return to_string(t.weight) + "xeps";
    case OVariant::even_self_conjugate: return to_string(t.weight) + (t.sign > 0 ? ".eps+A" : ".eps-A");
    case OVariant::even_doubled: return "{" + to_string(t.weight) + "," + to_string(phi_action(t.weight)) + "}";
  }
  return "?";
}

inline std::vector<OType> o_types_from_so_type(const HighestWeight& w) {
  require_valid(w);
  if (w.group_dim() % 2 == 1) return {OType::odd_tensor(w, false), OType::odd_tensor(w, true)};
  if (is_phi_equivalent(w)) return {OType::self_conjugate(w, 1), OType::self_conjugate(w, -1)};
  return {OType::doubled(w)};
}

}  // namespace sphlab
