#pragma once

// Haar-measure quadrature on SO(2), SO(3), O(2), O(3), normalized to total mass 1.
//
// band_limit B means: every product of two matrix coefficients of irreps with
// labels <= B is integrated exactly (equivalently, single coefficients up to 2B).
//   SO(2): 2B+1 equally spaced angles.
//   SO(3): Z(alpha) Y(beta) Z(gamma), 2B+1 trapezoid points in alpha and gamma,
//          B+1 Gauss-Legendre points in cos(beta). Measure sin(b) da db dg / 8 pi^2.
//   O(n):  the SO(n) rule together with its right translate by the coset
//          representative a, each half weight.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "sphlab/group.hpp"

namespace sphlab {

struct QuadratureRule {
  GroupTag group = GroupTag::SO2;
  int band_limit = 0;
  std::vector<GroupElement> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Sum of w_i f(k_i) in node order.
  template <class F>
  auto integrate(F&& f) const {
    auto acc = f(nodes.front()) * weights.front();
    for (std::size_t i = 1; i < nodes.size(); ++i) acc += f(nodes[i]) * weights[i];
    return acc;
  }
};

namespace detail {
// (P_n(z), P_{n-1}(z)) for n >= 1.
inline std::pair<double, double> legendre_pair(int n, double z) {
  double p0 = 1.0;
  double p1 = z;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}
}  // namespace detail

/// Gauss-Legendre nodes and weights on [-1, 1] (n >= 1) by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, pm] = detail::legendre_pair(n, z);
      const double dz = pn / (n * (z * pn - pm) / (z * z - 1.0));
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const auto [pn, pm] = detail::legendre_pair(n, z);
    const double dp = n * (z * pn - pm) / (z * z - 1.0);
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

namespace detail {

inline QuadratureRule so2_rule(int band_limit) {
  QuadratureRule rule{GroupTag::SO2, band_limit, {}, {}};
  const int count = 2 * band_limit + 1;
  for (int i = 0; i < count; ++i) {
    rule.nodes.push_back(plane_rotation(2, 2, 1, 2.0 * std::numbers::pi * i / count));
    rule.weights.push_back(1.0 / count);
  }
  return rule;
}

inline QuadratureRule so3_rule(int band_limit) {
  QuadratureRule rule{GroupTag::SO3, band_limit, {}, {}};
  const int azimuth = 2 * band_limit + 1;
  const auto [cos_beta, gl_weights] = gauss_legendre(band_limit + 1);
  rule.nodes.reserve(static_cast<std::size_t>(azimuth * azimuth) * cos_beta.size());
  for (int a = 0; a < azimuth; ++a) {
    const double alpha = 2.0 * std::numbers::pi * a / azimuth;
    for (std::size_t b = 0; b < cos_beta.size(); ++b) {
      const double beta = std::acos(cos_beta[b]);
      for (int c = 0; c < azimuth; ++c) {
        const double gamma = 2.0 * std::numbers::pi * c / azimuth;
        rule.nodes.push_back(euler_zyz(alpha, beta, gamma));
        rule.weights.push_back(0.5 * gl_weights[b] / (static_cast<double>(azimuth) * azimuth));
      }
    }
  }
  return rule;
}

inline QuadratureRule with_coset(QuadratureRule base, GroupTag tag) {
  const GroupElement a = coset_representative(base.nodes.front().dim());
  QuadratureRule rule{tag, base.band_limit, {}, {}};
  rule.nodes.reserve(2 * base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    rule.nodes.push_back(base.nodes[i]);
    rule.weights.push_back(0.5 * base.weights[i]);
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    rule.nodes.push_back(base.nodes[i] * a);
    rule.weights.push_back(0.5 * base.weights[i]);
  }
  return rule;
}

}  // namespace detail

inline QuadratureRule haar_rule(GroupTag group, int band_limit) {
  if (band_limit < 0) throw Error(ErrorCode::domain, "band limit must be nonnegative");
  switch (group) {
    case GroupTag::SO2: return detail::so2_rule(band_limit);
    case GroupTag::SO3: return detail::so3_rule(band_limit);
    case GroupTag::O2: return detail::with_coset(detail::so2_rule(band_limit), GroupTag::O2);
    case GroupTag::O3: return detail::with_coset(detail::so3_rule(band_limit), GroupTag::O3);
    case GroupTag::SO4: break;
  }
  throw Error(ErrorCode::unsupported_group, "no Haar rule for " + to_string(group));
}

}  // namespace sphlab
