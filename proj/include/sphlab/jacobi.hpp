#pragma once

// Jacobi polynomials and the zonal spherical functions of S^n and P^n(R).
//
// Distances are normalized so that both spaces have diameter pi and the zonal
// functions read phi_j(theta) = c_j P_j^{(alpha,beta)}(cos theta), with c_j fixed
// by phi_j(0) = 1:
//   S^n:    alpha = beta = (n-2)/2
//   P^n(R): alpha = (n-2)/2, beta = -1/2

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "sphlab/angles.hpp"
#include "sphlab/error.hpp"

namespace sphlab {

/// Frequency of the cosine argument and diameter of the space.
inline constexpr double zonal_frequency = 1.0;
inline constexpr double zonal_diameter = std::numbers::pi;

/// Rising factorial (x)_k.
inline double pochhammer(double x, int k) {
  if (k < 0) throw Error(ErrorCode::domain, "pochhammer needs k >= 0");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= x + i;
  return p;
}

/// P_j^{(alpha,beta)}(x) by the three-term recurrence in the degree.
inline double jacobi_eval(int j, double alpha, double beta, double x) {
  if (!(alpha > -1.0 && beta > -1.0)) throw Error(ErrorCode::domain, "Jacobi parameters must exceed -1");
  if (j < 0) throw Error(ErrorCode::domain, "Jacobi degree must be nonnegative");
  if (j == 0) return 1.0;
  const double ab = alpha + beta;
  double p0 = 1.0;
  double p1 = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
  for (int n = 2; n <= j; ++n) {
    const double c = 2.0 * n + ab;
    const double a1 = 2.0 * n * (n + ab) * (c - 2.0);
    const double a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
    const double a3 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c;
    const double p2 = (a2 * p1 - a3 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// k! (alpha+1)_{2k} / ((2k)! (alpha+1)_k).
inline double identity_coefficient(int k, double alpha) {
  if (!(alpha > -1.0)) throw Error(ErrorCode::domain, "alpha must exceed -1");
  if (k < 0) throw Error(ErrorCode::domain, "k must be nonnegative");
  // k!/(2k)! = 1/((k+1)(k+2)...(2k)) and (alpha+1)_{2k}/(alpha+1)_k = (alpha+1+k)_k.
  double c = 1.0;
  for (int i = 0; i < k; ++i) c *= (alpha + 1.0 + k + i) / (k + 1.0 + i);
  return c;
}

/// |P_{2k}^{(a,a)}(x) - c_k(a) P_k^{(a,-1/2)}(2x^2-1)|.
inline double check_identity_a(int k, double alpha, double x) {
  const double lhs = jacobi_eval(2 * k, alpha, alpha, x);
  const double rhs = identity_coefficient(k, alpha) * jacobi_eval(k, alpha, -0.5, 2.0 * x * x - 1.0);
  return std::abs(lhs - rhs);
}

enum class Space { sphere, projective };

inline std::string to_string(Space s) { return s == Space::sphere ? "sphere" : "projective"; }

struct ZonalParams {
  Space space = Space::sphere;
  int n = 2;
  double alpha = 0.0;
  double beta = 0.0;

  static ZonalParams make(Space space, int n) {
    if (n < 2) throw Error(ErrorCode::domain, "zonal functions need n >= 2");
    const double alpha = 0.5 * (n - 2);
    return {space, n, alpha, space == Space::sphere ? alpha : -0.5};
  }
  static ZonalParams sphere(int n) { return make(Space::sphere, n); }
  static ZonalParams projective(int n) { return make(Space::projective, n); }
};

/// Normalized zonal spherical function; exactly 1 at theta = 0.
inline double zonal(const ZonalParams& params, int j, double theta) {
  if (!(theta >= 0.0 && theta <= zonal_diameter)) throw Error(ErrorCode::domain, "theta outside [0, pi]");
  const double at_origin = jacobi_eval(j, params.alpha, params.beta, 1.0);
  assert(at_origin != 0.0);
  return jacobi_eval(j, params.alpha, params.beta, std::cos(zonal_frequency * theta)) / at_origin;
}

/// |phi_{2j}(theta) - varphi_j(theta')| for sphere and projective zonal functions.
inline double check_zonal_correspondence(int n, int j, double theta) {
  return std::abs(zonal(ZonalParams::sphere(n), 2 * j, theta) -
                  zonal(ZonalParams::projective(n), j, projective_angle(theta)));
}

}  // namespace sphlab
