#pragma once

#include <atomic>

namespace sphlab {

namespace detail {
inline std::atomic<double>& orthogonality_tolerance_storage() {
  static std::atomic<double> tol{1e-12};
  return tol;
}
}  // namespace detail

/// Entrywise tolerance for g^T g = I. Every orthogonality check reads this value.
inline double orthogonality_tolerance() {
  return detail::orthogonality_tolerance_storage().load(std::memory_order_relaxed);
}

inline void set_orthogonality_tolerance(double tol) {
  detail::orthogonality_tolerance_storage().store(tol, std::memory_order_relaxed);
}

/// Determinant must lie this close to +1 or -1.
inline constexpr double determinant_tolerance = 1e-10;

}  // namespace sphlab
