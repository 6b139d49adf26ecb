#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sphlab {

struct QuadratureInfo {
  std::string group = "none";
  int band_limit = 0;
  std::size_t node_count = 0;
};

/// Outcome of one verifier run. Details are kept in insertion order.
struct VerificationReport {
  std::string theorem;
  int n = 0;
  std::string tau;
  std::string delta;
  double residual = 0.0;
  bool verdict = false;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  QuadratureInfo quadrature;
  std::vector<std::pair<std::string, double>> details;
  std::string note;

  void add(std::string key, double value) { details.emplace_back(std::move(key), value); }

  double detail(const std::string& key, double fallback = 0.0) const {
    for (const auto& [k, v] : details)
      if (k == key) return v;
    return fallback;
  }
};

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.verdict) return false;
  return true;
}

inline double max_residual(const std::vector<VerificationReport>& reports) {
  double m = 0.0;
  for (const auto& r : reports) m = r.residual > m ? r.residual : m;
  return m;
}

}  // namespace sphlab
