#pragma once

// JSON forms of reports and classification tables (nlohmann::json).

#include "json.hpp"

#include <string>
#include <vector>

#include "sphlab/report.hpp"
#include "sphlab/weights.hpp"

namespace sphlab {

inline void to_json(nlohmann::ordered_json& j, const QuadratureInfo& q) {
  j = nlohmann::ordered_json{{"group", q.group}, {"band_limit", q.band_limit}, {"node_count", q.node_count}};
}

inline void to_json(nlohmann::ordered_json& j, const VerificationReport& r) {
  j = nlohmann::ordered_json{{"theorem", r.theorem}, {"n", r.n},          {"tau", r.tau},
                             {"delta", r.delta},     {"residual", r.residual}, {"verdict", r.verdict},
                             {"tolerance", r.tolerance}, {"seed", r.seed},  {"quadrature", r.quadrature}};
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = std::move(details);
  if (!r.note.empty()) j["note"] = r.note;
}

inline nlohmann::ordered_json weight_json(const HighestWeight& w) { return w.entries; }

inline nlohmann::ordered_json o_type_json(const OType& t) {
  nlohmann::ordered_json j{{"variant", to_string(t.variant)}};
  if (auto partner = t.partner()) j["partner_weight"] = weight_json(*partner);
  if (t.variant == OVariant::even_self_conjugate) j["sign"] = t.sign;
  j["dim"] = t.dimension;
  return j;
}

/// {n, so_weight, o_types: [...]} for SO(n) weights with first entry <= max_label.
/// A phi-conjugate pair {pi, pi_phi} gets one row, keyed by its canonical member.
inline nlohmann::ordered_json classification_table(std::size_t n, int max_label) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const HighestWeight& w : weights_up_to(n, max_label)) {
    if (!is_phi_equivalent(w) && !(OType::doubled(w).weight == w)) continue;
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (const OType& t : o_types_from_so_type(w)) types.push_back(o_type_json(t));
    rows.push_back({{"n", n}, {"so_weight", weight_json(w)}, {"o_types", std::move(types)}});
  }
  return rows;
}

}  // namespace sphlab
