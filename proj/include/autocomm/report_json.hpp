#pragma once

#include <string>

#include <json.hpp>

#include "autocomm/autocommuting.hpp"
#include "autocomm/isoclinism.hpp"

namespace autocomm {

/// Report JSON: group, order, aut_order, L/K/S as index arrays, orbit_count,
/// pr and the distribution keyed by element label, rationals as "a/b"
/// strings. Bounds and characterizations are appended when supplied.
nlohmann::ordered_json report_to_json(const FiniteGroup& g, const AutocommutingReport& r,
                                      const BoundReport* bounds = nullptr,
                                      const std::vector<CharacterizationVerdict>* checks = nullptr);

nlohmann::ordered_json bound_entry_to_json(const BoundEntry& e);
nlohmann::ordered_json characterization_to_json(const CharacterizationVerdict& v);

/// Witness JSON for an autoisoclinism: the three image arrays plus the coset
/// and K-member reference lists needed to read them.
nlohmann::ordered_json witness_to_json(const FiniteGroup& g, const FiniteGroup& h,
                                       const Autoisoclinism& iso, const Limits& limits = {});

/// Human-readable rendering of the same report.
std::string render_report_text(const FiniteGroup& g, const AutocommutingReport& r,
                               const BoundReport* bounds = nullptr,
                               const std::vector<CharacterizationVerdict>* checks = nullptr,
                               bool all_g = false);

}  // namespace autocomm
