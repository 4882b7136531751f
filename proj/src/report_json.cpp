#include "autocomm/report_json.hpp"

#include <sstream>

namespace autocomm {

using nlohmann::ordered_json;

ordered_json bound_entry_to_json(const BoundEntry& e) {
  ordered_json j;
  j["id"] = e.id;
  j["side"] = e.side;
  if (e.g) j["g"] = *e.g;
  j["bound"] = e.bound.str();
  j["actual"] = e.actual.str();
  j["holds"] = e.holds;
  j["equality"] = e.equality;
  j["applicable"] = e.applicable;
  if (!e.note.empty()) j["note"] = e.note;
  if (!e.witness.empty()) j["witness"] = e.witness;
  return j;
}

ordered_json characterization_to_json(const CharacterizationVerdict& v) {
  ordered_json j;
  j["id"] = v.id;
  j["hypothesis_met"] = v.hypothesis_met;
  if (v.conclusion_holds) j["conclusion_holds"] = *v.conclusion_holds;
  if (!v.details.empty()) j["details"] = v.details;
  return j;
}

ordered_json report_to_json(const FiniteGroup& g, const AutocommutingReport& r,
                            const BoundReport* bounds,
                            const std::vector<CharacterizationVerdict>* checks) {
  ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["aut_order"] = r.aut_order;
  j["L"] = r.absolute_center.members;
  j["K"] = r.autocommutator_subgroup.members;
  j["S"] = r.autocommutator_set;
  j["orbit_count"] = r.orbit_count;
  j["pr"] = r.pr.str();
  ordered_json dist;
  for (int v = 0; v < r.order; ++v) dist[g.labels[v]] = r.distribution[v].str();
  j["distribution"] = dist;
  if (bounds) {
    ordered_json arr = ordered_json::array();
    for (const BoundEntry& e : bounds->entries) arr.push_back(bound_entry_to_json(e));
    j["bounds"] = arr;
  }
  if (checks) {
    ordered_json arr = ordered_json::array();
    for (const CharacterizationVerdict& v : *checks) arr.push_back(characterization_to_json(v));
    j["characterizations"] = arr;
  }
  return j;
}

ordered_json witness_to_json(const FiniteGroup& g, const FiniteGroup& h,
                             const Autoisoclinism& iso, const Limits& limits) {
  const AutomorphismGroup ag = enumerate_automorphisms(g, limits);
  const AutomorphismGroup ah = enumerate_automorphisms(h, limits);
  const AutocommutatorMap mg = autocommutator_map(g, ag);
  const AutocommutatorMap mh = autocommutator_map(h, ah);

  ordered_json j;
  j["psi"] = iso.psi;
  j["gamma"] = iso.gamma;
  j["beta"] = iso.beta;
  j["cosets_g"] = mg.quot.cosets;
  j["cosets_h"] = mh.quot.cosets;
  j["k_members_g"] = mg.k_subgroup.members;
  j["k_members_h"] = mh.k_subgroup.members;
  j["aut_order"] = ag.order();
  return j;
}

namespace {

std::string member_list(const FiniteGroup& g, const std::vector<int>& members) {
  std::string s = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) s += ", ";
    s += g.labels[members[i]];
  }
  return s + "}";
}

}  // namespace

std::string render_report_text(const FiniteGroup& g, const AutocommutingReport& r,
                               const BoundReport* bounds,
                               const std::vector<CharacterizationVerdict>* checks,
                               bool all_g) {
  std::ostringstream out;
  out << "group: " << r.group << "\n";
  out << "order: " << r.order << "   |Aut|: " << r.aut_order << "\n";
  out << "L(G): " << member_list(g, r.absolute_center.members)
      << "   (" << r.absolute_center.size() << " elements)\n";
  out << "S(G,Aut(G)): " << member_list(g, r.autocommutator_set) << "\n";
  out << "K(G): " << member_list(g, r.autocommutator_subgroup.members) << "\n";
  out << "orbits: " << r.orbit_count << "\n";
  out << "Pr(G,Aut(G)) = " << r.pr << "\n";
  if (all_g) {
    out << "distribution:\n";
    for (int v = 0; v < r.order; ++v)
      out << "  Pr_" << g.labels[v] << " = " << r.distribution[v] << "\n";
  }
  if (bounds) {
    out << "bounds:\n";
    for (const BoundEntry& e : bounds->entries) {
      out << "  " << e.id << " (" << e.side << ")";
      if (e.g) out << " g=" << g.labels[*e.g];
      if (!e.applicable) {
        out << ": not applicable";
        if (!e.note.empty()) out << " (" << e.note << ")";
        out << "\n";
        continue;
      }
      out << ": bound " << e.bound << ", actual " << e.actual << ", "
          << (e.holds ? "holds" : "VIOLATED");
      if (e.equality) out << " (equality)";
      out << "\n";
    }
  }
  if (checks) {
    out << "characterizations:\n";
    for (const CharacterizationVerdict& v : *checks) {
      out << "  " << v.id << ": ";
      if (!v.hypothesis_met) {
        out << "hypothesis not met\n";
      } else {
        out << "hypothesis met, conclusion "
            << (v.conclusion_holds && *v.conclusion_holds ? "verified" : "FAILED") << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace autocomm
