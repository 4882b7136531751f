#include "autocomm/isoclinism.hpp"

#include <algorithm>
#include <map>

namespace autocomm {

AutocommutatorMap autocommutator_map(const FiniteGroup& g, const AutomorphismGroup& a) {
  AutocommutatorMap m;
  m.absolute_center = absolute_center(g, a);
  m.k_subgroup = autocommutator_subgroup(g, a);
  m.quot = quotient(g, m.absolute_center);

  const int cosets = m.quot.group.order;
  const int auts = static_cast<int>(a.elements.size());
  m.value.assign(cosets, std::vector<int>(auts, -1));
  for (int c = 0; c < cosets; ++c) {
    for (int i = 0; i < auts; ++i) {
      int expected = -1;
      // Every representative must give the same value; L(G) is central and
      // pointwise fixed, so a disagreement means the library is broken.
      for (int rep : m.quot.cosets[c]) {
        const int v = autocommutator(g, rep, a.elements[i]);
        if (expected < 0) {
          expected = v;
        } else if (v != expected) {
          throw InternalError("autocommutator map is not well-defined on coset " +
                              std::to_string(c));
        }
      }
      if (!m.k_subgroup.contains(expected))
        throw InternalError("autocommutator value escaped K(G)");
      m.value[c][i] = expected;
    }
  }
  return m;
}

namespace {

std::vector<int> order_multiset(const FiniteGroup& g) {
  std::vector<int> v = g.element_orders;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> subgroup_order_multiset(const FiniteGroup& g, const Subgroup& s) {
  std::vector<int> v;
  v.reserve(s.members.size());
  for (int x : s.members) v.push_back(g.element_order(x));
  std::sort(v.begin(), v.end());
  return v;
}

struct SearchSide {
  AutomorphismGroup aut;
  AutocommutatorMap amap;
  FiniteGroup aut_cayley;
  std::vector<int> k_position;  // element of G -> position in K.members, or -1
};

SearchSide make_side(const FiniteGroup& g, const Limits& limits) {
  SearchSide side;
  side.aut = enumerate_automorphisms(g, limits);
  side.amap = autocommutator_map(g, side.aut);
  side.aut_cayley = automorphism_cayley_group(side.aut);
  side.k_position.assign(g.order, -1);
  for (size_t i = 0; i < side.amap.k_subgroup.members.size(); ++i)
    side.k_position[side.amap.k_subgroup.members[i]] = static_cast<int>(i);
  return side;
}

// Solve for beta on K(G) from the commuting condition, then check it is an
// isomorphism onto K(H). Returns nullopt when no consistent beta exists.
std::optional<std::vector<int>> solve_beta(const FiniteGroup& g, const SearchSide& gs,
                                           const FiniteGroup& h, const SearchSide& hs,
                                           const std::vector<int>& psi,
                                           const std::vector<int>& gamma) {
  const auto& kg = gs.amap.k_subgroup.members;
  const auto& kh = hs.amap.k_subgroup.members;
  std::vector<int> beta(kg.size(), -1);  // position in kg -> element of H

  // Forced values on the raw autocommutator set.
  const int cosets = gs.amap.quot.group.order;
  const int auts = static_cast<int>(gs.aut.elements.size());
  for (int c = 0; c < cosets; ++c)
    for (int i = 0; i < auts; ++i) {
      const int s = gs.amap.value[c][i];
      const int t = hs.amap.value[psi[c]][gamma[i]];
      const int pos = gs.k_position[s];
      if (beta[pos] < 0)
        beta[pos] = t;
      else if (beta[pos] != t)
        return std::nullopt;
    }

  // Extend multiplicatively to all of K(G) = <S>; the set positions with
  // known images grow until a fixpoint.
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < kg.size(); ++i) {
      if (beta[i] < 0) continue;
      for (size_t j = 0; j < kg.size(); ++j) {
        if (beta[j] < 0) continue;
        const int prod_pos = gs.k_position[g.mul(kg[i], kg[j])];
        const int image = h.mul(beta[i], beta[j]);
        if (beta[prod_pos] < 0) {
          beta[prod_pos] = image;
          grew = true;
        } else if (beta[prod_pos] != image) {
          return std::nullopt;
        }
      }
    }
  }

  // beta must be a bijection K(G) -> K(H).
  std::vector<char> used(h.order, 0);
  for (size_t i = 0; i < kg.size(); ++i) {
    const int v = beta[i];
    if (v < 0) throw InternalError("beta left undefined on K(G)");  // S generates K
    if (hs.k_position[v] < 0 || used[v]) return std::nullopt;
    used[v] = 1;
  }
  if (kg.size() != kh.size()) return std::nullopt;
  return beta;
}

}  // namespace

AutoisoclinismResult find_autoisoclinism(const FiniteGroup& g, const FiniteGroup& h,
                                         const IsoclinismOptions& opts) {
  AutoisoclinismResult result;

  SearchSide gs = make_side(g, opts.limits);
  SearchSide hs = make_side(h, opts.limits);

  if (opts.prescreen) {
    if (gs.aut.order() != hs.aut.order()) {
      result.reject_reason = "|Aut(G)| != |Aut(H)|";
      return result;
    }
    if (gs.amap.quot.group.order != hs.amap.quot.group.order) {
      result.reject_reason = "|G/L(G)| != |H/L(H)|";
      return result;
    }
    if (gs.amap.k_subgroup.size() != hs.amap.k_subgroup.size()) {
      result.reject_reason = "|K(G)| != |K(H)|";
      return result;
    }
    if (order_multiset(gs.amap.quot.group) != order_multiset(hs.amap.quot.group)) {
      result.reject_reason = "order statistics of G/L(G) and H/L(H) differ";
      return result;
    }
    if (subgroup_order_multiset(g, gs.amap.k_subgroup) !=
        subgroup_order_multiset(h, hs.amap.k_subgroup)) {
      result.reject_reason = "order statistics of K(G) and K(H) differ";
      return result;
    }
    if (order_multiset(gs.aut_cayley) != order_multiset(hs.aut_cayley)) {
      result.reject_reason = "order statistics of Aut(G) and Aut(H) differ";
      return result;
    }
  }

  IsoSearchOptions iso_opts;
  iso_opts.node_budget = opts.limits.iso_node_budget;
  iso_opts.order_cap = opts.limits.iso_order_cap;

  // gamma candidates are needed once per psi, so materialize them first.
  std::vector<std::vector<int>> gammas;
  const bool gamma_complete = for_each_isomorphism(
      gs.aut_cayley, hs.aut_cayley, iso_opts, [&](const std::vector<int>& images) {
        gammas.push_back(images);
        return true;
      });
  if (!gamma_complete)
    throw InternalError("gamma enumeration stopped unexpectedly");
  if (gammas.empty()) {
    result.reject_reason = "Aut(G) and Aut(H) are not isomorphic";
    return result;
  }

  long long budget = opts.budget;
  bool exhausted_budget = false;
  std::optional<Autoisoclinism> witness;

  const bool psi_complete = for_each_isomorphism(
      gs.amap.quot.group, hs.amap.quot.group, iso_opts,
      [&](const std::vector<int>& psi) {
        for (const std::vector<int>& gamma : gammas) {
          if (budget-- <= 0) {
            exhausted_budget = true;
            return false;
          }
          ++result.pairs_checked;
          if (auto beta = solve_beta(g, gs, h, hs, psi, gamma)) {
            witness = Autoisoclinism{psi, gamma, *beta};
            return false;
          }
        }
        return true;
      });

  if (witness) {
    result.status = IsoclinismStatus::Found;
    result.witness = std::move(witness);
  } else if (exhausted_budget || !psi_complete) {
    result.status = IsoclinismStatus::BudgetExceeded;
  } else {
    result.status = IsoclinismStatus::None;
  }
  return result;
}

InvarianceVerdict verify_invariance(const FiniteGroup& g, const FiniteGroup& h,
                                    const Autoisoclinism& iso,
                                    const IsoclinismOptions& opts) {
  SearchSide gs = make_side(g, opts.limits);
  SearchSide hs = make_side(h, opts.limits);

  DistributionOptions dopts;
  dopts.oracle_cap = opts.limits.oracle_cap;
  const std::vector<Rational> dist_g = distribution(g, gs.aut, dopts);
  const std::vector<Rational> dist_h = distribution(h, hs.aut, dopts);

  InvarianceVerdict verdict;
  verdict.distributions_match = true;
  verdict.bijection_ok = true;

  const auto& kg = gs.amap.k_subgroup.members;
  const int cosets = gs.amap.quot.group.order;
  const int auts = static_cast<int>(gs.aut.elements.size());

  if (hs.amap.quot.group.order != cosets ||
      static_cast<int>(hs.aut.elements.size()) != auts ||
      static_cast<int>(iso.psi.size()) != cosets ||
      static_cast<int>(iso.gamma.size()) != auts || iso.beta.size() != kg.size())
    throw InvalidSpecError("autoisoclinism witness shape does not match the groups");

  for (size_t pos = 0; pos < kg.size(); ++pos) {
    const int v = kg[pos];
    const int image = iso.beta[pos];
    ++verdict.values_checked;
    if (dist_g[v] != dist_h[image]) {
      verdict.distributions_match = false;
      verdict.mismatched.push_back(v);
    }

    // lambda: (xL, alpha) -> (psi(xL), gamma(alpha)) must carry the solution
    // set of v bijectively onto the solution set of beta(v). psi and gamma
    // are bijections, so checking membership plus counts is enough.
    long long source_count = 0, target_count = 0;
    for (int c = 0; c < cosets; ++c)
      for (int i = 0; i < auts; ++i) {
        if (gs.amap.value[c][i] == v) {
          ++source_count;
          if (hs.amap.value[iso.psi[c]][iso.gamma[i]] != image) verdict.bijection_ok = false;
        }
        if (hs.amap.value[c][i] == image) ++target_count;
      }
    if (source_count != target_count) verdict.bijection_ok = false;
  }
  return verdict;
}

}  // namespace autocomm
