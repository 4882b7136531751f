#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autocomm/automorphism.hpp"
#include "autocomm/autocommuting.hpp"
#include "autocomm/group.hpp"
#include "autocomm/limits.hpp"

namespace autocomm {

/// The map (xL(G), alpha) -> [x, alpha], tabulated on coset representatives
/// and verified well-defined over every representative choice (it must be,
/// since L(G) is central and fixed pointwise; a violation is an internal
/// consistency failure).
struct AutocommutatorMap {
  Quotient quot;             // G / L(G)
  Subgroup absolute_center;  // L(G)
  Subgroup k_subgroup;       // K(G)
  std::vector<std::vector<int>> value;  // [coset][aut index] -> element of K(G)
};

AutocommutatorMap autocommutator_map(const FiniteGroup& g, const AutomorphismGroup& a);

/// Witness triple. psi maps coset indices of G/L(G) to coset indices of
/// H/L(H); gamma maps positions in Aut(G) to positions in Aut(H); beta maps
/// positions in K(G).members to element indices of H.
struct Autoisoclinism {
  std::vector<int> psi;
  std::vector<int> gamma;
  std::vector<int> beta;
};

enum class IsoclinismStatus { Found, None, BudgetExceeded };

struct AutoisoclinismResult {
  IsoclinismStatus status = IsoclinismStatus::None;
  std::optional<Autoisoclinism> witness;
  long long pairs_checked = 0;
  std::string reject_reason;  // set when prescreening decided the answer
};

struct IsoclinismOptions {
  long long budget = 1'000'000;  // (psi, gamma) pairs fully checked
  bool prescreen = true;         // invariant-vector fast rejection
  Limits limits;
};

/// Searches for a triple (psi, gamma, beta) making the autocommutator-map
/// diagram commute. psi and gamma are enumerated by generator-image
/// backtracking; beta is solved from the diagram on the autocommutator values
/// (which generate K(G)) and then checked as an isomorphism. An exhausted
/// search without success is a definitive None; running out of budget is
/// BudgetExceeded.
AutoisoclinismResult find_autoisoclinism(const FiniteGroup& g, const FiniteGroup& h,
                                         const IsoclinismOptions& opts = {});

struct InvarianceVerdict {
  bool distributions_match = false;  // Pr_g(G) = Pr_beta(g)(H) on all of K(G)
  bool bijection_ok = false;         // lambda restricts to S_g -> T_beta(g)
  int values_checked = 0;
  std::vector<int> mismatched;  // elements of K(G) where equality failed
};

/// Verifies the invariance statement for a validated witness: exact equality
/// of the distributions under beta, plus the pair-level bijection
/// (xL, alpha) -> (psi(xL), gamma(alpha)) between solution sets.
InvarianceVerdict verify_invariance(const FiniteGroup& g, const FiniteGroup& h,
                                    const Autoisoclinism& iso,
                                    const IsoclinismOptions& opts = {});

}  // namespace autocomm
