#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "autocomm/automorphism.hpp"
#include "autocomm/group.hpp"
#include "autocomm/rational.hpp"

namespace autocomm {

/// The element x^-1 alpha(x).
int autocommutator(const FiniteGroup& g, int x, const Automorphism& alpha);

/// L(G): elements fixed by every automorphism (the singleton orbits).
Subgroup absolute_center(const FiniteGroup& g, const AutomorphismGroup& a);

/// S(G, Aut(G)): every value of the autocommutator, sorted.
std::vector<int> autocommutator_set(const FiniteGroup& g, const AutomorphismGroup& a);

/// K(G): the subgroup generated by the autocommutator set.
Subgroup autocommutator_subgroup(const FiniteGroup& g, const AutomorphismGroup& a);

/// Exact count of pairs (x, alpha) with [x, alpha] = target, over |G||Aut(G)|.
Rational pr_g_bruteforce(const FiniteGroup& g, const AutomorphismGroup& a, int target);

/// The orbit formula: (1/|G|) * sum over x with x*target in orb(x) of
/// 1/|orb(x)|. Independent of the brute-force count.
Rational pr_g_orbit_formula(const FiniteGroup& g, const AutomorphismGroup& a,
                            const OrbitPartition& p, int target);

/// (sum over alpha of |C_G(alpha)|) / (|G||Aut(G)|); equals the g = 1 value.
Rational pr_acentralizer_sum(const FiniteGroup& g, const AutomorphismGroup& a);

/// Closed form 1/|G| + 1/|Aut| - 1/(|G||Aut|), valid only when every
/// non-identity element has trivial stabilizer; nullopt otherwise.
std::optional<Rational> pr_trivial_stabilizer_formula(const FiniteGroup& g,
                                                      const AutomorphismGroup& a);

struct DistributionOptions {
  // Cross-check the orbit formula against the brute-force count when the
  // group order is at most this; a mismatch throws InternalError.
  int oracle_cap = 24;
};

/// Full table g -> Pr_g, computed by the orbit formula.
std::vector<Rational> distribution(const FiniteGroup& g, const AutomorphismGroup& a,
                                   const DistributionOptions& opts = {});

struct AutocommutingReport {
  std::string group;
  int order = 0;
  long long aut_order = 0;
  Subgroup absolute_center;            // L(G)
  std::vector<int> autocommutator_set; // S(G, Aut(G))
  Subgroup autocommutator_subgroup;    // K(G)
  int orbit_count = 0;
  std::vector<Rational> distribution;  // indexed by element
  Rational pr;                         // value at the identity
};

AutocommutingReport analyze_group(const FiniteGroup& g, const AutomorphismGroup& a,
                                  const DistributionOptions& opts = {});

struct BoundEntry {
  std::string id;        // B1..B10
  std::string side;      // "lower" | "upper" | "ordering"
  std::optional<int> g;  // element index for per-g bounds
  Rational bound;
  Rational actual;
  bool holds = false;
  bool equality = false;
  bool applicable = true;
  std::string note;
  nlohmann::ordered_json witness;
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  bool all_hold() const {
    for (const auto& e : entries)
      if (e.applicable && !e.holds) return false;
    return true;
  }
};

/// Evaluates every bound exactly. Entries whose hypotheses fail (G = L(G),
/// or abelian G for the non-abelian bound) are marked inapplicable.
BoundReport bound_report(const FiniteGroup& g, const AutomorphismGroup& a);

struct CharacterizationVerdict {
  std::string id;  // C1, C2, C3
  bool hypothesis_met = false;
  std::optional<bool> conclusion_holds;  // set only when the hypothesis is met
  nlohmann::ordered_json details;
};

std::vector<CharacterizationVerdict> characterization_check(const FiniteGroup& g,
                                                            const AutomorphismGroup& a,
                                                            const Limits& limits = {});

struct ProductRuleReport {
  bool aut_order_matches = false;
  long long aut_order_product = 0;  // |Aut(G)| * |Aut(H)|
  long long aut_order_direct = 0;   // |Aut(G x H)| enumerated directly
  bool all_pairs_equal = false;
  int pairs_checked = 0;
  std::vector<std::pair<int, int>> mismatches;
};

/// For coprime |G|, |H|: enumerates Aut(G x H) directly and compares
/// Pr_(g,h)(G x H) with Pr_g(G) * Pr_h(H) for every pair, exactly.
/// Throws NotCoprimeError when gcd(|G|, |H|) != 1.
ProductRuleReport check_product_rule(const FiniteGroup& g, const FiniteGroup& h,
                                     const Limits& limits = {});

struct LemmaCheckResult {
  bool ok = true;
  long long cases_checked = 0;
  std::string detail;  // first failure, if any
};

/// For every (x, g): the solution set {alpha : [x, alpha] = g}, when
/// nonempty, is exactly a left coset sigma * C_Aut(x) (so its size is the
/// stabilizer order).
LemmaCheckResult verify_coset_lemma(const FiniteGroup& g, const AutomorphismGroup& a);

/// For every (x, g): the solution set is nonempty iff x*g lies in orb(x).
LemmaCheckResult verify_nonempty_criterion(const FiniteGroup& g, const AutomorphismGroup& a);

/// Smallest prime divisor, or 0 for n <= 1.
long long smallest_prime_divisor(long long n);

}  // namespace autocomm
