#pragma once

#include <unordered_map>
#include <vector>

#include "autocomm/group.hpp"
#include "autocomm/limits.hpp"

namespace autocomm {

/// A multiplication-preserving permutation of the group's elements, stored as
/// a full image array (application is the hot operation).
struct Automorphism {
  std::vector<int> images;

  int operator()(int x) const { return images[x]; }
};

/// All of Aut(G), lexicographically sorted by image array; the identity is
/// always at position 0. Composition is (a . b)(x) = a(b(x)).
struct AutomorphismGroup {
  const FiniteGroup* base = nullptr;
  std::vector<Automorphism> elements;

  long long order() const { return static_cast<long long>(elements.size()); }
  const Automorphism& identity() const { return elements.front(); }
  int apply(int a, int x) const { return elements[a].images[x]; }

  /// Position of an image array in `elements`, -1 if absent.
  int index_of(const std::vector<int>& images) const;

  int compose(int a, int b) const;  // index of elements[a] . elements[b]
  int inverse(int a) const;

  void build_index();

 private:
  std::unordered_map<size_t, std::vector<int>> index_;  // hash -> positions
};

/// Orbits of the natural Aut(G) action on G. Orbit 0 is always {identity}.
struct OrbitPartition {
  std::vector<int> orbit_id;              // element -> orbit number
  std::vector<std::vector<int>> orbits;   // sorted members per orbit

  int count() const { return static_cast<int>(orbits.size()); }
  int orbit_size(int x) const { return static_cast<int>(orbits[orbit_id[x]].size()); }
  bool same_orbit(int x, int y) const { return orbit_id[x] == orbit_id[y]; }
};

/// Every automorphism of G, found by backtracking over images of a minimal
/// generating set (candidates restricted to elements of equal order, each
/// assignment extended to a full validated map). Throws SearchBudgetError
/// when |G| exceeds the cap or the node budget runs out.
AutomorphismGroup enumerate_automorphisms(const FiniteGroup& g, const Limits& limits = {});

/// Indices into `a.elements` of the conjugation maps x -> g x g^-1.
/// Size is |G| / |Z(G)|.
std::vector<int> inner_automorphisms(const FiniteGroup& g, const AutomorphismGroup& a);

OrbitPartition orbits(const FiniteGroup& g, const AutomorphismGroup& a);

/// Indices of the automorphisms fixing x (a subgroup of Aut(G)).
std::vector<int> aut_stabilizer(const FiniteGroup& g, const AutomorphismGroup& a, int x);

/// Fixed points of a single automorphism, as a subgroup of G.
Subgroup acentralizer(const FiniteGroup& g, const Automorphism& alpha);

/// Automorphisms fixing every element. The action is faithful, so this is
/// always {identity}; it is computed directly all the same.
std::vector<int> pointwise_stabilizer(const FiniteGroup& g, const AutomorphismGroup& a);

/// Aut(G) as a concrete group: element i is a.elements[i], the table is
/// composition. Construction doubles as a closure check; a composition
/// falling outside the enumerated set throws InternalError.
FiniteGroup automorphism_cayley_group(const AutomorphismGroup& a);

/// Closure cross-check: all pairwise compositions (up to `full_cap` elements;
/// beyond that a fixed probe pattern) plus all inverses land in the set.
bool verify_closure(const AutomorphismGroup& a, int full_cap = 4000);

}  // namespace autocomm
