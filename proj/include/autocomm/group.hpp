#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autocomm/errors.hpp"
#include "autocomm/limits.hpp"

namespace autocomm {

/// A finite group given by its complete multiplication table. The identity
/// always sits at index 0; `make_group` relocates it there if the input table
/// has it elsewhere. Immutable after construction and safe to share across
/// threads.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;           // row-major: table[a * order + b] = a * b
  std::vector<int> inverses;        // table[i][inverses[i]] = 0
  std::vector<int> element_orders;  // multiplicative order of each element
  std::vector<std::string> labels;  // display names, one per element
  std::string name;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverses[a]; }
  int element_order(int a) const { return element_orders[a]; }

  bool is_abelian() const {
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
};

/// Subset of a group's elements that is itself a group. Holds a non-owning
/// pointer to the parent, which must outlive the subgroup.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted, contains 0

  int size() const { return static_cast<int>(members.size()); }
  int index() const { return parent->order / size(); }
  bool contains(int x) const;
  bool is_whole_group() const { return size() == parent->order; }
};

/// images[i] = image of source element i. Non-owning views of both groups.
struct GroupMap {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> images;
};

bool is_homomorphism(const GroupMap& m);
bool is_bijective(const GroupMap& m);

struct MakeGroupOptions {
  // Skip the n^3 associativity loop (for tables that are associative by
  // construction, e.g. composition tables). Everything else is still checked.
  bool trusted = false;
  int assoc_check_cap = 512;
  std::string name;
};

/// Validates a table and builds the group. Throws ValidationError naming the
/// violating indices: NotClosed (out-of-range or Latin-square violation),
/// NoIdentity, NoInverse, NotAssociative.
FiniteGroup make_group(const std::vector<std::vector<int>>& table,
                       std::vector<std::string> labels = {},
                       const MakeGroupOptions& opts = {});

/// Same, from a flat row-major table.
FiniteGroup make_group_flat(int order, std::vector<int> table,
                            std::vector<std::string> labels = {},
                            const MakeGroupOptions& opts = {});

/// Smallest subgroup containing `gens` (worklist closure under products).
Subgroup subgroup_generated_by(const FiniteGroup& g, const std::vector<int>& gens);

Subgroup center(const FiniteGroup& g);

/// Subgroup generated by all commutators x^-1 y^-1 x y.
Subgroup derived_subgroup(const FiniteGroup& g);

/// True iff n is normal; on failure reports a conjugating element g and a
/// member x with g x g^-1 outside n.
bool is_normal(const FiniteGroup& g, const Subgroup& n,
               int* conjugator = nullptr, int* member = nullptr);

struct Quotient {
  FiniteGroup group;                    // cosets, identity coset at index 0
  std::vector<int> coset_of;            // element -> coset index (projection)
  std::vector<std::vector<int>> cosets; // coset index -> sorted members
};

/// Quotient by a normal subgroup; throws NotNormalError otherwise.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

GroupMap projection_map(const FiniteGroup& g, const Quotient& q);

/// Componentwise product on pairs; (i, j) is indexed as i * |H| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Greedy minimal generating set: repeatedly add the element that extends the
/// generated subgroup the most (ties broken by smallest index).
std::vector<int> minimal_generating_set(const FiniteGroup& g);

struct IsoSearchOptions {
  long long node_budget = 10'000'000;
  int order_cap = 512;
};

/// Enumerates isomorphisms source -> target by backtracking over images of a
/// minimal generating set of `source`, pruned by element order. `visit` gets
/// each complete image array; returning false stops the search. Returns true
/// iff the search ran to completion (not stopped by the visitor). Throws
/// SearchBudgetError when the node budget runs out.
bool for_each_isomorphism(const FiniteGroup& source, const FiniteGroup& target,
                          const IsoSearchOptions& opts,
                          const std::function<bool(const std::vector<int>&)>& visit);

/// First isomorphism found, or nullopt when none exists. Searching a group
/// against itself always yields the identity map first.
std::optional<GroupMap> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                      const IsoSearchOptions& opts = {});

}  // namespace autocomm
