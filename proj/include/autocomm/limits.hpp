#pragma once

namespace autocomm {

/// Size caps and search budgets. Everything here is a guard against desk-scale
/// tools being pointed at inputs they were not designed for; defaults cover
/// all groups of order <= 64 comfortably.
struct Limits {
  // Full n^3 associativity verification runs up to this order; larger tables
  // need the `trusted` construction flag.
  int assoc_check_cap = 512;

  // Maximum group order accepted by automorphism enumeration.
  int aut_order_cap = 64;

  // Node budget shared by isomorphism search and automorphism enumeration.
  long long iso_node_budget = 10'000'000;

  // Maximum group order accepted by isomorphism search.
  int iso_order_cap = 512;

  // Distributions are cross-checked against the pairwise brute-force count
  // for groups up to this order.
  int oracle_cap = 24;

  // Full closure verification of an enumerated automorphism group runs up to
  // this many automorphisms; beyond it only spot probes are composed.
  int closure_check_cap = 4000;

  // Permutation-generator files: cap on the closure size.
  int closure_cap = 10'000;

  // Symmetric / alternating constructors refuse degrees above this.
  int symmetric_degree_cap = 6;

  // Autoisoclinism search: number of (psi, gamma) candidate pairs checked.
  long long isoclinism_budget = 1'000'000;

  // Survey / corpus order cap (CLI: overridable via AUTOCOMM_MAX_ORDER).
  int max_order = 64;
};

}  // namespace autocomm
