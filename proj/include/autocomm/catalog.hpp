#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autocomm/group.hpp"
#include "autocomm/limits.hpp"

namespace autocomm {

/// One entry of the `kind:params` mini-language, e.g. "cyclic:6",
/// "dihedral:4", "elementary_abelian:2,3", "product:cyclic:3,cyclic:4",
/// "file:groups/g.json".
struct GroupSpec {
  enum class Kind {
    Cyclic,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
    ElementaryAbelian,
    Product,
    File
  };

  Kind kind = Kind::Cyclic;
  std::vector<long long> params;
  std::string path;                // Kind::File
  std::vector<GroupSpec> factors;  // Kind::Product, exactly two

  static GroupSpec parse(std::string_view text);
  std::string str() const;
};

FiniteGroup build_group(const GroupSpec& spec, const Limits& limits = {});

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);            // order 2n, n >= 1
FiniteGroup dicyclic_group(int n);            // order 4n, n >= 2; n = 2 is Q8
FiniteGroup symmetric_group(int degree, const Limits& limits = {});
FiniteGroup alternating_group(int degree, const Limits& limits = {});
FiniteGroup elementary_abelian_group(int p, int k);  // order p^k, p prime

/// The fixed test corpus: all cyclic groups up to max_order, elementary
/// abelian p^k (k >= 2), dihedral and dicyclic families, S3/S4 and A4 within
/// bound, and all two-factor cyclic products, deduplicated by isomorphism and
/// sorted by (order, name).
std::vector<FiniteGroup> standard_corpus(int max_order, const Limits& limits = {});

}  // namespace autocomm
