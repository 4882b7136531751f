#include "autocomm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace autocomm {

namespace {

std::string idx_msg(const std::string& head, const std::vector<int>& idx) {
  std::string s = head + " (indices";
  for (int i : idx) s += " " + std::to_string(i);
  return s + ")";
}

std::vector<int> element_orders_of(int n, const std::vector<int>& table) {
  std::vector<int> ord(n, 1);
  for (int a = 1; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = table[x * n + a];
      ++k;
    }
    ord[a] = k;
  }
  return ord;
}

}  // namespace

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool is_homomorphism(const GroupMap& m) {
  const FiniteGroup& s = *m.source;
  const FiniteGroup& t = *m.target;
  if (static_cast<int>(m.images.size()) != s.order) return false;
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b)
      if (m.images[s.mul(a, b)] != t.mul(m.images[a], m.images[b])) return false;
  return true;
}

bool is_bijective(const GroupMap& m) {
  if (m.source->order != m.target->order) return false;
  std::vector<char> seen(m.target->order, 0);
  for (int v : m.images) {
    if (v < 0 || v >= m.target->order || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

FiniteGroup make_group_flat(int n, std::vector<int> table,
                            std::vector<std::string> labels,
                            const MakeGroupOptions& opts) {
  if (n <= 0 || static_cast<long long>(table.size()) != static_cast<long long>(n) * n)
    throw ValidationError(ValidationError::Kind::NotClosed, {},
                          "table dimensions do not match the declared order");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int v = table[a * n + b];
      if (v < 0 || v >= n)
        throw ValidationError(ValidationError::Kind::NotClosed, {a, b},
                              idx_msg("NotClosed: entry out of range", {a, b}));
    }

  // Locate the two-sided identity.
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = table[c * n + i] == i && table[i * n + c] == i;
    if (ok) e = c;
  }
  if (e < 0)
    throw ValidationError(ValidationError::Kind::NoIdentity, {},
                          "NoIdentity: no two-sided identity element");

  // Relocate the identity to index 0 by swapping labels e <-> 0.
  if (e != 0) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    perm[0] = e;
    perm[e] = 0;  // involution, so perm doubles as its own inverse
    std::vector<int> moved(table.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        moved[a * n + b] = perm[table[perm[a] * n + perm[b]]];
    table.swap(moved);
    if (!labels.empty() && labels.size() == static_cast<size_t>(n))
      std::swap(labels[0], labels[e]);
  }

  // Latin-square check: every row and column is a permutation. This is what
  // catches single-entry corruption even when the broken entry still parses.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[table[a * n + b]]++)
        throw ValidationError(ValidationError::Kind::NotClosed, {a, b},
                              idx_msg("NotClosed: duplicate in row", {a, b}));
      if (col[table[b * n + a]]++)
        throw ValidationError(ValidationError::Kind::NotClosed, {b, a},
                              idx_msg("NotClosed: duplicate in column", {b, a}));
    }
  }

  std::vector<int> inverses(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a * n + b] == 0 && table[b * n + a] == 0) {
        inverses[a] = b;
        break;
      }
    if (inverses[a] < 0)
      throw ValidationError(ValidationError::Kind::NoInverse, {a},
                            idx_msg("NoInverse: element has no two-sided inverse", {a}));
  }

  if (!opts.trusted) {
    if (n > opts.assoc_check_cap)
      throw ValidationError(
          ValidationError::Kind::NotAssociative, {},
          "order " + std::to_string(n) + " exceeds the associativity check cap " +
              std::to_string(opts.assoc_check_cap) +
              "; pass trusted=true for tables known to be associative");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = table[a * n + b];
        for (int c = 0; c < n; ++c)
          if (table[ab * n + c] != table[a * n + table[b * n + c]])
            throw ValidationError(ValidationError::Kind::NotAssociative, {a, b, c},
                                  idx_msg("NotAssociative", {a, b, c}));
      }
  }

  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  g.inverses = std::move(inverses);
  g.element_orders = element_orders_of(n, g.table);
  if (!labels.empty()) {
    if (labels.size() != static_cast<size_t>(n))
      throw InvalidSpecError("labels: expected " + std::to_string(n) + " entries, got " +
                             std::to_string(labels.size()));
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidSpecError("labels: duplicate element label");
    g.labels = std::move(labels);
  } else {
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) g.labels[i] = std::to_string(i);
  }
  g.name = opts.name.empty() ? "G" + std::to_string(n) : opts.name;
  return g;
}

FiniteGroup make_group(const std::vector<std::vector<int>>& table,
                       std::vector<std::string> labels,
                       const MakeGroupOptions& opts) {
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError(ValidationError::Kind::NotClosed, {},
                            "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_group_flat(n, std::move(flat), std::move(labels), opts);
}

namespace {

// Worklist closure of `seed` under products. A finite set containing the
// identity and closed under multiplication is a subgroup.
std::vector<int> close_under_products(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> mem;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      mem.push_back(x);
    }
  };
  add(0);
  for (int x : seed) add(x);
  for (size_t i = 0; i < mem.size(); ++i)
    for (size_t j = 0; j < mem.size(); ++j) {
      add(g.mul(mem[i], mem[j]));
      add(g.mul(mem[j], mem[i]));
    }
  std::sort(mem.begin(), mem.end());
  return mem;
}

}  // namespace

Subgroup subgroup_generated_by(const FiniteGroup& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.order) throw Error("generator index out of range");
  return Subgroup{&g, close_under_products(g, gens)};
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> members;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) members.push_back(x);
  }
  return Subgroup{&g, std::move(members)};
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return Subgroup{&g, close_under_products(g, std::move(comms))};
}

bool is_normal(const FiniteGroup& g, const Subgroup& n, int* conjugator, int* member) {
  for (int a = 0; a < g.order; ++a)
    for (int x : n.members) {
      const int conj = g.mul(g.mul(a, x), g.inv(a));
      if (!n.contains(conj)) {
        if (conjugator) *conjugator = a;
        if (member) *member = x;
        return false;
      }
    }
  return true;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  int bad_a = -1, bad_x = -1;
  if (!is_normal(g, n, &bad_a, &bad_x))
    throw NotNormalError(bad_a, bad_x,
                         "NotNormal: element " + std::to_string(bad_a) +
                             " conjugates member " + std::to_string(bad_x) +
                             " outside the subgroup");

  const int q_order = g.order / n.size();
  std::vector<int> coset_of(g.order, -1);
  std::vector<std::vector<int>> cosets;
  std::vector<int> rep;
  // Scanning elements in index order puts the identity coset first.
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(cosets.size());
    std::vector<int> cs;
    for (int h : n.members) {
      const int y = g.mul(x, h);
      coset_of[y] = id;
      cs.push_back(y);
    }
    std::sort(cs.begin(), cs.end());
    rep.push_back(cs.front());
    cosets.push_back(std::move(cs));
  }

  std::vector<std::vector<int>> table(q_order, std::vector<int>(q_order));
  std::vector<std::string> labels(q_order);
  for (int i = 0; i < q_order; ++i) {
    labels[i] = "[" + g.labels[rep[i]] + "]";
    for (int j = 0; j < q_order; ++j) table[i][j] = coset_of[g.mul(rep[i], rep[j])];
  }

  MakeGroupOptions opts;
  opts.name = g.name + "/N" + std::to_string(n.size());
  opts.trusted = q_order > opts.assoc_check_cap;
  Quotient result{make_group(table, std::move(labels), opts), std::move(coset_of),
                  std::move(cosets)};
  return result;
}

GroupMap projection_map(const FiniteGroup& g, const Quotient& q) {
  return GroupMap{&g, &q.group, q.coset_of};
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order * h.order;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b)
      for (int c = 0; c < g.order; ++c)
        for (int d = 0; d < h.order; ++d) {
          const int lhs = a * h.order + b;
          const int rhs = c * h.order + d;
          table[lhs * n + rhs] = g.mul(a, c) * h.order + h.mul(b, d);
        }
  std::vector<std::string> labels(n);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b)
      labels[a * h.order + b] = "(" + g.labels[a] + "," + h.labels[b] + ")";
  MakeGroupOptions opts;
  opts.name = g.name + "x" + h.name;
  opts.trusted = true;  // componentwise products of valid tables stay associative
  return make_group_flat(n, std::move(table), std::move(labels), opts);
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> current{0};
  while (static_cast<int>(current.size()) < g.order) {
    int best = -1;
    size_t best_size = current.size();
    std::vector<int> best_closure;
    for (int x = 0; x < g.order; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<int> seed = gens;
      seed.push_back(x);
      std::vector<int> cl = close_under_products(g, seed);
      if (cl.size() > best_size) {
        best = x;
        best_size = cl.size();
        best_closure = std::move(cl);
      }
    }
    gens.push_back(best);
    current = std::move(best_closure);
  }
  return gens;
}

namespace {

// Backtracking over images of a minimal generating set of the source group.
// Each partial assignment is extended to the generated subgroup by pairwise
// closure, verifying the homomorphism law and injectivity as it goes; a
// complete assignment therefore is a validated isomorphism.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& src, const FiniteGroup& tgt,
            const IsoSearchOptions& opts,
            const std::function<bool(const std::vector<int>&)>& visit)
      : src_(src), tgt_(tgt), visit_(visit), budget_(opts.node_budget) {
    gens_ = minimal_generating_set(src_);
    img_.assign(src_.order, -1);
    used_.assign(tgt_.order, 0);
    img_[0] = 0;
    used_[0] = 1;
    dom_.push_back(0);
  }

  bool run() { return dfs(0); }

 private:
  bool dfs(size_t level) {
    if (level == gens_.size()) {
      if (static_cast<int>(dom_.size()) != src_.order)
        throw InternalError("isomorphism search: generating set did not generate");
      return visit_(img_);
    }
    const int gen = gens_[level];
    const int want_order = src_.element_order(gen);
    for (int c = 0; c < tgt_.order; ++c) {
      if (used_[c] || tgt_.element_order(c) != want_order) continue;
      if (--budget_ < 0)
        throw SearchBudgetError("isomorphism search: node budget exhausted");
      const size_t mark = dom_.size();
      if (extend(gen, c)) {
        if (!dfs(level + 1)) {
          rollback(mark);
          return false;
        }
      }
      rollback(mark);
    }
    return true;
  }

  // Assign img[gen] = c and close under products, checking consistency.
  bool extend(int gen, int c) {
    if (img_[gen] != -1)
      throw InternalError("isomorphism search: generator already mapped");
    img_[gen] = c;
    used_[c] = 1;
    dom_.push_back(gen);
    for (size_t i = 0; i < dom_.size(); ++i)
      for (size_t j = 0; j < dom_.size(); ++j) {
        const int p = src_.mul(dom_[i], dom_[j]);
        const int q = tgt_.mul(img_[dom_[i]], img_[dom_[j]]);
        if (img_[p] == -1) {
          if (used_[q]) return false;
          img_[p] = q;
          used_[q] = 1;
          dom_.push_back(p);
        } else if (img_[p] != q) {
          return false;
        }
      }
    return true;
  }

  void rollback(size_t mark) {
    while (dom_.size() > mark) {
      const int e = dom_.back();
      dom_.pop_back();
      used_[img_[e]] = 0;
      img_[e] = -1;
    }
  }

  const FiniteGroup& src_;
  const FiniteGroup& tgt_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  long long budget_;
  std::vector<int> gens_;
  std::vector<int> img_;
  std::vector<char> used_;
  std::vector<int> dom_;
};

bool same_order_statistics(const FiniteGroup& g, const FiniteGroup& h) {
  std::map<int, int> a, b;
  for (int x = 0; x < g.order; ++x) ++a[g.element_order(x)];
  for (int x = 0; x < h.order; ++x) ++b[h.element_order(x)];
  return a == b;
}

}  // namespace

bool for_each_isomorphism(const FiniteGroup& source, const FiniteGroup& target,
                          const IsoSearchOptions& opts,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (source.order != target.order) return true;
  if (source.order > opts.order_cap)
    throw SearchBudgetError("isomorphism search: order " +
                            std::to_string(source.order) + " exceeds cap " +
                            std::to_string(opts.order_cap));
  if (!same_order_statistics(source, target)) return true;
  IsoSearch search(source, target, opts, visit);
  return search.run();
}

std::optional<GroupMap> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                      const IsoSearchOptions& opts) {
  std::optional<GroupMap> found;
  for_each_isomorphism(g, h, opts, [&](const std::vector<int>& images) {
    found = GroupMap{&g, &h, images};
    return false;  // first hit wins
  });
  return found;
}

}  // namespace autocomm
