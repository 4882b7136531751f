#include "autocomm/automorphism.hpp"

#include <algorithm>

namespace autocomm {

namespace {

size_t hash_images(const std::vector<int>& v) {
  size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void AutomorphismGroup::build_index() {
  index_.clear();
  for (size_t i = 0; i < elements.size(); ++i)
    index_[hash_images(elements[i].images)].push_back(static_cast<int>(i));
}

int AutomorphismGroup::index_of(const std::vector<int>& images) const {
  const auto it = index_.find(hash_images(images));
  if (it == index_.end()) return -1;
  for (int pos : it->second)
    if (elements[pos].images == images) return pos;
  return -1;
}

int AutomorphismGroup::compose(int a, int b) const {
  const std::vector<int>& fa = elements[a].images;
  const std::vector<int>& fb = elements[b].images;
  std::vector<int> out(fa.size());
  for (size_t x = 0; x < out.size(); ++x) out[x] = fa[fb[x]];
  const int idx = index_of(out);
  if (idx < 0) throw InternalError("automorphism composition fell outside the group");
  return idx;
}

int AutomorphismGroup::inverse(int a) const {
  const std::vector<int>& fa = elements[a].images;
  std::vector<int> out(fa.size());
  for (size_t x = 0; x < out.size(); ++x) out[fa[x]] = static_cast<int>(x);
  const int idx = index_of(out);
  if (idx < 0) throw InternalError("automorphism inverse fell outside the group");
  return idx;
}

AutomorphismGroup enumerate_automorphisms(const FiniteGroup& g, const Limits& limits) {
  if (g.order > limits.aut_order_cap)
    throw SearchBudgetError("automorphism enumeration: order " +
                            std::to_string(g.order) + " exceeds cap " +
                            std::to_string(limits.aut_order_cap));

  std::vector<Automorphism> found;
  IsoSearchOptions opts;
  opts.node_budget = limits.iso_node_budget;
  opts.order_cap = limits.aut_order_cap;
  for_each_isomorphism(g, g, opts, [&](const std::vector<int>& images) {
    found.push_back(Automorphism{images});
    return true;
  });

  std::sort(found.begin(), found.end(),
            [](const Automorphism& a, const Automorphism& b) { return a.images < b.images; });

  AutomorphismGroup aut;
  aut.base = &g;
  aut.elements = std::move(found);
  aut.build_index();

  if (aut.elements.empty() || aut.elements[0].images[0] != 0)
    throw InternalError("automorphism enumeration: identity missing");
  if (!verify_closure(aut, limits.closure_check_cap))
    throw InternalError("automorphism enumeration: set not closed under composition");
  return aut;
}

bool verify_closure(const AutomorphismGroup& a, int full_cap) {
  const int m = static_cast<int>(a.elements.size());
  const int n = static_cast<int>(a.elements[0].images.size());
  std::vector<int> buf(n);
  auto composed_in_set = [&](int i, int j) {
    const std::vector<int>& fi = a.elements[i].images;
    const std::vector<int>& fj = a.elements[j].images;
    for (int x = 0; x < n; ++x) buf[x] = fi[fj[x]];
    return a.index_of(buf) >= 0;
  };
  // Inverses are cheap for any size.
  for (int i = 0; i < m; ++i) {
    const std::vector<int>& fi = a.elements[i].images;
    for (int x = 0; x < n; ++x) buf[fi[x]] = x;
    if (a.index_of(buf) < 0) return false;
  }
  if (m <= full_cap) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!composed_in_set(i, j)) return false;
  } else {
    // Spot probes: compose everything with a fixed stride of partners.
    const int stride = std::max(1, m / 64);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; j += stride)
        if (!composed_in_set(i, j)) return false;
  }
  return true;
}

std::vector<int> inner_automorphisms(const FiniteGroup& g, const AutomorphismGroup& a) {
  std::vector<int> result;
  std::vector<int> images(g.order);
  for (int c = 0; c < g.order; ++c) {
    for (int x = 0; x < g.order; ++x) images[x] = g.mul(g.mul(c, x), g.inv(c));
    const int idx = a.index_of(images);
    if (idx < 0)
      throw InternalError("conjugation map missing from enumerated automorphisms");
    result.push_back(idx);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

OrbitPartition orbits(const FiniteGroup& g, const AutomorphismGroup& a) {
  OrbitPartition p;
  p.orbit_id.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (p.orbit_id[x] >= 0) continue;
    const int id = static_cast<int>(p.orbits.size());
    std::vector<int> members;
    for (const Automorphism& alpha : a.elements) {
      const int y = alpha(x);
      if (p.orbit_id[y] < 0) {
        p.orbit_id[y] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    p.orbits.push_back(std::move(members));
  }
  return p;
}

std::vector<int> aut_stabilizer(const FiniteGroup&, const AutomorphismGroup& a, int x) {
  std::vector<int> result;
  for (size_t i = 0; i < a.elements.size(); ++i)
    if (a.elements[i].images[x] == x) result.push_back(static_cast<int>(i));
  return result;
}

Subgroup acentralizer(const FiniteGroup& g, const Automorphism& alpha) {
  std::vector<int> members;
  for (int x = 0; x < g.order; ++x)
    if (alpha(x) == x) members.push_back(x);
  return Subgroup{&g, std::move(members)};
}

std::vector<int> pointwise_stabilizer(const FiniteGroup& g, const AutomorphismGroup& a) {
  std::vector<int> result;
  for (size_t i = 0; i < a.elements.size(); ++i) {
    bool fixes_all = true;
    for (int x = 0; x < g.order && fixes_all; ++x)
      fixes_all = a.elements[i].images[x] == x;
    if (fixes_all) result.push_back(static_cast<int>(i));
  }
  return result;
}

FiniteGroup automorphism_cayley_group(const AutomorphismGroup& a) {
  const int m = static_cast<int>(a.elements.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = a.compose(i, j);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "a" + std::to_string(i);
  MakeGroupOptions opts;
  opts.name = "Aut(" + a.base->name + ")";
  opts.trusted = true;  // composition is associative
  return make_group_flat(m, std::move(table), std::move(labels), opts);
}

}  // namespace autocomm
