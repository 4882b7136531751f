#include "autocomm/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "autocomm/group_io.hpp"

namespace autocomm {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteGroup group_from_permutations(std::vector<std::vector<int>> perms,
                                    const std::string& name, bool sort_elements) {
  if (sort_elements) std::sort(perms.begin(), perms.end());
  const int n = static_cast<int>(perms.size());
  const int degree = static_cast<int>(perms.front().size());

  // Index lookup by sorted order.
  auto index_of = [&](const std::vector<int>& p) {
    const auto it = std::lower_bound(perms.begin(), perms.end(), p);
    if (it == perms.end() || *it != p)
      throw InternalError("permutation set not closed under composition");
    return static_cast<int>(it - perms.begin());
  };

  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<int> buf(degree);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < degree; ++x) buf[x] = perms[i][perms[j][x]];
      table[i * n + j] = index_of(buf);
    }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l;
    for (int x : perms[i]) {
      if (!l.empty() && degree > 10) l += ".";
      l += std::to_string(x);
    }
    labels[i] = l;
  }

  MakeGroupOptions opts;
  opts.name = name;
  opts.trusted = true;  // composition of permutations
  return make_group_flat(n, std::move(table), std::move(labels), opts);
}

void all_permutations(int degree, bool even_only, std::vector<std::vector<int>>& out) {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < degree; ++i)
        for (int j = i + 1; j < degree; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidSpecError("cyclic: order must be >= 1");
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  MakeGroupOptions opts;
  opts.name = "Z" + std::to_string(n);
  opts.trusted = n > opts.assoc_check_cap;
  return make_group_flat(n, std::move(table), std::move(labels), opts);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InvalidSpecError("dihedral: parameter must be >= 1");
  const int order = 2 * n;
  // Elements: r^i at index i, s r^i at index n + i.
  auto idx = [n](bool reflected, int i) { return (reflected ? n : 0) + ((i % n) + n) % n; };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      table[idx(false, i) * order + idx(false, j)] = idx(false, i + j);
      table[idx(false, i) * order + idx(true, j)] = idx(true, j - i);
      table[idx(true, i) * order + idx(false, j)] = idx(true, i + j);
      table[idx(true, i) * order + idx(true, j)] = idx(false, j - i);
    }
  std::vector<std::string> labels(order);
  for (int i = 0; i < n; ++i) {
    labels[i] = "r^" + std::to_string(i);
    labels[n + i] = "s r^" + std::to_string(i);
  }
  MakeGroupOptions opts;
  opts.name = "D" + std::to_string(n);
  opts.trusted = order > opts.assoc_check_cap;
  return make_group_flat(order, std::move(table), std::move(labels), opts);
}

FiniteGroup dicyclic_group(int n) {
  if (n < 2) throw InvalidSpecError("dicyclic: parameter must be >= 2");
  const int order = 4 * n;
  const int two_n = 2 * n;
  // Elements a^i b^j with a of order 2n, b^2 = a^n, b a = a^-1 b.
  auto idx = [&](int i, int j) { return j * two_n + ((i % two_n) + two_n) % two_n; };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int i = 0; i < two_n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < two_n; ++k)
        for (int l = 0; l < 2; ++l) {
          int lhs = idx(i, j);
          int rhs = idx(k, l);
          // (a^i b^j)(a^k b^l): move b^j past a^k, then reduce b^(j+l).
          int exp = j == 0 ? i + k : i - k;
          int bees = j + l;
          if (bees == 2) {
            exp += n;
            bees = 0;
          }
          table[lhs * order + rhs] = idx(exp, bees);
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < two_n; ++i) {
    labels[idx(i, 0)] = "a^" + std::to_string(i);
    labels[idx(i, 1)] = "a^" + std::to_string(i) + " b";
  }
  MakeGroupOptions opts;
  opts.name = n == 2 ? "Q8" : "Dic" + std::to_string(n);
  opts.trusted = order > opts.assoc_check_cap;
  return make_group_flat(order, std::move(table), std::move(labels), opts);
}

FiniteGroup symmetric_group(int degree, const Limits& limits) {
  if (degree < 1 || degree > limits.symmetric_degree_cap)
    throw InvalidSpecError("symmetric: degree must be in 1.." +
                           std::to_string(limits.symmetric_degree_cap));
  std::vector<std::vector<int>> perms;
  all_permutations(degree, false, perms);
  return group_from_permutations(std::move(perms), "S" + std::to_string(degree), false);
}

FiniteGroup alternating_group(int degree, const Limits& limits) {
  if (degree < 1 || degree > limits.symmetric_degree_cap)
    throw InvalidSpecError("alternating: degree must be in 1.." +
                           std::to_string(limits.symmetric_degree_cap));
  std::vector<std::vector<int>> perms;
  all_permutations(degree, true, perms);
  return group_from_permutations(std::move(perms), "A" + std::to_string(degree), false);
}

FiniteGroup elementary_abelian_group(int p, int k) {
  if (!is_prime(p)) throw InvalidSpecError("elementary_abelian: p must be prime");
  if (k < 1 || k > 20) throw InvalidSpecError("elementary_abelian: bad exponent");
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > 2048) throw InvalidSpecError("elementary_abelian: order too large");
  }
  const int n = static_cast<int>(order);
  // Index = base-p digit vector, componentwise addition mod p.
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int sum = 0, pw = 1, x = a, y = b;
      for (int d = 0; d < k; ++d) {
        sum += ((x + y) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      table[a * n + b] = sum;
    }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    std::string l(k, '0');
    int x = a;
    for (int d = 0; d < k; ++d) {
      l[k - 1 - d] = static_cast<char>('0' + x % p);
      x /= p;
    }
    labels[a] = l;
  }
  MakeGroupOptions opts;
  opts.name = "Z" + std::to_string(p) + "^" + std::to_string(k);
  opts.trusted = n > opts.assoc_check_cap;
  return make_group_flat(n, std::move(table), std::move(labels), opts);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    if (pos_ != text_.size())
      throw InvalidSpecError("group spec: trailing characters after '" +
                             std::string(text_.substr(0, pos_)) + "'");
    return spec;
  }

 private:
  GroupSpec parse_spec() {
    const std::string kind = take_until(":");
    GroupSpec spec;
    if (kind == "cyclic") {
      spec.kind = GroupSpec::Kind::Cyclic;
      spec.params = {take_int()};
    } else if (kind == "dihedral") {
      spec.kind = GroupSpec::Kind::Dihedral;
      spec.params = {take_int()};
    } else if (kind == "dicyclic") {
      spec.kind = GroupSpec::Kind::Dicyclic;
      spec.params = {take_int()};
    } else if (kind == "symmetric") {
      spec.kind = GroupSpec::Kind::Symmetric;
      spec.params = {take_int()};
    } else if (kind == "alternating") {
      spec.kind = GroupSpec::Kind::Alternating;
      spec.params = {take_int()};
    } else if (kind == "elementary_abelian") {
      spec.kind = GroupSpec::Kind::ElementaryAbelian;
      spec.params = {take_int()};
      expect(',');
      spec.params.push_back(take_int());
    } else if (kind == "product") {
      spec.kind = GroupSpec::Kind::Product;
      spec.factors.push_back(parse_spec());
      expect(',');
      spec.factors.push_back(parse_spec());
    } else if (kind == "file") {
      spec.kind = GroupSpec::Kind::File;
      spec.path = std::string(text_.substr(pos_));
      pos_ = text_.size();
      if (spec.path.empty()) throw InvalidSpecError("group spec: file path missing");
    } else {
      throw InvalidSpecError("group spec: unknown kind '" + kind + "'");
    }
    return spec;
  }

  std::string take_until(std::string_view stops) {
    size_t end = pos_;
    while (end < text_.size() && stops.find(text_[end]) == std::string_view::npos) ++end;
    if (end == text_.size() || end == pos_)
      throw InvalidSpecError("group spec: expected 'kind:params' in '" +
                             std::string(text_) + "'");
    std::string out(text_.substr(pos_, end - pos_));
    pos_ = end + 1;  // swallow the delimiter
    return out;
  }

  long long take_int() {
    size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_) throw InvalidSpecError("group spec: expected an integer");
    long long v = 0;
    for (size_t i = pos_; i < end; ++i) v = v * 10 + (text_[i] - '0');
    pos_ = end;
    return v;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw InvalidSpecError(std::string("group spec: expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

std::string GroupSpec::str() const {
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic:" + std::to_string(params[0]);
    case Kind::Dihedral:
      return "dihedral:" + std::to_string(params[0]);
    case Kind::Dicyclic:
      return "dicyclic:" + std::to_string(params[0]);
    case Kind::Symmetric:
      return "symmetric:" + std::to_string(params[0]);
    case Kind::Alternating:
      return "alternating:" + std::to_string(params[0]);
    case Kind::ElementaryAbelian:
      return "elementary_abelian:" + std::to_string(params[0]) + "," +
             std::to_string(params[1]);
    case Kind::Product:
      return "product:" + factors[0].str() + "," + factors[1].str();
    case Kind::File:
      return "file:" + path;
  }
  return "";
}

FiniteGroup build_group(const GroupSpec& spec, const Limits& limits) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return cyclic_group(static_cast<int>(spec.params[0]));
    case GroupSpec::Kind::Dihedral:
      return dihedral_group(static_cast<int>(spec.params[0]));
    case GroupSpec::Kind::Dicyclic:
      return dicyclic_group(static_cast<int>(spec.params[0]));
    case GroupSpec::Kind::Symmetric:
      return symmetric_group(static_cast<int>(spec.params[0]), limits);
    case GroupSpec::Kind::Alternating:
      return alternating_group(static_cast<int>(spec.params[0]), limits);
    case GroupSpec::Kind::ElementaryAbelian:
      return elementary_abelian_group(static_cast<int>(spec.params[0]),
                                      static_cast<int>(spec.params[1]));
    case GroupSpec::Kind::Product:
      return direct_product(build_group(spec.factors[0], limits),
                            build_group(spec.factors[1], limits));
    case GroupSpec::Kind::File:
      return load_group_file(spec.path, limits);
  }
  throw InvalidSpecError("group spec: unknown kind");
}

std::vector<FiniteGroup> standard_corpus(int max_order, const Limits& limits) {
  if (max_order < 1 || max_order > limits.max_order)
    throw InvalidSpecError("corpus: max order must be in 1.." +
                           std::to_string(limits.max_order));

  std::vector<FiniteGroup> candidates;
  for (int n = 1; n <= max_order; ++n) candidates.push_back(cyclic_group(n));
  for (int p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (long long pk = static_cast<long long>(p) * p, k = 2; pk <= max_order; pk *= p, ++k)
      candidates.push_back(elementary_abelian_group(p, static_cast<int>(k)));
  }
  for (int d = 3; d <= limits.symmetric_degree_cap; ++d) {
    long long fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    if (fact <= max_order) candidates.push_back(symmetric_group(d, limits));
    if (d >= 4 && fact / 2 <= max_order) candidates.push_back(alternating_group(d, limits));
  }
  for (int n = 2; 2 * n <= max_order; ++n) candidates.push_back(dihedral_group(n));
  for (int n = 2; 4 * n <= max_order; ++n) candidates.push_back(dicyclic_group(n));
  for (int a = 2; a * 2 <= max_order; ++a)
    for (int b = a; a * b <= max_order; ++b)
      candidates.push_back(direct_product(cyclic_group(a), cyclic_group(b)));

  // Deduplicate by isomorphism; the first constructor wins the name.
  IsoSearchOptions iso_opts;
  iso_opts.node_budget = limits.iso_node_budget;
  iso_opts.order_cap = limits.iso_order_cap;
  std::vector<FiniteGroup> corpus;
  for (FiniteGroup& g : candidates) {
    bool fresh = true;
    for (const FiniteGroup& kept : corpus) {
      if (kept.order != g.order) continue;
      if (is_isomorphic(kept, g, iso_opts)) {
        fresh = false;
        break;
      }
    }
    if (fresh) corpus.push_back(std::move(g));
  }

  std::stable_sort(corpus.begin(), corpus.end(),
                   [](const FiniteGroup& a, const FiniteGroup& b) {
                     return a.order != b.order ? a.order < b.order : a.name < b.name;
                   });
  return corpus;
}

}  // namespace autocomm
