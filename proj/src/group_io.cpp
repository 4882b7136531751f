#include "autocomm/group_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace autocomm {

namespace {

using nlohmann::json;

FiniteGroup from_table_format(const json& doc, const Limits& limits) {
  if (!doc["table"].is_array()) throw FileFormatError("field 'table' must be an array");
  std::vector<std::vector<int>> table;
  int row_no = 0;
  for (const auto& row : doc["table"]) {
    if (!row.is_array())
      throw FileFormatError("table row " + std::to_string(row_no) + " is not an array");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw FileFormatError("table row " + std::to_string(row_no) +
                              " contains a non-integer entry");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
    ++row_no;
  }
  if (doc.contains("order") &&
      doc["order"].get<long long>() != static_cast<long long>(table.size()))
    throw FileFormatError("field 'order' disagrees with the table size");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw FileFormatError("field 'labels' must hold strings");
      labels.push_back(l.get<std::string>());
    }
  }

  MakeGroupOptions opts;
  opts.assoc_check_cap = limits.assoc_check_cap;
  // Associativity is only spot-verifiable above the cap; everything else
  // (Latin square, identity, inverses) is still enforced.
  opts.trusted = static_cast<int>(table.size()) > limits.assoc_check_cap;
  opts.name = doc.value("name", std::string("file-group"));
  return make_group(table, std::move(labels), opts);
}

FiniteGroup from_generator_format(const json& doc, const Limits& limits) {
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    throw FileFormatError("generator format requires an integer 'degree'");
  const int degree = doc["degree"].get<int>();
  if (degree < 1 || degree > 100000)
    throw FileFormatError("field 'degree' out of range");

  std::vector<std::vector<int>> gens;
  int gen_no = 0;
  for (const auto& gj : doc["generators"]) {
    std::vector<int> p;
    for (const auto& v : gj) {
      if (!v.is_number_integer())
        throw FileFormatError("generator " + std::to_string(gen_no) +
                              " contains a non-integer entry");
      p.push_back(v.get<int>());
    }
    if (static_cast<int>(p.size()) != degree)
      throw FileFormatError("generator " + std::to_string(gen_no) +
                            " has length != degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        throw FileFormatError("generator " + std::to_string(gen_no) +
                              " is not a permutation of 0..degree-1");
      seen[v] = 1;
    }
    gens.push_back(std::move(p));
    ++gen_no;
  }

  // BFS closure under composition starting from the identity.
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elements;
  auto add = [&](const std::vector<int>& p) {
    if (index.emplace(p, static_cast<int>(elements.size())).second) {
      elements.push_back(p);
      if (static_cast<int>(elements.size()) > limits.closure_cap)
        throw ClosureCapError("permutation closure exceeds cap " +
                              std::to_string(limits.closure_cap));
    }
  };
  add(id);
  for (const auto& g : gens) add(g);
  std::vector<int> buf(degree);
  for (size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : gens) {
      for (int x = 0; x < degree; ++x) buf[x] = elements[i][g[x]];
      add(buf);
      for (int x = 0; x < degree; ++x) buf[x] = g[elements[i][x]];
      add(buf);
    }

  const int n = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < degree; ++x) buf[x] = elements[i][elements[j][x]];
      const auto it = index.find(buf);
      if (it == index.end()) throw InternalError("closure missed a composition");
      table[i * n + j] = it->second;
    }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l;
    for (int x : elements[i]) {
      if (!l.empty() && degree > 10) l += ".";
      l += std::to_string(x);
    }
    labels[i] = l;
  }

  MakeGroupOptions opts;
  opts.assoc_check_cap = limits.assoc_check_cap;
  opts.trusted = n > limits.assoc_check_cap;  // composition is associative anyway
  opts.name = doc.value("name", std::string("perm-group"));
  return make_group_flat(n, std::move(table), std::move(labels), opts);
}

}  // namespace

FiniteGroup group_from_json(const json& doc, const Limits& limits) {
  if (!doc.is_object()) throw FileFormatError("top level must be a JSON object");
  if (doc.contains("table")) return from_table_format(doc, limits);
  if (doc.contains("generators")) return from_generator_format(doc, limits);
  throw FileFormatError("expected a 'table' or 'generators' field");
}

FiniteGroup load_group_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open group file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FileFormatError("JSON parse error in " + path + ": " + e.what());
  }
  try {
    return group_from_json(doc, limits);
  } catch (const json::exception& e) {
    throw FileFormatError("malformed group file " + path + ": " + e.what());
  }
}

}  // namespace autocomm
