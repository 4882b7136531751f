#pragma once

#include <string>

#include <json.hpp>

#include "autocomm/group.hpp"
#include "autocomm/limits.hpp"

namespace autocomm {

/// Loads either group file format:
///   table format:      {"name", "order", "table": [[int]], "labels"?}
///   generator format:  {"name", "degree", "generators": [[int]]}
/// The generator format closes the given permutations under composition;
/// exceeding limits.closure_cap throws ClosureCapError. Malformed files throw
/// FileFormatError naming the offending field.
FiniteGroup load_group_file(const std::string& path, const Limits& limits = {});

FiniteGroup group_from_json(const nlohmann::json& doc, const Limits& limits = {});

}  // namespace autocomm
