#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schemaforge/json_value.hpp"

namespace schemaforge {

/// Structural equality. Object key order is ignored, list order is
/// significant, numbers compare by decimal value (1.0 equals 1).
bool deep_equals(const JsonValue& a, const JsonValue& b);

/// Structure-only copy of a filled document: every scalar leaf becomes null,
/// objects keep all keys, lists of scalars collapse to an empty list, and a
/// list holding containers keeps a single blanked exemplar element (the first
/// container when the list is mixed).
/// Throws std::invalid_argument when `filled` is itself a scalar.
JsonValue blank_schema(const JsonValue& filled);

/// One step from a document root toward a leaf: an object key or a list index.
using PathSegment = std::variant<std::string, std::size_t>;

/// Address of one scalar leaf plus the scalar found there.
struct LeafPath {
  std::vector<PathSegment> segments;
  JsonValue value;  // null, boolean, number, or string
};

/// All scalar leaves in deterministic depth-first order (object members in
/// insertion order, list elements by index). A scalar root yields exactly one
/// path with no segments; empty containers yield none.
std::vector<LeafPath> leaf_paths(const JsonValue& v);

/// Count of scalar leaves without materializing paths.
std::size_t leaf_count(const JsonValue& v);

/// Unambiguous flat encoding of a path, usable as a hash-map key. Keys and
/// indices cannot collide ("k1:a" vs "i1:0" style framing).
std::string path_key(std::span<const PathSegment> segments);

}  // namespace schemaforge
