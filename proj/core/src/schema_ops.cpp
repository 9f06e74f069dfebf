#include "schemaforge/schema_ops.hpp"

#include <stdexcept>

namespace schemaforge {

bool deep_equals(const JsonValue& a, const JsonValue& b) {
  if (a.is_null()) return b.is_null();
  if (a.is_bool()) return b.is_bool() && a.as_bool() == b.as_bool();
  if (a.is_number()) return b.is_number() && a.as_number() == b.as_number();
  if (a.is_string()) return b.is_string() && a.as_string() == b.as_string();
  if (a.is_array()) {
    if (!b.is_array()) return false;
    const auto& xs = a.as_array();
    const auto& ys = b.as_array();
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!deep_equals(xs[i], ys[i])) return false;
    }
    return true;
  }
  if (!b.is_object()) return false;
  const auto& ao = a.as_object();
  const auto& bo = b.as_object();
  if (ao.size() != bo.size()) return false;
  // keys are unique, so same size + subset implies equal key sets
  for (const auto& [key, value] : ao) {
    const JsonValue* other = bo.find(key);
    if (other == nullptr || !deep_equals(value, *other)) return false;
  }
  return true;
}

JsonValue blank_schema(const JsonValue& filled) {
  if (filled.is_scalar()) {
    throw std::invalid_argument("blank_schema requires an object or list root");
  }
  struct Blanker {
    static JsonValue blank(const JsonValue& v) {
      if (v.is_scalar()) return JsonValue(nullptr);
      if (v.is_object()) {
        JsonValue::Object out;
        for (const auto& [key, member] : v.as_object()) {
          out.insert(key, blank(member));
        }
        return JsonValue(std::move(out));
      }
      const auto& arr = v.as_array();
      for (const auto& el : arr) {
        if (!el.is_scalar()) {
          JsonValue::Array exemplar;
          exemplar.push_back(blank(el));
          return JsonValue(std::move(exemplar));
        }
      }
      return JsonValue::array();  // scalar (or empty) list collapses
    }
  };
  return Blanker::blank(filled);
}

namespace {

void collect_leaves(const JsonValue& v, std::vector<PathSegment>& stack,
                    std::vector<LeafPath>* out, std::size_t* count) {
  if (v.is_scalar()) {
    if (out != nullptr) out->push_back({stack, v});
    ++*count;
    return;
  }
  if (v.is_object()) {
    for (const auto& [key, member] : v.as_object()) {
      stack.emplace_back(key);
      collect_leaves(member, stack, out, count);
      stack.pop_back();
    }
    return;
  }
  const auto& arr = v.as_array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    stack.emplace_back(i);
    collect_leaves(arr[i], stack, out, count);
    stack.pop_back();
  }
}

}  // namespace

std::vector<LeafPath> leaf_paths(const JsonValue& v) {
  std::vector<LeafPath> out;
  std::vector<PathSegment> stack;
  std::size_t count = 0;
  collect_leaves(v, stack, &out, &count);
  return out;
}

std::size_t leaf_count(const JsonValue& v) {
  std::vector<PathSegment> stack;
  std::size_t count = 0;
  collect_leaves(v, stack, nullptr, &count);
  return count;
}

std::string path_key(std::span<const PathSegment> segments) {
  std::string out;
  for (const auto& seg : segments) {
    if (std::holds_alternative<std::string>(seg)) {
      const auto& k = std::get<std::string>(seg);
      out += 'k';
      out += std::to_string(k.size());
      out += ':';
      out += k;
    } else {
      out += 'i';
      out += std::to_string(std::get<std::size_t>(seg));
      out += ';';
    }
  }
  return out;
}

}  // namespace schemaforge
