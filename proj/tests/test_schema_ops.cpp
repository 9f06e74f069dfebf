#include "doctest.h"

#include <functional>
#include <set>
#include <string>

#include "schemaforge/json_value.hpp"
#include "schemaforge/rng.hpp"
#include "schemaforge/schema_ops.hpp"
#include "test_util.hpp"

using namespace schemaforge;

namespace {

JsonValue jv(std::string_view text) {
  auto v = parse_json(text);
  REQUIRE(v.has_value());
  return *v;
}

// brute-force scalar counter used as an oracle for leaf_count
std::size_t count_scalars(const JsonValue& v) {
  if (v.is_scalar()) return 1;
  std::size_t n = 0;
  if (v.is_array()) {
    for (const auto& el : v.as_array()) n += count_scalars(el);
  } else {
    for (const auto& [key, member] : v.as_object()) n += count_scalars(member);
  }
  return n;
}

JsonValue reversed_members(const JsonValue& v) {
  if (!v.is_object()) return v;
  std::vector<JsonValue::Object::Member> members(v.as_object().begin(), v.as_object().end());
  JsonValue::Object out;
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    out.insert(it->first, reversed_members(it->second));
  }
  return JsonValue(std::move(out));
}

}  // namespace

TEST_CASE("deep_equals ignores object key order but not list order") {
  CHECK(deep_equals(jv("{\"a\":1,\"b\":2}"), jv("{\"b\":2,\"a\":1}")));
  CHECK_FALSE(deep_equals(jv("[1,2]"), jv("[2,1]")));
  CHECK(deep_equals(jv("1.0"), jv("1")));
  CHECK_FALSE(deep_equals(jv("{\"a\":1}"), jv("{\"a\":1,\"b\":2}")));
  CHECK_FALSE(deep_equals(jv("{\"a\":1}"), jv("{\"b\":1}")));
  CHECK_FALSE(deep_equals(jv("null"), jv("0")));
  CHECK_FALSE(deep_equals(jv("\"1\""), jv("1")));
  CHECK_FALSE(deep_equals(jv("true"), jv("1")));
  CHECK(deep_equals(jv("{\"a\":{\"x\":[1,2]}}"), jv("{\"a\":{\"x\":[1.0,2.0]}}")));
}

TEST_CASE("deep_equals is reflexive and symmetric on random values") {
  auto g = row_stream(99, 1);
  for (int i = 0; i < 300; ++i) {
    const JsonValue a = sftest::random_json(g, 0);
    const JsonValue b = sftest::random_json(g, 0);
    CHECK(deep_equals(a, a));
    CHECK(deep_equals(a, b) == deep_equals(b, a));
    CHECK(deep_equals(a, reversed_members(a)));
  }
}

TEST_CASE("blank_schema nulls scalars and keeps object structure") {
  CHECK(deep_equals(blank_schema(jv("{\"a\":1,\"b\":{\"c\":\"x\"}}")),
                    jv("{\"a\":null,\"b\":{\"c\":null}}")));
  SUBCASE("scalar lists collapse") {
    CHECK(deep_equals(blank_schema(jv("{\"xs\":[1,2,3]}")), jv("{\"xs\":[]}")));
    CHECK(deep_equals(blank_schema(jv("[\"a\",\"b\"]")), jv("[]")));
  }
  SUBCASE("container lists keep one blanked exemplar") {
    CHECK(deep_equals(blank_schema(jv("{\"rows\":[{\"v\":1},{\"v\":2}]}")),
                      jv("{\"rows\":[{\"v\":null}]}")));
    CHECK(deep_equals(blank_schema(jv("[[1,2],[3]]")), jv("[[]]")));
    // first container element is the exemplar even behind scalars
    CHECK(deep_equals(blank_schema(jv("[1,{\"a\":2},\"x\"]")), jv("[{\"a\":null}]")));
  }
  SUBCASE("empty containers stay as they are") {
    CHECK(deep_equals(blank_schema(jv("{}")), jv("{}")));
    CHECK(deep_equals(blank_schema(jv("[]")), jv("[]")));
  }
  SUBCASE("scalar roots are out of domain") {
    CHECK_THROWS_AS(blank_schema(jv("7")), std::invalid_argument);
    CHECK_THROWS_AS(blank_schema(jv("\"s\"")), std::invalid_argument);
  }
}

TEST_CASE("blank_schema is idempotent on structure") {
  auto g = row_stream(99, 2);
  int checked = 0;
  while (checked < 200) {
    const JsonValue v = sftest::random_json(g, 0);
    if (v.is_scalar()) continue;
    ++checked;
    const JsonValue once = blank_schema(v);
    CHECK(deep_equals(blank_schema(once), once));
  }
}

TEST_CASE("leaf_paths enumerates scalars depth-first") {
  SUBCASE("object leaves") {
    const auto paths = leaf_paths(jv("{\"a\":1,\"b\":{\"c\":2}}"));
    REQUIRE(paths.size() == 2);
    CHECK(path_key(paths[0].segments) == "k1:a");
    CHECK(paths[0].value.as_number().lexeme() == "1");
    CHECK(path_key(paths[1].segments) == "k1:bk1:c");
    CHECK(paths[1].value.as_number().lexeme() == "2");
  }
  SUBCASE("list leaves carry indices") {
    const auto paths = leaf_paths(jv("{\"xs\":[true,false]}"));
    REQUIRE(paths.size() == 2);
    CHECK(path_key(paths[0].segments) == "k2:xsi0;");
    CHECK(path_key(paths[1].segments) == "k2:xsi1;");
  }
  SUBCASE("scalar root is a single leaf with an empty path") {
    const auto paths = leaf_paths(jv("42"));
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].segments.empty());
    CHECK(path_key(paths[0].segments).empty());
  }
  SUBCASE("empty containers have no leaves") {
    CHECK(leaf_paths(jv("{}")).empty());
    CHECK(leaf_paths(jv("{\"a\":{},\"b\":[]}")).empty());
  }
}

TEST_CASE("path_key distinguishes lookalike paths") {
  // nested keys "a"/"b" vs the single key "a.b" and friends
  CHECK(path_key(leaf_paths(jv("{\"a\":{\"b\":1}}"))[0].segments) !=
        path_key(leaf_paths(jv("{\"a.b\":1}"))[0].segments));
  CHECK(path_key(leaf_paths(jv("{\"a\":[1]}"))[0].segments) !=
        path_key(leaf_paths(jv("{\"ai0\":1}"))[0].segments));
  CHECK(path_key(leaf_paths(jv("{\"k1:a\":1}"))[0].segments) !=
        path_key(leaf_paths(jv("{\"a\":{\"k1:a\":1}}"))[0].segments));
}

TEST_CASE("leaf_count matches an independent counter") {
  auto g = row_stream(99, 3);
  for (int i = 0; i < 300; ++i) {
    const JsonValue v = sftest::random_json(g, 0);
    const auto paths = leaf_paths(v);
    CHECK(leaf_count(v) == count_scalars(v));
    CHECK(paths.size() == count_scalars(v));
    // paths are unique within one document
    std::set<std::string> keys;
    for (const auto& p : paths) keys.insert(path_key(p.segments));
    CHECK(keys.size() == paths.size());
  }
}
