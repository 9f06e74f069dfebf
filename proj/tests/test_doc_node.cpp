#include "doctest.h"

#include <string>

#include "schemaforge/doc_node.hpp"
#include "schemaforge/json_value.hpp"
#include "schemaforge/schema_ops.hpp"

using namespace schemaforge;

namespace {

DocNode small_doc() {
  DocNode root;
  root.id = "doc-n0";
  root.title = "Root";
  root.level = 0;
  root.variables.insert("batch", JsonValue("QK-3071"));
  root.content = "overview";
  root.components.push_back(Component::paragraph("hello"));

  DocNode section;
  section.id = "doc-n0.0";
  section.title = "Section";
  section.level = 1;
  section.components.push_back(Component::table({"c1", "c2"}, {{"a", "b"}, {"c", "d"}}));
  section.components.push_back(Component::checkbox("approved", CheckState::Checked));
  root.children.push_back(std::move(section));
  return root;
}

}  // namespace

TEST_CASE("level types follow the depth ladder") {
  CHECK(level_type_for(0) == LevelType::Root);
  CHECK(level_type_for(1) == LevelType::Section);
  CHECK(level_type_for(2) == LevelType::Subsection);
  CHECK(level_type_for(3) == LevelType::DetailN);
  CHECK(level_type_for(9) == LevelType::DetailN);
  CHECK(level_type_name(LevelType::Root) == "ROOT");
  CHECK(level_type_name(LevelType::Section) == "SECTION");
  CHECK(level_type_name(LevelType::Subsection) == "SUBSECTION");
  CHECK(level_type_name(LevelType::DetailN) == "DETAIL_N");
}

TEST_CASE("enum names") {
  CHECK(check_state_name(CheckState::Checked) == "checked");
  CHECK(check_state_name(CheckState::Unchecked) == "unchecked");
  CHECK(check_state_name(CheckState::Na) == "na");
  CHECK(component_kind_name(ComponentKind::Paragraph) == "paragraph");
  CHECK(component_kind_name(ComponentKind::Table) == "table");
  CHECK(component_kind_name(ComponentKind::Checkbox) == "checkbox");
}

TEST_CASE("component factories build canonical payloads") {
  const auto p = Component::paragraph("body text");
  CHECK(p.kind == ComponentKind::Paragraph);
  CHECK(p.paragraph_text() == "body text");

  const auto t = Component::table({"h1", "h2"}, {{"a", "b"}});
  CHECK(t.kind == ComponentKind::Table);
  REQUIRE(t.table_header().size() == 2);
  CHECK(t.table_header()[0].as_string() == "h1");
  REQUIRE(t.table_rows().size() == 1);
  CHECK(t.table_rows()[0].as_array()[1].as_string() == "b");

  const auto c = Component::checkbox("verified", CheckState::Na);
  CHECK(c.kind == ComponentKind::Checkbox);
  CHECK(c.checkbox_label() == "verified");
  CHECK(c.checkbox_state() == CheckState::Na);
}

TEST_CASE("doc_to_json projects the documented object contract") {
  const JsonValue j = doc_to_json(small_doc());
  const std::string text = serialize(j);
  CHECK(text ==
        "{\"id\":\"doc-n0\",\"title\":\"Root\",\"level\":0,\"level_type\":\"ROOT\","
        "\"component\":[{\"component_type\":\"paragraph\",\"text\":\"hello\"}],"
        "\"children\":[{\"id\":\"doc-n0.0\",\"title\":\"Section\",\"level\":1,"
        "\"level_type\":\"SECTION\",\"component\":[{\"component_type\":\"table\","
        "\"header\":[\"c1\",\"c2\"],\"rows\":[[\"a\",\"b\"],[\"c\",\"d\"]]},"
        "{\"component_type\":\"checkbox\",\"label\":\"approved\",\"state\":\"checked\"}],"
        "\"children\":[],\"properties\":{\"variables\":{},\"content\":\"\"}}],"
        "\"properties\":{\"variables\":{\"batch\":\"QK-3071\"},\"content\":\"overview\"}}");

  // level_type is derived, never stored separately
  DocNode deep;
  deep.level = 5;
  CHECK(deep.level_type() == LevelType::DetailN);
}

TEST_CASE("validate_document accepts a well-formed tree") {
  CHECK(validate_document(small_doc()).empty());
}

TEST_CASE("validate_document reports structural violations") {
  SUBCASE("level must increment by one") {
    DocNode root = small_doc();
    root.children[0].level = 2;
    const auto problems = validate_document(root);
    REQUIRE_FALSE(problems.empty());
    CHECK(problems[0].find("level") != std::string::npos);
  }
  SUBCASE("ids must be unique") {
    DocNode root = small_doc();
    root.children[0].id = root.id;
    CHECK_FALSE(validate_document(root).empty());
  }
  SUBCASE("tables must be rectangular") {
    DocNode root = small_doc();
    root.components.push_back(Component::table({"h1", "h2"}, {{"only one"}}));
    CHECK_FALSE(validate_document(root).empty());
  }
  SUBCASE("tables need at least one column") {
    DocNode root = small_doc();
    root.components.push_back(Component::table({}, {}));
    CHECK_FALSE(validate_document(root).empty());
  }
  SUBCASE("variables must be scalars") {
    DocNode root = small_doc();
    root.variables.insert("nested", JsonValue(JsonValue::Object{}));
    CHECK_FALSE(validate_document(root).empty());
  }
  SUBCASE("component payload must match its kind") {
    DocNode root = small_doc();
    Component broken;
    broken.kind = ComponentKind::Table;
    broken.payload = JsonValue("not a table payload");
    root.components.push_back(broken);
    CHECK_FALSE(validate_document(root).empty());
  }
}
