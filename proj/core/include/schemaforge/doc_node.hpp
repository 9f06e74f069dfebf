#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "schemaforge/json_value.hpp"

namespace schemaforge {

enum class LevelType { Root, Section, Subsection, DetailN };

/// 0 -> ROOT, 1 -> SECTION, 2 -> SUBSECTION, >= 3 -> DETAIL_N.
LevelType level_type_for(std::size_t level);
std::string_view level_type_name(LevelType t);

enum class CheckState { Checked, Unchecked, Na };
std::string_view check_state_name(CheckState s);

enum class ComponentKind { Paragraph, Table, Checkbox };
std::string_view component_kind_name(ComponentKind k);

/// One content block inside a document node. The payload layout depends on
/// the kind:
///   paragraph  string
///   table      {"header": [text...], "rows": [[text...]...]} (rectangular)
///   checkbox   {"label": text, "state": "checked"|"unchecked"|"na"}
struct Component {
  ComponentKind kind = ComponentKind::Paragraph;
  JsonValue payload;

  static Component paragraph(std::string text);
  static Component table(std::vector<std::string> header,
                         std::vector<std::vector<std::string>> rows);
  static Component checkbox(std::string label, CheckState state);

  // Accessors assume the canonical payload layout for the kind.
  const std::string& paragraph_text() const;
  const JsonValue::Array& table_header() const;
  const JsonValue::Array& table_rows() const;
  const std::string& checkbox_label() const;
  CheckState checkbox_state() const;
};

/// A node of the hierarchical document tree. `level_type` is derived from
/// `level`, so the two can never disagree.
struct DocNode {
  std::string id;
  std::string title;
  std::size_t level = 0;
  std::vector<Component> components;
  std::vector<DocNode> children;
  JsonValue::Object variables;  // flat name -> scalar
  std::string content;

  LevelType level_type() const { return level_type_for(level); }
};

/// Projection used for the filled side of a corpus triple:
/// {id, title, level, level_type, component: [...], children: [...],
///  properties: {variables: {...}, content: text}}.
JsonValue doc_to_json(const DocNode& root);

/// Structural checks: child levels increment by one, ids unique across the
/// tree, component payloads match their kind, tables rectangular with at
/// least one column, variables scalar-valued. Returns human-readable
/// violations; empty means valid.
std::vector<std::string> validate_document(const DocNode& root);

}  // namespace schemaforge
