#include "schemaforge/doc_node.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace schemaforge {

LevelType level_type_for(std::size_t level) {
  switch (level) {
    case 0: return LevelType::Root;
    case 1: return LevelType::Section;
    case 2: return LevelType::Subsection;
    default: return LevelType::DetailN;
  }
}

std::string_view level_type_name(LevelType t) {
  switch (t) {
    case LevelType::Root: return "ROOT";
    case LevelType::Section: return "SECTION";
    case LevelType::Subsection: return "SUBSECTION";
    case LevelType::DetailN: return "DETAIL_N";
  }
  return "ROOT";
}

std::string_view check_state_name(CheckState s) {
  switch (s) {
    case CheckState::Checked: return "checked";
    case CheckState::Unchecked: return "unchecked";
    case CheckState::Na: return "na";
  }
  return "na";
}

std::string_view component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Paragraph: return "paragraph";
    case ComponentKind::Table: return "table";
    case ComponentKind::Checkbox: return "checkbox";
  }
  return "paragraph";
}

Component Component::paragraph(std::string text) {
  Component c;
  c.kind = ComponentKind::Paragraph;
  c.payload = JsonValue(std::move(text));
  return c;
}

Component Component::table(std::vector<std::string> header,
                           std::vector<std::vector<std::string>> rows) {
  JsonValue::Array header_cells;
  header_cells.reserve(header.size());
  for (auto& cell : header) header_cells.emplace_back(std::move(cell));

  JsonValue::Array row_values;
  row_values.reserve(rows.size());
  for (auto& row : rows) {
    JsonValue::Array cells;
    cells.reserve(row.size());
    for (auto& cell : row) cells.emplace_back(std::move(cell));
    row_values.emplace_back(std::move(cells));
  }

  JsonValue::Object payload;
  payload.insert("header", JsonValue(std::move(header_cells)));
  payload.insert("rows", JsonValue(std::move(row_values)));

  Component c;
  c.kind = ComponentKind::Table;
  c.payload = JsonValue(std::move(payload));
  return c;
}

Component Component::checkbox(std::string label, CheckState state) {
  JsonValue::Object payload;
  payload.insert("label", JsonValue(std::move(label)));
  payload.insert("state", JsonValue(std::string(check_state_name(state))));

  Component c;
  c.kind = ComponentKind::Checkbox;
  c.payload = JsonValue(std::move(payload));
  return c;
}

namespace {

const JsonValue& payload_field(const JsonValue& payload, const char* key) {
  if (!payload.is_object()) throw std::logic_error("component payload is not an object");
  const JsonValue* v = payload.as_object().find(key);
  if (v == nullptr) throw std::logic_error(std::string("component payload missing ") + key);
  return *v;
}

}  // namespace

const std::string& Component::paragraph_text() const { return payload.as_string(); }

const JsonValue::Array& Component::table_header() const {
  return payload_field(payload, "header").as_array();
}

const JsonValue::Array& Component::table_rows() const {
  return payload_field(payload, "rows").as_array();
}

const std::string& Component::checkbox_label() const {
  return payload_field(payload, "label").as_string();
}

CheckState Component::checkbox_state() const {
  const std::string& s = payload_field(payload, "state").as_string();
  if (s == "checked") return CheckState::Checked;
  if (s == "unchecked") return CheckState::Unchecked;
  return CheckState::Na;
}

namespace {

JsonValue component_to_json(const Component& c) {
  JsonValue::Object out;
  out.insert("component_type", JsonValue(std::string(component_kind_name(c.kind))));
  switch (c.kind) {
    case ComponentKind::Paragraph:
      out.insert("text", c.payload);
      break;
    case ComponentKind::Table:
      out.insert("header", payload_field(c.payload, "header"));
      out.insert("rows", payload_field(c.payload, "rows"));
      break;
    case ComponentKind::Checkbox:
      out.insert("label", payload_field(c.payload, "label"));
      out.insert("state", payload_field(c.payload, "state"));
      break;
  }
  return JsonValue(std::move(out));
}

}  // namespace

JsonValue doc_to_json(const DocNode& node) {
  JsonValue::Object out;
  out.insert("id", JsonValue(node.id));
  out.insert("title", JsonValue(node.title));
  out.insert("level", JsonValue(JsonNumber::from_int(static_cast<std::int64_t>(node.level))));
  out.insert("level_type", JsonValue(std::string(level_type_name(node.level_type()))));

  JsonValue::Array components;
  components.reserve(node.components.size());
  for (const auto& c : node.components) components.push_back(component_to_json(c));
  out.insert("component", JsonValue(std::move(components)));

  JsonValue::Array children;
  children.reserve(node.children.size());
  for (const auto& child : node.children) children.push_back(doc_to_json(child));
  out.insert("children", JsonValue(std::move(children)));

  JsonValue::Object properties;
  properties.insert("variables", JsonValue(node.variables));
  properties.insert("content", JsonValue(node.content));
  out.insert("properties", JsonValue(std::move(properties)));

  return JsonValue(std::move(out));
}

namespace {

struct Validator {
  std::vector<std::string> problems;
  std::set<std::string> ids;

  void note(const DocNode& node, std::string what) {
    problems.push_back("node '" + node.id + "': " + std::move(what));
  }

  void check_component(const DocNode& node, const Component& c) {
    switch (c.kind) {
      case ComponentKind::Paragraph:
        if (!c.payload.is_string()) note(node, "paragraph payload is not text");
        break;
      case ComponentKind::Table: {
        if (!c.payload.is_object()) {
          note(node, "table payload is not an object");
          return;
        }
        const JsonValue* header = c.payload.as_object().find("header");
        const JsonValue* rows = c.payload.as_object().find("rows");
        if (header == nullptr || !header->is_array() || rows == nullptr || !rows->is_array()) {
          note(node, "table payload missing header/rows arrays");
          return;
        }
        std::size_t width = header->as_array().size();
        if (width == 0) note(node, "table has zero columns");
        for (const auto& row : rows->as_array()) {
          if (!row.is_array() || row.as_array().size() != width) {
            note(node, "table row width differs from header");
            break;
          }
        }
        break;
      }
      case ComponentKind::Checkbox: {
        if (!c.payload.is_object()) {
          note(node, "checkbox payload is not an object");
          return;
        }
        const JsonValue* label = c.payload.as_object().find("label");
        const JsonValue* state = c.payload.as_object().find("state");
        if (label == nullptr || !label->is_string()) note(node, "checkbox label missing");
        if (state == nullptr || !state->is_string() ||
            (state->as_string() != "checked" && state->as_string() != "unchecked" &&
             state->as_string() != "na")) {
          note(node, "checkbox state not one of checked/unchecked/na");
        }
        break;
      }
    }
  }

  void walk(const DocNode& node, std::size_t expected_level) {
    if (node.level != expected_level) note(node, "level does not increment by one from parent");
    if (!ids.insert(node.id).second) note(node, "duplicate id");
    for (const auto& c : node.components) check_component(node, c);
    for (const auto& [name, value] : node.variables) {
      if (!value.is_scalar()) note(node, "variable '" + name + "' is not scalar");
    }
    for (const auto& child : node.children) walk(child, node.level + 1);
  }
};

}  // namespace

std::vector<std::string> validate_document(const DocNode& root) {
  Validator v;
  if (root.level != 0) {
    v.problems.push_back("root node must have level 0");
  }
  v.walk(root, root.level);
  return std::move(v.problems);
}

}  // namespace schemaforge
