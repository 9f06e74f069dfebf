#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "schemaforge/doc_node.hpp"
#include "schemaforge/json_value.hpp"

namespace schemaforge {

/// Inclusive integer range.
struct IntRange {
  int lo = 1;
  int hi = 1;
};

enum class Layout { Sequential, Parallel, Combined };
enum class TableStyle { Ascii, XmlLike, PdfSim };
enum class CheckboxStyle { Brackets, YesNo, NaVariants };

std::string_view layout_name(Layout v);
std::string_view table_style_name(TableStyle v);
std::string_view checkbox_style_name(CheckboxStyle v);

std::optional<Layout> layout_from_name(std::string_view name);
std::optional<TableStyle> table_style_from_name(std::string_view name);
std::optional<CheckboxStyle> checkbox_style_from_name(std::string_view name);

/// Everything that determines a triple. Equal configs produce byte-identical
/// output.
struct SynthConfig {
  std::uint64_t seed = 0;
  std::string domain_label = "general manufacturing";
  int max_depth = 3;  // [1, 6]
  IntRange children_per_node{1, 3};
  IntRange components_per_node{1, 3};
  Layout layout = Layout::Sequential;
  TableStyle table_style = TableStyle::Ascii;
  CheckboxStyle checkbox_style = CheckboxStyle::Brackets;
  double filler_density = 0.3;  // [0, 1]
};

/// Throws std::invalid_argument on out-of-range depth or density, or on an
/// empty (lo > hi) or negative range.
void validate_config(const SynthConfig& config);

/// One benchmark unit: unstructured rendering (wrapped in <text>...</text>),
/// the structure-only template, and the populated instance it was rendered
/// from. `blank` always equals blank_schema(filled), and every scalar leaf
/// of `filled` appears verbatim in `text` (see leaf_token for the form).
struct CorpusTriple {
  std::string id;
  std::string text;
  JsonValue blank;
  JsonValue filled;
};

/// Builds the document tree. The leftmost descent always reaches max_depth
/// levels (a child count of 0 drawn on that descent is raised to 1), so a
/// max_depth of 4 or more always produces DETAIL_N nodes. Trees of depth 2
/// or more always contain at least one table and one checkbox component.
DocNode generate_document(const SynthConfig& config);

/// Flattens the tree to narrative text: headings, variable and content
/// sentences, component renderings in the configured styles, filler
/// paragraphs at the configured density, and a short unrelated remark closing
/// each data point. config.layout controls how sibling subtree blocks
/// interleave (sequential: one subtree after another; parallel: round-robin
/// across siblings block by block; combined: sequential at even levels,
/// parallel at odd). Output is wrapped in <text>...</text>.
std::string render_unstructured(const DocNode& doc, const SynthConfig& config);

/// generate + project + blank + render, under one config.
CorpusTriple emit_triple(const SynthConfig& config);

/// A completion that reproduces the triple's filled object exactly:
/// reasoning, "</think>\n<answer>", compact serialization of filled,
/// "</answer>". No leading "<think>" (completions begin after that token).
std::string canonical_completion(const CorpusTriple& triple);

/// The exact character form a scalar takes in rendered text: strings bare
/// (no quotes), numbers by their lexeme, booleans and null as JSON keywords.
std::string leaf_token(const JsonValue& scalar);

}  // namespace schemaforge
