#include "schemaforge/corpus_synth.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schemaforge/rng.hpp"
#include "schemaforge/schema_ops.hpp"

namespace schemaforge {

std::string_view layout_name(Layout v) {
  switch (v) {
    case Layout::Sequential: return "sequential";
    case Layout::Parallel: return "parallel";
    case Layout::Combined: return "combined";
  }
  return "sequential";
}

std::string_view table_style_name(TableStyle v) {
  switch (v) {
    case TableStyle::Ascii: return "ascii";
    case TableStyle::XmlLike: return "xml_like";
    case TableStyle::PdfSim: return "pdf_sim";
  }
  return "ascii";
}

std::string_view checkbox_style_name(CheckboxStyle v) {
  switch (v) {
    case CheckboxStyle::Brackets: return "brackets";
    case CheckboxStyle::YesNo: return "yes_no";
    case CheckboxStyle::NaVariants: return "na_variants";
  }
  return "brackets";
}

std::optional<Layout> layout_from_name(std::string_view name) {
  if (name == "sequential") return Layout::Sequential;
  if (name == "parallel") return Layout::Parallel;
  if (name == "combined") return Layout::Combined;
  return std::nullopt;
}

std::optional<TableStyle> table_style_from_name(std::string_view name) {
  if (name == "ascii") return TableStyle::Ascii;
  if (name == "xml_like") return TableStyle::XmlLike;
  if (name == "pdf_sim") return TableStyle::PdfSim;
  return std::nullopt;
}

std::optional<CheckboxStyle> checkbox_style_from_name(std::string_view name) {
  if (name == "brackets") return CheckboxStyle::Brackets;
  if (name == "yes_no") return CheckboxStyle::YesNo;
  if (name == "na_variants") return CheckboxStyle::NaVariants;
  return std::nullopt;
}

void validate_config(const SynthConfig& config) {
  if (config.max_depth < 1 || config.max_depth > 6) {
    throw std::invalid_argument("synth config: max_depth must be in [1, 6]");
  }
  auto check_range = [](const IntRange& r, const char* what) {
    if (r.lo > r.hi) throw std::invalid_argument(std::string("synth config: empty ") + what);
    if (r.lo < 0) throw std::invalid_argument(std::string("synth config: negative ") + what);
  };
  check_range(config.children_per_node, "children_per_node range");
  check_range(config.components_per_node, "components_per_node range");
  if (!(config.filler_density >= 0.0 && config.filler_density <= 1.0)) {
    throw std::invalid_argument("synth config: filler_density must be in [0, 1]");
  }
}

namespace {

// Separate streams for tree building and text rendering, both derived from
// config.seed, so layout changes never disturb the generated data.
constexpr std::uint64_t kTreeSalt = 0x74726565;
constexpr std::uint64_t kRenderSalt = 0x72656e64;

constexpr std::array<std::string_view, 16> kTitles = {
    "Batch Production Record", "Quality Assurance Review", "Equipment Calibration Summary",
    "Material Intake Ledger",  "Process Deviation Report", "Sterility Assessment",
    "Packaging Line Checklist", "Environmental Monitoring Log", "Supplier Audit Digest",
    "Maintenance Work Order",  "Release Testing Dossier",  "Training Compliance Sheet",
    "Cleaning Validation Notice", "Yield Reconciliation Summary", "Change Control Abstract",
    "Stability Study Extract"};

constexpr std::array<std::string_view, 16> kVariableNames = {
    "temperature_c", "pressure_kpa", "lot_number",  "operator_id", "ph_level",
    "humidity_pct",  "batch_size",   "line_speed",  "fill_volume_ml", "torque_nm",
    "conductivity",  "runtime_min",  "reject_count", "sample_mass_g", "cycle_index",
    "flow_rate"};

constexpr std::array<std::string_view, 8> kContentTemplates = {
    "Operators completed the {} verification during the shift.",
    "Inspection of unit {} concluded without open findings.",
    "The technician reconciled entry {} against the master ledger.",
    "Station review covered reference {} in full.",
    "Crew members countersigned record {} before handover.",
    "Line supervision archived document {} at close of business.",
    "The audit trail for item {} remained intact throughout.",
    "Final sign-off referenced marker {} as supporting evidence."};

constexpr std::array<std::string_view, 8> kParagraphTemplates = {
    "Routine observation logged against tag {} with no exceptions noted.",
    "Shift notes describe steady operation near marker {} for the whole window.",
    "Handling instructions accompanying parcel {} were followed as written.",
    "A spot check around reference {} confirmed the posted limits.",
    "Personnel rotated through station {} according to the posted roster.",
    "Housekeeping around area {} met the posted standard.",
    "The changeover touching fixture {} finished ahead of plan.",
    "Follow-up on notice {} closed with supervisor approval."};

constexpr std::array<std::string_view, 12> kFillerBank = {
    "Standard operating procedures describe how records move between departments.",
    "Regulatory guidance favors plain language over specialized shorthand.",
    "Document retention policies vary by site and by product family.",
    "Periodic review keeps reference material aligned with current practice.",
    "Training refreshers are scheduled twice per year for all personnel.",
    "Archival copies are stored off site under controlled conditions.",
    "Terminology drifts slowly as equipment generations are replaced.",
    "Vendor manuals often lag behind the installed firmware.",
    "Floor plans are posted near every stairwell for orientation.",
    "Color coding of binders follows a site-wide convention.",
    "Visitors must sign the register before entering production areas.",
    "Lighting levels in storage rooms are surveyed each quarter."};

constexpr std::array<std::string_view, 12> kRemarkBank = {
    "the cafeteria menu rotates on Fridays",
    "the parking lot repaving is still pending",
    "a new coffee machine arrived upstairs",
    "the lobby plants were replaced recently",
    "the elevator inspection sticker was renewed",
    "someone left an umbrella in the hallway",
    "the break room clock runs a little fast",
    "the courtyard benches were repainted",
    "next month the windows will be washed",
    "the stairwell echo is oddly loud",
    "the vending machine takes exact change only",
    "the notice board gained a second pin map"};

const std::vector<std::vector<std::string>> kTableHeaderSets = {
    {"parameter", "reading", "status"},
    {"item", "quantity", "location"},
    {"stage", "duration_min", "outcome"},
    {"component", "lot", "disposition"},
    {"check", "result"},
    {"attribute", "target", "actual", "unit"}};

constexpr std::array<std::string_view, 10> kCheckboxLabels = {
    "Calibration verified",     "Area cleared for entry",  "Gowning requirements met",
    "Materials staged correctly", "Scale balance confirmed", "Filter integrity reviewed",
    "Label stock reconciled",   "Waste stream segregated", "Logbook entries complete",
    "Safety interlocks engaged"};

template <typename Bank>
std::string_view pick(std::mt19937_64& g, const Bank& bank) {
  return bank[static_cast<std::size_t>(uniform_int(g, 0, static_cast<std::int64_t>(bank.size()) - 1))];
}

std::string fill_template(std::string_view tpl, std::string_view token) {
  std::string out(tpl);
  auto slot = out.find("{}");
  out.replace(slot, 2, token);
  return out;
}

// Code-shaped value like "QK-3071": two letters, dash, four digits. Such
// strings never occur inside the fixed phrase banks.
std::string make_code(std::mt19937_64& g) {
  std::string out;
  out += static_cast<char>('A' + uniform_int(g, 0, 25));
  out += static_cast<char>('A' + uniform_int(g, 0, 25));
  out += '-';
  for (int i = 0; i < 4; ++i) out += static_cast<char>('0' + uniform_int(g, 0, 9));
  return out;
}

JsonValue make_scalar(std::mt19937_64& g) {
  switch (uniform_int(g, 0, 5)) {
    case 0:
    case 1: return JsonValue(make_code(g));
    case 2: return JsonValue(JsonNumber::from_int(uniform_int(g, 0, 99999)));
    case 3: {
      std::string lexeme = std::to_string(uniform_int(g, 0, 999));
      lexeme += '.';
      lexeme += static_cast<char>('0' + uniform_int(g, 0, 9));
      lexeme += static_cast<char>('0' + uniform_int(g, 1, 9));
      return JsonValue(*JsonNumber::from_lexeme(std::move(lexeme)));
    }
    case 4: return JsonValue(uniform_int(g, 0, 1) == 1);
    default: return JsonValue(nullptr);
  }
}

std::string make_cell(std::mt19937_64& g) {
  switch (uniform_int(g, 0, 2)) {
    case 0: return make_code(g);
    case 1: return std::to_string(uniform_int(g, 0, 9999));
    default: {
      std::string out = std::to_string(uniform_int(g, 0, 99));
      out += '.';
      out += static_cast<char>('0' + uniform_int(g, 0, 9));
      return out;
    }
  }
}

struct TreeBuilder {
  const SynthConfig& cfg;
  std::mt19937_64 g;
  std::string doc_token;
  bool has_table = false;
  bool has_checkbox = false;

  explicit TreeBuilder(const SynthConfig& c) : cfg(c), g(row_stream(c.seed, kTreeSalt)) {
    static constexpr char kHex[] = "0123456789abcdef";
    for (int i = 0; i < 8; ++i) doc_token += kHex[uniform_int(g, 0, 15)];
  }

  int draw(const IntRange& r) { return static_cast<int>(uniform_int(g, r.lo, r.hi)); }

  Component make_component() {
    switch (uniform_int(g, 0, 3)) {
      case 0:
      case 1:
        return Component::paragraph(fill_template(pick(g, kParagraphTemplates), make_code(g)));
      case 2: {
        has_table = true;
        const auto& header = kTableHeaderSets[static_cast<std::size_t>(
            uniform_int(g, 0, static_cast<std::int64_t>(kTableHeaderSets.size()) - 1))];
        int nrows = static_cast<int>(uniform_int(g, 1, 3));
        std::vector<std::vector<std::string>> rows;
        rows.reserve(static_cast<std::size_t>(nrows));
        for (int r = 0; r < nrows; ++r) {
          std::vector<std::string> row;
          row.reserve(header.size());
          for (std::size_t c = 0; c < header.size(); ++c) row.push_back(make_cell(g));
          rows.push_back(std::move(row));
        }
        return Component::table(header, std::move(rows));
      }
      default:
        has_checkbox = true;
        return Component::checkbox(std::string(pick(g, kCheckboxLabels)),
                                   static_cast<CheckState>(uniform_int(g, 0, 2)));
    }
  }

  DocNode build(const std::string& path, std::size_t level, bool on_spine) {
    DocNode node;
    node.id = doc_token + "-n" + path;
    node.title = std::string(pick(g, kTitles));
    node.level = level;

    int nvars = static_cast<int>(uniform_int(g, 0, 3));
    std::size_t base = static_cast<std::size_t>(uniform_int(g, 0, 15));
    std::size_t stride = static_cast<std::size_t>(2 * uniform_int(g, 0, 7) + 1);
    for (int k = 0; k < nvars; ++k) {
      std::size_t idx = (base + static_cast<std::size_t>(k) * stride) % kVariableNames.size();
      node.variables.insert(std::string(kVariableNames[idx]), make_scalar(g));
    }

    node.content = fill_template(pick(g, kContentTemplates), make_code(g));

    int ncomps = draw(cfg.components_per_node);
    node.components.reserve(static_cast<std::size_t>(ncomps));
    for (int k = 0; k < ncomps; ++k) node.components.push_back(make_component());

    if (level + 1 < static_cast<std::size_t>(cfg.max_depth)) {
      int nkids = draw(cfg.children_per_node);
      if (on_spine && nkids == 0) nkids = 1;
      node.children.reserve(static_cast<std::size_t>(nkids));
      for (int k = 0; k < nkids; ++k) {
        node.children.push_back(
            build(path + "." + std::to_string(k), level + 1, on_spine && k == 0));
      }
    }
    return node;
  }
};

}  // namespace

DocNode generate_document(const SynthConfig& config) {
  validate_config(config);
  TreeBuilder builder(config);
  DocNode root = builder.build("0", 0, true);
  if (config.max_depth >= 2) {
    if (!builder.has_table || !builder.has_checkbox) {
      // Force the guaranteed component mix by extending the root.
      while (!builder.has_table || !builder.has_checkbox) {
        root.components.push_back(builder.make_component());
      }
    }
  }
  return root;
}

namespace {

std::string_view styled_state(CheckboxStyle style, CheckState state) {
  switch (style) {
    case CheckboxStyle::Brackets:
      switch (state) {
        case CheckState::Checked: return "[x]";
        case CheckState::Unchecked: return "[ ]";
        case CheckState::Na: return "[-]";
      }
      break;
    case CheckboxStyle::YesNo:
      switch (state) {
        case CheckState::Checked: return "YES";
        case CheckState::Unchecked: return "NO";
        case CheckState::Na: return "N/A";
      }
      break;
    case CheckboxStyle::NaVariants:
      switch (state) {
        case CheckState::Checked: return "confirmed";
        case CheckState::Unchecked: return "declined";
        case CheckState::Na: return "not applicable";
      }
      break;
  }
  return "[ ]";
}

std::string pad_to(std::string cell, std::size_t width) {
  cell.resize(std::max(cell.size(), width), ' ');
  return cell;
}

struct Renderer {
  using Block = std::vector<std::string>;

  const SynthConfig& cfg;
  std::mt19937_64 g;

  explicit Renderer(const SynthConfig& c) : cfg(c), g(row_stream(c.seed, kRenderSalt)) {}

  std::string remark() { return std::string(pick(g, kRemarkBank)); }

  Block heading_block(const DocNode& node) {
    Block block;
    std::string head(level_type_name(node.level_type()));
    head += " (level " + std::to_string(node.level) + ") | " + node.title + " | ref " + node.id;
    if (node.level == 0) head += " | domain " + cfg.domain_label;
    head += " | note: " + remark() + ".";
    block.push_back(std::move(head));

    for (const auto& [name, value] : node.variables) {
      block.push_back("The recorded value of " + name + " stands at " + leaf_token(value) +
                      " for this step. Unrelated note: " + remark() + ".");
    }
    block.push_back("Section summary: " + node.content + " Unrelated note: " + remark() + ".");
    return block;
  }

  void append_table(Block& block, const Component& c) {
    block.push_back("The table below lists recorded values. Unrelated note: " + remark() + ".");

    std::vector<std::string> header;
    for (const auto& cell : c.table_header()) header.push_back(cell.as_string());
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : c.table_rows()) {
      std::vector<std::string> cells;
      for (const auto& cell : row.as_array()) cells.push_back(cell.as_string());
      rows.push_back(std::move(cells));
    }

    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }

    switch (cfg.table_style) {
      case TableStyle::Ascii: {
        std::string border = "+";
        for (std::size_t w : widths) border += std::string(w + 2, '-') + "+";
        auto fmt_row = [&](const std::vector<std::string>& cells) {
          std::string line = "|";
          for (std::size_t i = 0; i < cells.size(); ++i) {
            line += " " + pad_to(cells[i], widths[i]) + " |";
          }
          return line;
        };
        block.push_back(border);
        block.push_back(fmt_row(header));
        block.push_back(border);
        for (const auto& row : rows) block.push_back(fmt_row(row));
        block.push_back(border);
        break;
      }
      case TableStyle::XmlLike: {
        block.push_back("<table>");
        std::string head = "  <tr>";
        for (const auto& cell : header) head += "<th>" + cell + "</th>";
        block.push_back(head + "</tr>");
        for (const auto& row : rows) {
          std::string line = "  <tr>";
          for (const auto& cell : row) line += "<td>" + cell + "</td>";
          block.push_back(line + "</tr>");
        }
        block.push_back("</table>");
        break;
      }
      case TableStyle::PdfSim: {
        auto joined = [&](const std::vector<std::string>& cells, std::size_t from,
                          std::size_t to) {
          std::string line;
          for (std::size_t i = from; i < to; ++i) {
            if (i > from) line += "  ";
            line += pad_to(cells[i], widths[i]);
          }
          return line;
        };
        block.push_back(joined(header, 0, header.size()));
        std::size_t total = 0;
        for (std::size_t w : widths) total += w + 2;
        block.push_back(std::string(total > 2 ? total - 2 : total, '-'));
        for (const auto& row : rows) {
          // Simulated extraction artifact: an occasional hyphenated break,
          // always between cells so cell text stays intact.
          if (row.size() >= 2 && uniform01(g) < 0.3) {
            std::size_t split = static_cast<std::size_t>(
                uniform_int(g, 1, static_cast<std::int64_t>(row.size()) - 1));
            block.push_back(joined(row, 0, split) + " -");
            block.push_back("    " + joined(row, split, row.size()));
          } else {
            block.push_back(joined(row, 0, row.size()));
          }
        }
        break;
      }
    }
    block.push_back("End of table. Unrelated note: " + remark() + ".");
  }

  Block component_block(const Component& c) {
    Block block;
    switch (c.kind) {
      case ComponentKind::Paragraph:
        block.push_back("In this paragraph, the log notes: " + c.paragraph_text() +
                        " Unrelated note: " + remark() + ".");
        break;
      case ComponentKind::Table:
        append_table(block, c);
        break;
      case ComponentKind::Checkbox:
        block.push_back("A checkbox entry follows for " + c.checkbox_label() + ": " +
                        std::string(styled_state(cfg.checkbox_style, c.checkbox_state())) +
                        " (state: " + std::string(check_state_name(c.checkbox_state())) +
                        "). Unrelated note: " + remark() + ".");
        break;
    }
    return block;
  }

  Block filler_block() {
    Block block;
    int n = static_cast<int>(uniform_int(g, 1, 2));
    for (int i = 0; i < n; ++i) block.push_back(std::string(pick(g, kFillerBank)));
    return block;
  }

  std::vector<Block> render_node(const DocNode& node) {
    std::vector<Block> out;
    out.push_back(heading_block(node));
    for (const auto& c : node.components) out.push_back(component_block(c));
    if (cfg.filler_density > 0.0 && uniform01(g) < cfg.filler_density) {
      out.push_back(filler_block());
    }

    std::vector<std::vector<Block>> kids;
    kids.reserve(node.children.size());
    for (const auto& child : node.children) kids.push_back(render_node(child));

    bool parallel = cfg.layout == Layout::Parallel ||
                    (cfg.layout == Layout::Combined && node.level % 2 == 1);
    if (!parallel) {
      for (auto& kid : kids) {
        for (auto& block : kid) out.push_back(std::move(block));
      }
    } else {
      std::size_t most = 0;
      for (const auto& kid : kids) most = std::max(most, kid.size());
      for (std::size_t r = 0; r < most; ++r) {
        for (auto& kid : kids) {
          if (r < kid.size()) out.push_back(std::move(kid[r]));
        }
      }
    }
    return out;
  }
};

}  // namespace

std::string render_unstructured(const DocNode& doc, const SynthConfig& config) {
  validate_config(config);
  Renderer renderer(config);
  std::vector<Renderer::Block> blocks = renderer.render_node(doc);

  std::string out = "<text>\n";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += "\n";
    for (const auto& line : blocks[b]) {
      out += line;
      out += "\n";
    }
  }
  out += "</text>";
  return out;
}

CorpusTriple emit_triple(const SynthConfig& config) {
  DocNode doc = generate_document(config);
  CorpusTriple triple;
  triple.id = doc.id;
  triple.filled = doc_to_json(doc);
  triple.blank = blank_schema(triple.filled);
  triple.text = render_unstructured(doc, config);
  return triple;
}

std::string canonical_completion(const CorpusTriple& triple) {
  std::string out = "Mapping the narrative onto the blank template field by field.";
  out += "</think>\n<answer>";
  out += serialize(triple.filled);
  out += "</answer>";
  return out;
}

std::string leaf_token(const JsonValue& scalar) {
  if (scalar.is_string()) return scalar.as_string();
  if (scalar.is_number()) return scalar.as_number().lexeme();
  if (scalar.is_bool()) return scalar.as_bool() ? "true" : "false";
  return "null";
}

}  // namespace schemaforge
