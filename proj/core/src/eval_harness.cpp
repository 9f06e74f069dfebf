#include "schemaforge/eval_harness.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schemaforge/extraction.hpp"
#include "schemaforge/schema_ops.hpp"

namespace schemaforge {

std::string_view row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::NoOutput: return "no_output";
    case RowStatus::InvalidJson: return "invalid_json";
    case RowStatus::Valid: return "valid";
  }
  return "no_output";
}

RowOutcome row_outcome(std::string id, std::string_view completion, const JsonValue& truth) {
  std::vector<LeafPath> truth_leaves = leaf_paths(truth);
  if (truth_leaves.empty()) {
    throw std::invalid_argument("row_outcome: ground truth has no leaf values");
  }

  RowOutcome out;
  out.id = std::move(id);

  std::string prefixed = prefix_think(completion);
  std::optional<std::string> ans = extract_answer(prefixed);
  if (!ans.has_value() || ans->empty()) {
    out.status = RowStatus::NoOutput;
    return out;
  }
  std::optional<JsonValue> answer = parse_json(*ans);
  if (!answer.has_value()) {
    out.status = RowStatus::InvalidJson;
    return out;
  }
  out.status = RowStatus::Valid;

  std::vector<LeafPath> answer_leaves = leaf_paths(*answer);
  std::unordered_map<std::string, const JsonValue*> answer_by_path;
  answer_by_path.reserve(answer_leaves.size());
  for (const auto& leaf : answer_leaves) {
    answer_by_path.emplace(path_key(leaf.segments), &leaf.value);
  }

  std::size_t matched = 0;
  std::unordered_map<std::string, const JsonValue*> truth_by_path;
  truth_by_path.reserve(truth_leaves.size());
  for (const auto& leaf : truth_leaves) {
    std::string key = path_key(leaf.segments);
    auto it = answer_by_path.find(key);
    if (it != answer_by_path.end() && deep_equals(*it->second, leaf.value)) ++matched;
    truth_by_path.emplace(std::move(key), &leaf.value);
  }
  out.match_pct = 100.0 * static_cast<double>(matched) / static_cast<double>(truth_leaves.size());

  if (answer_leaves.empty()) {
    out.noise_pct = 0.0;
    return out;
  }
  std::size_t noisy = 0;
  for (const auto& leaf : answer_leaves) {
    auto it = truth_by_path.find(path_key(leaf.segments));
    if (it == truth_by_path.end() || !deep_equals(*it->second, leaf.value)) ++noisy;
  }
  out.noise_pct = 100.0 * static_cast<double>(noisy) / static_cast<double>(answer_leaves.size());
  return out;
}

void EvalAccumulator::add(const RowOutcome& row) {
  ++counts_.total_rows;
  switch (row.status) {
    case RowStatus::NoOutput:
      ++counts_.rows_no_output;
      break;
    case RowStatus::InvalidJson:
      ++counts_.rows_invalid_json;
      break;
    case RowStatus::Valid:
      ++counts_.rows_valid_json;
      match_sum_ += row.match_pct.value_or(0.0);
      noise_sum_ += row.noise_pct.value_or(0.0);
      break;
  }
}

EvalSummary EvalAccumulator::finish(bool mean_over_all) const {
  EvalSummary out = counts_;
  std::size_t denom = mean_over_all ? out.total_rows : out.rows_valid_json;
  if (denom > 0) {
    out.mean_match_pct = match_sum_ / static_cast<double>(denom);
    out.mean_noise_pct = noise_sum_ / static_cast<double>(denom);
  }
  return out;
}

}  // namespace schemaforge
