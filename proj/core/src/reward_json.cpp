#include "schemaforge/reward_json.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schemaforge/extraction.hpp"
#include "schemaforge/rng.hpp"
#include "schemaforge/schema_ops.hpp"

namespace schemaforge {

std::string_view reward_failure_name(RewardFailure f) {
  switch (f) {
    case RewardFailure::NoAnswer: return "no_answer";
    case RewardFailure::AnswerParseError: return "answer_parse_error";
    case RewardFailure::TruthParseError: return "truth_parse_error";
  }
  return "no_answer";
}

double key_match_score(const JsonValue& answer, const JsonValue& truth) {
  if (!answer.is_object() || !truth.is_object()) {
    return deep_equals(answer, truth) ? 1.0 : 0.0;
  }
  const auto& a = answer.as_object();
  const auto& g = truth.as_object();

  std::size_t total = a.size();
  for (const auto& [key, value] : g) {
    if (!a.contains(key)) ++total;
  }
  if (total == 0) return 0.0;

  std::size_t matching = 0;
  for (const auto& [key, value] : a) {
    const JsonValue* gv = g.find(key);
    if (gv != nullptr && deep_equals(value, *gv)) ++matching;
  }
  return static_cast<double>(matching) / static_cast<double>(total);
}

double length_ratio(const JsonValue& answer, const JsonValue& truth) {
  auto coerced = [](const JsonValue& v) {
    std::size_t n = v.length();
    return n == 0 ? std::size_t{1} : n;
  };
  double la = static_cast<double>(coerced(answer));
  double lg = static_cast<double>(coerced(truth));
  return std::min(la, lg) / std::max(la, lg);
}

double round_reward(double raw) {
  double clamped = std::clamp(raw, 0.0, 1.0);
  return std::round(clamped * 10.0) / 10.0;
}

RewardBreakdown score_json_row(std::string id, std::string_view completion,
                               std::string_view ground_truth) {
  RewardBreakdown out;
  out.id = std::move(id);

  std::string prefixed = prefix_think(completion);
  std::optional<std::string> ans = extract_answer(prefixed);
  if (!ans.has_value() || ans->empty()) {
    out.failure = RewardFailure::NoAnswer;
    return out;
  }

  std::optional<JsonValue> answer_json = parse_json(*ans);
  if (!answer_json.has_value()) {
    out.failure = RewardFailure::AnswerParseError;
    return out;
  }
  std::optional<JsonValue> truth_json = parse_json(ground_truth);
  if (!truth_json.has_value()) {
    out.failure = RewardFailure::TruthParseError;
    return out;
  }

  double kms = key_match_score(*answer_json, *truth_json);
  double lr = length_ratio(*answer_json, *truth_json);
  out.key_match_score = kms;
  out.length_ratio = lr;
  out.reward = round_reward((kms + lr) / 2.0);
  return out;
}

std::vector<RewardBreakdown> json_reward(const std::vector<std::string>& completions,
                                         const std::vector<std::string>& ground_truths,
                                         double log_probability,
                                         std::uint64_t rng_seed,
                                         std::vector<JsonRewardLogEntry>* log) {
  if (completions.size() != ground_truths.size()) {
    throw std::invalid_argument("json_reward: completions and ground_truths differ in length");
  }
  std::vector<RewardBreakdown> out;
  out.reserve(completions.size());
  for (std::size_t row = 0; row < completions.size(); ++row) {
    RewardBreakdown b = score_json_row(std::to_string(row), completions[row], ground_truths[row]);
    if (b.reward >= kJsonLogThreshold && log != nullptr &&
        should_log_row(rng_seed, row, log_probability)) {
      log->push_back(JsonRewardLogEntry{row, b.id, prefix_think(completions[row]), b.reward});
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace schemaforge
