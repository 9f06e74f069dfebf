#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemaforge/json_value.hpp"

namespace schemaforge {

enum class RewardFailure { NoAnswer, AnswerParseError, TruthParseError };

std::string_view reward_failure_name(RewardFailure f);

/// Per-sample reward and its components. On failure the component scores are
/// absent and the reward is 0; otherwise
/// reward = round1(clamp((key_match_score + length_ratio) / 2)).
struct RewardBreakdown {
  std::string id;
  double reward = 0.0;  // one of 0.0, 0.1, ..., 1.0
  std::optional<double> key_match_score;
  std::optional<double> length_ratio;
  std::optional<RewardFailure> failure;
};

/// Fraction of the two values' top-level key union whose values compare
/// deeply equal. Two empty objects score 0 (empty union). When either side
/// is not an object the score degenerates to deep_equals ? 1 : 0.
double key_match_score(const JsonValue& answer, const JsonValue& truth);

/// min/max of the two values' member counts (scalars count 1, zero counts
/// are coerced to 1 before the ratio).
double length_ratio(const JsonValue& answer, const JsonValue& truth);

/// clamp to [0,1], then round to one decimal place, half away from zero.
double round_reward(double raw);

/// Score one row. `id` is carried into the breakdown untouched.
RewardBreakdown score_json_row(std::string id, std::string_view completion,
                               std::string_view ground_truth);

struct JsonRewardLogEntry {
  std::size_t row = 0;  // position in the input list; doubles as a logical timestamp
  std::string id;
  std::string prefixed;
  double reward = 0.0;
};

inline constexpr double kJsonLogThreshold = 0.6;
inline constexpr double kDefaultJsonLogProbability = 0.6;

/// Batch scoring. Breakdown ids are the row ordinals as decimal text. Rows
/// whose rounded reward reaches kJsonLogThreshold are appended to `log` with
/// probability `log_probability`; the draw is a pure function of
/// (rng_seed, row), so the sampled set is reproducible and independent of
/// scheduling. Throws std::invalid_argument on input length mismatch.
std::vector<RewardBreakdown> json_reward(const std::vector<std::string>& completions,
                                         const std::vector<std::string>& ground_truths,
                                         double log_probability = kDefaultJsonLogProbability,
                                         std::uint64_t rng_seed = 0,
                                         std::vector<JsonRewardLogEntry>* log = nullptr);

}  // namespace schemaforge
