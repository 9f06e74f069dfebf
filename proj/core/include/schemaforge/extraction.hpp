#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemaforge/json_value.hpp"

namespace schemaforge {

/// One model completion. `raw` is the model output, which by convention
/// begins after an already-emitted "<think>" token; `prefixed` restores that
/// token so downstream checks see the full two-block structure.
struct Completion {
  std::string id;
  std::string raw;
  std::string prefixed;
};

struct ExtractedBlocks {
  std::optional<std::string> think;
  std::optional<std::string> answer;
};

/// "<think>" + raw, nothing else.
std::string prefix_think(std::string_view raw);

/// Content between the first "<answer>" and the next "</answer>" after it.
/// Absent when either tag is missing or mis-ordered. The returned content may
/// be an empty string; reward consumers treat that the same as absent.
std::optional<std::string> extract_answer(std::string_view prefixed);

/// Both tagged blocks (think: between "<think>" and the first "</think>").
ExtractedBlocks extract_blocks(std::string_view prefixed);

/// Whole-string format check, equivalent to anchoring
///
///   ^<think>([^<]*(?:<(?!/?think>)[^<]*)*)</think>\n<answer>([\s\S]*?)</answer>$
///
/// against the prefixed completion: one think block whose body contains no
/// nested "<think>"/"</think>", exactly one line feed, one answer block, and
/// nothing after the final "</answer>". Runs in linear time; the semantics
/// are pinned to the pattern above by differential tests against a reference
/// regex engine. The "\n" is one literal line feed; "\r" is not normalized.
bool matches_format(std::string_view prefixed);

/// A completion sampled for the inspection log.
struct FormatLogEntry {
  std::size_t row = 0;  // position in the input list; doubles as a logical timestamp
  std::string prefixed;
  int reward = 0;
};

inline constexpr double kDefaultFormatLogProbability = 0.1;

/// Binary format reward for a batch of completions. `ground_truths` is not
/// consulted; it is part of the signature for interface extensibility and
/// only length-checked (throws std::invalid_argument on mismatch).
///
/// Every completion is prefixed with "<think>" and, with probability
/// `log_probability` (decided per row from `rng_seed`, independent of
/// scheduling), appended to `log` regardless of its score.
std::vector<int> format_reward(const std::vector<std::string>& completions,
                               const std::vector<JsonValue>& ground_truths,
                               double log_probability = kDefaultFormatLogProbability,
                               std::uint64_t rng_seed = 0,
                               std::vector<FormatLogEntry>* log = nullptr);

}  // namespace schemaforge
