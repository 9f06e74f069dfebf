#include "schemaforge/extraction.hpp"

#include <stdexcept>

#include "schemaforge/rng.hpp"

namespace schemaforge {

namespace {

constexpr std::string_view kThinkOpen = "<think>";
constexpr std::string_view kThinkClose = "</think>";
constexpr std::string_view kAnswerOpen = "<answer>";
constexpr std::string_view kAnswerClose = "</answer>";

}  // namespace

std::string prefix_think(std::string_view raw) {
  std::string out;
  out.reserve(kThinkOpen.size() + raw.size());
  out.append(kThinkOpen);
  out.append(raw);
  return out;
}

std::optional<std::string> extract_answer(std::string_view prefixed) {
  auto open = prefixed.find(kAnswerOpen);
  if (open == std::string_view::npos) return std::nullopt;
  auto body = open + kAnswerOpen.size();
  auto close = prefixed.find(kAnswerClose, body);
  if (close == std::string_view::npos) return std::nullopt;
  return std::string(prefixed.substr(body, close - body));
}

ExtractedBlocks extract_blocks(std::string_view prefixed) {
  ExtractedBlocks out;
  auto topen = prefixed.find(kThinkOpen);
  if (topen != std::string_view::npos) {
    auto body = topen + kThinkOpen.size();
    auto tclose = prefixed.find(kThinkClose, body);
    if (tclose != std::string_view::npos) {
      out.think = std::string(prefixed.substr(body, tclose - body));
    }
  }
  out.answer = extract_answer(prefixed);
  return out;
}

bool matches_format(std::string_view s) {
  if (!s.starts_with(kThinkOpen)) return false;

  // Group 1: [^<]* interleaved with '<' not followed by "think>" or "/think>".
  // Equivalent to: the first think-ish tag after the opening one must be
  // "</think>", and it terminates the group.
  std::size_t i = kThinkOpen.size();
  std::size_t close = std::string_view::npos;
  while (true) {
    auto lt = s.find('<', i);
    if (lt == std::string_view::npos) return false;  // no </think>
    auto rest = s.substr(lt + 1);
    if (rest.starts_with("/think>")) {
      close = lt;
      break;
    }
    if (rest.starts_with("think>")) return false;  // nested <think>
    i = lt + 1;
  }

  // Literal "\n<answer>" immediately after "</think>".
  std::size_t after = close + kThinkClose.size();
  if (after >= s.size() || s[after] != '\n') return false;
  std::size_t aopen = after + 1;
  if (s.substr(aopen, kAnswerOpen.size()) != kAnswerOpen) return false;
  std::size_t body = aopen + kAnswerOpen.size();

  // ([\s\S]*?)</answer>$ : the string must end with "</answer>" and the body
  // may contain anything, including earlier "</answer>" occurrences.
  if (s.size() < body + kAnswerClose.size()) return false;
  return s.ends_with(kAnswerClose);
}

std::vector<int> format_reward(const std::vector<std::string>& completions,
                               const std::vector<JsonValue>& ground_truths,
                               double log_probability,
                               std::uint64_t rng_seed,
                               std::vector<FormatLogEntry>* log) {
  if (completions.size() != ground_truths.size()) {
    throw std::invalid_argument("format_reward: completions and ground_truths differ in length");
  }
  std::vector<int> rewards;
  rewards.reserve(completions.size());
  for (std::size_t row = 0; row < completions.size(); ++row) {
    std::string prefixed = prefix_think(completions[row]);
    // The logging draw happens for every row, before the check, so log file
    // contents depend only on (seed, row), not on scores.
    bool sampled = should_log_row(rng_seed, row, log_probability);
    int reward = matches_format(prefixed) ? 1 : 0;
    if (sampled && log != nullptr) {
      log->push_back(FormatLogEntry{row, std::move(prefixed), reward});
    }
    rewards.push_back(reward);
  }
  return rewards;
}

}  // namespace schemaforge
