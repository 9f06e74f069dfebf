#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "schemaforge/json_value.hpp"

namespace schemaforge {

enum class RowStatus { NoOutput, InvalidJson, Valid };

std::string_view row_status_name(RowStatus s);

/// Per-row benchmark outcome. Percentages are present iff status is Valid.
struct RowOutcome {
  std::string id;
  RowStatus status = RowStatus::NoOutput;
  std::optional<double> match_pct;  // [0, 100]
  std::optional<double> noise_pct;  // [0, 100]
};

/// Dataset-level metrics.
struct EvalSummary {
  std::size_t total_rows = 0;
  std::size_t rows_no_output = 0;
  std::size_t rows_invalid_json = 0;
  std::size_t rows_valid_json = 0;
  double mean_match_pct = 0.0;
  double mean_noise_pct = 0.0;
};

/// Score one completion against a parsed ground truth.
///
/// A missing or empty <answer> block is NoOutput; an unparseable answer is
/// InvalidJson. Otherwise, at leaf-path granularity:
///   match_pct = 100 * (truth leaves reproduced with deep-equal values)
///                   / (truth leaf count)
///   noise_pct = 100 * (answer leaves absent from truth or value-mismatched)
///                   / (answer leaf count), 0 when the answer has no leaves
/// Throws std::invalid_argument when truth has zero leaf paths.
RowOutcome row_outcome(std::string id, std::string_view completion, const JsonValue& truth);

/// Single-pass reduction over row outcomes. Means are over valid rows only
/// by default (0 when there are none); with mean_over_all they divide by the
/// total row count instead, non-valid rows contributing 0.
class EvalAccumulator {
 public:
  void add(const RowOutcome& row);
  EvalSummary finish(bool mean_over_all = false) const;

 private:
  EvalSummary counts_;
  double match_sum_ = 0.0;
  double noise_sum_ = 0.0;
};

template <typename Rows>
EvalSummary summarize(const Rows& rows, bool mean_over_all = false) {
  EvalAccumulator acc;
  for (const auto& row : rows) acc.add(row);
  return acc.finish(mean_over_all);
}

}  // namespace schemaforge
