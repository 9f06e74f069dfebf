#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace schemaforge {

/// Per-function rewards for one completion plus aggregation weights. Empty
/// weights mean uniform (arithmetic mean); otherwise weights must be
/// non-negative and sum to 1 within 1e-9.
struct RewardVector {
  std::vector<double> rewards;
  std::vector<double> weights;
};

/// Weighted sum of the per-function rewards.
/// Throws std::invalid_argument on empty rewards, length mismatch, negative
/// weights, or weights not summing to 1.
double combine_rewards(const RewardVector& v);

/// Rank-based advantage: A_i = |{j != i : R_i > R_j}| / (M - 1). Ties
/// contribute nothing (strict inequality). A singleton group yields [0];
/// empty input yields [].
std::vector<double> relative_advantages(const std::vector<double>& rewards);

/// One group of M completions: combined rewards and their advantages.
struct AdvantageGroup {
  std::vector<double> combined;
  std::vector<double> advantages;

  std::size_t size() const { return combined.size(); }
};

AdvantageGroup make_advantage_group(std::vector<double> combined);

struct RegularizerWeights {
  double entropy_coefficient = 0.0;
  double kl_coefficient = 0.0;
};

/// Inputs for the loss. `log_probs` is the concatenation of the groups'
/// per-completion log-probabilities, in group order; each entry must be
/// <= 0. `reference_log_probs` aligns with `log_probs` and is required when
/// kl_coefficient > 0.
struct GrpoLossInput {
  std::vector<AdvantageGroup> groups;
  std::vector<double> log_probs;
  RegularizerWeights regularizers;
  std::optional<std::vector<double>> reference_log_probs;

  /// When set, each group's contribution is divided by its size. Default
  /// off: per-group terms are summed unnormalized.
  bool mean_over_group_size = false;
};

/// Policy-gradient loss with optional regularizers, summed over groups:
///
///   sum_g [ -sum_i A_i log p_i
///           + entropy_coefficient * sum_i exp(log p_i) log p_i
///           + kl_coefficient      * sum_i exp(log p_i) (log p_i - ref_i) ]
///
/// With both coefficients 0 this is the pure term, whose partial derivative
/// with respect to log p_i is -A_i.
/// Throws std::invalid_argument when slice lengths disagree, a log
/// probability is positive, or the KL term is enabled without references.
double grpo_loss(const GrpoLossInput& input);

}  // namespace schemaforge
