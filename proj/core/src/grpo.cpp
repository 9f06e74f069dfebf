#include "schemaforge/grpo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schemaforge {

double combine_rewards(const RewardVector& v) {
  if (v.rewards.empty()) throw std::invalid_argument("combine_rewards: empty reward vector");
  std::size_t k = v.rewards.size();

  if (v.weights.empty()) {
    double sum = 0.0;
    for (double r : v.rewards) sum += r;
    return sum / static_cast<double>(k);
  }

  if (v.weights.size() != k) {
    throw std::invalid_argument("combine_rewards: weights length differs from rewards length");
  }
  double wsum = 0.0;
  for (double w : v.weights) {
    if (w < 0.0) throw std::invalid_argument("combine_rewards: negative weight");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9) {
    throw std::invalid_argument("combine_rewards: weights must sum to 1");
  }

  double out = 0.0;
  for (std::size_t i = 0; i < k; ++i) out += v.weights[i] * v.rewards[i];
  return out;
}

std::vector<double> relative_advantages(const std::vector<double>& rewards) {
  std::size_t m = rewards.size();
  if (m == 0) return {};
  if (m == 1) return {0.0};

  // |{j : R_j < R_i}| is R_i's lower-bound rank in the sorted list, which
  // also counts j = i correctly (a value is never strictly below itself).
  std::vector<double> sorted = rewards;
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> out;
  out.reserve(m);
  for (double r : rewards) {
    auto below = std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin();
    out.push_back(static_cast<double>(below) / static_cast<double>(m - 1));
  }
  return out;
}

AdvantageGroup make_advantage_group(std::vector<double> combined) {
  AdvantageGroup g;
  g.advantages = relative_advantages(combined);
  g.combined = std::move(combined);
  return g;
}

double grpo_loss(const GrpoLossInput& input) {
  std::size_t total = 0;
  for (const auto& g : input.groups) {
    if (g.advantages.size() != g.combined.size()) {
      throw std::invalid_argument("grpo_loss: group advantages length differs from rewards");
    }
    total += g.size();
  }
  if (total != input.log_probs.size()) {
    throw std::invalid_argument("grpo_loss: log_probs length differs from total group size");
  }
  for (double lp : input.log_probs) {
    if (lp > 0.0) throw std::invalid_argument("grpo_loss: log probability above 0");
  }
  bool kl_enabled = input.regularizers.kl_coefficient > 0.0;
  if (kl_enabled) {
    if (!input.reference_log_probs.has_value() ||
        input.reference_log_probs->size() != input.log_probs.size()) {
      throw std::invalid_argument("grpo_loss: KL term enabled without aligned reference log probs");
    }
  }

  double loss = 0.0;
  std::size_t offset = 0;
  for (const auto& g : input.groups) {
    double term = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      double lp = input.log_probs[offset + i];
      term -= g.advantages[i] * lp;
      if (input.regularizers.entropy_coefficient > 0.0) {
        term += input.regularizers.entropy_coefficient * std::exp(lp) * lp;
      }
      if (kl_enabled) {
        double ref = (*input.reference_log_probs)[offset + i];
        term += input.regularizers.kl_coefficient * std::exp(lp) * (lp - ref);
      }
    }
    if (input.mean_over_group_size && g.size() > 0) {
      term /= static_cast<double>(g.size());
    }
    loss += term;
    offset += g.size();
  }
  return loss;
}

}  // namespace schemaforge
