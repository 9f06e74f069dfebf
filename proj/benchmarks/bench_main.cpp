#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "schemaforge/corpus_synth.hpp"
#include "schemaforge/eval_harness.hpp"
#include "schemaforge/extraction.hpp"
#include "schemaforge/grpo.hpp"
#include "schemaforge/json_value.hpp"
#include "schemaforge/reward_json.hpp"
#include "schemaforge/schema_ops.hpp"

namespace sf = schemaforge;

namespace {

sf::CorpusTriple triple_at_depth(int depth) {
  sf::SynthConfig cfg;
  cfg.seed = 42;
  cfg.max_depth = depth;
  cfg.children_per_node = {2, 3};
  return sf::emit_triple(cfg);
}

void BM_ParseDocument(benchmark::State& state) {
  const std::string text = sf::serialize(triple_at_depth(static_cast<int>(state.range(0))).filled);
  for (auto _ : state) {
    auto v = sf::parse_json(text);
    benchmark::DoNotOptimize(v);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDocument)->Arg(2)->Arg(4);

void BM_SerializeDocument(benchmark::State& state) {
  const sf::JsonValue doc = triple_at_depth(static_cast<int>(state.range(0))).filled;
  std::size_t bytes = 0;
  for (auto _ : state) {
    std::string s = sf::serialize(doc);
    bytes = s.size();
    benchmark::DoNotOptimize(s);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_SerializeDocument)->Arg(2)->Arg(4);

void BM_BlankSchema(benchmark::State& state) {
  const sf::JsonValue doc = triple_at_depth(4).filled;
  for (auto _ : state) {
    sf::JsonValue b = sf::blank_schema(doc);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_BlankSchema);

void BM_LeafPaths(benchmark::State& state) {
  const sf::JsonValue doc = triple_at_depth(4).filled;
  for (auto _ : state) {
    auto paths = sf::leaf_paths(doc);
    benchmark::DoNotOptimize(paths);
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations() * sf::leaf_count(doc)));
}
BENCHMARK(BM_LeafPaths);

void BM_MatchesFormat(benchmark::State& state) {
  const auto body_len = static_cast<std::size_t>(state.range(0));
  std::string prefixed = "<think>";
  prefixed += std::string(body_len, 'x');
  prefixed += "</think>\n<answer>{\"a\":1}</answer>";
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::matches_format(prefixed));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * prefixed.size()));
}
BENCHMARK(BM_MatchesFormat)->Range(1 << 10, 1 << 18);

void BM_ScoreJsonRow(benchmark::State& state) {
  const sf::CorpusTriple t = triple_at_depth(static_cast<int>(state.range(0)));
  const std::string completion = sf::canonical_completion(t);
  const std::string truth = sf::serialize(t.filled);
  for (auto _ : state) {
    sf::RewardBreakdown b = sf::score_json_row(t.id, completion, truth);
    benchmark::DoNotOptimize(b);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_ScoreJsonRow)->Arg(2)->Arg(4);

void BM_RowOutcome(benchmark::State& state) {
  const sf::CorpusTriple t = triple_at_depth(static_cast<int>(state.range(0)));
  const std::string completion = sf::canonical_completion(t);
  for (auto _ : state) {
    sf::RowOutcome o = sf::row_outcome(t.id, completion, t.filled);
    benchmark::DoNotOptimize(o);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_RowOutcome)->Arg(2)->Arg(4);

void BM_RelativeAdvantages(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<double> rewards(m);
  std::uint64_t x = 0x9e3779b97f4a7c15ULL;
  for (double& r : rewards) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    r = static_cast<double>(x >> 11) * 0x1.0p-53;
  }
  for (auto _ : state) {
    auto adv = sf::relative_advantages(rewards);
    benchmark::DoNotOptimize(adv);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m));
}
BENCHMARK(BM_RelativeAdvantages)->Range(8, 1024);

void BM_EmitTriple(benchmark::State& state) {
  sf::SynthConfig cfg;
  cfg.max_depth = static_cast<int>(state.range(0));
  cfg.children_per_node = {2, 3};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    sf::CorpusTriple t = sf::emit_triple(cfg);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_EmitTriple)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
