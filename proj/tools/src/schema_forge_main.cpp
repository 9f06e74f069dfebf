#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "jsonl_pipeline.hpp"
#include "schemaforge/corpus_synth.hpp"
#include "schemaforge/eval_harness.hpp"
#include "schemaforge/extraction.hpp"
#include "schemaforge/grpo.hpp"
#include "schemaforge/reward_json.hpp"
#include "schemaforge/rng.hpp"
#include "schemaforge/version.hpp"

namespace sf = schemaforge;
using sf::cli::chunked_ordered_map;
using sf::cli::JsonlReader;
using sf::cli::ManagedOutput;

namespace {

struct DataError {
  std::size_t line_no = 0;  // 1-based
  std::string message;
};

int fail_data(const std::string& path, const DataError& e) {
  std::cerr << path << ":" << e.line_no << ": " << e.message << "\n";
  return 2;
}

void note_rows(const char* command, std::size_t rows) {
  std::cerr << command << ": " << rows << " rows\n";
}

const sf::JsonValue* get_field(const sf::JsonValue& row, const char* key) {
  if (!row.is_object()) return nullptr;
  return row.as_object().find(key);
}

std::optional<std::string> string_field(const sf::JsonValue& row, const char* key,
                                        std::string& err) {
  const sf::JsonValue* v = get_field(row, key);
  if (v == nullptr) {
    err = std::string("missing field '") + key + "'";
    return std::nullopt;
  }
  if (!v->is_string()) {
    err = std::string("field '") + key + "' is not a string";
    return std::nullopt;
  }
  return v->as_string();
}

std::optional<sf::JsonValue> parse_row(const std::string& line, std::string& err) {
  sf::ParseError perr;
  std::optional<sf::JsonValue> parsed = sf::parse_json(line, &perr);
  if (!parsed.has_value()) {
    err = "line is not valid JSON (byte " + std::to_string(perr.offset) + "): " + perr.reason;
    return std::nullopt;
  }
  return parsed;
}

sf::JsonValue fixed_decimal(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return sf::JsonValue(*sf::JsonNumber::from_lexeme(buf));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

struct SeedOpt {
  std::uint64_t value = 0;
  CLI::Option* option = nullptr;

  void warn_if_defaulted(const char* command) const {
    if (option != nullptr && option->count() == 0) {
      std::cerr << command << ": warning: --seed not given, defaulting to 0\n";
    }
  }
};

// ---------------------------------------------------------------- gen-corpus

struct GenCorpusOpts {
  SeedOpt seed;
  std::size_t count = 100;
  std::string out;
  int max_depth = 3;
  int children_min = 1, children_max = 3;
  int components_min = 1, components_max = 3;
  std::string layout = "cycle";
  std::string table_style = "cycle";
  std::string checkbox_style = "cycle";
  double filler_density = 0.3;
  std::string domain = "general manufacturing";
  int jobs = default_jobs();
};

int run_gen_corpus(const GenCorpusOpts& o) {
  o.seed.warn_if_defaulted("gen-corpus");

  sf::SynthConfig base;
  base.domain_label = o.domain;
  base.max_depth = o.max_depth;
  base.children_per_node = {o.children_min, o.children_max};
  base.components_per_node = {o.components_min, o.components_max};
  base.filler_density = o.filler_density;

  std::optional<sf::Layout> layout = sf::layout_from_name(o.layout);
  std::optional<sf::TableStyle> table = sf::table_style_from_name(o.table_style);
  std::optional<sf::CheckboxStyle> checkbox = sf::checkbox_style_from_name(o.checkbox_style);
  if (o.layout != "cycle" && !layout.has_value()) throw CLI::ValidationError("--layout", "unknown layout");
  if (o.table_style != "cycle" && !table.has_value()) throw CLI::ValidationError("--table-style", "unknown table style");
  if (o.checkbox_style != "cycle" && !checkbox.has_value()) throw CLI::ValidationError("--checkbox-style", "unknown checkbox style");
  sf::validate_config(base);  // throws std::invalid_argument on bad ranges

  sf::JsonValue::Object snapshot;
  snapshot.insert("count", sf::JsonValue(static_cast<std::int64_t>(o.count)));
  snapshot.insert("out", sf::JsonValue(o.out));
  snapshot.insert("max_depth", sf::JsonValue(o.max_depth));
  snapshot.insert("children_min", sf::JsonValue(o.children_min));
  snapshot.insert("children_max", sf::JsonValue(o.children_max));
  snapshot.insert("components_min", sf::JsonValue(o.components_min));
  snapshot.insert("components_max", sf::JsonValue(o.components_max));
  snapshot.insert("layout", sf::JsonValue(o.layout));
  snapshot.insert("table_style", sf::JsonValue(o.table_style));
  snapshot.insert("checkbox_style", sf::JsonValue(o.checkbox_style));
  snapshot.insert("filler_density", sf::JsonValue(o.filler_density));
  snapshot.insert("domain", sf::JsonValue(o.domain));

  ManagedOutput out(o.out, "gen-corpus", sf::JsonValue(std::move(snapshot)), o.seed.value);

  std::size_t produced = 0;
  auto source = [&]() -> std::optional<std::string> {
    if (produced >= o.count) return std::nullopt;
    ++produced;
    return std::string();
  };
  auto make_row = [&](std::size_t row, const std::string&) -> std::string {
    sf::SynthConfig cfg = base;
    cfg.seed = sf::row_seed(o.seed.value, row);
    cfg.layout = layout.value_or(static_cast<sf::Layout>(row % 3));
    cfg.table_style = table.value_or(static_cast<sf::TableStyle>((row / 3) % 3));
    cfg.checkbox_style = checkbox.value_or(static_cast<sf::CheckboxStyle>((row / 9) % 3));
    sf::CorpusTriple t = sf::emit_triple(cfg);

    sf::JsonValue::Object rec;
    rec.insert("id", sf::JsonValue(t.id));
    rec.insert("text", sf::JsonValue(t.text));
    rec.insert("blank", t.blank);
    rec.insert("filled", t.filled);
    return sf::serialize(sf::JsonValue(std::move(rec)));
  };
  chunked_ordered_map<std::string>(source, o.jobs, make_row,
                                   [&](std::size_t, std::string& line) {
                                     out.write_line(line);
                                     return true;
                                   });
  out.finish("-");
  note_rows("gen-corpus", o.count);
  return 0;
}

// ------------------------------------------------------- score-json / format

struct ScoreOpts {
  SeedOpt seed;
  std::string in;
  std::string out;
  std::string log_path;
  double log_prob = 0.0;
  int jobs = default_jobs();
};

sf::JsonValue score_snapshot(const ScoreOpts& o) {
  sf::JsonValue::Object snapshot;
  snapshot.insert("in", sf::JsonValue(o.in));
  snapshot.insert("out", sf::JsonValue(o.out));
  snapshot.insert("log_path", sf::JsonValue(o.log_path));
  snapshot.insert("log_prob", sf::JsonValue(o.log_prob));
  return sf::JsonValue(std::move(snapshot));
}

struct ScoreRowResult {
  std::string out_line;
  std::string log_line;
  std::string error;
};

int run_scoring(const char* command, const ScoreOpts& o,
                const std::function<ScoreRowResult(std::size_t, const std::string&)>& fn) {
  JsonlReader reader(o.in);
  ManagedOutput out(o.out, command, score_snapshot(o), o.seed.value);
  std::optional<ManagedOutput> log;
  if (!o.log_path.empty()) log.emplace(o.log_path, command, score_snapshot(o), o.seed.value);

  std::optional<DataError> first_error;
  chunked_ordered_map<ScoreRowResult>(
      [&] { return reader.next(); }, o.jobs, fn,
      [&](std::size_t row, ScoreRowResult& r) {
        if (!r.error.empty()) {
          first_error = DataError{row + 1, r.error};
          return false;
        }
        out.write_line(r.out_line);
        if (log.has_value() && !r.log_line.empty()) log->write_line(r.log_line);
        return true;
      });
  if (first_error.has_value()) return fail_data(o.in, *first_error);

  out.finish(reader.digest_hex());
  if (log.has_value()) log->finish(reader.digest_hex());
  note_rows(command, reader.rows());
  return 0;
}

int run_score_json(const ScoreOpts& o) {
  o.seed.warn_if_defaulted("score-json");
  return run_scoring("score-json", o, [&](std::size_t row, const std::string& line) {
    ScoreRowResult r;
    std::string err;
    std::optional<sf::JsonValue> parsed = parse_row(line, err);
    if (!parsed.has_value()) {
      r.error = err;
      return r;
    }
    auto id = string_field(*parsed, "id", err);
    auto completion = id.has_value() ? string_field(*parsed, "completion", err) : std::nullopt;
    auto truth = completion.has_value() ? string_field(*parsed, "ground_truth", err) : std::nullopt;
    if (!truth.has_value()) {
      r.error = err;
      return r;
    }

    sf::RewardBreakdown b = sf::score_json_row(*id, *completion, *truth);
    sf::JsonValue::Object rec;
    rec.insert("id", sf::JsonValue(b.id));
    rec.insert("reward", fixed_decimal(b.reward, "%.1f"));
    if (b.key_match_score.has_value()) rec.insert("key_match_score", sf::JsonValue(*b.key_match_score));
    if (b.length_ratio.has_value()) rec.insert("length_ratio", sf::JsonValue(*b.length_ratio));
    if (b.failure.has_value()) {
      rec.insert("failure", sf::JsonValue(std::string(sf::reward_failure_name(*b.failure))));
    }
    r.out_line = sf::serialize(sf::JsonValue(std::move(rec)));

    if (b.reward >= sf::kJsonLogThreshold && sf::should_log_row(o.seed.value, row, o.log_prob)) {
      sf::JsonValue::Object entry;
      entry.insert("id", sf::JsonValue(b.id));
      entry.insert("prefixed_text", sf::JsonValue(sf::prefix_think(*completion)));
      entry.insert("reward", fixed_decimal(b.reward, "%.1f"));
      r.log_line = sf::serialize(sf::JsonValue(std::move(entry)));
    }
    return r;
  });
}

int run_score_format(const ScoreOpts& o) {
  o.seed.warn_if_defaulted("score-format");
  return run_scoring("score-format", o, [&](std::size_t row, const std::string& line) {
    ScoreRowResult r;
    std::string err;
    std::optional<sf::JsonValue> parsed = parse_row(line, err);
    if (!parsed.has_value()) {
      r.error = err;
      return r;
    }
    auto id = string_field(*parsed, "id", err);
    auto completion = id.has_value() ? string_field(*parsed, "completion", err) : std::nullopt;
    if (!completion.has_value()) {
      r.error = err;
      return r;
    }

    std::string prefixed = sf::prefix_think(*completion);
    // The sampling decision is made for every row, before the check.
    bool sampled = sf::should_log_row(o.seed.value, row, o.log_prob);
    int reward = sf::matches_format(prefixed) ? 1 : 0;

    sf::JsonValue::Object rec;
    rec.insert("id", sf::JsonValue(*id));
    rec.insert("format_reward", sf::JsonValue(reward));
    r.out_line = sf::serialize(sf::JsonValue(std::move(rec)));

    if (sampled) {
      sf::JsonValue::Object entry;
      entry.insert("id", sf::JsonValue(*id));
      entry.insert("prefixed_text", sf::JsonValue(std::move(prefixed)));
      entry.insert("format_reward", sf::JsonValue(reward));
      // logical timestamp: the row ordinal, so outputs stay reproducible
      entry.insert("timestamp", sf::JsonValue(static_cast<std::int64_t>(row)));
      r.log_line = sf::serialize(sf::JsonValue(std::move(entry)));
    }
    return r;
  });
}

// ---------------------------------------------------------------- advantage

struct AdvantageOpts {
  std::string in;
  std::string out;
  std::vector<double> weights;
};

int run_advantage(const AdvantageOpts& o) {
  if (!o.weights.empty()) {
    double sum = 0.0;
    for (double w : o.weights) {
      if (w < 0.0) throw CLI::ValidationError("--weights", "weights must be non-negative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw CLI::ValidationError("--weights", "weights must sum to 1");
    }
  }

  JsonlReader reader(o.in);
  sf::JsonValue::Object snapshot;
  snapshot.insert("in", sf::JsonValue(o.in));
  snapshot.insert("out", sf::JsonValue(o.out));
  sf::JsonValue::Array weights;
  for (double w : o.weights) weights.push_back(sf::JsonValue(w));
  snapshot.insert("weights", sf::JsonValue(std::move(weights)));
  ManagedOutput out(o.out, "advantage", sf::JsonValue(std::move(snapshot)), 0);

  struct PendingRow {
    sf::JsonValue group_id;
    sf::JsonValue id;
    std::vector<double> rewards;
    std::size_t line_no;
  };
  std::vector<PendingRow> group;
  std::string group_key;
  std::unordered_set<std::string> seen;
  std::optional<DataError> error;

  auto flush_group = [&]() {
    if (group.empty()) return;
    std::vector<double> combined;
    combined.reserve(group.size());
    for (const PendingRow& row : group) {
      combined.push_back(sf::combine_rewards({row.rewards, o.weights}));
    }
    std::vector<double> advantages = sf::relative_advantages(combined);
    for (std::size_t i = 0; i < group.size(); ++i) {
      sf::JsonValue::Object rec;
      rec.insert("group_id", group[i].group_id);
      rec.insert("id", group[i].id);
      rec.insert("combined", sf::JsonValue(combined[i]));
      rec.insert("advantage", sf::JsonValue(advantages[i]));
      out.write_line(sf::serialize(sf::JsonValue(std::move(rec))));
    }
    group.clear();
  };

  std::size_t line_no = 0;
  while (true) {
    std::optional<std::string> line = reader.next();
    if (!line.has_value()) break;
    ++line_no;

    std::string err;
    std::optional<sf::JsonValue> parsed = parse_row(*line, err);
    if (!parsed.has_value()) {
      error = DataError{line_no, err};
      break;
    }
    const sf::JsonValue* gid = get_field(*parsed, "group_id");
    const sf::JsonValue* id = get_field(*parsed, "id");
    const sf::JsonValue* rewards = get_field(*parsed, "rewards");
    if (gid == nullptr || id == nullptr || rewards == nullptr || !rewards->is_array()) {
      error = DataError{line_no, "row needs 'group_id', 'id', and a 'rewards' array"};
      break;
    }
    PendingRow row;
    row.group_id = *gid;
    row.id = *id;
    row.line_no = line_no;
    bool bad_reward = false;
    for (const sf::JsonValue& r : rewards->as_array()) {
      if (!r.is_number()) {
        bad_reward = true;
        break;
      }
      row.rewards.push_back(r.as_number().to_double());
    }
    if (bad_reward || row.rewards.empty()) {
      error = DataError{line_no, "'rewards' must be a non-empty array of numbers"};
      break;
    }
    if (!o.weights.empty() && o.weights.size() != row.rewards.size()) {
      error = DataError{line_no, "'rewards' length differs from --weights length"};
      break;
    }

    std::string key = sf::serialize(*gid);
    if (key != group_key) {
      flush_group();
      if (!seen.insert(key).second) {
        error = DataError{line_no, "group " + key + " reopened; groups must be contiguous"};
        break;
      }
      group_key = key;
    }
    group.push_back(std::move(row));
  }
  if (error.has_value()) return fail_data(o.in, *error);

  flush_group();
  out.finish(reader.digest_hex());
  note_rows("advantage", reader.rows());
  return 0;
}

// --------------------------------------------------------------------- eval

struct EvalOpts {
  std::string in;
  std::string out;
  std::string per_row;
  bool mean_over_all = false;
  int jobs = default_jobs();
};

int run_eval(const EvalOpts& o) {
  JsonlReader reader(o.in);
  sf::JsonValue::Object snapshot;
  snapshot.insert("in", sf::JsonValue(o.in));
  snapshot.insert("out", sf::JsonValue(o.out));
  snapshot.insert("per_row", sf::JsonValue(o.per_row));
  snapshot.insert("mean_over_all", sf::JsonValue(o.mean_over_all));
  sf::JsonValue snapshot_value(std::move(snapshot));

  ManagedOutput out(o.out, "eval", snapshot_value, 0);
  std::optional<ManagedOutput> csv;
  if (!o.per_row.empty()) {
    csv.emplace(o.per_row, "eval", snapshot_value, 0);
    csv->write_line("id,status,match_pct,noise_pct");
  }

  struct EvalRowResult {
    sf::RowOutcome outcome;
    std::string error;
  };

  sf::EvalAccumulator acc;
  std::optional<DataError> first_error;
  chunked_ordered_map<EvalRowResult>(
      [&] { return reader.next(); }, o.jobs,
      [&](std::size_t, const std::string& line) {
        EvalRowResult r;
        std::string err;
        std::optional<sf::JsonValue> parsed = parse_row(line, err);
        if (!parsed.has_value()) {
          r.error = err;
          return r;
        }
        auto id = string_field(*parsed, "id", err);
        auto completion = id.has_value() ? string_field(*parsed, "completion", err) : std::nullopt;
        auto truth_text = completion.has_value() ? string_field(*parsed, "ground_truth", err) : std::nullopt;
        if (!truth_text.has_value()) {
          r.error = err;
          return r;
        }
        sf::ParseError perr;
        std::optional<sf::JsonValue> truth = sf::parse_json(*truth_text, &perr);
        if (!truth.has_value()) {
          r.error = "ground_truth is not valid JSON (byte " + std::to_string(perr.offset) +
                    "): " + perr.reason;
          return r;
        }
        try {
          r.outcome = sf::row_outcome(*id, *completion, *truth);
        } catch (const std::invalid_argument& e) {
          r.error = e.what();
        }
        return r;
      },
      [&](std::size_t row, EvalRowResult& r) {
        if (!r.error.empty()) {
          first_error = DataError{row + 1, r.error};
          return false;
        }
        acc.add(r.outcome);
        if (csv.has_value()) {
          std::string line = csv_field(r.outcome.id);
          line += ",";
          line += sf::row_status_name(r.outcome.status);
          char buf[64];
          if (r.outcome.status == sf::RowStatus::Valid) {
            std::snprintf(buf, sizeof(buf), ",%.2f,%.2f", *r.outcome.match_pct,
                          *r.outcome.noise_pct);
            line += buf;
          } else {
            line += ",,";
          }
          csv->write_line(line);
        }
        return true;
      });
  if (first_error.has_value()) return fail_data(o.in, *first_error);

  sf::EvalSummary summary = acc.finish(o.mean_over_all);
  sf::JsonValue::Object rec;
  rec.insert("total_rows", sf::JsonValue(static_cast<std::int64_t>(summary.total_rows)));
  rec.insert("rows_no_output", sf::JsonValue(static_cast<std::int64_t>(summary.rows_no_output)));
  rec.insert("rows_invalid_json",
             sf::JsonValue(static_cast<std::int64_t>(summary.rows_invalid_json)));
  rec.insert("rows_valid_json", sf::JsonValue(static_cast<std::int64_t>(summary.rows_valid_json)));
  rec.insert("mean_match_pct", fixed_decimal(summary.mean_match_pct, "%.2f"));
  rec.insert("mean_noise_pct", fixed_decimal(summary.mean_noise_pct, "%.2f"));
  out.write_line(sf::serialize(sf::JsonValue(std::move(rec)), sf::JsonStyle::Pretty));

  out.finish(reader.digest_hex());
  if (csv.has_value()) csv->finish(reader.digest_hex());
  note_rows("eval", reader.rows());
  return 0;
}

void add_env(CLI::Option* opt, const char* name) {
  opt->envname(std::string("SCHEMA_FORGE_") + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"batch toolkit for schema-adherence rewards, corpus synthesis, and evaluation"};
  app.set_version_flag("--version", std::string(sf::kToolVersion));
  app.require_subcommand(1);

  int rc = 0;

  GenCorpusOpts gen;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "generate benchmark triples as JSONL");
  gen.seed.option = gen_cmd->add_option("--seed", gen.seed.value, "master seed");
  add_env(gen.seed.option, "SEED");
  add_env(gen_cmd->add_option("--count", gen.count, "number of triples"), "COUNT");
  add_env(gen_cmd->add_option("--out", gen.out, "output JSONL path")->required(), "OUT");
  add_env(gen_cmd->add_option("--max-depth", gen.max_depth, "tree depth in [1,6]"), "MAX_DEPTH");
  add_env(gen_cmd->add_option("--children-min", gen.children_min, "min children per node"), "CHILDREN_MIN");
  add_env(gen_cmd->add_option("--children-max", gen.children_max, "max children per node"), "CHILDREN_MAX");
  add_env(gen_cmd->add_option("--components-min", gen.components_min, "min components per node"), "COMPONENTS_MIN");
  add_env(gen_cmd->add_option("--components-max", gen.components_max, "max components per node"), "COMPONENTS_MAX");
  add_env(gen_cmd->add_option("--layout", gen.layout, "sequential|parallel|combined|cycle"), "LAYOUT");
  add_env(gen_cmd->add_option("--table-style", gen.table_style, "ascii|xml_like|pdf_sim|cycle"), "TABLE_STYLE");
  add_env(gen_cmd->add_option("--checkbox-style", gen.checkbox_style, "brackets|yes_no|na_variants|cycle"), "CHECKBOX_STYLE");
  add_env(gen_cmd->add_option("--filler-density", gen.filler_density, "filler probability in [0,1]"), "FILLER_DENSITY");
  add_env(gen_cmd->add_option("--domain", gen.domain, "domain label woven into the text"), "DOMAIN");
  add_env(gen_cmd->add_option("--jobs", gen.jobs, "worker threads"), "JOBS");
  gen_cmd->callback([&] { rc = run_gen_corpus(gen); });

  ScoreOpts sj;
  sj.log_prob = sf::kDefaultJsonLogProbability;
  auto* sj_cmd = app.add_subcommand("score-json", "JSON-based reward per row");
  sj.seed.option = sj_cmd->add_option("--seed", sj.seed.value, "log sampling seed");
  add_env(sj.seed.option, "SEED");
  add_env(sj_cmd->add_option("--in", sj.in, "input JSONL {id, completion, ground_truth}")->required(), "IN");
  add_env(sj_cmd->add_option("--out", sj.out, "output JSONL path")->required(), "OUT");
  add_env(sj_cmd->add_option("--log-prob", sj.log_prob, "high-reward log sampling probability"), "LOG_PROB");
  add_env(sj_cmd->add_option("--log-path", sj.log_path, "inspection log JSONL path"), "LOG_PATH");
  add_env(sj_cmd->add_option("--jobs", sj.jobs, "worker threads"), "JOBS");
  sj_cmd->callback([&] { rc = run_score_json(sj); });

  ScoreOpts sfm;
  sfm.log_prob = sf::kDefaultFormatLogProbability;
  auto* sfm_cmd = app.add_subcommand("score-format", "format-verification reward per row");
  sfm.seed.option = sfm_cmd->add_option("--seed", sfm.seed.value, "log sampling seed");
  add_env(sfm.seed.option, "SEED");
  add_env(sfm_cmd->add_option("--in", sfm.in, "input JSONL {id, completion}")->required(), "IN");
  add_env(sfm_cmd->add_option("--out", sfm.out, "output JSONL path")->required(), "OUT");
  add_env(sfm_cmd->add_option("--log-prob", sfm.log_prob, "inspection log sampling probability"), "LOG_PROB");
  add_env(sfm_cmd->add_option("--log-path", sfm.log_path, "inspection log JSONL path"), "LOG_PATH");
  add_env(sfm_cmd->add_option("--jobs", sfm.jobs, "worker threads"), "JOBS");
  sfm_cmd->callback([&] { rc = run_score_format(sfm); });

  AdvantageOpts adv;
  auto* adv_cmd = app.add_subcommand("advantage", "combined reward and rank advantage per group");
  add_env(adv_cmd->add_option("--in", adv.in, "input JSONL {group_id, id, rewards}")->required(), "IN");
  add_env(adv_cmd->add_option("--out", adv.out, "output JSONL path")->required(), "OUT");
  add_env(adv_cmd->add_option("--weights", adv.weights, "aggregation weights (default uniform)")->delimiter(','), "WEIGHTS");
  adv_cmd->callback([&] { rc = run_advantage(adv); });

  EvalOpts ev;
  auto* ev_cmd = app.add_subcommand("eval", "extraction benchmark metrics");
  add_env(ev_cmd->add_option("--in", ev.in, "input JSONL {id, completion, ground_truth}")->required(), "IN");
  add_env(ev_cmd->add_option("--out", ev.out, "summary JSON path")->required(), "OUT");
  add_env(ev_cmd->add_option("--per-row", ev.per_row, "optional per-row CSV path"), "PER_ROW");
  add_env(ev_cmd->add_flag("--mean-over-all", ev.mean_over_all, "average metrics over all rows, not just valid ones"), "MEAN_OVER_ALL");
  add_env(ev_cmd->add_option("--jobs", ev.jobs, "worker threads"), "JOBS");
  ev_cmd->callback([&] { rc = run_eval(ev); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
