#include "doctest.h"

#include <string>
#include <vector>

#include "schemaforge/json_value.hpp"
#include "test_util.hpp"

using namespace schemaforge;
using sftest::read_file;
using sftest::read_lines;
using sftest::run_cli;
using sftest::TempDir;
using sftest::write_file;

namespace {

JsonValue jv(const std::string& text) {
  auto v = parse_json(text);
  REQUIRE_MESSAGE(v.has_value(), "bad JSON: " << text);
  return *v;
}

const std::string& field(const JsonValue& row, const char* name) {
  const JsonValue* v = row.as_object().find(name);
  REQUIRE_MESSAGE(v != nullptr, "missing field " << name);
  return v->as_string();
}

std::string scoring_rows() {
  // row 0 scores 1.0, row 1 misses the tags, row 2 is half right
  return
      R"({"id":"r0","completion":"t</think>\n<answer>{\"a\":1}</answer>","ground_truth":"{\"a\":1}"})"
      "\n"
      R"({"id":"r1","completion":"no tags","ground_truth":"{\"a\":1}"})"
      "\n"
      R"({"id":"r2","completion":"t</think>\n<answer>{\"a\":1,\"b\":2}</answer>","ground_truth":"{\"a\":1,\"c\":3}"})"
      "\n";
}

}  // namespace

TEST_CASE("usage errors exit 1 and data errors exit 2") {
  CHECK(run_cli({}).exit_code == 1);
  CHECK(run_cli({"frobnicate"}).exit_code == 1);
  CHECK(run_cli({"gen-corpus"}).exit_code == 1);  // --out is required
  {
    TempDir dir;
    const auto r = run_cli({"gen-corpus", "--seed", "1", "--out", dir.file("c.jsonl"),
                            "--max-depth", "9"});
    CHECK(r.exit_code == 1);
  }
  {
    TempDir dir;
    write_file(dir.file("rows.jsonl"), "{\"id\":\"a\"}\nnot json\n");
    const auto r = run_cli({"score-format", "--seed", "1", "--in", dir.file("rows.jsonl"),
                            "--out", dir.file("out.jsonl")});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("rows.jsonl:1:") != std::string::npos);  // id present, completion missing
  }
  {
    TempDir dir;
    write_file(dir.file("rows.jsonl"),
               R"({"id":"a","completion":"x"})" "\nnot json\n");
    const auto r = run_cli({"score-format", "--seed", "1", "--in", dir.file("rows.jsonl"),
                            "--out", dir.file("out.jsonl")});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("rows.jsonl:2:") != std::string::npos);
    CHECK(r.err.find("not valid JSON") != std::string::npos);
  }
}

TEST_CASE("version flag prints the tool version") {
  const auto r = run_cli({"--version"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("gen-corpus writes triples with a completion manifest") {
  TempDir dir;
  const std::string out = dir.file("corpus.jsonl");
  const auto r = run_cli({"gen-corpus", "--seed", "7", "--count", "5", "--out", out,
                          "--max-depth", "2"});
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);

  const auto lines = read_lines(out);
  REQUIRE(lines.size() == 5);
  for (const auto& line : lines) {
    const JsonValue row = jv(line);
    CHECK(row.as_object().contains("id"));
    CHECK(row.as_object().contains("text"));
    CHECK(row.as_object().contains("blank"));
    CHECK(row.as_object().contains("filled"));
    CHECK(field(row, "text").starts_with("<text>"));
  }

  const JsonValue manifest = jv(read_file(out + ".manifest.json"));
  CHECK(field(manifest, "status") == "complete");
  CHECK(field(manifest, "command") == "gen-corpus");
  CHECK(field(manifest, "output_digest") == sftest::fnv1a64_hex(read_file(out)));
  CHECK(manifest.as_object().contains("config_snapshot"));
  CHECK(manifest.as_object().contains("tool_version"));
  CHECK(manifest.as_object().find("seed")->as_number().lexeme() == "7");
  // the snapshot never records worker count, so reruns with other --jobs match
  CHECK(serialize(*manifest.as_object().find("config_snapshot")).find("jobs") ==
        std::string::npos);
}

TEST_CASE("gen-corpus is deterministic and jobs-invariant") {
  TempDir dir;
  const std::string first = dir.file("a.jsonl");
  const std::string again = dir.file("a.jsonl");  // same path, rerun
  REQUIRE(run_cli({"gen-corpus", "--seed", "3", "--count", "40", "--out", first,
                   "--jobs", "2"}).exit_code == 0);
  const std::string payload = read_file(first);
  const std::string manifest = read_file(first + ".manifest.json");
  REQUIRE(run_cli({"gen-corpus", "--seed", "3", "--count", "40", "--out", again,
                   "--jobs", "2"}).exit_code == 0);
  CHECK(read_file(again) == payload);
  CHECK(read_file(again + ".manifest.json") == manifest);

  const std::string serial = dir.file("serial.jsonl");
  REQUIRE(run_cli({"gen-corpus", "--seed", "3", "--count", "40", "--out", serial,
                   "--jobs", "1"}).exit_code == 0);
  CHECK(read_file(serial) == payload);

  const std::string different = dir.file("different.jsonl");
  REQUIRE(run_cli({"gen-corpus", "--seed", "4", "--count", "40", "--out", different})
              .exit_code == 0);
  CHECK(read_file(different) != payload);
}

TEST_CASE("a defaulted seed warns on stderr") {
  TempDir dir;
  const auto r = run_cli({"gen-corpus", "--count", "1", "--out", dir.file("c.jsonl")});
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("seed") != std::string::npos);
  const auto quiet = run_cli({"gen-corpus", "--seed", "0", "--count", "1",
                              "--out", dir.file("c2.jsonl")});
  CHECK(quiet.err.find("seed") == std::string::npos);
}

TEST_CASE("environment variables stand in for flags") {
  TempDir dir;
  const std::string via_flag = dir.file("flag.jsonl");
  const std::string via_env = dir.file("env.jsonl");
  REQUIRE(run_cli({"gen-corpus", "--seed", "12", "--count", "3", "--out", via_flag})
              .exit_code == 0);
  REQUIRE(run_cli({"gen-corpus", "--out", via_env},
                  {"SCHEMA_FORGE_SEED=12", "SCHEMA_FORGE_COUNT=3"})
              .exit_code == 0);
  CHECK(read_file(via_env) == read_file(via_flag));
}

TEST_CASE("score-json emits breakdowns and a sampled high-reward log") {
  TempDir dir;
  write_file(dir.file("rows.jsonl"), scoring_rows());
  const auto r = run_cli({"score-json", "--seed", "9", "--in", dir.file("rows.jsonl"),
                          "--out", dir.file("scores.jsonl"),
                          "--log-path", dir.file("log.jsonl"), "--log-prob", "1.0"});
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);

  const auto lines = read_lines(dir.file("scores.jsonl"));
  REQUIRE(lines.size() == 3);

  const JsonValue r0 = jv(lines[0]);
  CHECK(field(r0, "id") == "r0");
  CHECK(r0.as_object().find("reward")->as_number().lexeme() == "1.0");
  CHECK(r0.as_object().contains("key_match_score"));
  CHECK(r0.as_object().contains("length_ratio"));
  CHECK_FALSE(r0.as_object().contains("failure"));

  const JsonValue r1 = jv(lines[1]);
  CHECK(r1.as_object().find("reward")->as_number().lexeme() == "0.0");
  CHECK(field(r1, "failure") == "no_answer");
  CHECK_FALSE(r1.as_object().contains("key_match_score"));

  const JsonValue r2 = jv(lines[2]);
  CHECK(r2.as_object().find("reward")->as_number().lexeme() == "0.7");

  // log probability one keeps every row at or above the threshold: rows 0 and 2
  const auto log_lines = read_lines(dir.file("log.jsonl"));
  REQUIRE(log_lines.size() == 2);
  CHECK(field(jv(log_lines[0]), "id") == "r0");
  CHECK(field(jv(log_lines[0]), "prefixed_text").starts_with("<think>"));
  CHECK(field(jv(log_lines[1]), "id") == "r2");

  // both outputs carry manifests
  CHECK(field(jv(read_file(dir.file("scores.jsonl") + ".manifest.json")), "status") ==
        "complete");
  CHECK(field(jv(read_file(dir.file("log.jsonl") + ".manifest.json")), "status") ==
        "complete");
}

TEST_CASE("score-format logs every sampled row with its ordinal timestamp") {
  TempDir dir;
  write_file(dir.file("rows.jsonl"),
             R"({"id":"f0","completion":"t</think>\n<answer>x</answer>"})" "\n"
             R"({"id":"f1","completion":"broken"})" "\n");
  const auto r = run_cli({"score-format", "--seed", "2", "--in", dir.file("rows.jsonl"),
                          "--out", dir.file("fmt.jsonl"),
                          "--log-path", dir.file("fmtlog.jsonl"), "--log-prob", "1.0"});
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);

  const auto lines = read_lines(dir.file("fmt.jsonl"));
  REQUIRE(lines.size() == 2);
  CHECK(jv(lines[0]).as_object().find("format_reward")->as_number().lexeme() == "1");
  CHECK(jv(lines[1]).as_object().find("format_reward")->as_number().lexeme() == "0");

  // failures are logged too; the draw happens before the check
  const auto log_lines = read_lines(dir.file("fmtlog.jsonl"));
  REQUIRE(log_lines.size() == 2);
  CHECK(jv(log_lines[0]).as_object().find("timestamp")->as_number().lexeme() == "0");
  CHECK(jv(log_lines[1]).as_object().find("timestamp")->as_number().lexeme() == "1");
  CHECK(field(jv(log_lines[1]), "prefixed_text") == "<think>broken");
}

TEST_CASE("advantage ranks rewards inside contiguous groups") {
  TempDir dir;
  write_file(dir.file("groups.jsonl"),
             R"({"group_id":"g1","id":"a","rewards":[0.2,0.4]})" "\n"
             R"({"group_id":"g1","id":"b","rewards":[1.0,0.8]})" "\n"
             R"({"group_id":"g1","id":"c","rewards":[0.1,0.1]})" "\n"
             R"({"group_id":"g2","id":"solo","rewards":[0.5]})" "\n");

  SUBCASE("uniform weights") {
    const auto r = run_cli({"advantage", "--in", dir.file("groups.jsonl"),
                            "--out", dir.file("adv.jsonl")});
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    const auto lines = read_lines(dir.file("adv.jsonl"));
    REQUIRE(lines.size() == 4);
    const JsonValue a = jv(lines[0]);
    CHECK(field(a, "group_id") == "g1");
    CHECK(field(a, "id") == "a");
    CHECK(a.as_object().find("combined")->as_number().to_double() == (0.2 + 0.4) / 2.0);
    CHECK(a.as_object().find("advantage")->as_number().to_double() == 0.5);
    CHECK(jv(lines[1]).as_object().find("advantage")->as_number().to_double() == 1.0);
    CHECK(jv(lines[2]).as_object().find("advantage")->as_number().to_double() == 0.0);
    CHECK(jv(lines[3]).as_object().find("advantage")->as_number().to_double() == 0.0);
  }

  SUBCASE("explicit weights") {
    write_file(dir.file("pairs.jsonl"),
               R"({"group_id":"g1","id":"a","rewards":[0.2,0.4]})" "\n"
               R"({"group_id":"g1","id":"b","rewards":[1.0,0.8]})" "\n");
    const auto r = run_cli({"advantage", "--in", dir.file("pairs.jsonl"),
                            "--out", dir.file("adv.jsonl"), "--weights", "1.0,0.0"});
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    CHECK(jv(read_lines(dir.file("adv.jsonl"))[0]).as_object().find("combined")
              ->as_number().to_double() == 0.2);
  }

  SUBCASE("weights must be a distribution") {
    CHECK(run_cli({"advantage", "--in", dir.file("groups.jsonl"),
                   "--out", dir.file("adv.jsonl"), "--weights", "0.5,0.6"})
              .exit_code == 1);
    CHECK(run_cli({"advantage", "--in", dir.file("groups.jsonl"),
                   "--out", dir.file("adv.jsonl"), "--weights", "-0.5,1.5"})
              .exit_code == 1);
  }

  SUBCASE("a reopened group is a data error") {
    write_file(dir.file("torn.jsonl"),
               R"({"group_id":"g1","id":"a","rewards":[0.2]})" "\n"
               R"({"group_id":"g2","id":"b","rewards":[0.4]})" "\n"
               R"({"group_id":"g1","id":"c","rewards":[0.6]})" "\n");
    const auto r = run_cli({"advantage", "--in", dir.file("torn.jsonl"),
                            "--out", dir.file("adv.jsonl")});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("torn.jsonl:3") != std::string::npos);
  }
}

TEST_CASE("eval writes a summary and optional per-row CSV") {
  TempDir dir;
  write_file(dir.file("rows.jsonl"), scoring_rows());
  const auto r = run_cli({"eval", "--in", dir.file("rows.jsonl"),
                          "--out", dir.file("summary.json"),
                          "--per-row", dir.file("rows.csv")});
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);

  const JsonValue summary = jv(read_file(dir.file("summary.json")));
  CHECK(summary.as_object().find("total_rows")->as_number().lexeme() == "3");
  CHECK(summary.as_object().find("rows_no_output")->as_number().lexeme() == "1");
  CHECK(summary.as_object().find("rows_valid_json")->as_number().lexeme() == "2");
  // valid rows match 100 and 50, so the valid-only mean is 75
  CHECK(summary.as_object().find("mean_match_pct")->as_number().lexeme() == "75.00");
  CHECK(summary.as_object().find("mean_noise_pct")->as_number().lexeme() == "25.00");

  const auto csv = read_lines(dir.file("rows.csv"));
  REQUIRE(csv.size() == 4);
  CHECK(csv[0] == "id,status,match_pct,noise_pct");
  CHECK(csv[1] == "r0,valid,100.00,0.00");
  CHECK(csv[2] == "r1,no_output,,");
  CHECK(csv[3] == "r2,valid,50.00,50.00");

  SUBCASE("mean over all rows divides by the total") {
    const auto all = run_cli({"eval", "--in", dir.file("rows.jsonl"),
                              "--out", dir.file("summary_all.json"), "--mean-over-all"});
    REQUIRE(all.exit_code == 0);
    const JsonValue s = jv(read_file(dir.file("summary_all.json")));
    CHECK(s.as_object().find("mean_match_pct")->as_number().lexeme() == "50.00");
  }

  SUBCASE("an unparseable ground truth is a data error") {
    write_file(dir.file("bad.jsonl"),
               R"({"id":"x","completion":"t</think>\n<answer>{}</answer>","ground_truth":"oops"})"
               "\n");
    const auto bad = run_cli({"eval", "--in", dir.file("bad.jsonl"),
                              "--out", dir.file("s.json")});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("bad.jsonl:1") != std::string::npos);
  }
}

TEST_CASE("scoring pipelines are deterministic end to end") {
  TempDir dir;
  REQUIRE(run_cli({"gen-corpus", "--seed", "42", "--count", "300", "--out",
                   dir.file("c.jsonl"), "--max-depth", "2", "--jobs", "3"})
              .exit_code == 0);

  // corpus rows feed scoring directly once completions reproduce the filled side
  std::string rows;
  for (const auto& line : read_lines(dir.file("c.jsonl"))) {
    const JsonValue row = jv(line);
    const std::string filled = serialize(*row.as_object().find("filled"));
    JsonValue::Object rec;
    rec.insert("id", JsonValue(field(row, "id")));
    rec.insert("completion", JsonValue("t</think>\n<answer>" + filled + "</answer>"));
    rec.insert("ground_truth", JsonValue(filled));
    rows += serialize(JsonValue(std::move(rec)));
    rows += "\n";
  }
  write_file(dir.file("rows.jsonl"), rows);

  const std::vector<std::string> score_args = {
      "score-json", "--seed", "5", "--in", dir.file("rows.jsonl"),
      "--out", dir.file("s.jsonl"), "--log-path", dir.file("l.jsonl")};
  REQUIRE(run_cli(score_args).exit_code == 0);
  const std::string scores = read_file(dir.file("s.jsonl"));
  const std::string log = read_file(dir.file("l.jsonl"));
  REQUIRE(run_cli(score_args).exit_code == 0);
  CHECK(read_file(dir.file("s.jsonl")) == scores);
  CHECK(read_file(dir.file("l.jsonl")) == log);

  // every canonical row scores 1.0, and the log sampled a strict subset
  const auto score_lines = read_lines(dir.file("s.jsonl"));
  CHECK(score_lines.size() == 300);
  for (const auto& line : score_lines) {
    CHECK(jv(line).as_object().find("reward")->as_number().lexeme() == "1.0");
  }
  const auto sampled = read_lines(dir.file("l.jsonl")).size();
  CHECK(sampled > 120);
  CHECK(sampled < 240);

  // jobs count must not leak into the output
  REQUIRE(run_cli({"score-json", "--seed", "5", "--in", dir.file("rows.jsonl"),
                   "--out", dir.file("s4.jsonl"), "--log-path", dir.file("l4.jsonl"),
                   "--jobs", "4"})
              .exit_code == 0);
  CHECK(read_file(dir.file("s4.jsonl")) == scores);
  CHECK(read_file(dir.file("l4.jsonl")) == log);
}
