#include "jsonl_pipeline.hpp"

#include <cstdio>
#include <stdexcept>

#include "schemaforge/version.hpp"

namespace schemaforge::cli {

std::string Fnv1a64::hex() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

JsonlReader::JsonlReader(const std::string& path) : in_(path, std::ios::binary) {
  if (!in_.is_open()) throw std::runtime_error("cannot open input file: " + path);
}

std::optional<std::string> JsonlReader::next() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  digest_.update(line);
  digest_.update("\n");
  ++rows_;
  return line;
}

ManagedOutput::ManagedOutput(std::string path, std::string command, JsonValue config_snapshot,
                             std::uint64_t seed)
    : path_(std::move(path)),
      command_(std::move(command)),
      config_(std::move(config_snapshot)),
      seed_(seed) {
  write_manifest("started", nullptr);
  out_.open(path_, std::ios::binary | std::ios::trunc);
  if (!out_.is_open()) throw std::runtime_error("cannot open output file: " + path_);
}

void ManagedOutput::write_line(std::string_view line) {
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.put('\n');
  digest_.update(line);
  digest_.update("\n");
}

void ManagedOutput::finish(const std::string& input_digest) {
  out_.flush();
  if (!out_) throw std::runtime_error("write failed on output file: " + path_);
  out_.close();
  write_manifest("complete", &input_digest);
}

void ManagedOutput::write_manifest(std::string_view status, const std::string* input_digest) {
  JsonValue::Object m;
  m.insert("command", JsonValue(command_));
  m.insert("config_snapshot", config_);
  m.insert("seed", JsonValue(*JsonNumber::from_lexeme(std::to_string(seed_))));
  if (input_digest != nullptr) m.insert("input_digest", JsonValue(*input_digest));
  m.insert("tool_version", JsonValue(std::string(kToolVersion)));
  m.insert("status", JsonValue(std::string(status)));
  if (input_digest != nullptr) m.insert("output_digest", JsonValue(digest_.hex()));

  std::string manifest_path = path_ + ".manifest.json";
  std::ofstream f(manifest_path, std::ios::binary | std::ios::trunc);
  if (!f.is_open()) throw std::runtime_error("cannot open manifest file: " + manifest_path);
  std::string body = serialize(JsonValue(std::move(m)), JsonStyle::Pretty);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  f.put('\n');
  f.flush();
  if (!f) throw std::runtime_error("write failed on manifest file: " + manifest_path);
}

}  // namespace schemaforge::cli
