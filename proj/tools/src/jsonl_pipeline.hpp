#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "schemaforge/json_value.hpp"

namespace schemaforge::cli {

class Fnv1a64 {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ULL;
    }
  }
  std::uint64_t value() const { return h_; }
  std::string hex() const;

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

/// Line-by-line reader that folds everything it reads into a content digest.
class JsonlReader {
 public:
  explicit JsonlReader(const std::string& path);  // throws std::runtime_error
  std::optional<std::string> next();
  std::string digest_hex() const { return digest_.hex(); }
  std::size_t rows() const { return rows_; }

 private:
  std::ifstream in_;
  Fnv1a64 digest_;
  std::size_t rows_ = 0;
};

/// Output file with an incremental content digest and a sidecar manifest at
/// <path>.manifest.json. The manifest is written with status "started"
/// before any data and rewritten as "complete" with digests by finish(), so
/// interrupted runs are detectable.
class ManagedOutput {
 public:
  ManagedOutput(std::string path, std::string command, JsonValue config_snapshot,
                std::uint64_t seed);  // throws std::runtime_error
  void write_line(std::string_view line);
  void finish(const std::string& input_digest);

  const std::string& path() const { return path_; }

 private:
  void write_manifest(std::string_view status, const std::string* input_digest);

  std::string path_;
  std::string command_;
  JsonValue config_;
  std::uint64_t seed_;
  std::ofstream out_;
  Fnv1a64 digest_;
};

/// Reads rows from `next` in bounded chunks, maps them with `fn` on up to
/// `jobs` workers, and hands each result to `sink` in row order (so memory
/// stays bounded by the chunk, and output bytes cannot depend on
/// scheduling). `fn` must not throw; `sink` returns false to stop early.
/// Returns false when the sink stopped the run.
template <typename R, typename NextFn, typename RowFn, typename SinkFn>
bool chunked_ordered_map(NextFn&& next, int jobs, RowFn&& fn, SinkFn&& sink) {
  const std::size_t chunk_rows = 256 * static_cast<std::size_t>(std::max(jobs, 1));
  std::size_t row_base = 0;
  std::vector<std::string> lines;
  lines.reserve(chunk_rows);
  bool eof = false;

  while (!eof) {
    lines.clear();
    while (lines.size() < chunk_rows) {
      std::optional<std::string> line = next();
      if (!line.has_value()) {
        eof = true;
        break;
      }
      lines.push_back(std::move(*line));
    }
    if (lines.empty()) break;

    std::vector<R> results(lines.size());
    std::size_t n = lines.size();
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) results[i] = fn(row_base + i, lines[i]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * n / workers;
        std::size_t hi = (w + 1) * n / workers;
        pool.emplace_back([&, lo, hi]() {
          for (std::size_t i = lo; i < hi; ++i) results[i] = fn(row_base + i, lines[i]);
        });
      }
      for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (!sink(row_base + i, results[i])) return false;
    }
    row_base += n;
  }
  return true;
}

}  // namespace schemaforge::cli
