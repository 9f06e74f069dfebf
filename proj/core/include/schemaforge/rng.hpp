#pragma once

#include <cstdint>
#include <random>

namespace schemaforge {

// splitmix64 finalizer. Used to derive independent per-row generator seeds
// from (run seed, row index) so that results do not depend on how rows are
// scheduled across workers.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derived seed for one logical row/record.
inline std::uint64_t row_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index + 1));
}

// Generator for one logical row/record. Identical (seed, index) pairs yield
// identical streams on every platform (mt19937_64 is fully specified).
inline std::mt19937_64 row_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(row_seed(seed, index));
}

// Uniform draw in [0, 1) with 53 bits of precision. Avoids
// std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Inclusive integer draw without distribution objects (reproducible).
inline std::int64_t uniform_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(g() % span);
}

// The single sampling decision used by the inspection-log machinery.
inline bool should_log_row(std::uint64_t seed, std::uint64_t row, double probability) {
  auto g = row_stream(seed, row);
  return uniform01(g) < probability;
}

}  // namespace schemaforge
