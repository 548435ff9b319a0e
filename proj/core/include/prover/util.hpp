#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prover {

// Transport, configuration or protocol failures. Distinct from in-band
// tactic errors, which travel as EnvOutcome values: an InfrastructureError
// aborts the search that hit it.
struct InfrastructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

// FNV-1a over bytes. Stable across platforms; used for state ids and
// dataset content hashes.
constexpr uint64_t fnv1a64(std::string_view s, uint64_t h = kFnvOffset) {
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Per-pass / per-statement seed: hash(tag, index, globalSeed). Reproducible
// yet decorrelated across passes.
constexpr uint64_t derive_seed(std::string_view tag, uint64_t index, uint64_t global_seed) {
  return splitmix64(fnv1a64(tag) ^ splitmix64(index + 0x51ed2701ull) ^ splitmix64(global_seed));
}

// Uniform double in [0,1) from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined; this is not.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Whitespace token count; empty or all-blank strings count 0 tokens.
inline int token_count(std::string_view s) {
  int n = 0;
  bool in_token = false;
  for (char c : s) {
    bool blank = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    if (!blank && !in_token) ++n;
    in_token = !blank;
  }
  return n;
}

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace prover
