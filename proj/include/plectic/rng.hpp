#ifndef PLECTIC_RNG_HPP
#define PLECTIC_RNG_HPP

#include <cstdint>
#include <string_view>

namespace plectic {

/// splitmix64 stream; the exact constants are part of the reproducibility
/// contract and documented in the README.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n >= 1. Modulo bias is irrelevant for test-data sampling.
  uint64_t next_index(uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi].
  long long next_int(long long lo, long long hi) {
    return lo + static_cast<long long>(next_index(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool next_bool() { return next() & 1u; }
};

/// FNV-1a, used to derive per-check substreams from (seed, check name).
constexpr uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Stream for one named check: state = seed XOR fnv1a(name), mixed once.
inline SplitMix64 check_stream(uint64_t seed, std::string_view name) {
  SplitMix64 s(seed ^ fnv1a(name));
  s.next();
  return s;
}

}  // namespace plectic

#endif
