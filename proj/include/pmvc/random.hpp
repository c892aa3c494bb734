#pragma once

#include <cstdint>
#include <random>

namespace pmvc {

// Independent stream labels derived from one user seed.
enum class Stream : std::uint64_t { PitTrial = 1, Extraction = 2, ExtractionRetry = 3, Test = 99 };

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed for the `index`-th draw of `stream`; a pure function of its inputs so
// trials are reproducible regardless of the order in which they run.
inline std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream))) + index);
}

// mt19937_64 with an unbiased bounded draw that does not depend on the
// standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  bool coin(double p_true) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p_true; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pmvc
