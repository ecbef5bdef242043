// Counter-based deterministic PRNG (splitmix64 finalizer over a keyed counter).
// Output depends only on (key words, counter), so per-trial streams are
// reproducible regardless of scheduling.
#pragma once

#include <cstdint>
#include <initializer_list>

namespace betti {

class CounterRng {
 public:
  explicit CounterRng(std::initializer_list<std::uint64_t> key) {
    std::uint64_t k = 0x243f6a8885a308d3ull;  // domain constant
    for (std::uint64_t w : key) k = mix(k ^ mix(w));
    key_ = k;
  }

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Uniform in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace betti
