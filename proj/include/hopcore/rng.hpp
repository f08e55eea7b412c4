#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hopcore {

// All randomness flows from a single root seed. Sub-streams are derived by
// hashing (seed, purpose, index), so independent draws can be reordered or
// parallelised without changing results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng stream(std::string_view purpose, std::uint64_t index) const {
    std::uint64_t h = seed_ ^ UINT64_C(0x9e3779b97f4a7c15);
    for (char c : purpose) h = mix(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    h = mix(h ^ index);
    return Rng(h);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform in (0, 1].
  double uniform01() {
    std::uint64_t x = engine_() >> 11;
    return (static_cast<double>(x) + 1.0) * (1.0 / 9007199254740992.0);
  }

  double exponential(double rate) { return -std::log(uniform01()) / rate; }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(below(static_cast<std::uint64_t>(i + 1)));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z += UINT64_C(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)) * UINT64_C(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94d049bb133111eb);
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hopcore
