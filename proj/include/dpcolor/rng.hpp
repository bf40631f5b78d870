#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace dpcolor {

// Deterministic uniform draws. std::mt19937_64 output is pinned bit-for-bit
// by the standard, but std::uniform_int_distribution and std::shuffle are
// not, so bounded draws and shuffles are implemented here directly. Given a
// seed, every sequence produced by this class is identical on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform over [0, bound) by rejection; unbiased
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % bound;
    }
  }

  // uniformly random permutation of {0..m-1}, Fisher-Yates
  std::vector<int> permutation(int m) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    for (int i = m - 1; i > 0; --i) {
      const int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dpcolor
