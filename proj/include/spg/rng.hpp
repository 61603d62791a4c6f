#pragma once

#include <cstdint>
#include <random>

namespace spg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Sub-seed for one module inside one trial. Tags are fixed constants so that
// changing one consumer never shifts another's stream.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t tag) {
  return splitmix64(master ^ splitmix64(tag));
}

namespace seed_tag {
constexpr std::uint64_t embedding = 1;
constexpr std::uint64_t direction = 2;
constexpr std::uint64_t twists = 3;
constexpr std::uint64_t strategy = 4;
constexpr std::uint64_t ymove = 5;
}  // namespace seed_tag

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [lo, hi]; own rejection loop so results do not depend on the
  // standard library's distribution implementation
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(gen_());
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do r = gen_();
    while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace spg
