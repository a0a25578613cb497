#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qsdim {

// Deterministic 64-bit generator (splitmix64). Sampling helpers are
// hand-rolled so streams are identical across toolchains; every randomized
// routine in the library takes an explicit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // independent child stream, e.g. one per shard
  Rng fork(std::uint64_t salt) const {
    Rng r(state_ ^ (0x9e3779b97f4a7c15ull * (salt + 0x51ull)));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
};

struct LinearGrid {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;

  std::vector<double> points() const;
};

// Unique root of a strictly decreasing function. The initial bracket [lo, hi]
// is expanded upward (hi doubled) until f changes sign. Absolute tolerance on
// the root location.
double bisect_decreasing(const std::function<double(double)>& f, double lo,
                         double hi, double tol, int max_expand = 24);

// %.12g rendering: at most 12 significant digits, trailing zeros trimmed,
// infinities as "inf"/"-inf". Used for every CSV/value emission.
std::string format_number(double x);

// Worker cap from QSD_THREADS (default 1). Parallel sections only ever do
// order-independent reductions, so results do not depend on this value.
int worker_count();

// Apply fn(i) for i in [0, n) using at most worker_count() threads.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qsdim
