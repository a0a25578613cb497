#include "qsdim/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qsdim {

std::vector<double> LinearGrid::points() const {
  if (count < 1) throw std::invalid_argument("LinearGrid: count must be >= 1");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    pts.push_back(lo);
    return pts;
  }
  for (int i = 0; i < count; ++i) {
    pts.push_back(lo + (hi - lo) * static_cast<double>(i) /
                           static_cast<double>(count - 1));
  }
  return pts;
}

double bisect_decreasing(const std::function<double(double)>& f, double lo,
                         double hi, double tol, int max_expand) {
  if (!(hi > lo)) throw std::invalid_argument("bisect: empty bracket");
  double flo = f(lo);
  if (flo < 0.0) throw std::domain_error("bisect: f(lo) < 0, no root above lo");
  if (flo == 0.0) return lo;
  int expansions = 0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++expansions > max_expand)
      throw std::domain_error("bisect: failed to bracket a sign change");
  }
  for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int worker_count() {
  const char* env = std::getenv("QSD_THREADS");
  if (env == nullptr) return 1;
  const long n = std::strtol(env, nullptr, 10);
  if (n <= 1) return 1;
  const long hw = static_cast<long>(std::thread::hardware_concurrency());
  return static_cast<int>(std::min(n, std::max(1L, hw)));
}

void parallel_for_index(std::size_t n,
                        const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < n;
           i += static_cast<std::size_t>(workers))
        fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qsdim
