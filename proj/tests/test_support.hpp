#pragma once

#include <cmath>
#include <vector>

#include "qsdim/numeric.hpp"
#include "qsdim/thermo.hpp"

namespace testsupport {

// three intervals tiling [-1,1]; radii (1/2, 1/4, 1/4), sum exactly 1
inline qsdim::thermo::DiskPacking tiling_packing() {
  return qsdim::thermo::DiskPacking(
      {{-0.5, 0.5}, {0.25, 0.25}, {0.75, 0.25}});
}

// four quarter intervals tiling [-1,1]
inline qsdim::thermo::DiskPacking quad_tiling_packing() {
  return qsdim::thermo::DiskPacking(
      {{-0.75, 0.25}, {-0.25, 0.25}, {0.25, 0.25}, {0.75, 0.25}});
}

// 2..6 disjoint disks placed left to right in [-1,1] with positive gaps
inline qsdim::thermo::DiskPacking random_packing(qsdim::Rng& rng) {
  const int n = 2 + static_cast<int>(rng.next_u64() % 5);
  std::vector<double> lens(2 * n + 1);
  double total = 0.0;
  for (double& L : lens) {
    L = 0.05 + rng.next_double();
    total += L;
  }
  for (double& L : lens) L *= 2.0 / total;
  std::vector<qsdim::thermo::Disk> disks;
  double pos = -1.0;
  for (int i = 0; i < n; ++i) {
    pos += lens[2 * i];
    const double diam = lens[2 * i + 1];
    disks.push_back({pos + diam / 2.0, diam / 2.0});
    pos += diam;
  }
  return qsdim::thermo::DiskPacking(disks);
}

inline std::vector<double> random_weights(qsdim::Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.next_double());
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace testsupport
