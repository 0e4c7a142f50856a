#pragma once

#include <vector>

#include "specblocks/perm.hpp"

namespace specblocks::testsupport {

inline Perm cyc(int degree, const std::vector<std::vector<int>>& cycles) {
  return Perm::from_cycles(degree, cycles);
}

// All set partitions of {0..n-1} via restricted growth strings; the brute
// force behind the minimal-block and block-system checks (n <= 8 or so).
inline std::vector<Partition> all_set_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  auto emit = [&] { out.push_back(Partition::from_cell_ids(rgs)); };
  // iterate restricted growth strings
  std::vector<int> maxval(n, 0);
  int i = 0;
  rgs[0] = 0;
  maxval[0] = 0;
  if (n == 0) return out;
  for (;;) {
    if (i == n - 1) {
      emit();
      // backtrack to the last position that can be incremented
      while (i > 0 && rgs[i] == maxval[i - 1] + 1) --i;
      if (i == 0) break;
      ++rgs[i];
      maxval[i] = std::max(maxval[i - 1], rgs[i]);
      continue;
    }
    ++i;
    rgs[i] = 0;
    maxval[i] = maxval[i - 1];
  }
  return out;
}

// All G-invariant partitions by filtering every set partition (exponential;
// test scale only).
inline std::vector<Partition> invariant_partitions_brute_force(const PermGroup& g) {
  std::vector<Partition> out;
  for (auto& p : all_set_partitions(g.degree()))
    if (is_invariant_partition(g, p)) out.push_back(std::move(p));
  return out;
}

}  // namespace specblocks::testsupport
