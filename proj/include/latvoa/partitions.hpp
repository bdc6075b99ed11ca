#pragma once

#include <functional>
#include <map>
#include <vector>

namespace latvoa {

// Integer partitions as multiplicity maps {part -> multiplicity}, visited in a
// fixed deterministic order (largest first part descending).
// n = 0 visits the empty partition once.
inline void for_each_partition(long n, const std::function<void(const std::map<long, long>&)>& fn) {
  std::map<long, long> mult;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      fn(mult);
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      ++mult[p];
      rec(remaining - p, p);
      if (--mult[p] == 0) mult.erase(p);
    }
  };
  if (n < 0) return;
  rec(n, n);
}

inline long partition_count(long n) {
  if (n < 0) return 0;
  std::vector<long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

}  // namespace latvoa
