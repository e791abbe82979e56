#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace ncsym {

inline long long isqrt_floor(long long v) {
  if (v < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

namespace detail {

template <class F>
void lattice_rec(int k, int d, long long acc, long long lo2, long long hi2, std::vector<int>& n, F& f) {
  const long long rem = hi2 - acc;
  const long long m = isqrt_floor(rem);
  if (k == d - 1) {
    for (long long v = -m; v <= m; ++v) {
      const long long n2 = acc + v * v;
      if (n2 <= lo2) continue;
      n[k] = static_cast<int>(v);
      f(std::span<const int>(n), n2);
    }
    return;
  }
  for (long long v = -m; v <= m; ++v) {
    n[k] = static_cast<int>(v);
    lattice_rec(k + 1, d, acc + v * v, lo2, hi2, n, f);
  }
}

}  // namespace detail

// Calls f(n, |n|^2) for every n in Z^d with lo2 < |n|^2 <= hi2, lexicographic order.
template <class F>
void for_each_lattice_point(int d, long long lo2, long long hi2, F&& f) {
  if (hi2 < 0 || hi2 <= lo2) return;
  std::vector<int> n(d, 0);
  detail::lattice_rec(0, d, 0, lo2, hi2, n, f);
}

}  // namespace ncsym
