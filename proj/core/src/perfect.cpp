#include "tpc/perfect.hpp"

namespace tpc {

bool is_1perfect(const Code& c) {
  int n = c.n();
  const Space& sp = Space::get(n);
  if (c.size() * (2 * size_t(n) + 1) != sp.size()) return false;
  Code marked(n);
  bool ok = true;
  c.for_each([&](uint32_t x) {
    if (!ok) return;
    if (marked.test(x)) {
      ok = false;
      return;
    }
    marked.insert(x);
    for (int i = 0; i < n && ok; ++i) {
      int v = sp.trit(x, i);
      for (int d = 1; d < 3; ++d) {
        uint32_t y = sp.with_trit(x, i, (v + d) % 3);
        if (marked.test(y)) {
          ok = false;
          return;
        }
        marked.insert(y);
      }
    }
  });
  // counting: |C|*(2n+1) marks with no collision tile the whole space
  return ok;
}

bool is_mds2(const Code& c) {
  int n = c.n();
  const Space& sp = Space::get(n);
  if (c.size() != sp.size() / 3) return false;
  bool ok = true;
  c.for_each([&](uint32_t x) {
    if (!ok) return;
    for (int i = 0; i < n; ++i) {
      int v = sp.trit(x, i);
      for (int d = 1; d < 3; ++d)
        if (c.test(sp.with_trit(x, i, (v + d) % 3))) {
          ok = false;
          return;
        }
    }
  });
  return ok;
}

Code parity_mds(int n) {
  const Space& sp = Space::get(n);
  Code m(n);
  for (uint32_t x = 0; x < sp.size(); ++x) {
    int s = 0;
    for (uint32_t y = x; y; y /= 3) s += int(y % 3);
    if (s % 3 == 0) m.insert(x);
  }
  return m;
}

bool is_rm_like(const Code& c, const Code& m_host) {
  if (c.n() != m_host.n()) fail_usage("is_rm_like: code/host length mismatch");
  if (!is_mds2(m_host)) fail_usage("is_rm_like: host is not a distance-2 MDS code");
  int n = c.n();
  int m = 0;
  while (m <= 2 && int(kPow3[m + 1]) <= n) ++m;
  if (int(kPow3[m]) != n) return false;  // length must be a power of 3
  const Space& sp = Space::get(n);
  if (!c.subset_of(m_host)) return false;
  if (c.size() != kPow3[n - m - 1]) return false;
  // Mark the radius-1 shells; codewords sit in the host and the host has
  // minimum distance 2, so every neighbour of a codeword is outside the host.
  // No mark collisions means minimum distance >= 3, and |C|*2n marks exactly
  // count the words outside the host, so each is adjacent to exactly one
  // codeword.
  Code marked(n);
  bool ok = true;
  c.for_each([&](uint32_t x) {
    if (!ok) return;
    for (int i = 0; i < n; ++i) {
      int v = sp.trit(x, i);
      for (int d = 1; d < 3; ++d) {
        uint32_t y = sp.with_trit(x, i, (v + d) % 3);
        if (marked.test(y)) {
          ok = false;
          return;
        }
        marked.insert(y);
      }
    }
  });
  return ok && c.size() * 2 * size_t(n) == sp.size() - m_host.size();
}

}  // namespace tpc
