#include "tpc/quasigroup.hpp"

#include <deque>

namespace tpc {

int AffineQuasigroup::id() const {
  int hi = 0;
  for (int i = 0; i < arity; ++i)
    if (coeff[i] == 2) hi |= 1 << i;
  return hi * 3 + cst;
}

AffineQuasigroup AffineQuasigroup::from_id(int arity, int id) {
  check(arity >= 1 && arity <= 4, "quasigroup arity out of range");
  check(id >= 0 && id < 3 << arity, "quasigroup id out of range");
  AffineQuasigroup q;
  q.arity = uint8_t(arity);
  q.cst = uint8_t(id % 3);
  for (int i = 0; i < arity; ++i) q.coeff[i] = (id / 3 >> i & 1) ? 2 : 1;
  return q;
}

AffineQuasigroup gamma_transform(const AffineQuasigroup& q, int i, int a) {
  if (i < 0 || i >= q.arity) fail_usage("gamma_transform: argument index out of range");
  if (a < 0 || a > 2) fail_usage("gamma_transform: fixed symbol out of range");
  AffineQuasigroup r = q;
  r.cst = uint8_t((q.cst + 2 * a * q.coeff[i]) % 3);
  r.coeff[i] = uint8_t(q.coeff[i] == 1 ? 2 : 1);
  return r;
}

std::vector<std::pair<int, int>> gamma_path(const AffineQuasigroup& from,
                                            const AffineQuasigroup& to) {
  check(from.arity == to.arity, "gamma_path: arity mismatch");
  int t = from.arity;
  int total = 3 << t;
  std::vector<int> prev(total, -1), move_arg(total, -1), move_sym(total, -1);
  std::deque<int> queue;
  int src = from.id(), dst = to.id();
  prev[src] = src;
  queue.push_back(src);
  while (!queue.empty() && prev[dst] < 0) {
    int cur = queue.front();
    queue.pop_front();
    AffineQuasigroup q = AffineQuasigroup::from_id(t, cur);
    for (int i = 0; i < t; ++i)
      for (int a = 0; a < 3; ++a) {
        int nxt = gamma_transform(q, i, a).id();
        if (prev[nxt] >= 0) continue;
        prev[nxt] = cur;
        move_arg[nxt] = i;
        move_sym[nxt] = a;
        queue.push_back(nxt);
      }
  }
  check(prev[dst] >= 0, "gamma graph is connected");
  std::vector<std::pair<int, int>> path;
  for (int cur = dst; cur != src; cur = prev[cur])
    path.emplace_back(move_arg[cur], move_sym[cur]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace tpc
