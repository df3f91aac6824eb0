#include "tpc/permgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "tpc/gf3.hpp"

namespace tpc {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), uint8_t(0));
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  check(a.size() == b.size(), "perm degree mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = uint8_t(i);
  return r;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (uint8_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string perm_str(const Perm& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << int(p[i]);
  }
  return os.str();
}

Perm parse_perm(const std::string& s, int degree) {
  std::istringstream is(s);
  Perm p;
  int v;
  while (is >> v) {
    if (v < 0 || v >= degree) fail_usage("permutation image out of range: " + s);
    p.push_back(uint8_t(v));
  }
  if (int(p.size()) != degree || !is_perm(p))
    fail_usage("not a permutation of degree " + std::to_string(degree) + ": " + s);
  return p;
}

namespace {

// nibble encoding; valid for degree <= 12
uint64_t encode_perm(const Perm& p) {
  uint64_t code = 0;
  for (size_t i = 0; i < p.size(); ++i) code |= uint64_t(p[i]) << (4 * i);
  return code;
}

// Lehmer rank in [0, 9!) for the double-coset sweep bitmap
uint32_t lehmer_rank9(const Perm& p) {
  static const uint32_t fact[9] = {40320, 5040, 720, 120, 24, 6, 2, 1, 1};
  uint32_t rank = 0;
  uint16_t used = 0;
  for (int i = 0; i < 9; ++i) {
    int smaller = p[i] - __builtin_popcount(used & ((1u << p[i]) - 1));
    rank += uint32_t(smaller) * fact[i];
    used |= uint16_t(1) << p[i];
  }
  return rank;
}

}  // namespace

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup closure(std::vector<Perm> gens, int degree) {
  check(degree >= 1 && degree <= 12, "closure: degree out of range");
  for (const Perm& g : gens)
    check(int(g.size()) == degree && is_perm(g), "closure: bad generator");
  PermGroup grp;
  grp.degree = degree;
  grp.gens = gens;
  std::unordered_set<uint64_t> seen;
  std::vector<Perm> queue{perm_identity(degree)};
  seen.insert(encode_perm(queue[0]));
  for (size_t head = 0; head < queue.size(); ++head) {
    Perm cur = queue[head];
    for (const Perm& g : gens) {
      Perm next = perm_compose(g, cur);
      if (seen.insert(encode_perm(next)).second) queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end());
  grp.elements = std::move(queue);
  return grp;
}

std::vector<DoubleCoset> double_coset_reps(const PermGroup& left,
                                           const PermGroup& right) {
  check(left.degree == 9 && right.degree == 9, "double cosets need degree 9");
  using Key = std::pair<std::vector<uint64_t>, std::vector<uint64_t>>;
  auto group_key = [](const PermGroup& g) {
    std::vector<uint64_t> k;
    k.reserve(g.elements.size());
    for (const Perm& p : g.elements) k.push_back(encode_perm(p));
    return k;
  };
  static std::map<Key, std::vector<DoubleCoset>> cache;
  static std::mutex cache_mu;
  Key key{group_key(left), group_key(right)};
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  // generator moves sigma -> l*sigma and sigma -> sigma*r span the double coset
  const std::vector<Perm>& lgens = left.gens.empty() ? left.elements : left.gens;
  const std::vector<Perm>& rgens = right.gens.empty() ? right.elements : right.gens;

  constexpr uint32_t kFact9 = 362880;
  std::vector<uint64_t> visited(kFact9 / 64 + 1, 0);
  auto test_set = [&visited](uint32_t r) {
    uint64_t& w = visited[r >> 6];
    uint64_t bit = uint64_t(1) << (r & 63);
    bool old = w & bit;
    w |= bit;
    return old;
  };

  std::vector<DoubleCoset> out;
  uint64_t total = 0;
  Perm sigma = perm_identity(9);
  do {
    uint32_t r0 = lehmer_rank9(sigma);
    if (visited[r0 >> 6] >> (r0 & 63) & 1) continue;
    test_set(r0);
    std::vector<Perm> queue{sigma};
    for (size_t head = 0; head < queue.size(); ++head) {
      Perm cur = queue[head];
      for (const Perm& l : lgens) {
        Perm next = perm_compose(l, cur);
        if (!test_set(lehmer_rank9(next))) queue.push_back(std::move(next));
      }
      for (const Perm& r : rgens) {
        Perm next = perm_compose(cur, r);
        if (!test_set(lehmer_rank9(next))) queue.push_back(std::move(next));
      }
    }
    total += queue.size();
    out.push_back({sigma, queue.size()});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  check(total == kFact9, "double cosets do not partition Sym(9)");

  std::lock_guard<std::mutex> lock(cache_mu);
  cache.emplace(std::move(key), out);
  return out;
}

}  // namespace tpc
