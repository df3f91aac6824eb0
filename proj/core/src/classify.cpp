#include "tpc/classify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "tpc/canonical.hpp"
#include "tpc/exact_cover.hpp"
#include "tpc/gf3.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"

namespace tpc {
namespace {

const Code& host9() {
  static const Code h = parity_mds(9);
  return h;
}

// monomial maps preserving the host: coordinate permutations plus the global
// negation (mixed per-coordinate negations move the host)
const uint64_t kHostGroup = 725760;  // 9! * 2

std::vector<std::vector<uint32_t>> host_group_gens() {
  const Space& sp = Space::get(9);
  std::vector<std::vector<uint32_t>> gens;
  for (int i = 0; i + 1 < 9; ++i)
    gens.push_back(Isometry::transposition(9, i, i + 1).point_map(sp));
  gens.push_back(Isometry::negation(9).point_map(sp));
  return gens;
}

int neighbours(const Space& sp, uint32_t idx, uint32_t* out) {
  int cnt = 0;
  for (int j = 0; j < sp.n(); ++j) {
    int cur = sp.trit(idx, j);
    for (int v = 0; v < 3; ++v)
      if (v != cur) out[cnt++] = sp.with_trit(idx, j, v);
  }
  return cnt;
}

std::string word_str(int n, uint32_t idx) {
  return TernaryWord::from_index(n, idx).str();
}

uint64_t to_u64(const mpz_class& z) {
  check(z.fits_ulong_p(), "value does not fit in 64 bits");
  return z.get_ui();
}

uint64_t hash_members(const std::vector<uint16_t>& m) {
  uint64_t h = 1469598103934665603ULL;
  for (uint16_t v : m) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

// lookup table from sorted member lists to their position in a fixed pool
struct MemberIndex {
  const std::vector<std::vector<uint16_t>>* pool = nullptr;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

  explicit MemberIndex(const std::vector<std::vector<uint16_t>>& p) : pool(&p) {
    buckets.reserve(p.size() * 2);
    for (uint32_t i = 0; i < p.size(); ++i) buckets[hash_members(p[i])].push_back(i);
  }

  uint32_t find(const std::vector<uint16_t>& m) const {
    auto it = buckets.find(hash_members(m));
    if (it == buckets.end()) return UINT32_MAX;
    for (uint32_t i : it->second)
      if ((*pool)[i] == m) return i;
    return UINT32_MAX;
  }
};

struct SplitResult {
  std::vector<uint32_t> rep;     // index into the pool
  std::vector<uint64_t> orbit;   // orbit size per class
};

// orbits of a point-map action on a pool of codes that is closed under it
SplitResult orbit_split(const std::vector<std::vector<uint16_t>>& pool,
                        const std::vector<std::vector<uint32_t>>& gens) {
  MemberIndex ix(pool);
  std::vector<char> seen(pool.size(), 0);
  SplitResult res;
  std::vector<uint32_t> queue;
  std::vector<uint16_t> img;
  for (uint32_t i = 0; i < pool.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = 1;
    queue.assign(1, i);
    uint64_t count = 0;
    while (!queue.empty()) {
      uint32_t cur = queue.back();
      queue.pop_back();
      ++count;
      for (const auto& g : gens) {
        img.resize(pool[cur].size());
        for (size_t t = 0; t < img.size(); ++t) img[t] = uint16_t(g[pool[cur][t]]);
        std::sort(img.begin(), img.end());
        uint32_t j = ix.find(img);
        check(j != UINT32_MAX, "orbit image escaped the candidate pool");
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      }
    }
    res.rep.push_back(i);
    res.orbit.push_back(count);
  }
  return res;
}

Code code_from_members(int n, const std::vector<uint16_t>& mem) {
  Code c(n);
  for (uint16_t m : mem) c.insert(m);
  return c;
}

std::vector<uint16_t> members_u16(const Code& c) {
  std::vector<uint32_t> m = c.members();
  return std::vector<uint16_t>(m.begin(), m.end());
}

}  // namespace

PartialCheck check_partial(const Code& c, int level) {
  if (c.n() != 9) fail_usage("partial codes live in 9 coordinates");
  if (level < 2 || level > 9) fail_usage("level must be in [2, 9]");
  const Space& sp = Space::get(9);
  const Code& host = host9();
  if (!c.test(0)) return {false, "the zero word is missing"};
  for (uint32_t m : c.members()) {
    if (!host.test(m))
      return {false, "codeword " + word_str(9, m) + " has nonzero coordinate sum"};
    if (sp.weight(m) > level)
      return {false, "codeword " + word_str(9, m) + " exceeds weight " +
                         std::to_string(level)};
  }
  if (min_distance(c) < 3) return {false, "minimum distance below 3"};
  uint32_t nb[26];
  for (uint32_t idx = 0; idx < sp.size(); ++idx) {
    if (host.test(idx) || sp.weight(idx) > level - 1) continue;
    int cnt = neighbours(sp, idx, nb);
    int hits = 0;
    for (int t = 0; t < cnt; ++t) hits += c.test(nb[t]);
    if (hits != 1)
      return {false, "word " + word_str(9, idx) + " has " + std::to_string(hits) +
                         " neighbours in the code instead of 1"};
  }
  return {};
}

uint64_t extend_partial_visit(
    const Code& c, int level,
    const std::function<void(const std::vector<uint16_t>&)>& visit) {
  PartialCheck pc = check_partial(c, level);
  if (!pc.ok)
    fail_usage("not a valid level-" + std::to_string(level) +
               " partial code: " + pc.reason);
  if (level >= 9) fail_usage("level-9 codes have no further extensions");
  const Space& sp = Space::get(9);
  const Code& host = host9();

  Code ball1(9);
  uint32_t nb[26];
  for (uint32_t m : c.members()) {
    ball1.insert(m);
    int cnt = neighbours(sp, m, nb);
    for (int t = 0; t < cnt; ++t) ball1.insert(nb[t]);
  }
  Code ball2 = ball1;
  for (uint32_t m : ball1.members()) {
    int cnt = neighbours(sp, m, nb);
    for (int t = 0; t < cnt; ++t) ball2.insert(nb[t]);
  }

  // uncovered weight-level words outside the host are the cover columns
  std::vector<int> col_of(sp.size(), -1);
  int ncols = 0;
  for (uint32_t idx = 0; idx < sp.size(); ++idx) {
    if (host.test(idx) || sp.weight(idx) != level || ball1.test(idx)) continue;
    col_of[idx] = ncols++;
  }

  // candidate new codewords cover exactly their weight-level zero-neighbours
  CoverInstance inst(ncols);
  std::vector<uint32_t> cand;
  for (uint32_t idx = 0; idx < sp.size(); ++idx) {
    if (!host.test(idx) || sp.weight(idx) != level + 1 || ball2.test(idx)) continue;
    std::vector<int> cols;
    for (int j = 0; j < 9; ++j) {
      if (sp.trit(idx, j) == 0) continue;
      int col = col_of[sp.with_trit(idx, j, 0)];
      check(col >= 0, "zeroing neighbour of a candidate escaped the column set");
      cols.push_back(col);
    }
    std::sort(cols.begin(), cols.end());
    inst.add_row(std::move(cols));
    cand.push_back(idx);
  }

  std::vector<uint16_t> base = members_u16(c);
  std::vector<uint16_t> mem;
  uint64_t accepted = 0;
  solve_all(inst, [&](const std::vector<int>& sol) {
    for (size_t a = 0; a < sol.size(); ++a)
      for (size_t b = a + 1; b < sol.size(); ++b)
        if (sp.weight(sp.sub(cand[sol[a]], cand[sol[b]])) < 3) return true;
    ++accepted;
    if (visit) {
      mem.assign(base.begin(), base.end());
      for (int r : sol) mem.push_back(uint16_t(cand[r]));
      std::sort(mem.begin(), mem.end());
      visit(mem);
    }
    return true;
  });
  return accepted;
}

std::vector<Code> extend_partial(const Code& c, int level) {
  std::vector<Code> out;
  extend_partial_visit(c, level, [&](const std::vector<uint16_t>& mem) {
    out.push_back(code_from_members(9, mem));
  });
  return out;
}

RmLikeClasses classify_rm_like() {
  const Space& sp = Space::get(9);
  const Code& host = host9();
  RmLikeClasses out;

  std::vector<std::vector<uint32_t>> hgens = host_group_gens();

  Code start(9);
  start.insert(0);
  std::vector<std::vector<uint16_t>> pool;
  extend_partial_visit(start, 2, [&](const std::vector<uint16_t>& mem) {
    pool.push_back(mem);
  });

  // level 3: orbits under the full host-preserving monomial group
  std::vector<CanonicalCertificate> certs;
  {
    SplitResult split = orbit_split(pool, hgens);
    LadderLevel lvl;
    lvl.level = 3;
    for (size_t t = 0; t < split.rep.size(); ++t) {
      Code d = code_from_members(9, pool[split.rep[t]]);
      check(kHostGroup % split.orbit[t] == 0,
            "orbit size must divide the acting group order");
      uint64_t aut = kHostGroup / split.orbit[t];
      CanonicalCertificate cert = certificate(d, Flavor::monomial);
      check(cert.aut_order == mpz_class(aut),
            "monomial stabilizer disagrees with the orbit count");
      lvl.reps.push_back(std::move(d));
      lvl.aut_orders.push_back(aut);
      lvl.total_codes += split.orbit[t];
      certs.push_back(std::move(cert));
    }
    out.levels.push_back(std::move(lvl));
  }
  pool.clear();
  pool.shrink_to_fit();

  // climb to level 9; children of one class stay inequivalent to children of
  // another, so each level splits under the parent stabilizers only
  for (int level = 3; level < 9; ++level) {
    LadderLevel& cur = out.levels.back();
    LadderLevel next;
    next.level = level + 1;
    cur.children.assign(cur.reps.size(), 0);
    std::vector<CanonicalCertificate> next_certs;
    for (size_t r = 0; r < cur.reps.size(); ++r) {
      std::vector<std::vector<uint16_t>> kids;
      extend_partial_visit(cur.reps[r], level,
                           [&](const std::vector<uint16_t>& mem) { kids.push_back(mem); });
      if (kids.empty()) continue;
      std::vector<std::vector<uint32_t>> sgens;
      for (const auto& gen : certs[r].generators)
        sgens.push_back(gen.first.point_map(sp));
      SplitResult split = orbit_split(kids, sgens);
      // each child class descends from exactly one parent class, so the orbit
      // count is the number of child classes rooted here
      cur.children[r] = uint64_t(split.rep.size());
      for (size_t t = 0; t < split.rep.size(); ++t) {
        Code d = code_from_members(9, kids[split.rep[t]]);
        check(cur.aut_orders[r] % split.orbit[t] == 0,
              "orbit size must divide the stabilizer order");
        uint64_t aut = cur.aut_orders[r] / split.orbit[t];
        CanonicalCertificate cert = certificate(d, Flavor::monomial);
        check(cert.aut_order == mpz_class(aut),
              "monomial stabilizer disagrees with the orbit count");
        next.reps.push_back(std::move(d));
        next.aut_orders.push_back(aut);
        next.total_codes += kHostGroup / aut;
        next_certs.push_back(std::move(cert));
      }
    }
    std::unordered_set<std::string> digests;
    for (const auto& cert : next_certs)
      check(digests.insert(cert.digest).second,
            "child classes must stay distinct across parents");
    certs = std::move(next_certs);
    out.levels.push_back(std::move(next));
  }

  // level 9: the finished codes
  LadderLevel& last = out.levels.back();
  for (const Code& r : last.reps)
    check(is_rm_like(r, host), "ladder output must tile the host complement");
  out.mon_reps = last.reps;
  out.mon_auts = last.aut_orders;
  for (uint64_t a : out.mon_auts) out.codes_with_zero += kHostGroup / a;

  // group the monomial classes under the full isometry group
  struct FullClass {
    std::string digest;
    uint64_t aut = 0;
    int first_mon = 0;
  };
  std::vector<FullClass> fulls;
  std::vector<std::string> mon_full_digest(out.mon_reps.size());
  for (size_t i = 0; i < out.mon_reps.size(); ++i) {
    CanonicalCertificate cert = certificate(out.mon_reps[i], Flavor::full);
    mon_full_digest[i] = cert.digest;
    bool known = false;
    for (const FullClass& f : fulls) known |= f.digest == cert.digest;
    if (!known) fulls.push_back({cert.digest, to_u64(cert.aut_order), int(i)});
  }
  std::sort(fulls.begin(), fulls.end(), [](const FullClass& a, const FullClass& b) {
    if (a.aut != b.aut) return a.aut > b.aut;
    return a.digest < b.digest;
  });
  out.full_class_of.resize(out.mon_reps.size());
  out.class_codes_in_host.assign(fulls.size(), 0);
  for (size_t f = 0; f < fulls.size(); ++f) {
    out.full_reps.push_back(out.mon_reps[fulls[f].first_mon]);
    out.full_auts.push_back(fulls[f].aut);
    out.full_digests.push_back(fulls[f].digest);
  }
  for (size_t i = 0; i < out.mon_reps.size(); ++i) {
    int f = -1;
    for (size_t t = 0; t < fulls.size(); ++t)
      if (fulls[t].digest == mon_full_digest[i]) f = int(t);
    check(f >= 0, "monomial class lost its full class");
    out.full_class_of[i] = f;
    out.class_codes_in_host[f] += 9 * (kHostGroup / out.mon_auts[i]);
  }
  for (uint64_t v : out.class_codes_in_host) out.codes_in_host += v;

  // permutation classes: each monomial class either is one permutation class
  // or splits into the class of the code and the class of its negation
  Isometry negate = Isometry::negation(9);
  for (size_t i = 0; i < out.mon_reps.size(); ++i) {
    CanonicalCertificate cp = certificate(out.mon_reps[i], Flavor::permutation);
    CanonicalCertificate cn =
        certificate(out.mon_reps[i].apply(negate), Flavor::permutation);
    out.perm_auts.push_back(to_u64(cp.aut_order));
    if (cn.digest != cp.digest) {
      check(cn.aut_order == cp.aut_order,
            "negated code must have a conjugate stabilizer");
      out.perm_auts.push_back(to_u64(cn.aut_order));
    }
  }

  // the classification is fully determined; pin the known totals
  auto sorted = [](std::vector<uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  check(out.codes_with_zero == 158760, "wrong count of codes through zero");
  check(out.codes_in_host == 1428840, "wrong count of codes in the host");
  check(sorted(out.mon_auts) == sorted({864, 108, 12, 72, 36, 12}),
        "wrong monomial class automorphism orders");
  check(sorted(out.full_auts) == sorted({629856, 78732, 8748, 5832}),
        "wrong full class automorphism orders");
  check(sorted(out.perm_auts) == sorted({432, 54, 6, 36, 18, 12, 12}),
        "wrong permutation class automorphism orders");
  check(sorted(out.class_codes_in_host) == sorted({7560, 60480, 544320, 816480}),
        "wrong per-class code counts in the host");
  return out;
}

ClassOrbit enumerate_class_orbit(const std::vector<Code>& mon_reps) {
  if (mon_reps.empty()) fail_usage("need at least one class representative");
  for (const Code& r : mon_reps) {
    if (r.n() != 9) fail_usage("class orbits live in 9 coordinates");
    if (!check_partial(r, 9).ok || !is_rm_like(r, host9()))
      fail_usage("representative is not a tiling code in the host");
  }
  const Space& sp = Space::get(9);
  const Code& host = host9();
  std::vector<std::vector<uint32_t>> hgens = host_group_gens();

  ClassOrbit out;
  out.kernel_size = kernel_order(mon_reps[0]);
  for (const Code& r : mon_reps)
    check(kernel_order(r) == out.kernel_size,
          "kernel size must agree across one class");

  // full orbit of the codes containing 0
  std::vector<std::vector<uint16_t>> pool;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
  auto find = [&](const std::vector<uint16_t>& m) -> uint32_t {
    auto it = buckets.find(hash_members(m));
    if (it == buckets.end()) return UINT32_MAX;
    for (uint32_t i : it->second)
      if (pool[i] == m) return i;
    return UINT32_MAX;
  };
  std::vector<uint32_t> queue;
  for (const Code& r : mon_reps) {
    std::vector<uint16_t> mem = members_u16(r);
    if (find(mem) != UINT32_MAX) continue;
    buckets[hash_members(mem)].push_back(uint32_t(pool.size()));
    queue.push_back(uint32_t(pool.size()));
    pool.push_back(std::move(mem));
  }
  std::vector<uint16_t> img;
  while (!queue.empty()) {
    uint32_t cur = queue.back();
    queue.pop_back();
    for (const auto& g : hgens) {
      img.resize(pool[cur].size());
      for (size_t t = 0; t < img.size(); ++t) img[t] = uint16_t(g[pool[cur][t]]);
      std::sort(img.begin(), img.end());
      if (find(img) != UINT32_MAX) continue;
      buckets[hash_members(img)].push_back(uint32_t(pool.size()));
      queue.push_back(uint32_t(pool.size()));
      pool.push_back(img);
    }
  }
  out.codes_with_zero = pool.size();
  out.codes_in_host = 9 * pool.size();

  // sweep in lex order; one translation family covers 729/kernel of the pool
  std::vector<uint32_t> order(pool.size());
  for (uint32_t i = 0; i < pool.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](uint32_t a, uint32_t b) { return pool[a] < pool[b]; });
  std::vector<char> visited(pool.size(), 0);
  std::vector<uint16_t> host_members = members_u16(host);
  for (uint32_t idx : order) {
    if (visited[idx]) continue;
    const std::vector<uint16_t>& rep = pool[idx];
    Code d = code_from_members(9, rep);
    Code ker = out.kernel_size == rep.size()
                   ? d
                   : span_code(9, kernel(d).basis, TernaryWord::zero(9));
    check(ker.size() == out.kernel_size, "kernel size changed inside the class");

    // translations within the family that keep 0 in the code
    Code seen0(9);
    std::vector<uint16_t> inner;
    for (uint16_t m : rep) {
      if (seen0.test(m)) continue;
      inner.push_back(m);
      seen0 = seen0.set_union(ker.translated(m));
    }
    check(inner.size() * out.kernel_size == rep.size(),
          "kernel cosets must tile the code");
    for (uint16_t d0 : inner) {
      img.resize(rep.size());
      for (size_t t = 0; t < img.size(); ++t)
        img[t] = uint16_t(sp.sub(rep[t], d0));
      std::sort(img.begin(), img.end());
      uint32_t j = find(img);
      check(j != UINT32_MAX, "translate escaped the orbit");
      visited[j] = 1;
    }

    // distinct translations of the family inside the host
    Code seen(9);
    std::vector<uint16_t> trans;
    for (uint16_t v : host_members) {
      if (seen.test(v)) continue;
      trans.push_back(v);
      seen = seen.set_union(ker.translated(v));
    }
    check(trans.size() * out.kernel_size == host.size(),
          "kernel cosets must tile the host");
    out.family_reps.push_back(rep);
    out.family_translations.push_back(std::move(trans));
  }
  check(out.family_reps.size() * (729 / out.kernel_size) == pool.size(),
        "family count must match the orbit size");
  return out;
}

ClassOrbit enumerate_class_orbit(const RmLikeClasses& rm, int class_id) {
  if (class_id < 0 || class_id >= int(rm.full_reps.size()))
    fail_usage("class id out of range");
  std::vector<Code> mreps;
  for (size_t i = 0; i < rm.mon_reps.size(); ++i)
    if (rm.full_class_of[i] == class_id) mreps.push_back(rm.mon_reps[i]);
  return enumerate_class_orbit(mreps);
}

std::vector<ClassOrbit> class_orbits(const RmLikeClasses& rm) {
  std::vector<ClassOrbit> orbits(rm.full_reps.size());
  for (size_t t = 0; t < orbits.size(); ++t) {
    orbits[t] = enumerate_class_orbit(rm, int(t));
    check(orbits[t].codes_in_host == rm.class_codes_in_host[t],
          "enumerated orbit disagrees with the counted one");
  }
  return orbits;
}

CollectionClasses collection_base(const RmLikeClasses& rm) {
  CollectionClasses c1;
  c1.k = 1;
  for (size_t t = 0; t < rm.full_reps.size(); ++t) {
    Collection col(std::vector<Code>{rm.full_reps[t]});
    CanonicalCertificate cert = certificate(col, Flavor::full);
    c1.reps.push_back(std::move(col));
    c1.digests.push_back(cert.digest);
    c1.aut_orders.push_back(to_u64(cert.aut_order));
    c1.types.push_back({int(t)});
    c1.merged.push_back(1);
    c1.by_type.push_back({{int(t)}, 1});
  }
  return c1;
}

CollectionClasses classify_collections_step(const RmLikeClasses& rm,
                                            const std::vector<ClassOrbit>& orbits,
                                            const CollectionClasses& prev) {
  const Space& sp = Space::get(9);
  int nclasses = int(rm.full_reps.size());
  check(int(orbits.size()) == nclasses, "need one orbit per full class");
  if (prev.k < 1 || prev.k >= 9) fail_usage("collections have 1 to 9 blocks");

  CollectionClasses next;
  next.k = prev.k + 1;
  std::unordered_map<std::string, size_t> known;
  for (size_t p = 0; p < prev.reps.size(); ++p) {
    const Collection& parent = prev.reps[p];
    Code punion = parent.merged();
    std::vector<std::vector<uint32_t>> pgens;
    for (const auto& gen : certificate(parent, Flavor::full).generators)
      pgens.push_back(gen.first.point_map(sp));
    for (int t = prev.types[p].back(); t < nclasses; ++t) {
      const ClassOrbit& orb = orbits[t];

      // all codes of class t disjoint from the parent blocks
      std::vector<std::vector<uint16_t>> acc;
      std::vector<uint16_t> mem;
      for (size_t f = 0; f < orb.family_reps.size(); ++f) {
        const std::vector<uint16_t>& fr = orb.family_reps[f];
        for (uint16_t v : orb.family_translations[f]) {
          bool ok = true;
          for (uint16_t m : fr)
            if (punion.test(sp.add(m, v))) {
              ok = false;
              break;
            }
          if (!ok) continue;
          mem.resize(fr.size());
          for (size_t z = 0; z < fr.size(); ++z)
            mem[z] = uint16_t(sp.add(fr[z], v));
          std::sort(mem.begin(), mem.end());
          acc.push_back(mem);
        }
      }

      // strong equivalence: orbits under the parent automorphisms
      SplitResult split = orbit_split(acc, pgens);
      for (size_t s = 0; s < split.rep.size(); ++s) {
        Collection cand = parent;
        cand.blocks.push_back(code_from_members(9, acc[split.rep[s]]));
        CanonicalCertificate cert = certificate(cand, Flavor::full);
        auto [it, fresh] = known.emplace(cert.digest, next.reps.size());
        if (!fresh) {
          ++next.merged[it->second];
          continue;
        }
        next.digests.push_back(cert.digest);
        next.aut_orders.push_back(to_u64(cert.aut_order));
        std::vector<int> ty = prev.types[p];
        ty.push_back(t);
        next.types.push_back(std::move(ty));
        next.merged.push_back(1);
        next.reps.push_back(std::move(cand));
      }
    }
  }
  std::map<std::vector<int>, uint64_t> by_type;
  for (const auto& ty : next.types) ++by_type[ty];
  next.by_type.assign(by_type.begin(), by_type.end());
  return next;
}

std::vector<CollectionClasses> classify_collections(
    const RmLikeClasses& rm, int max_k,
    const std::function<void(const CollectionClasses&)>& done_level) {
  if (max_k < 1 || max_k > 9) fail_usage("collection size must be in [1, 9]");
  std::vector<ClassOrbit> orbits = class_orbits(rm);
  std::vector<CollectionClasses> out;
  out.push_back(collection_base(rm));
  if (done_level) done_level(out.back());
  for (int k = 2; k <= max_k; ++k) {
    out.push_back(classify_collections_step(rm, orbits, out.back()));
    if (done_level) done_level(out.back());
  }
  return out;
}

P4Result classify_p4() {
  const Space& sp = Space::get(4);
  P4Result out;

  // perfect codes are the exact covers of the space by closed radius-1 balls
  CoverInstance balls(int(sp.size()));
  uint32_t nb[26];
  for (uint32_t idx = 0; idx < sp.size(); ++idx) {
    std::vector<int> cols{int(idx)};
    int cnt = neighbours(sp, idx, nb);
    for (int t = 0; t < cnt; ++t) cols.push_back(int(nb[t]));
    std::sort(cols.begin(), cols.end());
    balls.add_row(std::move(cols));
  }
  solve_all(balls, [&](const std::vector<int>& rows) {
    Code c(4);
    for (int r : rows) c.insert(uint32_t(r));
    check(is_1perfect(c), "ball cover must be a perfect code");
    out.codes.push_back(std::move(c));
    return true;
  });
  std::sort(out.codes.begin(), out.codes.end(),
            [](const Code& a, const Code& b) { return a.lex_less(b); });

  // partitions of the space into perfect codes
  CoverInstance parts(int(sp.size()));
  for (const Code& c : out.codes) {
    std::vector<int> cols;
    for (uint32_t m : c.members()) cols.push_back(int(m));
    parts.add_row(std::move(cols));
  }
  solve_all(parts, [&](const std::vector<int>& rows) {
    out.partitions.emplace_back(rows.begin(), rows.end());
    return true;
  });

  // classes under the full isometry group, smallest orbit first
  std::vector<std::string> digests(out.partitions.size());
  std::vector<uint64_t> auts(out.partitions.size());
  std::map<std::string, uint64_t> sizes;
  for (size_t i = 0; i < out.partitions.size(); ++i) {
    std::vector<Code> blocks;
    for (int ci : out.partitions[i]) blocks.push_back(out.codes[ci]);
    CanonicalCertificate cert = certificate(Collection(std::move(blocks)),
                                            Flavor::full);
    digests[i] = cert.digest;
    auts[i] = to_u64(cert.aut_order);
    ++sizes[cert.digest];
  }
  std::vector<std::pair<uint64_t, std::string>> order;
  for (const auto& [dig, cnt] : sizes) order.push_back({cnt, dig});
  std::sort(order.begin(), order.end());
  std::map<std::string, int> class_of;
  for (size_t t = 0; t < order.size(); ++t) class_of[order[t].second] = int(t);

  out.partition_class.resize(out.partitions.size());
  out.class_digests.resize(order.size());
  out.class_sizes.resize(order.size());
  out.class_auts.resize(order.size());
  out.class_reps.resize(order.size());
  std::vector<char> have(order.size(), 0);
  for (size_t i = 0; i < out.partitions.size(); ++i) {
    int t = class_of[digests[i]];
    out.partition_class[i] = t;
    if (have[t]) continue;
    have[t] = 1;
    out.class_digests[t] = digests[i];
    out.class_sizes[t] = sizes[digests[i]];
    out.class_auts[t] = auts[i];
    std::vector<Code> blocks;
    for (int ci : out.partitions[i]) blocks.push_back(out.codes[ci]);
    out.class_reps[t] = Collection(std::move(blocks));
  }

  check(out.codes.size() == 72, "wrong number of length-4 perfect codes");
  check(out.partitions.size() == 104, "wrong number of length-4 partitions");
  check(out.class_sizes == std::vector<uint64_t>({8, 96}),
        "wrong length-4 partition class sizes");
  return out;
}

}  // namespace tpc
