#include "tpc/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_set>

#include "tpc/sha256.hpp"

namespace tpc {

Flavor parse_flavor(const std::string& s) {
  if (s == "full") return Flavor::full;
  if (s == "monomial") return Flavor::monomial;
  if (s == "permutation") return Flavor::permutation;
  if (s == "strong") return Flavor::strong;
  fail_usage("unknown equivalence flavor: " + s);
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::full: return "full";
    case Flavor::monomial: return "monomial";
    case Flavor::permutation: return "permutation";
    case Flavor::strong: return "strong";
  }
  return "?";
}

namespace {

CodeGraph encode_impl(const std::vector<const Code*>& blocks, bool is_collection,
                      Flavor flavor) {
  if (!is_collection && flavor == Flavor::strong)
    fail_usage("strong equivalence applies to collections only");
  check(!blocks.empty(), "encode: no blocks");
  const int n = blocks[0]->n();
  const int k = static_cast<int>(blocks.size());
  size_t total_words = 0;
  bool has_zero = false;
  for (const Code* b : blocks) {
    check(b->n() == n, "encode: mixed lengths");
    if (b->empty()) fail_usage("cannot canonicalize an empty code");
    total_words += b->size();
    has_zero |= b->test(0);
  }
  if (flavor == Flavor::monomial && !has_zero)
    fail_usage("monomial equivalence needs the zero word in the code");

  CodeGraph g;
  g.n = n;
  g.k = is_collection ? k : 0;
  g.flavor = flavor;
  g.codeword_base = 3 * n;
  const int V = 3 * n + static_cast<int>(total_words) + (is_collection ? k : 0);
  g.block_base = 3 * n + static_cast<int>(total_words);
  g.num_vertices = V;

  // raw colors; empty classes compacted below
  const int pv_classes =
      flavor == Flavor::monomial ? 2 : (flavor == Flavor::permutation ? 3 : 1);
  const int word_color = pv_classes;
  const int block_color = pv_classes + 1;
  const int last_block_color = pv_classes + 2;
  g.color.assign(V, 0);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 3; ++a) {
      int c = 0;
      if (flavor == Flavor::monomial) c = a == 0 ? 0 : 1;
      if (flavor == Flavor::permutation) c = a;
      g.color[3 * i + a] = c;
    }

  g.word_of.clear();
  g.block_of.clear();
  std::vector<std::vector<uint32_t>> adj(V);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        adj[3 * i + a].push_back(3 * i + b);
        adj[3 * i + b].push_back(3 * i + a);
      }
  int w = g.codeword_base;
  for (int b = 0; b < k; ++b) {
    for (uint32_t pt : blocks[b]->members()) {
      g.word_of.push_back(pt);
      g.block_of.push_back(b);
      g.color[w] = word_color;
      uint32_t rest = pt;
      for (int i = 0; i < n; ++i) {
        int a = static_cast<int>(rest % 3);
        rest /= 3;
        adj[w].push_back(3 * i + a);
        adj[3 * i + a].push_back(w);
      }
      if (is_collection) {
        int bv = g.block_base + b;
        adj[w].push_back(bv);
        adj[bv].push_back(w);
      }
      ++w;
    }
    if (is_collection) {
      int bv = g.block_base + b;
      g.color[bv] =
          (flavor == Flavor::strong && b == k - 1) ? last_block_color : block_color;
    }
  }

  // compact color ids, preserving order
  {
    int max_c = 0;
    for (int c : g.color) max_c = std::max(max_c, c);
    std::vector<int> count(max_c + 1, 0), remap(max_c + 1, -1);
    for (int c : g.color) ++count[c];
    int next = 0;
    for (int c = 0; c <= max_c; ++c)
      if (count[c] > 0) remap[c] = next++;
    for (int& c : g.color) c = remap[c];
    g.num_colors = next;
  }

  g.adj_off.assign(V + 1, 0);
  size_t edges = 0;
  for (int v = 0; v < V; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    edges += adj[v].size();
  }
  g.adj.reserve(edges);
  for (int v = 0; v < V; ++v) {
    g.adj_off[v] = static_cast<uint32_t>(g.adj.size());
    g.adj.insert(g.adj.end(), adj[v].begin(), adj[v].end());
  }
  g.adj_off[V] = static_cast<uint32_t>(g.adj.size());
  return g;
}

inline void mix(uint64_t& h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

// ---------------------------------------------------------------------------
// deterministic Schreier-Sims over small degree, exact order via GMP

struct StabChain {
  int deg = 0;
  std::vector<int> base;
  std::vector<std::vector<Perm>> added;  // generators first seen at each level
  std::vector<std::vector<int>> orb;
  std::vector<std::vector<Perm>> trans;  // indexed by point; empty = not in orbit

  std::vector<Perm> level_gens(size_t l) const {
    std::vector<Perm> out;
    for (size_t j = l; j < added.size(); ++j)
      out.insert(out.end(), added[j].begin(), added[j].end());
    return out;
  }

  void compute_level(size_t l) {
    const int b = base[l];
    auto gens = level_gens(l);
    orb[l].assign(1, b);
    trans[l].assign(deg, Perm());
    trans[l][b] = perm_identity(deg);
    for (size_t i = 0; i < orb[l].size(); ++i) {
      int p = orb[l][i];
      for (const Perm& gp : gens) {
        int q = gp[p];
        if (trans[l][q].empty()) {
          trans[l][q] = perm_compose(gp, trans[l][p]);
          orb[l].push_back(q);
        }
      }
    }
  }

  // reduce h through levels >= from; returns residue and stopping level
  std::pair<Perm, size_t> strip(Perm h, size_t from) const {
    for (size_t l = from; l < base.size(); ++l) {
      int t = h[base[l]];
      if (t == base[l]) continue;
      if (trans[l][t].empty()) return {h, l};
      h = perm_compose(perm_inverse(trans[l][t]), h);
    }
    return {h, base.size()};
  }

  static bool is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != static_cast<uint8_t>(i)) return false;
    return true;
  }

  // returns true if g extended the chain
  bool insert(const Perm& g) {
    auto [h, l] = strip(g, 0);
    if (is_identity(h)) return false;
    if (l == base.size()) {
      int pt = -1;
      for (int i = 0; i < deg; ++i)
        if (h[i] != i) {
          pt = i;
          break;
        }
      check(pt >= 0, "stab chain: moved point");
      base.push_back(pt);
      added.emplace_back();
      orb.emplace_back();
      trans.emplace_back();
    }
    added[l].push_back(h);
    for (size_t j = 0; j <= l && j < base.size(); ++j) compute_level(j);
    return true;
  }

  void close() {
    for (;;) {
      for (size_t l = 0; l < base.size(); ++l) compute_level(l);
      bool changed = false;
      for (size_t l = 0; l < base.size() && !changed; ++l) {
        auto gens = level_gens(l);
        for (int p : orb[l]) {
          for (const Perm& gp : gens) {
            Perm sg = perm_compose(perm_inverse(trans[l][gp[p]]),
                                   perm_compose(gp, trans[l][p]));
            if (is_identity(sg)) continue;
            auto [h, at] = strip(sg, l + 1);
            if (is_identity(h)) continue;
            if (at == base.size()) {
              int pt = -1;
              for (int i = 0; i < deg; ++i)
                if (h[i] != i) {
                  pt = i;
                  break;
                }
              base.push_back(pt);
              added.emplace_back();
              orb.emplace_back();
              trans.emplace_back();
            }
            added[at].push_back(h);
            changed = true;
            break;
          }
          if (changed) break;
        }
      }
      if (!changed) return;
    }
  }

  mpz_class order() {
    close();
    mpz_class o = 1;
    for (size_t l = 0; l < base.size(); ++l) o *= static_cast<long>(orb[l].size());
    return o;
  }
};

mpz_class group_order(const std::vector<Perm>& gens, int deg) {
  StabChain sc;
  sc.deg = deg;
  for (const Perm& g : gens) sc.insert(g);
  return sc.order();
}

// ---------------------------------------------------------------------------
// individualization-refinement search

struct Searcher {
  const CodeGraph& g;
  int V;
  int proj_dim;  // 3n + k: the part of the vertex set automorphisms are reported on

  std::vector<int> lab, pos, sbase, clen;

  struct Snapshot {
    std::vector<int> lab, pos, sbase, clen;
  };
  std::vector<Snapshot> snaps;

  // refinement scratch
  std::vector<int> cnt;
  std::vector<uint32_t> touched;
  std::vector<int> cell_list;
  std::vector<char> cell_flag, in_queue;
  std::vector<int> queue;
  std::vector<std::pair<int, int>> gather;  // (key, vertex)

  // search bookkeeping
  std::vector<uint64_t> path_traces, first_traces, best_traces;
  bool first_set = false;
  std::vector<int> first_lab, best_lab;
  uint64_t first_hash = 0, best_hash = 0;
  std::vector<int> base_path;
  bool base_outside_proj = false;
  std::vector<Perm> gens;
  std::unordered_set<std::string> gen_seen;
  std::vector<uint32_t> row_scratch;

  explicit Searcher(const CodeGraph& graph) : g(graph), V(graph.num_vertices) {
    proj_dim = 3 * g.n + g.k;
    lab.resize(V);
    pos.resize(V);
    sbase.resize(V);
    clen.assign(V, 0);
    cnt.assign(V, 0);
    cell_flag.assign(V, 0);
    in_queue.assign(V, 0);

    // initial ordering: by color, then vertex id
    std::vector<int> order(V);
    for (int v = 0; v < V; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.color[a] < g.color[b]; });
    for (int p = 0; p < V; ++p) {
      lab[p] = order[p];
      pos[order[p]] = p;
    }
    int p = 0;
    while (p < V) {
      int q = p;
      while (q < V && g.color[lab[q]] == g.color[lab[p]]) ++q;
      clen[p] = q - p;
      for (int r = p; r < q; ++r) sbase[r] = p;
      p = q;
    }
  }

  std::pair<const uint32_t*, const uint32_t*> neighbors(int v) const {
    return {g.adj.data() + g.adj_off[v], g.adj.data() + g.adj_off[v + 1]};
  }

  // make the whole current partition the refinement queue
  void seed_queue_all() {
    queue.clear();
    int p = 0;
    while (p < V) {
      queue.push_back(p);
      in_queue[p] = 1;
      p += clen[p];
    }
  }

  void refine(uint64_t& trace) {
    size_t head = 0;
    while (head < queue.size()) {
      int s = queue[head++];
      in_queue[s] = 0;
      if (clen[s] == V) continue;
      touched.clear();
      for (int p = s; p < s + clen[s]; ++p) {
        auto [it, end] = neighbors(lab[p]);
        for (; it != end; ++it) {
          if (cnt[*it]++ == 0) touched.push_back(*it);
        }
      }
      cell_list.clear();
      for (uint32_t u : touched) {
        int t = sbase[pos[u]];
        if (!cell_flag[t]) {
          cell_flag[t] = 1;
          cell_list.push_back(t);
        }
      }
      std::sort(cell_list.begin(), cell_list.end());
      for (int t : cell_list) {
        cell_flag[t] = 0;
        int len = clen[t];
        if (len == 1) continue;
        gather.clear();
        bool uniform = true;
        int k0 = cnt[lab[t]];
        for (int p = t; p < t + len; ++p) {
          int key = cnt[lab[p]];
          if (key != k0) uniform = false;
          gather.emplace_back(key, lab[p]);
        }
        if (uniform) continue;
        std::stable_sort(gather.begin(), gather.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (int i = 0; i < len; ++i) {
          lab[t + i] = gather[i].second;
          pos[gather[i].second] = t + i;
        }
        mix(trace, 0x5ee1u);
        mix(trace, static_cast<uint64_t>(t));
        // fragment boundaries
        int frag_start = t;
        int largest_start = t, largest_len = 0;
        std::vector<std::pair<int, int>> frags;  // (start, len)
        for (int i = 0; i < len; ++i) {
          bool last = i == len - 1;
          if (last || gather[i].first != gather[i + 1].first) {
            int fs = frag_start, fl = t + i + 1 - frag_start;
            frags.emplace_back(fs, fl);
            mix(trace, static_cast<uint64_t>(gather[i].first));
            mix(trace, static_cast<uint64_t>(fl));
            if (fl > largest_len) {
              largest_len = fl;
              largest_start = fs;
            }
            frag_start = t + i + 1;
          }
        }
        for (auto [fs, fl] : frags) {
          clen[fs] = fl;
          for (int p = fs; p < fs + fl; ++p) sbase[p] = fs;
        }
        if (in_queue[t]) {
          // t keeps its queue slot (it is frags[0].first)
          for (size_t fi = 1; fi < frags.size(); ++fi) {
            queue.push_back(frags[fi].first);
            in_queue[frags[fi].first] = 1;
          }
        } else {
          for (auto [fs, fl] : frags) {
            if (fs == largest_start) continue;
            queue.push_back(fs);
            in_queue[fs] = 1;
          }
        }
      }
      for (uint32_t u : touched) cnt[u] = 0;
    }
    queue.clear();
  }

  // returns cell start, or -1 when the partition is discrete
  int target_cell() const {
    int bestp = -1, bestlen = 0;
    int fallback = -1, fallback_len = 0;
    int p = 0;
    while (p < V) {
      int len = clen[p];
      if (len > 1) {
        if (lab[p] < 3 * g.n) {
          if (len > bestlen) {
            bestlen = len;
            bestp = p;
          }
        } else if (len > fallback_len) {
          fallback_len = len;
          fallback = p;
        }
      }
      p += len;
    }
    return bestp >= 0 ? bestp : fallback;
  }

  void save(int depth) {
    if (static_cast<int>(snaps.size()) <= depth) snaps.resize(depth + 1);
    Snapshot& s = snaps[depth];
    s.lab = lab;
    s.pos = pos;
    s.sbase = sbase;
    s.clen = clen;
  }

  void restore(int depth) {
    const Snapshot& s = snaps[depth];
    lab = s.lab;
    pos = s.pos;
    sbase = s.sbase;
    clen = s.clen;
  }

  void individualize(int v, uint64_t& trace) {
    int s = sbase[pos[v]];
    int len = clen[s];
    int p = pos[v];
    std::swap(lab[s], lab[p]);
    pos[lab[p]] = p;
    pos[lab[s]] = s;
    clen[s] = 1;
    if (len > 1) {
      clen[s + 1] = len - 1;
      for (int q = s + 1; q < s + len; ++q) sbase[q] = s + 1;
    }
    mix(trace, 0x1d1du);
    mix(trace, static_cast<uint64_t>(s));
    queue.clear();
    queue.push_back(s);
    in_queue[s] = 1;
  }

  uint64_t leaf_hash() {
    uint64_t h = 1469598103934665603ull;
    for (int p = 0; p < V; ++p) {
      row_scratch.clear();
      auto [it, end] = neighbors(lab[p]);
      for (; it != end; ++it) {
        int q = pos[*it];
        if (q > p) row_scratch.push_back(static_cast<uint32_t>(q));
      }
      std::sort(row_scratch.begin(), row_scratch.end());
      mix(h, 0x70d0u + static_cast<uint64_t>(row_scratch.size()));
      for (uint32_t q : row_scratch) mix(h, q);
    }
    return h;
  }

  // lexicographic comparison of the relabeled upper-triangular bitstreams,
  // current labeling vs ref; -1 if current < ref
  int exact_stream_cmp(const std::vector<int>& ref_lab) {
    std::vector<int> ref_pos(V);
    for (int p = 0; p < V; ++p) ref_pos[ref_lab[p]] = p;
    std::vector<uint32_t> row_a, row_b;
    for (int p = 0; p < V; ++p) {
      row_a.clear();
      row_b.clear();
      {
        auto [it, end] = neighbors(lab[p]);
        for (; it != end; ++it) {
          int q = pos[*it];
          if (q > p) row_a.push_back(static_cast<uint32_t>(q));
        }
      }
      {
        auto [it, end] = neighbors(ref_lab[p]);
        for (; it != end; ++it) {
          int q = ref_pos[*it];
          if (q > p) row_b.push_back(static_cast<uint32_t>(q));
        }
      }
      std::sort(row_a.begin(), row_a.end());
      std::sort(row_b.begin(), row_b.end());
      size_t m = std::min(row_a.size(), row_b.size());
      for (size_t i = 0; i < m; ++i) {
        if (row_a[i] == row_b[i]) continue;
        // the stream with an edge at the earlier column has bit 1 first
        return row_a[i] < row_b[i] ? 1 : -1;
      }
      if (row_a.size() != row_b.size()) return row_a.size() > row_b.size() ? 1 : -1;
    }
    return 0;
  }

  bool adjacent(int a, int b) const {
    auto [it, end] = neighbors(a);
    return std::binary_search(it, end, static_cast<uint32_t>(b));
  }

  // try the map v -> ref_lab[pos[v]] as an automorphism; record if genuine
  bool try_auto(const std::vector<int>& ref_lab) {
    std::vector<int> m(V);
    for (int p = 0; p < V; ++p) m[lab[p]] = ref_lab[p];
    for (int v = 0; v < V; ++v) {
      if (g.color[m[v]] != g.color[v]) return false;
      auto [it, end] = neighbors(v);
      for (; it != end; ++it)
        if (!adjacent(m[v], m[*it])) return false;
    }
    bool nontrivial = false;
    Perm proj(proj_dim);
    for (int v = 0; v < proj_dim; ++v) {
      int mv = v < 3 * g.n ? m[v] : m[g.block_base + (v - 3 * g.n)];
      if (v >= 3 * g.n) mv = mv - g.block_base + 3 * g.n;
      check(mv >= 0 && mv < proj_dim, "automorphism leaves pv/block range");
      proj[v] = static_cast<uint8_t>(mv);
      if (mv != v) nontrivial = true;
    }
    if (nontrivial) {
      std::string key(proj.begin(), proj.end());
      if (gen_seen.insert(key).second) gens.push_back(proj);
    }
    return true;
  }

  bool orbit_pruned(int v, const std::vector<int>& tried) {
    if (tried.empty() || gens.empty() || base_outside_proj) return false;
    if (v >= 3 * g.n && v < g.block_base) return false;  // codeword cell fallback
    std::vector<const Perm*> active;
    for (const Perm& gp : gens) {
      bool fixes = true;
      for (int b : base_path) {
        int bb = b < 3 * g.n ? b : b - g.block_base + 3 * g.n;
        if (gp[bb] != bb) {
          fixes = false;
          break;
        }
      }
      if (fixes) active.push_back(&gp);
    }
    if (active.empty()) return false;
    int vp = v < 3 * g.n ? v : v - g.block_base + 3 * g.n;
    std::vector<int> orbit{vp};
    std::vector<char> seen(proj_dim, 0);
    seen[vp] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (const Perm* gp : active) {
        int q = (*gp)[orbit[i]];
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    for (int t : tried) {
      int tp = t < 3 * g.n ? t : t - g.block_base + 3 * g.n;
      if (seen[tp]) return true;
    }
    return false;
  }

  void record_leaf(int depth, uint64_t h) {
    best_traces.assign(path_traces.begin(), path_traces.begin() + depth + 1);
    best_lab = lab;
    best_hash = h;
  }

  void leaf(int depth, bool on_first, int rel_best) {
    uint64_t h = leaf_hash();
    if (!first_set) {
      first_set = true;
      first_traces.assign(path_traces.begin(), path_traces.begin() + depth + 1);
      first_lab = lab;
      first_hash = h;
      record_leaf(depth, h);
      return;
    }
    if (on_first && h == first_hash && try_auto(first_lab)) return;
    if (rel_best < 0) {
      record_leaf(depth, h);
      return;
    }
    if (rel_best > 0) return;
    if (h == best_hash) {
      if (try_auto(best_lab)) return;
      int c = exact_stream_cmp(best_lab);
      check(c != 0, "equal streams must be automorphic");
      if (c < 0) record_leaf(depth, h);
      return;
    }
    if (h < best_hash) record_leaf(depth, h);
  }

  void search(int depth, bool on_first, int rel_best) {
    int tgt = target_cell();
    if (tgt < 0) {
      leaf(depth, on_first, rel_best);
      return;
    }
    save(depth);
    std::vector<int> cand(lab.begin() + tgt, lab.begin() + tgt + clen[tgt]);
    std::vector<int> tried;
    bool outside = cand[0] >= 3 * g.n && cand[0] < g.block_base;
    for (size_t ci = 0; ci < cand.size(); ++ci) {
      int v = cand[ci];
      if (ci > 0) restore(depth);
      if (orbit_pruned(v, tried)) continue;
      tried.push_back(v);
      uint64_t t = path_traces[depth];
      individualize(v, t);
      refine(t);
      bool child_first;
      int child_rel;
      if (!first_set) {
        child_first = on_first;
        child_rel = 0;
      } else {
        child_first = on_first && depth + 1 < static_cast<int>(first_traces.size()) &&
                      t == first_traces[depth + 1];
        if (rel_best != 0) {
          child_rel = rel_best;
        } else if (depth + 1 >= static_cast<int>(best_traces.size())) {
          child_rel = 1;
        } else if (t == best_traces[depth + 1]) {
          child_rel = 0;
        } else {
          child_rel = t < best_traces[depth + 1] ? -1 : 1;
        }
        if (child_rel > 0 && !child_first) continue;
      }
      if (static_cast<int>(path_traces.size()) <= depth + 1)
        path_traces.resize(depth + 2);
      path_traces[depth + 1] = t;
      base_path.push_back(v);
      bool prev_outside = base_outside_proj;
      if (outside) base_outside_proj = true;
      search(depth + 1, child_first, child_rel);
      base_outside_proj = prev_outside;
      base_path.pop_back();
    }
  }

  void run() {
    uint64_t t0 = 1099511628211ull;
    mix(t0, static_cast<uint64_t>(V));
    mix(t0, static_cast<uint64_t>(g.num_colors));
    seed_queue_all();
    refine(t0);
    path_traces.assign(1, t0);
    search(0, true, 0);
    check(first_set, "search produced no leaf");
  }

  std::string digest() const {
    Sha256 sha;
    sha.update_u32(static_cast<uint32_t>(V));
    sha.update_u32(static_cast<uint32_t>(g.num_colors));
    std::vector<uint32_t> sizes(g.num_colors, 0);
    for (int v = 0; v < V; ++v) ++sizes[g.color[v]];
    for (uint32_t s : sizes) sha.update_u32(s);

    std::vector<int> bpos(V);
    for (int p = 0; p < V; ++p) bpos[best_lab[p]] = p;
    const int words = (V + 63) / 64;
    std::vector<uint64_t> buf(words, 0);
    std::vector<uint8_t> bytes;
    std::vector<int> setbits;
    for (int p = 0; p < V; ++p) {
      setbits.clear();
      int v = best_lab[p];
      for (uint32_t off = g.adj_off[v]; off < g.adj_off[v + 1]; ++off) {
        int q = bpos[g.adj[off]];
        if (q > p) {
          buf[q >> 6] |= 1ull << (q & 63);
          setbits.push_back(q);
        }
      }
      // bits p+1 .. V-1, LSB-first within each byte
      int nbits = V - 1 - p;
      bytes.assign((nbits + 7) / 8, 0);
      int start = p + 1;
      int a = start >> 6, r = start & 63;
      int nwords = (nbits + 63) / 64;
      for (int tw = 0; tw < nwords; ++tw) {
        uint64_t c = buf[a + tw] >> r;
        if (r && a + tw + 1 < words) c |= buf[a + tw + 1] << (64 - r);
        int rem = nbits - 64 * tw;
        int nb = std::min(8, (rem + 7) / 8);
        for (int j = 0; j < nb; ++j)
          bytes[8 * tw + j] = static_cast<uint8_t>((c >> (8 * j)) & 0xff);
      }
      if (nbits & 7) {
        // zero padding bits beyond nbits in the final byte
        bytes.back() &= static_cast<uint8_t>((1u << (nbits & 7)) - 1);
      }
      if (!bytes.empty()) sha.update(bytes.data(), bytes.size());
      for (int q : setbits) buf[q >> 6] &= ~(1ull << (q & 63));
    }
    return hex_digest(sha.finish());
  }
};

std::pair<Isometry, Perm> to_isometry(const CodeGraph& g, const Perm& proj) {
  Isometry iso;
  iso.n = g.n;
  const int n = g.n;
  for (int i = 0; i < n; ++i) {
    int j = proj[3 * i] / 3;
    check(proj[3 * i + 1] / 3 == j && proj[3 * i + 2] / 3 == j,
          "generator does not respect coordinate triangles");
    iso.perm[i] = static_cast<uint8_t>(j);
    iso.theta[j] = static_cast<uint8_t>(
        s3_index(static_cast<Trit>(proj[3 * i] % 3), static_cast<Trit>(proj[3 * i + 1] % 3),
                 static_cast<Trit>(proj[3 * i + 2] % 3)));
  }
  Perm tau;
  if (g.k > 0) {
    tau.resize(g.k);
    for (int b = 0; b < g.k; ++b) tau[b] = static_cast<uint8_t>(proj[3 * n + b] - 3 * n);
    check(is_perm(tau), "generator block projection is not a permutation");
  }
  return {iso, tau};
}

}  // namespace

CodeGraph encode(const Code& c, Flavor flavor) {
  return encode_impl({&c}, false, flavor);
}

CodeGraph encode(const Collection& col, Flavor flavor) {
  std::vector<const Code*> blocks;
  for (const Code& b : col.blocks) blocks.push_back(&b);
  return encode_impl(blocks, true, flavor);
}

CanonicalCertificate canonical_certificate(const CodeGraph& g) {
  Searcher s(g);
  s.run();
  CanonicalCertificate cert;
  cert.n = g.n;
  cert.k = g.k;
  cert.flavor = g.flavor;
  cert.digest = s.digest();
  cert.aut_order = group_order(s.gens, s.proj_dim);
  cert.generators.reserve(s.gens.size());
  for (const Perm& p : s.gens) cert.generators.push_back(to_isometry(g, p));
  return cert;
}

CanonicalCertificate certificate(const Code& c, Flavor flavor) {
  CodeGraph g = encode(c, flavor);
  CanonicalCertificate cert = canonical_certificate(g);
  for (const auto& [iso, tau] : cert.generators)
    check(c.apply(iso) == c, "certificate generator does not preserve the code");
  return cert;
}

CanonicalCertificate certificate(const Collection& col, Flavor flavor) {
  CodeGraph g = encode(col, flavor);
  CanonicalCertificate cert = canonical_certificate(g);
  for (const auto& [iso, tau] : cert.generators) {
    check(tau.size() == static_cast<size_t>(col.k()), "block permutation arity");
    for (int b = 0; b < col.k(); ++b)
      check(col.blocks[b].apply(iso) == col.blocks[tau[b]],
            "certificate generator does not preserve blocks");
    if (flavor == Flavor::strong)
      check(tau[col.k() - 1] == col.k() - 1, "strong generator must fix the last block");
  }
  return cert;
}

PermGroup project_block_group(const CanonicalCertificate& cert, int k) {
  check(cert.k == k && k > 0, "certificate is not for a k-collection");
  std::vector<Perm> taus;
  for (const auto& [iso, tau] : cert.generators) taus.push_back(tau);
  if (taus.empty()) taus.push_back(perm_identity(k));
  return closure(taus, k);
}

}  // namespace tpc
