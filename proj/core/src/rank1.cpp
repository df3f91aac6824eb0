#include "tpc/rank1.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nlohmann/json.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"

namespace tpc {

int rank1_length(int m) {
  if (m < 2 || m > 3) fail_usage("rank1 construction supports m in {2,3}");
  return int(kPow3[m] - 1) / 2;
}

int rank1_arity(int m) { return (rank1_length(m) - 1) / 3; }

std::vector<TernaryWord> rank1_mu_words(int m) {
  Code cstar = hamming_code(m - 1);
  std::vector<TernaryWord> mus;
  cstar.for_each([&](uint32_t idx) { mus.push_back(TernaryWord::from_index(cstar.n(), idx)); });
  return mus;
}

QuasigroupAssignment QuasigroupAssignment::uniform(int m) {
  QuasigroupAssignment a;
  a.m = m;
  int t = rank1_arity(m);
  a.entries.assign(rank1_mu_words(m).size(), AffineQuasigroup::from_id(t, 3));
  return a;
}

QuasigroupAssignment QuasigroupAssignment::random(int m, std::mt19937_64& rng) {
  QuasigroupAssignment a;
  a.m = m;
  int t = rank1_arity(m);
  size_t count = rank1_mu_words(m).size();
  std::uniform_int_distribution<int> dist(0, (3 << t) - 1);
  for (size_t k = 0; k < count; ++k)
    a.entries.push_back(AffineQuasigroup::from_id(t, dist(rng)));
  return a;
}

QuasigroupAssignment QuasigroupAssignment::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail_usage(std::string("assignment json: ") + e.what());
  }
  QuasigroupAssignment a;
  try {
    a.m = j.at("m").get<int>();
    int t = rank1_arity(a.m);
    std::vector<TernaryWord> mus = rank1_mu_words(a.m);
    std::map<uint32_t, size_t> mu_pos;
    for (size_t k = 0; k < mus.size(); ++k) mu_pos[mus[k].index()] = k;
    std::vector<AffineQuasigroup> entries(mus.size());
    std::vector<bool> seen(mus.size(), false);
    for (const auto& e : j.at("entries")) {
      TernaryWord mu = TernaryWord::parse(t, e.at("mu").get<std::string>());
      auto it = mu_pos.find(mu.index());
      if (it == mu_pos.end()) fail_usage("assignment entry mu=" + mu.str() + " is not an inner codeword");
      if (seen[it->second]) fail_usage("duplicate assignment entry mu=" + mu.str());
      seen[it->second] = true;
      AffineQuasigroup q;
      q.arity = uint8_t(t);
      auto coeffs = e.at("coeffs").get<std::vector<int>>();
      if (int(coeffs.size()) != t) fail_usage("assignment entry has wrong coeff count");
      for (int i = 0; i < t; ++i) {
        if (coeffs[i] != 1 && coeffs[i] != 2) fail_usage("assignment coeffs must be 1 or 2");
        q.coeff[i] = uint8_t(coeffs[i]);
      }
      int cst = e.at("const").get<int>();
      if (cst < 0 || cst > 2) fail_usage("assignment const must be a trit");
      q.cst = uint8_t(cst);
      entries[it->second] = q;
    }
    for (bool s : seen)
      if (!s) fail_usage("assignment is missing entries");
    a.entries = std::move(entries);
  } catch (const nlohmann::json::exception& e) {
    fail_usage(std::string("assignment json: ") + e.what());
  }
  return a;
}

std::string QuasigroupAssignment::to_json() const {
  std::vector<TernaryWord> mus = rank1_mu_words(m);
  nlohmann::json j;
  j["m"] = m;
  j["entries"] = nlohmann::json::array();
  for (size_t k = 0; k < mus.size(); ++k) {
    nlohmann::json e;
    e["mu"] = mus[k].str();
    e["coeffs"] = std::vector<int>(entries[k].coeff.begin(),
                                   entries[k].coeff.begin() + entries[k].arity);
    e["const"] = int(entries[k].cst);
    j["entries"].push_back(e);
  }
  return j.dump(2) + "\n";
}

// ----- construction ----------------------------------------------------------

Code rank1_build(int m, const QuasigroupAssignment& asg) {
  if (asg.m != m) fail_usage("rank1_build: assignment built for a different m");
  int n = rank1_length(m);
  int t = rank1_arity(m);
  std::vector<TernaryWord> mus = rank1_mu_words(m);
  if (asg.entries.size() != mus.size()) fail_usage("rank1_build: wrong entry count");
  for (const AffineQuasigroup& q : asg.entries)
    if (q.arity != t) fail_usage("rank1_build: wrong quasigroup arity");

  Code c(n);
  uint32_t combos = kPow3[2 * t];
  for (size_t k = 0; k < mus.size(); ++k) {
    const TernaryWord& mu = mus[k];
    const AffineQuasigroup& f = asg.entries[k];
    for (uint32_t v = 0; v < combos; ++v) {
      uint32_t idx = 0;
      uint8_t z[4];
      uint32_t rest = v;
      for (int i = 0; i < t; ++i) {
        uint32_t x0 = rest % 3, x1 = rest / 3 % 3;
        rest /= 9;
        uint32_t x2 = (6 + mu.t[i] - x0 - x1) % 3;
        z[i] = uint8_t((3 + x1 - x0) % 3);
        idx += x0 * kPow3[3 * i] + x1 * kPow3[3 * i + 1] + x2 * kPow3[3 * i + 2];
      }
      idx += uint32_t(f.eval(z)) * kPow3[n - 1];
      c.insert(idx);
    }
  }
  check(c.size() == kPow3[n - m], "rank1_build: cap sizes must tile the code");
  return c;
}

QuasigroupAssignment recover_assignment(int m, const Code& c) {
  int n = rank1_length(m);
  if (c.n() != n) fail_usage("recover_assignment: wrong code length");
  int t = rank1_arity(m);
  std::vector<TernaryWord> mus = rank1_mu_words(m);
  std::map<uint32_t, size_t> mu_pos;
  for (size_t k = 0; k < mus.size(); ++k) mu_pos[mus[k].index()] = k;

  // every codeword's triple sums must form an inner codeword
  bool shape_ok = true;
  c.for_each([&](uint32_t idx) {
    if (!shape_ok) return;
    uint32_t mu_idx = 0;
    for (int i = t - 1; i >= 0; --i)
      mu_idx = mu_idx * 3 +
               (idx / kPow3[3 * i] + idx / kPow3[3 * i + 1] + idx / kPow3[3 * i + 2]) % 3;
    if (!mu_pos.count(mu_idx)) shape_ok = false;
  });
  if (!shape_ok) fail_usage("recover_assignment: code is not in cap normal form");

  QuasigroupAssignment asg;
  asg.m = m;
  auto probe = [&](const TernaryWord& mu, const uint8_t* z) -> int {
    // word with x_{3i} = 0, x_{3i+1} = z_i, x_{3i+2} = mu_i - z_i
    uint32_t idx = 0;
    for (int i = 0; i < t; ++i)
      idx += uint32_t(z[i]) * kPow3[3 * i + 1] +
             uint32_t((3 + mu.t[i] - z[i]) % 3) * kPow3[3 * i + 2];
    int found = -1;
    for (uint32_t v = 0; v < 3; ++v)
      if (c.test(idx + v * kPow3[n - 1])) {
        if (found >= 0) fail_usage("recover_assignment: code is not in cap normal form");
        found = int(v);
      }
    if (found < 0) fail_usage("recover_assignment: code is not in cap normal form");
    return found;
  };
  for (const TernaryWord& mu : mus) {
    uint8_t z[4] = {0, 0, 0, 0};
    AffineQuasigroup q;
    q.arity = uint8_t(t);
    q.cst = uint8_t(probe(mu, z));
    for (int i = 0; i < t; ++i) {
      z[i] = 1;
      int ci = (3 + probe(mu, z) - q.cst) % 3;
      z[i] = 0;
      if (ci != 1 && ci != 2) fail_usage("recover_assignment: cap layer is not a quasigroup");
      q.coeff[i] = uint8_t(ci);
    }
    asg.entries.push_back(q);
  }
  if (rank1_build(m, asg) != c) fail_usage("recover_assignment: code is not in cap normal form");
  return asg;
}

// ----- counting ----------------------------------------------------------------

namespace {
mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class gl3_order(int k) {
  // |GL_3(k)| = prod_{i<k} (3^k - 3^i)
  mpz_class q = mpz_pow(3, k), r = 1;
  for (int i = 0; i < k; ++i) r *= q - mpz_pow(3, i);
  return r;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b, const char* what) {
  check(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0, what);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
}  // namespace

mpz_class count_fixed_span(int m) {
  if (m < 2) fail_usage("count_fixed_span: m must be at least 2");
  // t = (n-1)/3 for n = (3^m-1)/2
  unsigned long t = mpz_class(mpz_class((mpz_pow(3, m) - 1) / 2 - 1) / 3).get_ui();
  // (3 * 2^t)^(3^(t-m+1)) - 6^t / 3^(m-2)
  mpz_class total = mpz_pow(3 * mpz_pow(2, t), mpz_pow(3, t - (m - 1)).get_ui());
  mpz_class hamming = exact_div(mpz_pow(6, t), mpz_pow(3, m - 2),
                                "count_fixed_span: subtrahend must be integral");
  return total - hamming;
}

mpz_class count_all(int m) {
  if (m < 2) fail_usage("count_all: m must be at least 2");
  mpz_class n = (mpz_pow(3, m) - 1) / 2;
  unsigned long nu = n.get_ui(), t = mpz_class((n - 1) / 3).get_ui();
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), nu);
  num *= mpz_pow(6, nu);
  mpz_class den = gl3_order(m - 1) * mpz_pow(6, t) * mpz_pow(3, nu - m + 1);
  return exact_div(num, den, "count_all: group order must divide") * count_fixed_span(m);
}

mpz_class count_classes_lower_bound(int m) {
  if (m < 2) fail_usage("count_classes_lower_bound: m must be at least 2");
  mpz_class n = (mpz_pow(3, m) - 1) / 2;
  unsigned long nu = n.get_ui(), t = mpz_class((n - 1) / 3).get_ui();
  mpz_class den = gl3_order(m - 1) * mpz_pow(2, t) * mpz_pow(3, nu - m + 1);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), count_fixed_span(m).get_mpz_t(), den.get_mpz_t());
  return q;
}

// ----- switchings ----------------------------------------------------------------

Switch Switch::make(const Isometry& iso) {
  int moved_i = -1, moved_j = -1;
  for (int k = 0; k < iso.n; ++k) {
    if (iso.perm[k] == k && iso.theta[k] == 0) continue;
    if (moved_i < 0)
      moved_i = k;
    else if (moved_j < 0)
      moved_j = k;
    else
      fail_usage("switch must move at most two coordinates");
  }
  if (moved_i < 0) fail_usage("switch must not be the identity");
  if (moved_j < 0) moved_j = moved_i;
  Switch s;
  s.iso = iso;
  s.i = moved_i;
  s.j = moved_j;
  return s;
}

std::vector<Code> find_switchings(const Code& c, const Switch& beta, int max_components) {
  int n = c.n();
  const Space& sp = Space::get(n);
  Code d = c.apply(beta.iso);
  std::vector<uint32_t> cm = c.members(), dm = d.members();

  // union of both codes with membership sides
  std::vector<uint32_t> all;
  all.reserve(cm.size() + dm.size());
  for (uint32_t x : cm) all.push_back(x);
  for (uint32_t x : dm)
    if (!c.test(x)) all.push_back(x);
  std::sort(all.begin(), all.end());
  auto id_of = [&](uint32_t x) {
    return uint32_t(std::lower_bound(all.begin(), all.end(), x) - all.begin());
  };
  Code u = c.set_union(d);

  // union-find over words of U joined at distance 1 or 2
  std::vector<uint32_t> uf(all.size());
  for (size_t i = 0; i < uf.size(); ++i) uf[i] = uint32_t(i);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (size_t i = 0; i < all.size(); ++i) {
    uint32_t x = all[i];
    auto join = [&](uint32_t y) {
      if (y == x || !u.test(y)) return;
      uint32_t a = find(uint32_t(i)), b = find(id_of(y));
      if (a != b) uf[a] = b;
    };
    for (int p = 0; p < n; ++p) {
      int vp = sp.trit(x, p);
      for (int dp = 1; dp < 3; ++dp) {
        uint32_t y1 = sp.with_trit(x, p, (vp + dp) % 3);
        join(y1);
        for (int q = p + 1; q < n; ++q) {
          int vq = sp.trit(y1, q);
          for (int dq = 1; dq < 3; ++dq) join(sp.with_trit(y1, q, (vq + dq) % 3));
        }
      }
    }
  }
  // a word is isolated iff its component has size 1
  std::vector<int> comp_size(all.size(), 0);
  for (size_t i = 0; i < all.size(); ++i) ++comp_size[find(uint32_t(i))];
  std::vector<uint32_t> comp_roots;
  for (size_t i = 0; i < all.size(); ++i)
    if (find(uint32_t(i)) == i && comp_size[i] > 1) comp_roots.push_back(uint32_t(i));
  std::sort(comp_roots.begin(), comp_roots.end());
  if (int(comp_roots.size()) > max_components)
    fail_usage("find_switchings: too many switching components");

  std::vector<uint32_t> root_pos(all.size(), UINT32_MAX);
  for (size_t k = 0; k < comp_roots.size(); ++k) root_pos[comp_roots[k]] = uint32_t(k);

  Code isolated(n);
  std::vector<std::vector<uint32_t>> side_c(comp_roots.size()), side_d(comp_roots.size());
  for (size_t i = 0; i < all.size(); ++i) {
    uint32_t r = find(uint32_t(i));
    if (comp_size[r] == 1) {
      isolated.insert(all[i]);
    } else if (c.test(all[i])) {
      side_c[root_pos[r]].push_back(all[i]);
    } else {
      side_d[root_pos[r]].push_back(all[i]);
    }
  }

  std::vector<Code> result;
  for (uint32_t mask = 0; mask < (uint32_t(1) << comp_roots.size()); ++mask) {
    size_t total = isolated.size();
    for (size_t k = 0; k < comp_roots.size(); ++k)
      total += (mask >> k & 1) ? side_d[k].size() : side_c[k].size();
    if (total != c.size()) continue;
    Code cand = isolated;
    for (size_t k = 0; k < comp_roots.size(); ++k)
      for (uint32_t x : (mask >> k & 1) ? side_d[k] : side_c[k]) cand.insert(x);
    if (is_1perfect(cand)) result.push_back(cand);
  }
  return result;
}

std::vector<SwitchStep> switching_path(const Code& c1, const Code& c2, int m) {
  int n = rank1_length(m);
  QuasigroupAssignment cur = recover_assignment(m, c1);
  QuasigroupAssignment dst = recover_assignment(m, c2);
  std::vector<TernaryWord> mus = rank1_mu_words(m);

  std::vector<SwitchStep> steps;
  for (size_t k = 0; k < mus.size(); ++k) {
    for (auto [arg, sym] : gamma_path(cur.entries[k], dst.entries[k])) {
      cur.entries[k] = gamma_transform(cur.entries[k], arg, sym);
      int mu_i = mus[k].t[arg];
      Isometry iso = Isometry::transposition(n, 3 * arg + 1, 3 * arg + 2);
      iso.theta[3 * arg + 1] = kS3AddConst[(2 * sym + 3 - mu_i) % 3];
      iso.theta[3 * arg + 2] = kS3AddConst[(sym + mu_i) % 3];
      SwitchStep step{int(k), arg, sym, Switch::make(iso), cur, rank1_build(m, cur)};
      steps.push_back(std::move(step));
    }
  }
  check(steps.empty() ? c1 == c2 : steps.back().code == c2,
        "switching_path must terminate at the target code");
  return steps;
}

}  // namespace tpc
