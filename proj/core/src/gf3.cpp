#include "tpc/gf3.hpp"

#include <mutex>

namespace tpc {

const uint32_t kPow3[kMaxLen + 1] = {1,      3,      9,      27,     81,
                                     243,    729,    2187,   6561,   19683,
                                     59049,  177147, 531441, 1594323};

// ----- words ---------------------------------------------------------------

TernaryWord TernaryWord::zero(int n) {
  if (n < 1 || n > kMaxLen) fail_usage("word length out of range");
  TernaryWord w;
  w.len = uint8_t(n);
  return w;
}

TernaryWord TernaryWord::from_index(int n, uint32_t idx) {
  TernaryWord w = zero(n);
  for (int i = 0; i < n; ++i) {
    w.t[i] = Trit(idx % 3);
    idx /= 3;
  }
  if (idx != 0) fail_usage("point index out of range");
  return w;
}

TernaryWord TernaryWord::parse(int n, const std::string& s) {
  if (int(s.size()) != n) fail_usage("word '" + s + "' has wrong length");
  TernaryWord w = zero(n);
  for (int i = 0; i < n; ++i) {
    if (s[i] < '0' || s[i] > '2') fail_usage("word '" + s + "' has a non-trit character");
    w.t[i] = Trit(s[i] - '0');
  }
  return w;
}

TernaryWord TernaryWord::parse(const std::string& s) { return parse(int(s.size()), s); }

uint32_t TernaryWord::index() const {
  uint32_t idx = 0;
  for (int i = len - 1; i >= 0; --i) idx = idx * 3 + t[i];
  return idx;
}

std::string TernaryWord::str() const {
  std::string s(len, '0');
  for (int i = 0; i < len; ++i) s[i] = char('0' + t[i]);
  return s;
}

int TernaryWord::weight() const {
  int w = 0;
  for (int i = 0; i < len; ++i) w += t[i] != 0;
  return w;
}

TernaryWord TernaryWord::operator+(const TernaryWord& o) const {
  check(len == o.len, "word length mismatch");
  TernaryWord r = *this;
  for (int i = 0; i < len; ++i) r.t[i] = Trit((t[i] + o.t[i]) % 3);
  return r;
}

TernaryWord TernaryWord::operator-(const TernaryWord& o) const {
  check(len == o.len, "word length mismatch");
  TernaryWord r = *this;
  for (int i = 0; i < len; ++i) r.t[i] = Trit((3 + t[i] - o.t[i]) % 3);
  return r;
}

TernaryWord TernaryWord::operator-() const {
  TernaryWord r = *this;
  for (int i = 0; i < len; ++i) r.t[i] = Trit((3 - t[i]) % 3);
  return r;
}

int hamming_distance(const TernaryWord& a, const TernaryWord& b) {
  check(a.len == b.len, "word length mismatch");
  int d = 0;
  for (int i = 0; i < a.len; ++i) d += a.t[i] != b.t[i];
  return d;
}

// ----- Space ---------------------------------------------------------------

Space::Space(int n) : n_(n) {
  size_ = kPow3[n];
  int lo_digits = (n + 1) / 2;
  lo_ = kPow3[lo_digits];
  hi_ = kPow3[n - lo_digits];
  add_lo_.resize(size_t(lo_) * lo_);
  add_hi_.resize(size_t(hi_) * hi_);
  neg_lo_.resize(lo_);
  neg_hi_.resize(hi_);
  auto fill = [](std::vector<uint16_t>& add, std::vector<uint16_t>& neg, uint32_t m,
                 int digits) {
    for (uint32_t a = 0; a < m; ++a) {
      uint32_t na = 0;
      for (int i = digits - 1; i >= 0; --i) na = na * 3 + (3 - a / kPow3[i] % 3) % 3;
      neg[a] = uint16_t(na);
      for (uint32_t b = 0; b <= a; ++b) {
        uint32_t s = 0;
        for (int i = digits - 1; i >= 0; --i)
          s = s * 3 + (a / kPow3[i] + b / kPow3[i]) % 3;
        add[a * m + b] = add[b * m + a] = uint16_t(s);
      }
    }
  };
  fill(add_lo_, neg_lo_, lo_, lo_digits);
  fill(add_hi_, neg_hi_, hi_, n - lo_digits);
  weight_.resize(size_);
  for (uint32_t x = 1; x < size_; ++x) weight_[x] = uint8_t(weight_[x / 3] + (x % 3 != 0));
}

const Space& Space::get(int n) {
  if (n < 1 || n > kMaxLen) fail_usage("space dimension out of range");
  static std::array<const Space*, kMaxLen + 1> cache{};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n]) cache[n] = new Space(n);
  return *cache[n];
}

// ----- isometries ----------------------------------------------------------

const Trit kS3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

uint8_t s3_index(Trit p0, Trit p1, Trit p2) {
  for (uint8_t k = 0; k < 6; ++k)
    if (kS3[k][0] == p0 && kS3[k][1] == p1 && kS3[k][2] == p2) return k;
  throw std::logic_error("not a permutation of {0,1,2}");
}

const uint8_t kS3Compose[6][6] = {
    {0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
    {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0}};
const uint8_t kS3Inverse[6] = {0, 1, 2, 4, 3, 5};

Isometry Isometry::identity(int n) {
  if (n < 1 || n > kMaxLen) fail_usage("isometry length out of range");
  Isometry g;
  g.n = uint8_t(n);
  for (int i = 0; i < n; ++i) g.perm[i] = uint8_t(i);
  return g;
}

Isometry Isometry::translation(const TernaryWord& v) {
  Isometry g = identity(v.len);
  for (int i = 0; i < v.len; ++i) g.theta[i] = kS3AddConst[v.t[i]];
  return g;
}

Isometry Isometry::transposition(int n, int i, int j) {
  Isometry g = identity(n);
  check(i >= 0 && i < n && j >= 0 && j < n, "transposition coordinate out of range");
  std::swap(g.perm[i], g.perm[j]);
  return g;
}

Isometry Isometry::negation(int n) {
  Isometry g = identity(n);
  for (int i = 0; i < n; ++i) g.theta[i] = kS3Neg;
  return g;
}

TernaryWord Isometry::apply(const TernaryWord& w) const {
  check(w.len == n, "isometry/word length mismatch");
  TernaryWord r = TernaryWord::zero(n);
  for (int i = 0; i < n; ++i) r.t[perm[i]] = kS3[theta[perm[i]]][w.t[i]];
  return r;
}

uint32_t Isometry::apply_index(const Space& sp, uint32_t idx) const {
  check(sp.n() == n, "isometry/space length mismatch");
  uint32_t r = 0;
  for (int i = 0; i < n; ++i)
    r += uint32_t(kS3[theta[perm[i]]][idx / kPow3[i] % 3]) * kPow3[perm[i]];
  return r;
}

std::vector<uint32_t> Isometry::point_map(const Space& sp) const {
  check(sp.n() == n, "isometry/space length mismatch");
  // build incrementally one coordinate at a time: O(3^n * n) -> O(3^n)
  std::vector<uint32_t> map(sp.size(), 0);
  for (int i = 0; i < n; ++i) {
    uint32_t p3 = kPow3[i], out = kPow3[perm[i]];
    const Trit* th = kS3[theta[perm[i]]];
    if (i == 0) {
      for (uint32_t x = 0; x < sp.size(); ++x) map[x] = uint32_t(th[x % 3]) * out;
    } else {
      for (uint32_t x = 0; x < sp.size(); ++x) map[x] += uint32_t(th[x / p3 % 3]) * out;
    }
  }
  return map;
}

Isometry Isometry::compose(const Isometry& inner) const {
  check(n == inner.n, "isometry length mismatch");
  Isometry r;
  r.n = n;
  for (int i = 0; i < n; ++i) {
    uint8_t c = inner.perm[i], d = perm[c];
    r.perm[i] = d;
    r.theta[d] = kS3Compose[theta[d]][inner.theta[c]];
  }
  return r;
}

Isometry Isometry::inverse() const {
  Isometry r;
  r.n = n;
  for (int i = 0; i < n; ++i) {
    r.perm[perm[i]] = uint8_t(i);
    r.theta[i] = kS3Inverse[theta[perm[i]]];
  }
  return r;
}

bool Isometry::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (perm[i] != i || theta[i] != 0) return false;
  return true;
}

}  // namespace tpc
