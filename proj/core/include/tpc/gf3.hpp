#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpc {

// Thrown on bad user input (file formats, CLI arguments, precondition
// violations at API boundaries).  Maps to exit code 2 in the CLI; internal
// invariant failures throw std::logic_error and map to exit code 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw UsageError(msg); }

inline void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

constexpr int kMaxLen = 13;

extern const uint32_t kPow3[kMaxLen + 1];

using Trit = uint8_t;

// ----- words ---------------------------------------------------------------

struct TernaryWord {
  uint8_t len = 0;
  std::array<Trit, kMaxLen> t{};  // coordinate 0 first

  static TernaryWord zero(int n);
  static TernaryWord from_index(int n, uint32_t idx);  // little-endian base 3
  static TernaryWord parse(int n, const std::string& s);
  static TernaryWord parse(const std::string& s);  // n from the string length

  uint32_t index() const;
  std::string str() const;  // coordinate 0 leftmost
  int weight() const;

  TernaryWord operator+(const TernaryWord& o) const;
  TernaryWord operator-(const TernaryWord& o) const;
  TernaryWord operator-() const;

  bool operator==(const TernaryWord& o) const { return len == o.len && t == o.t; }
  bool operator!=(const TernaryWord& o) const { return !(*this == o); }
  // point-index order, the order used by the text format
  bool operator<(const TernaryWord& o) const { return index() < o.index(); }
};

int hamming_distance(const TernaryWord& a, const TernaryWord& b);

// ----- index arithmetic ----------------------------------------------------

// Per-length lookup tables for computing on point indices directly.
// Indices are little-endian base 3: idx(x) = sum_i x_i * 3^i.
class Space {
 public:
  static const Space& get(int n);

  int n() const { return n_; }
  uint32_t size() const { return size_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    return add_lo_[(a % lo_) * lo_ + b % lo_] + lo_ * add_hi_[(a / lo_) * hi_ + b / lo_];
  }
  uint32_t neg(uint32_t a) const { return neg_lo_[a % lo_] + lo_ * neg_hi_[a / lo_]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  int trit(uint32_t idx, int i) const { return int(idx / kPow3[i]) % 3; }
  uint32_t with_trit(uint32_t idx, int i, int v) const {
    return idx + uint32_t(v - trit(idx, i)) * kPow3[i];
  }
  int weight(uint32_t idx) const { return weight_[idx]; }

 private:
  explicit Space(int n);
  int n_;
  uint32_t size_, lo_, hi_;
  std::vector<uint16_t> add_lo_, add_hi_, neg_lo_, neg_hi_;
  std::vector<uint8_t> weight_;
};

// ----- isometries ----------------------------------------------------------

// The 6 permutations of {0,1,2} in lexicographic order of their image tuples:
// 0:(012) 1:(021) 2:(102) 3:(120) 4:(201) 5:(210).
// Index 1 is negation, 3 is +1, 4 is +2.
extern const Trit kS3[6][3];
extern const uint8_t kS3Compose[6][6];  // kS3Compose[a][b] = a after b
extern const uint8_t kS3Inverse[6];
constexpr uint8_t kS3Neg = 1;
constexpr uint8_t kS3AddConst[3] = {0, 3, 4};

uint8_t s3_index(Trit p0, Trit p1, Trit p2);

// An automorphism of H(n,3): coordinate permutation plus one symbol
// permutation per coordinate.  Input coordinate i lands on output coordinate
// perm[i]; theta is indexed by the output coordinate.
struct Isometry {
  uint8_t n = 0;
  std::array<uint8_t, kMaxLen> perm{};
  std::array<uint8_t, kMaxLen> theta{};

  static Isometry identity(int n);
  static Isometry translation(const TernaryWord& v);
  static Isometry transposition(int n, int i, int j);
  static Isometry negation(int n);  // x -> -x

  TernaryWord apply(const TernaryWord& w) const;
  uint32_t apply_index(const Space& sp, uint32_t idx) const;
  // full point permutation; the fast path for applying one map to many words
  std::vector<uint32_t> point_map(const Space& sp) const;

  Isometry compose(const Isometry& inner) const;  // (*this)(inner(x))
  Isometry inverse() const;
  bool is_identity() const;

  bool operator==(const Isometry& o) const {
    return n == o.n && perm == o.perm && theta == o.theta;
  }
};

}  // namespace tpc
