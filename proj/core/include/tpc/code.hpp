#pragma once

#include <iosfwd>
#include <vector>

#include "tpc/gf3.hpp"

namespace tpc {

// A set of words of F_3^n, stored as a bitset over point indices.
class Code {
 public:
  Code() = default;
  explicit Code(int n);

  int n() const { return n_; }
  uint32_t space_size() const { return space_size_; }

  bool test(uint32_t idx) const { return bits_[idx >> 6] >> (idx & 63) & 1; }
  void insert(uint32_t idx) { bits_[idx >> 6] |= uint64_t(1) << (idx & 63); }
  void erase(uint32_t idx) { bits_[idx >> 6] &= ~(uint64_t(1) << (idx & 63)); }
  bool contains(const TernaryWord& w) const { return test(w.index()); }

  size_t size() const;
  bool empty() const { return size() == 0; }
  void clear();

  std::vector<uint32_t> members() const;
  template <class F>
  void for_each(F f) const {
    for (size_t b = 0; b < bits_.size(); ++b) {
      uint64_t w = bits_[b];
      while (w) {
        f(uint32_t(b * 64 + unsigned(__builtin_ctzll(w))));
        w &= w - 1;
      }
    }
  }

  Code apply(const std::vector<uint32_t>& point_map) const;
  Code apply(const Isometry& g) const;
  Code translated(uint32_t v) const;  // x -> x + v

  bool disjoint(const Code& o) const;
  bool subset_of(const Code& o) const;
  size_t intersection_size(const Code& o) const;
  Code set_minus(const Code& o) const;
  Code set_union(const Code& o) const;
  Code set_intersect(const Code& o) const;
  Code complement() const;

  bool operator==(const Code& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const Code& o) const { return !(*this == o); }
  // lexicographic order on sorted member lists (a proper prefix sorts first)
  bool lex_less(const Code& o) const;

  uint64_t hash(uint64_t seed) const;

  const std::vector<uint64_t>& blocks() const { return bits_; }

 private:
  int n_ = 0;
  uint32_t space_size_ = 0;
  std::vector<uint64_t> bits_;
};

// Minimum Hamming distance by pairwise scan; intended for codes up to a few
// thousand words.  Returns n+1 for codes with fewer than two words.
int min_distance(const Code& c);

// Text format:
//   # q=3 n=<n> size=<k>
//   <one codeword per line, n trit characters, coordinate 0 leftmost,
//    sorted ascending by point index>
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& c);
void write_code_file(const std::string& path, const Code& c);

}  // namespace tpc
