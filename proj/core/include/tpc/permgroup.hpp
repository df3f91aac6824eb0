#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tpc {

// permutation of [0, degree) as an image vector; compose(a,b)(i) = a[b[i]]
using Perm = std::vector<uint8_t>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool is_perm(const Perm& p);
std::string perm_str(const Perm& p);              // "p(0) p(1) ... p(d-1)"
Perm parse_perm(const std::string& s, int degree);

// a subgroup of Sym(degree) given by generators plus its full element set
struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;  // sorted lexicographically; always contains id
  uint64_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
};

// breadth-first closure of the generated subgroup; degree <= 12
PermGroup closure(std::vector<Perm> gens, int degree);

struct DoubleCoset {
  Perm rep;       // lexicographically minimal element of left*rep*right
  uint64_t size;  // number of permutations in the double coset
};

// All double cosets left\Sym(9)/right by a sweep over all 9! permutations in
// lexicographic order; results are memoized per (left, right) element sets.
// The coset sizes always sum to 9! (asserted).
std::vector<DoubleCoset> double_coset_reps(const PermGroup& left,
                                           const PermGroup& right);

}  // namespace tpc
