#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tpc/code.hpp"
#include "tpc/collection.hpp"

namespace tpc {

// ---------------------------------------------------------------------------
// Partial-code ladder inside the zero-sum MDS host of length 9.
//
// A level-i partial code C satisfies
//   (I)   0 in C and C is a subset of the host (all coordinate sums zero),
//   (II)  every codeword has weight <= i,
//   (III) every word of weight <= i-1 outside the host has exactly one
//         neighbour in C,
//   (IV)  min distance >= 3.
// Level 9 partial codes are exactly the codes whose punctured radius-1 balls
// tile the complement of the host.

struct PartialCheck {
  bool ok = true;
  std::string reason;  // empty when ok
};

PartialCheck check_partial(const Code& c, int level);

// All valid level+1 extensions of a valid level partial code, enumerated via
// an exact cover over the uncovered weight-level words outside the host.
// The visitor receives the sorted member list of each extension; the return
// value is the number of extensions.  Deterministic order.
uint64_t extend_partial_visit(
    const Code& c, int level,
    const std::function<void(const std::vector<uint16_t>&)>& visit);
std::vector<Code> extend_partial(const Code& c, int level);

// One rung of the ladder: class representatives of the level-i partial codes
// together with their monomial stabilizer data.
struct LadderLevel {
  int level = 0;
  std::vector<Code> reps;
  std::vector<uint64_t> aut_orders;  // monomial stabilizer order per rep
  std::vector<uint64_t> children;    // child classes rooted at this rep
  uint64_t total_codes = 0;          // partial codes of this level (all, not classes)
};

// Full classification of the tiling codes in the length-9 host.
struct RmLikeClasses {
  std::vector<LadderLevel> levels;  // levels 3..9

  // level-9 monomial equivalence classes, in ladder order
  std::vector<Code> mon_reps;
  std::vector<uint64_t> mon_auts;

  // classes under the full isometry group, ordered by descending aut order
  std::vector<int> full_class_of;  // monomial class -> full class
  std::vector<Code> full_reps;
  std::vector<uint64_t> full_auts;
  std::vector<std::string> full_digests;

  // classes under coordinate permutations alone
  std::vector<uint64_t> perm_auts;

  uint64_t codes_with_zero = 0;               // level-9 codes containing 0
  uint64_t codes_in_host = 0;                 // all level-9 codes in the host
  std::vector<uint64_t> class_codes_in_host;  // per full class
};

RmLikeClasses classify_rm_like();

// Explicit orbit of one full class: every code of the class inside the host,
// compressed to one representative per translation family ({F + v : v in
// host} modulo periods).  family_translations[f] lists one translation per
// distinct code of family f, so {rep + v} enumerates the class exactly once.
struct ClassOrbit {
  uint64_t codes_with_zero = 0;
  uint64_t codes_in_host = 0;
  uint64_t kernel_size = 0;
  std::vector<std::vector<uint16_t>> family_reps;
  std::vector<std::vector<uint16_t>> family_translations;
};

ClassOrbit enumerate_class_orbit(const std::vector<Code>& mon_reps);
ClassOrbit enumerate_class_orbit(const RmLikeClasses& rm, int class_id);
std::vector<ClassOrbit> class_orbits(const RmLikeClasses& rm);

// ---------------------------------------------------------------------------
// Collections of k pairwise disjoint tiling codes in the host, classified up
// to an isometry plus a block permutation.  types are sorted full-class ids.

struct CollectionClasses {
  int k = 0;
  std::vector<Collection> reps;
  std::vector<std::string> digests;
  std::vector<uint64_t> aut_orders;
  std::vector<std::vector<int>> types;
  std::vector<uint64_t> merged;  // strong-equivalence classes per class
  // class counts per sorted type, lex order
  std::vector<std::pair<std::vector<int>, uint64_t>> by_type;
};

// classes of size 1 (one per full class)
CollectionClasses collection_base(const RmLikeClasses& rm);
// classes of size prev.k + 1 built from the size-prev.k classes; supports
// resuming a batch run from a persisted level
CollectionClasses classify_collections_step(const RmLikeClasses& rm,
                                            const std::vector<ClassOrbit>& orbits,
                                            const CollectionClasses& prev);
std::vector<CollectionClasses> classify_collections(
    const RmLikeClasses& rm, int max_k,
    const std::function<void(const CollectionClasses&)>& done_level = {});

// ---------------------------------------------------------------------------
// Length-4 catalogue: every 1-perfect code of length 4, every partition of
// the space into such codes, and the partition classes under the full
// isometry group.  Classes are ordered by ascending orbit size.

struct P4Result {
  std::vector<Code> codes;                   // lex order
  std::vector<std::vector<int>> partitions;  // 9 code indices each, ascending
  std::vector<int> partition_class;
  std::vector<std::string> class_digests;
  std::vector<uint64_t> class_sizes;
  std::vector<uint64_t> class_auts;
  std::vector<Collection> class_reps;
};

P4Result classify_p4();

}  // namespace tpc
