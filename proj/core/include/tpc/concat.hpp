#pragma once

#include <vector>

#include "tpc/code.hpp"
#include "tpc/collection.hpp"
#include "tpc/gf3.hpp"
#include "tpc/permgroup.hpp"

namespace tpc {

// Concatenation of a partition of the length-9 zero-sum MDS host into nine
// tiling codes (inner blocks, coordinates 0-8) with a partition of the
// length-4 space into nine perfect codes (outer blocks, coordinates 9-12):
//   D = union over i of  C_i x P_{tau(i)}.
// The result is a 1-perfect code of length 13.
Code build_concatenated(const Collection& cbar, const Collection& pbar,
                        const Perm& tau);

// Representatives of the double cosets T(pbar)\Sym(9)/T(cbar), where T(.) is
// the block-permutation group realized by the automorphisms of a partition.
// Taus inside one coset always produce equivalent codes.
std::vector<Perm> reduced_taus(const Collection& cbar, const Collection& pbar);

// A recovered concatenation structure: the nine inner coordinates, both
// partitions with lexicographically sorted blocks, the block pairing, and
// the isometry carrying the standard build back onto the original code:
//   build_concatenated(cbar, pbar, tau).apply(embed) == code.
struct ConcatStructure {
  std::vector<int> support;
  Collection cbar;
  Collection pbar;
  Perm tau;
  Isometry embed;
};

// Every concatenation structure of a length-13 code, one per valid inner
// support.  Empty when the code is not concatenated; two or more entries
// mean the code is multi-concatenated.
std::vector<ConcatStructure> concat_supports(const Code& code);

// The partition of `ambient` into the cosets of a linear code tiling it.
Collection coset_partition(const Code& code, const Code& ambient);

}  // namespace tpc
