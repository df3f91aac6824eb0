#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "tpc/code.hpp"
#include "tpc/collection.hpp"
#include "tpc/permgroup.hpp"

namespace tpc {

// Equivalence flavors, realized purely by vertex coloring:
//   full        - coordinate permutations + arbitrary symbol permutations
//   monomial    - symbol permutations must fix 0 (object must contain 0)
//   permutation - coordinate permutations only
//   strong      - collections only: the last block must map to itself
enum class Flavor { full, monomial, permutation, strong };

Flavor parse_flavor(const std::string& s);
const char* flavor_name(Flavor f);

// Colored graph encoding a code or a collection.
// Vertex layout: 3n position-value vertices (vertex 3i+a is (coordinate i,
// value a)), then one vertex per codeword grouped by block (words ascending
// by point index), then one vertex per block for collections.
// Edges: a triangle per coordinate; codeword w -- (i, w_i); codeword -- its
// block vertex.
struct CodeGraph {
  int n = 0;
  int k = 0;  // block count; 0 for a plain code
  Flavor flavor = Flavor::full;
  int num_vertices = 0;
  int num_colors = 0;
  std::vector<int> color;
  std::vector<uint32_t> adj_off;
  std::vector<uint32_t> adj;
  std::vector<uint32_t> word_of;  // codeword vertex index (from codeword_base) -> point
  std::vector<int> block_of;
  int codeword_base = 0;
  int block_base = 0;
};

CodeGraph encode(const Code& c, Flavor flavor);
CodeGraph encode(const Collection& col, Flavor flavor);

// Fingerprint with equal digests exactly for equivalent objects (under the
// encoded flavor), plus the automorphism group.
struct CanonicalCertificate {
  std::string digest;  // 64 lowercase hex chars
  mpz_class aut_order;
  int n = 0;
  int k = 0;
  Flavor flavor = Flavor::full;
  // automorphisms as (isometry, block permutation); block perm is empty for
  // plain codes
  std::vector<std::pair<Isometry, Perm>> generators;
};

CanonicalCertificate canonical_certificate(const CodeGraph& g);

CanonicalCertificate certificate(const Code& c, Flavor flavor);
CanonicalCertificate certificate(const Collection& col, Flavor flavor);

// The group of block permutations realized by the automorphisms of a
// k-collection (image of the tau-projection), as a closed PermGroup.
PermGroup project_block_group(const CanonicalCertificate& cert, int k);

}  // namespace tpc
