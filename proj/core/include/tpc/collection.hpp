#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tpc/code.hpp"

namespace tpc {

// An ordered tuple of pairwise-disjoint codes over one space.
struct Collection {
  std::vector<Code> blocks;

  Collection() = default;
  explicit Collection(std::vector<Code> b);

  int k() const { return int(blocks.size()); }
  int length() const;
  bool pairwise_disjoint() const;
  // union of all blocks
  Code merged() const;

  bool operator==(const Collection& o) const { return blocks == o.blocks; }
};

// Text format: "# collection k=<k>" followed by k code blocks in the
// standard code text format.
void write_collection(std::ostream& os, const Collection& col);
Collection read_collection(std::istream& is);
void write_collection_file(const std::string& path, const Collection& col);
Collection read_collection_file(const std::string& path);

}  // namespace tpc
