#include "tpc/collection.hpp"

#include <fstream>
#include <sstream>

#include "tpc/gf3.hpp"

namespace tpc {

Collection::Collection(std::vector<Code> b) : blocks(std::move(b)) {
  if (blocks.empty()) fail_usage("collection: needs at least one block");
  for (const Code& c : blocks)
    if (c.n() != blocks[0].n()) fail_usage("collection: mixed code lengths");
}

int Collection::length() const {
  if (blocks.empty()) fail_usage("collection: empty");
  return blocks[0].n();
}

bool Collection::pairwise_disjoint() const {
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j)
      if (!blocks[i].disjoint(blocks[j])) return false;
  return true;
}

Code Collection::merged() const {
  Code u(length());
  for (const Code& c : blocks) u = u.set_union(c);
  return u;
}

void write_collection(std::ostream& os, const Collection& col) {
  os << "# collection k=" << col.k() << "\n";
  for (const Code& c : col.blocks) write_code(os, c);
}

Collection read_collection(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) fail_usage("collection: empty input");
  int k = 0;
  if (sscanf(header.c_str(), "# collection k=%d", &k) != 1 || k < 1 || k > 1000)
    fail_usage("collection: bad header: " + header);
  std::vector<Code> blocks;
  blocks.reserve(k);
  for (int i = 0; i < k; ++i) blocks.push_back(read_code(is));
  return Collection(std::move(blocks));
}

void write_collection_file(const std::string& path, const Collection& col) {
  std::ofstream f(path);
  if (!f) fail_usage("cannot open for writing: " + path);
  write_collection(f, col);
}

Collection read_collection_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail_usage("cannot open: " + path);
  return read_collection(f);
}

}  // namespace tpc
