#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace tpc {

struct CoverInstance {
  int num_cols = 0;
  std::vector<std::vector<int>> rows;

  explicit CoverInstance(int cols = 0) : num_cols(cols) {}
  // columns must be in range and distinct; empty rows are rejected
  int add_row(std::vector<int> cols);
};

struct CoverStats {
  uint64_t solutions = 0;
  uint64_t nodes = 0;  // search tree nodes, for diagnostics
};

// Enumerates all exact covers with Knuth's dancing links.  The visitor gets
// the selected row indices sorted ascending; returning false stops the
// search.  Column choice: fewest remaining rows, lowest index on ties; rows
// are tried in insertion order, so the enumeration order is deterministic.
CoverStats solve_all(const CoverInstance& inst,
                     const std::function<bool(const std::vector<int>&)>& visit);

uint64_t count_solutions(const CoverInstance& inst);

}  // namespace tpc
