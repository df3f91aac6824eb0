#include "tpc/exact_cover.hpp"

#include <algorithm>

#include "tpc/gf3.hpp"

namespace tpc {

int CoverInstance::add_row(std::vector<int> cols) {
  if (cols.empty()) fail_usage("exact cover: empty row");
  std::sort(cols.begin(), cols.end());
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 0 || cols[i] >= num_cols) fail_usage("exact cover: column out of range");
    if (i && cols[i] == cols[i - 1]) fail_usage("exact cover: duplicate column in row");
  }
  rows.push_back(std::move(cols));
  return int(rows.size()) - 1;
}

namespace {

// classic dancing-links node arena
struct Dlx {
  struct Node {
    int left, right, up, down;
    int col;   // column header index for data nodes
    int row;   // row id for data nodes, -1 for headers
  };
  std::vector<Node> nodes;
  std::vector<int> col_size;
  int head;

  explicit Dlx(const CoverInstance& inst) {
    int nc = inst.num_cols;
    col_size.assign(nc, 0);
    head = nc;  // nodes 0..nc-1 are column headers, nc is the root
    nodes.resize(nc + 1);
    for (int c = 0; c <= nc; ++c) {
      nodes[c].left = (c + nc) % (nc + 1);
      nodes[c].right = (c + 1) % (nc + 1);
      nodes[c].up = nodes[c].down = c;
      nodes[c].col = c;
      nodes[c].row = -1;
    }
    for (size_t r = 0; r < inst.rows.size(); ++r) {
      int first = -1;
      for (int c : inst.rows[r]) {
        int id = int(nodes.size());
        Node nd;
        nd.col = c;
        nd.row = int(r);
        nd.up = nodes[c].up;
        nd.down = c;
        nodes[nodes[c].up].down = id;
        nodes[c].up = id;
        ++col_size[c];
        if (first < 0) {
          nd.left = nd.right = id;
          first = id;
        } else {
          nd.left = nodes[first].left;
          nd.right = first;
          nodes[nodes[first].left].right = id;
          nodes[first].left = id;
        }
        nodes.push_back(nd);
      }
    }
  }

  void cover(int c) {
    nodes[nodes[c].right].left = nodes[c].left;
    nodes[nodes[c].left].right = nodes[c].right;
    for (int i = nodes[c].down; i != c; i = nodes[i].down)
      for (int j = nodes[i].right; j != i; j = nodes[j].right) {
        nodes[nodes[j].down].up = nodes[j].up;
        nodes[nodes[j].up].down = nodes[j].down;
        --col_size[nodes[j].col];
      }
  }

  void uncover(int c) {
    for (int i = nodes[c].up; i != c; i = nodes[i].up)
      for (int j = nodes[i].left; j != i; j = nodes[j].left) {
        ++col_size[nodes[j].col];
        nodes[nodes[j].down].up = j;
        nodes[nodes[j].up].down = j;
      }
    nodes[nodes[c].right].left = c;
    nodes[nodes[c].left].right = c;
  }
};

}  // namespace

CoverStats solve_all(const CoverInstance& inst,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  CoverStats stats;
  Dlx dlx(inst);
  std::vector<int> chosen;
  bool stop = false;

  std::function<void()> rec = [&]() {
    if (stop) return;
    ++stats.nodes;
    if (dlx.nodes[dlx.head].right == dlx.head) {
      ++stats.solutions;
      std::vector<int> sol = chosen;
      std::sort(sol.begin(), sol.end());
      if (!visit(sol)) stop = true;
      return;
    }
    int best = -1;
    for (int c = dlx.nodes[dlx.head].right; c != dlx.head; c = dlx.nodes[c].right)
      if (best < 0 || dlx.col_size[c] < dlx.col_size[best]) best = c;
    if (dlx.col_size[best] == 0) return;
    dlx.cover(best);
    for (int i = dlx.nodes[best].down; i != best && !stop; i = dlx.nodes[i].down) {
      chosen.push_back(dlx.nodes[i].row);
      for (int j = dlx.nodes[i].right; j != i; j = dlx.nodes[j].right)
        dlx.cover(dlx.nodes[j].col);
      rec();
      for (int j = dlx.nodes[i].left; j != i; j = dlx.nodes[j].left)
        dlx.uncover(dlx.nodes[j].col);
      chosen.pop_back();
    }
    dlx.uncover(best);
  };
  rec();
  return stats;
}

uint64_t count_solutions(const CoverInstance& inst) {
  return solve_all(inst, [](const std::vector<int>&) { return true; }).solutions;
}

}  // namespace tpc
