#include "tpc/linalg.hpp"

namespace tpc {

Gf3Matrix Gf3Matrix::from_words(const std::vector<TernaryWord>& ws, int cols) {
  Gf3Matrix m(int(ws.size()), cols);
  for (size_t r = 0; r < ws.size(); ++r) {
    check(ws[r].len == cols, "word/matrix width mismatch");
    for (int c = 0; c < cols; ++c) m.at(int(r), c) = ws[r].t[c];
  }
  return m;
}

int Gf3Matrix::rref() {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    if (at(rank, col) == 2)
      for (int c = 0; c < cols; ++c) at(rank, c) = uint8_t(at(rank, c) * 2 % 3);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !at(r, col)) continue;
      uint8_t f = at(r, col);
      for (int c = 0; c < cols; ++c) at(r, c) = uint8_t((at(r, c) + (3 - f) * at(rank, c)) % 3);
    }
    ++rank;
  }
  return rank;
}

std::vector<TernaryWord> Gf3Matrix::row_words() const {
  std::vector<TernaryWord> ws;
  for (int r = 0; r < rows; ++r) {
    TernaryWord w = TernaryWord::zero(cols);
    bool nonzero = false;
    for (int c = 0; c < cols; ++c) {
      w.t[c] = at(r, c);
      nonzero |= at(r, c) != 0;
    }
    if (nonzero) ws.push_back(w);
  }
  return ws;
}

std::vector<TernaryWord> Gf3Matrix::nullspace() const {
  Gf3Matrix m = *this;
  int rank = m.rref();
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0, col = 0; r < rank; ++r) {
    while (col < cols && m.at(r, col) == 0) ++col;
    pivot_col[r] = col;
    is_pivot[col] = true;
  }
  std::vector<TernaryWord> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    TernaryWord v = TernaryWord::zero(cols);
    v.t[f] = 1;
    for (int r = 0; r < rank; ++r) v.t[pivot_col[r]] = uint8_t((3 - m.at(r, f)) % 3);
    basis.push_back(v);
  }
  return basis;
}

// ----- spans and kernels -----------------------------------------------------

namespace {

// echelon accumulator over GF(3) words
struct Echelon {
  int n;
  std::vector<TernaryWord> basis;
  std::vector<int> pivot;  // pivot coordinate of each basis vector

  explicit Echelon(int n_) : n(n_) {}

  // reduces w; returns true (and absorbs it) if independent
  bool add(TernaryWord w) {
    for (size_t b = 0; b < basis.size(); ++b) {
      uint8_t f = w.t[pivot[b]];
      if (f == 0) continue;
      for (int i = 0; i < n; ++i) w.t[i] = uint8_t((w.t[i] + (3 - f) * basis[b].t[i]) % 3);
    }
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (w.t[i]) {
        p = i;
        break;
      }
    if (p < 0) return false;
    if (w.t[p] == 2)
      for (int i = 0; i < n; ++i) w.t[i] = uint8_t(w.t[i] * 2 % 3);
    basis.push_back(w);
    pivot.push_back(p);
    return true;
  }

  bool reduces_to_zero(TernaryWord w) const {
    for (size_t b = 0; b < basis.size(); ++b) {
      uint8_t f = w.t[pivot[b]];
      if (f == 0) continue;
      for (int i = 0; i < n; ++i) w.t[i] = uint8_t((w.t[i] + (3 - f) * basis[b].t[i]) % 3);
    }
    for (int i = 0; i < n; ++i)
      if (w.t[i]) return false;
    return true;
  }
};

}  // namespace

SpanInfo affine_span(const Code& c) {
  if (c.empty()) fail_usage("affine span of an empty code");
  int n = c.n();
  std::vector<uint32_t> m = c.members();
  TernaryWord base = TernaryWord::from_index(n, m[0]);
  Echelon ech(n);
  for (size_t i = 1; i < m.size(); ++i) {
    if (int(ech.basis.size()) == n) break;
    ech.add(TernaryWord::from_index(n, m[i]) - base);
  }
  return SpanInfo{base, ech.basis, int(ech.basis.size())};
}

int affine_rank(const Code& c) { return affine_span(c).rank; }

SpanInfo kernel(const Code& c) {
  if (c.empty()) fail_usage("kernel of an empty code");
  int n = c.n();
  const Space& sp = Space::get(n);
  std::vector<uint32_t> m = c.members();
  Echelon ech(n);
  for (size_t i = 1; i < m.size(); ++i) {
    uint32_t v = sp.sub(m[i], m[0]);
    TernaryWord vw = TernaryWord::from_index(n, v);
    if (ech.reduces_to_zero(vw)) continue;
    bool period = true;
    for (uint32_t x : m)
      if (!c.test(sp.add(x, v))) {
        period = false;
        break;
      }
    if (period) ech.add(vw);
  }
  return SpanInfo{TernaryWord::zero(n), ech.basis, int(ech.basis.size())};
}

size_t kernel_order(const Code& c) { return kPow3[kernel(c).rank]; }

Code span_code(int n, const std::vector<TernaryWord>& basis, const TernaryWord& base) {
  Code c(n);
  c.insert(base.index());
  for (const TernaryWord& b : basis) {
    uint32_t v = b.index();
    Code c1 = c.translated(v);
    Code c2 = c1.translated(v);
    c = c.set_union(c1).set_union(c2);
  }
  return c;
}

Gf3Matrix hamming_check_matrix(int m) {
  if (m < 1 || m > 3) fail_usage("hamming_code: m must be in {1,2,3}");
  int n = int(kPow3[m] - 1) / 2;
  std::vector<std::array<uint8_t, 3>> cols;
  for (uint32_t v = 1; v < kPow3[m]; ++v) {
    // v read as m trits, top row (row 0) most significant
    std::array<uint8_t, 3> col{};
    for (int r = 0; r < m; ++r) col[r] = uint8_t(v / kPow3[m - 1 - r] % 3);
    int top = 0;
    while (col[top] == 0) ++top;
    if (col[top] == 1) cols.push_back(col);
  }
  check(int(cols.size()) == n, "hamming check matrix: wrong column count");
  Gf3Matrix h(m, n);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < m; ++r) h.at(r, j) = cols[j][r];
  return h;
}

Code hamming_code(int m) {
  Gf3Matrix h = hamming_check_matrix(m);
  return span_code(h.cols, h.nullspace(), TernaryWord::zero(h.cols));
}

std::vector<TernaryWord> dual_words(const Code& c) {
  SpanInfo s = affine_span(c);
  if (s.rank == 0) {
    // singleton code: everything is orthogonal to the empty span
    std::vector<TernaryWord> all;
    for (int i = 0; i < c.n(); ++i) {
      TernaryWord e = TernaryWord::zero(c.n());
      e.t[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  return Gf3Matrix::from_words(s.basis, c.n()).nullspace();
}

}  // namespace tpc
