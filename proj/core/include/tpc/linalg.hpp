#pragma once

#include "tpc/code.hpp"
#include "tpc/gf3.hpp"

namespace tpc {

struct Gf3Matrix {
  int rows = 0, cols = 0;
  std::vector<uint8_t> a;  // row-major entries in {0,1,2}

  Gf3Matrix() = default;
  Gf3Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  static Gf3Matrix from_words(const std::vector<TernaryWord>& ws, int cols);

  uint8_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

  // in-place reduced row echelon form; returns the rank
  int rref();
  std::vector<TernaryWord> row_words() const;  // nonzero rows as words
  // basis of {x : Ax = 0}
  std::vector<TernaryWord> nullspace() const;
};

struct SpanInfo {
  TernaryWord base;                // reference point subtracted from all members
  std::vector<TernaryWord> basis;  // echelon basis, pivots descending is not
                                   // required; rank == basis.size()
  int rank = 0;
};

// dimension of the affine span: dim of span{x - c0 : x in C} for a fixed c0
SpanInfo affine_span(const Code& c);
int affine_rank(const Code& c);

// kernel of the code: {v : C + v = C}, returned as a basis with base point 0
SpanInfo kernel(const Code& c);
size_t kernel_order(const Code& c);  // 3^dim

// all words of the linear span of `basis` shifted by `base`
Code span_code(int n, const std::vector<TernaryWord>& basis, const TernaryWord& base);

// Hamming code of length (3^m-1)/2 for m in {1,2,3}: kernel of the check
// matrix whose columns are the m-trit vectors with topmost nonzero entry 1,
// in lexicographic order (top row most significant).
Code hamming_code(int m);
Gf3Matrix hamming_check_matrix(int m);

// basis of the space of words orthogonal to all differences x - c0, x in C
std::vector<TernaryWord> dual_words(const Code& c);

}  // namespace tpc
