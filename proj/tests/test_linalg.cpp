#include <random>

#include "doctest.h"
#include "tpc/code.hpp"
#include "tpc/gf3.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"

using namespace tpc;

TEST_CASE("rref and nullspace on a known matrix") {
  // rows: 1101, 0112 -> rank 2, nullspace dimension 2
  Gf3Matrix m = Gf3Matrix::from_words(
      {TernaryWord::parse("1101"), TernaryWord::parse("0112")}, 4);
  CHECK(m.rref() == 2);
  std::vector<TernaryWord> ns = Gf3Matrix::from_words(
                                    {TernaryWord::parse("1101"),
                                     TernaryWord::parse("0112")},
                                    4)
                                    .nullspace();
  CHECK(ns.size() == 2);
  for (const TernaryWord& v : ns)
    for (const TernaryWord& row : {TernaryWord::parse("1101"), TernaryWord::parse("0112")}) {
      int dot = 0;
      for (int i = 0; i < 4; ++i) dot += row.t[i] * v.t[i];
      CHECK(dot % 3 == 0);
    }
}

TEST_CASE("hamming codes have the right shape") {
  for (int m : {1, 2, 3}) {
    Code h = hamming_code(m);
    int n = m == 1 ? 1 : m == 2 ? 4 : 13;
    CHECK(h.n() == n);
    CHECK(h.size() == size_t(n == 1 ? 1 : n == 4 ? 9 : 59049));
    CHECK(h.test(0));
    CHECK(is_1perfect(h));
    CHECK(affine_rank(h) == n - m);
    CHECK(kernel_order(h) == h.size());
  }
  Gf3Matrix hm = hamming_check_matrix(3);
  Code h = hamming_code(3);
  for (uint32_t w : h.members()) {
    TernaryWord x = TernaryWord::from_index(13, w);
    for (int r = 0; r < hm.rows; ++r) {
      int dot = 0;
      for (int i = 0; i < 13; ++i) dot += hm.at(r, i) * x.t[i];
      CHECK(dot % 3 == 0);
    }
  }
}

TEST_CASE("affine span of a translated subspace keeps its rank") {
  std::mt19937_64 rng(31);
  Code h = hamming_code(2);
  Code t = h.translated(uint32_t(rng() % 81));
  SpanInfo s = affine_span(t);
  CHECK(s.rank == 2);
  CHECK(affine_rank(t) == 2);
  Code back = span_code(4, s.basis, s.base);
  CHECK(t.subset_of(back));
  CHECK(back.size() == 9);
}

TEST_CASE("kernel of a linear code is the code, of a coset is the subgroup") {
  Code h = hamming_code(2);
  SpanInfo k = kernel(h);
  CHECK(k.rank == 2);
  CHECK(kernel_order(h) == 9);
  Code t = h.translated(7);
  CHECK(kernel_order(t) == 9);  // kernel is translation invariant
  Code two(4);
  two.insert(TernaryWord::parse("0000").index());
  two.insert(TernaryWord::parse("0111").index());
  CHECK(kernel_order(two) == 1);
}

TEST_CASE("span code enumerates exactly the affine span") {
  std::vector<TernaryWord> basis = {TernaryWord::parse("1101"),
                                    TernaryWord::parse("0112")};
  Code s = span_code(4, basis, TernaryWord::parse("2000"));
  CHECK(s.size() == 9);
  const Space& sp = Space::get(4);
  uint32_t base = TernaryWord::parse("2000").index();
  for (uint32_t m : s.members()) {
    uint32_t d = sp.sub(m, base);
    // d must be a combination of the two basis words
    bool found = false;
    for (int a = 0; a < 3 && !found; ++a)
      for (int b = 0; b < 3 && !found; ++b) {
        uint32_t x = 0;
        for (int r = 0; r < a; ++r) x = sp.add(x, basis[0].index());
        for (int r = 0; r < b; ++r) x = sp.add(x, basis[1].index());
        found = x == d;
      }
    CHECK(found);
  }
}

TEST_CASE("dual words are orthogonal to all differences") {
  Code h = hamming_code(2);
  std::vector<TernaryWord> dual = dual_words(h);
  CHECK(dual.size() == 2);  // [4,2] code has a 2-dimensional dual
  for (const TernaryWord& d : dual)
    for (uint32_t m : h.members()) {
      TernaryWord x = TernaryWord::from_index(4, m);
      int dot = 0;
      for (int i = 0; i < 4; ++i) dot += d.t[i] * x.t[i];
      CHECK(dot % 3 == 0);  // code is linear, so differences = codewords
    }
}
