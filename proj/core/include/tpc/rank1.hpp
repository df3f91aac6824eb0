#pragma once

#include <gmpxx.h>

#include "tpc/code.hpp"
#include "tpc/quasigroup.hpp"

namespace tpc {

// Assignment of one t-ary affine quasigroup to every word of the Hamming code
// of length t = (3^{m-1}-1)/2; entries follow the point-index order of that
// code's words.
struct QuasigroupAssignment {
  int m = 0;
  std::vector<AffineQuasigroup> entries;

  static QuasigroupAssignment uniform(int m);
  static QuasigroupAssignment random(int m, std::mt19937_64& rng);
  static QuasigroupAssignment parse_json(const std::string& text);
  std::string to_json() const;

  bool operator==(const QuasigroupAssignment& o) const {
    return m == o.m && entries == o.entries;
  }
};

int rank1_length(int m);          // n = (3^m - 1) / 2
int rank1_arity(int m);           // t = (n - 1) / 3
// the inner Hamming code words mu in point-index order
std::vector<TernaryWord> rank1_mu_words(int m);

// The 1-perfect (n, 3^{n-m}, 3) code of the assignment: the union over mu of
// the caps K_mu = { x : x_{3i+2} = mu_i - x_{3i} - x_{3i+1},
//                       x_{n-1} = f_mu(x_1 - x_0, ..., x_{n-3} - x_{n-4}) }.
Code rank1_build(int m, const QuasigroupAssignment& asg);

// inverse of rank1_build; usage error if c is not of that exact shape
QuasigroupAssignment recover_assignment(int m, const Code& c);

// number of assignments whose code has affine rank exactly n-m+1
mpz_class count_fixed_span(int m);
// total count of 1-perfect codes of length n with affine rank n-m+1
mpz_class count_all(int m);
// lower bound on their number of equivalence classes
mpz_class count_classes_lower_bound(int m);

// An isometry that moves only two coordinates: the coordinate permutation
// either fixes or swaps {i,j}, and only theta_i, theta_j may differ from the
// identity.
struct Switch {
  Isometry iso;
  int i = 0, j = 0;

  static Switch make(const Isometry& iso);  // validates the shape
};

// All 1-perfect codes C' with C' a union of the isolated vertices and one
// bipartite side per component of the distance-1-or-2 graph on C u beta(C).
// The result always contains c and beta(c).  Usage error if there are more
// than max_components components.
std::vector<Code> find_switchings(const Code& c, const Switch& beta,
                                  int max_components = 24);

struct SwitchStep {
  int mu_index;      // which assignment entry changed
  int arg;           // gamma argument
  int fixed_symbol;  // gamma fixed symbol
  Switch beta;
  QuasigroupAssignment assignment;  // state after this step
  Code code;                        // state after this step
};

// Sequence of switchings turning c1 into c2, changing one assignment entry at
// a time along shortest gamma paths.  Both codes must be rank1_build outputs.
std::vector<SwitchStep> switching_path(const Code& c1, const Code& c2, int m);

}  // namespace tpc
