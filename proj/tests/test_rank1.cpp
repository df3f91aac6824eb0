#include <random>

#include "doctest.h"
#include "tpc/gf3.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"
#include "tpc/rank1.hpp"

using namespace tpc;

TEST_CASE("shape parameters") {
  CHECK(rank1_length(2) == 4);
  CHECK(rank1_length(3) == 13);
  CHECK(rank1_arity(2) == 1);
  CHECK(rank1_arity(3) == 4);
  CHECK(rank1_mu_words(2).size() == 1);  // inner code is the length-1 hamming code
  CHECK(rank1_mu_words(3).size() == 9);
}

TEST_CASE("mu words are the inner hamming code in point order") {
  std::vector<TernaryWord> mu = rank1_mu_words(3);
  Code h = hamming_code(2);
  REQUIRE(mu.size() == h.size());
  std::vector<uint32_t> mem = h.members();
  for (size_t i = 0; i < mu.size(); ++i) CHECK(mu[i].index() == mem[i]);
}

TEST_CASE("uniform assignment builds a 1-perfect code") {
  QuasigroupAssignment asg = QuasigroupAssignment::uniform(3);
  CHECK(asg.m == 3);
  CHECK(asg.entries.size() == 9);
  Code c = rank1_build(3, asg);
  CHECK(c.n() == 13);
  CHECK(c.size() == 59049);
  CHECK(is_1perfect(c));
  CHECK(recover_assignment(3, c) == asg);
}

TEST_CASE("assignments survive a json round-trip") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    QuasigroupAssignment asg = QuasigroupAssignment::random(3, rng);
    QuasigroupAssignment back = QuasigroupAssignment::parse_json(asg.to_json());
    CHECK(back == asg);
  }
  CHECK_THROWS_AS(QuasigroupAssignment::parse_json("{}"), UsageError);
  CHECK_THROWS_AS(QuasigroupAssignment::parse_json("not json"), UsageError);
}

TEST_CASE("random assignments recover exactly") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 3; ++trial) {
    QuasigroupAssignment asg = QuasigroupAssignment::random(3, rng);
    Code c = rank1_build(3, asg);
    CHECK(recover_assignment(3, c) == asg);
  }
  Code broken = rank1_build(3, QuasigroupAssignment::uniform(3));
  broken.erase(0);
  broken.insert(1);  // weight-1 word: its triple sums are no inner codeword
  CHECK_THROWS_AS(recover_assignment(3, broken), UsageError);
}

TEST_CASE("m=2 miniature behaves like the large case") {
  QuasigroupAssignment asg = QuasigroupAssignment::uniform(2);
  CHECK(asg.entries.size() == 1);
  Code c = rank1_build(2, asg);
  CHECK(c.n() == 4);
  CHECK(c.size() == 9);
  CHECK(is_1perfect(c));
  CHECK(count_fixed_span(2) == 0);  // every length-4 perfect code is hamming
}

TEST_CASE("switch validation and component enumeration") {
  // beta: swap values 0<->1 in coordinate 0 is a two-coordinate switch with
  // i == j; the identity is rejected, three moved coordinates are rejected
  Isometry beta = Isometry::identity(13);
  beta.theta[0] = s3_index(1, 0, 2);
  Switch s = Switch::make(beta);
  CHECK(s.i == 0);
  CHECK_THROWS_AS(Switch::make(Isometry::identity(13)), UsageError);
  Isometry three = Isometry::identity(13);
  three.theta[0] = kS3Neg;
  three.theta[1] = kS3Neg;
  three.theta[2] = kS3Neg;
  CHECK_THROWS_AS(Switch::make(three), UsageError);

  std::mt19937_64 rng(53);
  Code c = rank1_build(3, QuasigroupAssignment::random(3, rng));
  std::vector<Code> sws = find_switchings(c, s);
  bool has_c = false, has_beta_c = false;
  Code bc = c.apply(s.iso);
  for (const Code& w : sws) {
    has_c |= w == c;
    has_beta_c |= w == bc;
    CHECK(is_1perfect(w));
    CHECK(w.subset_of(c.set_union(bc)));
  }
  CHECK(has_c);
  CHECK(has_beta_c);
}
