#include <random>
#include <sstream>

#include "doctest.h"
#include "tpc/code.hpp"
#include "tpc/collection.hpp"
#include "tpc/gf3.hpp"

using namespace tpc;

namespace {

Code random_code(int n, int size, std::mt19937_64& rng) {
  const Space& sp = Space::get(n);
  Code c(n);
  while (int(c.size()) < size) c.insert(uint32_t(rng() % sp.size()));
  return c;
}

}  // namespace

TEST_CASE("code set operations") {
  std::mt19937_64 rng(21);
  Code a = random_code(4, 20, rng);
  Code b = random_code(4, 20, rng);
  Code u = a.set_union(b);
  Code i = a.set_intersect(b);
  Code d = a.set_minus(b);
  CHECK(u.size() == a.size() + b.size() - i.size());
  CHECK(d.size() == a.size() - i.size());
  CHECK(a.intersection_size(b) == i.size());
  CHECK(i.subset_of(a));
  CHECK(i.subset_of(b));
  CHECK(d.disjoint(b));
  CHECK(a.complement().size() == 81 - a.size());
  for (uint32_t m : a.members()) CHECK(a.test(m));
  Code e = a;
  for (uint32_t m : a.members()) e.erase(m);
  CHECK(e.empty());
}

TEST_CASE("members come back sorted and for_each agrees") {
  std::mt19937_64 rng(22);
  Code a = random_code(9, 100, rng);
  std::vector<uint32_t> mem = a.members();
  CHECK(std::is_sorted(mem.begin(), mem.end()));
  std::vector<uint32_t> seen;
  a.for_each([&](uint32_t m) { seen.push_back(m); });
  CHECK(seen == mem);
}

TEST_CASE("apply via isometry equals apply via point map") {
  std::mt19937_64 rng(23);
  const Space& sp = Space::get(9);
  Code a = random_code(9, 80, rng);
  Isometry g = Isometry::transposition(9, 2, 5)
                   .compose(Isometry::negation(9))
                   .compose(Isometry::translation(TernaryWord::parse("102000210")));
  CHECK(a.apply(g) == a.apply(g.point_map(sp)));
  CHECK(a.apply(g).apply(g.inverse()) == a);
  uint32_t v = 1234;
  Code t = a.translated(v);
  for (uint32_t m : a.members()) CHECK(t.test(sp.add(m, v)));
}

TEST_CASE("lex order compares by first differing member") {
  Code a(4), b(4);
  a.insert(3);
  a.insert(10);
  b.insert(3);
  b.insert(11);
  CHECK(a.lex_less(b));
  CHECK(!b.lex_less(a));
  CHECK(!a.lex_less(a));
  Code c(4);
  c.insert(3);
  CHECK(c.lex_less(a));  // prefix is smaller
}

TEST_CASE("min distance by pairwise scan") {
  Code c(4);
  c.insert(TernaryWord::parse("0000").index());
  c.insert(TernaryWord::parse("0111").index());
  c.insert(TernaryWord::parse("1012").index());
  CHECK(min_distance(c) == 3);
  Code single(4);
  single.insert(5);
  CHECK(min_distance(single) == 5);
}

TEST_CASE("code files round-trip") {
  std::mt19937_64 rng(24);
  Code a = random_code(9, 50, rng);
  std::stringstream ss;
  write_code(ss, a);
  CHECK(read_code(ss) == a);
  std::stringstream bad("# q=3 n=4 size=1\n012\n");
  CHECK_THROWS_AS(read_code(bad), UsageError);
}

TEST_CASE("collection files round-trip") {
  std::mt19937_64 rng(25);
  Code a = random_code(4, 10, rng);
  Code b = a.complement();
  Collection col(std::vector<Code>{a, b});
  CHECK(col.pairwise_disjoint());
  CHECK(col.merged().size() == 81);
  CHECK(col.length() == 4);
  std::stringstream ss;
  write_collection(ss, col);
  CHECK(read_collection(ss) == col);
}
