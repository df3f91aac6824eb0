#include <random>
#include <set>

#include "doctest.h"
#include "tpc/canonical.hpp"
#include "tpc/code.hpp"
#include "tpc/collection.hpp"
#include "tpc/gf3.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"

using namespace tpc;

namespace {

// every isometry of F_3^n as composition perm then per-coordinate symbol map
std::vector<Isometry> all_isometries(int n) {
  std::vector<Isometry> out;
  Perm perm(n);
  for (int i = 0; i < n; ++i) perm[i] = uint8_t(i);
  std::sort(perm.begin(), perm.end());
  do {
    int thetas = 1;
    for (int i = 0; i < n; ++i) thetas *= 6;
    for (int t = 0; t < thetas; ++t) {
      Isometry iso;
      iso.n = uint8_t(n);
      int rest = t;
      for (int i = 0; i < n; ++i) {
        iso.perm[i] = perm[i];
        iso.theta[perm[i]] = uint8_t(rest % 6);
        rest /= 6;
      }
      out.push_back(iso);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Isometry random_isometry(int n, std::mt19937_64& rng) {
  Isometry iso;
  iso.n = uint8_t(n);
  std::vector<uint8_t> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = uint8_t(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i) {
    iso.perm[i] = perm[i];
    iso.theta[i] = uint8_t(rng() % 6);
  }
  return iso;
}

}  // namespace

TEST_CASE("flavor names round trip") {
  for (Flavor f : {Flavor::full, Flavor::monomial, Flavor::permutation, Flavor::strong})
    CHECK(parse_flavor(flavor_name(f)) == f);
  CHECK_THROWS_AS(parse_flavor("fancy"), UsageError);
}

TEST_CASE("singleton zero code under the monomial group") {
  // every monomial map fixes the zero word, so aut = 2^n * n!
  uint64_t expect = 2;  // n = 1
  for (int n = 1; n <= 4; ++n) {
    Code c(n);
    c.insert(0);
    CanonicalCertificate cert = certificate(c, Flavor::monomial);
    CHECK(cert.aut_order == expect);
    expect = expect * 2 * (n + 1);
  }
  Code off(2);
  off.insert(TernaryWord::parse(2, "10").index());
  CHECK_THROWS_AS(certificate(off, Flavor::monomial), UsageError);
}

TEST_CASE("hamming(2) certificate vs brute force over all 31104 isometries") {
  Code h = hamming_code(2);
  CanonicalCertificate cert = certificate(h, Flavor::full);
  uint64_t stab = 0;
  std::set<std::string> digests{cert.digest};
  for (const Isometry& iso : all_isometries(4)) {
    Code img = h.apply(iso);
    if (img == h) ++stab;
  }
  CHECK(stab == 432);
  CHECK(cert.aut_order == stab);

  // digest is an isometry invariant
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Code img = h.apply(random_isometry(4, rng));
    digests.insert(certificate(img, Flavor::full).digest);
  }
  CHECK(digests.size() == 1);
  CHECK(cert.digest.size() == 64);

  // generators really are automorphisms and generate a group of the right size
  std::set<std::vector<uint8_t>> elems;
  std::vector<Isometry> queue{Isometry::identity(4)};
  auto key = [](const Isometry& iso) {
    std::vector<uint8_t> k;
    for (int i = 0; i < 4; ++i) k.push_back(iso.perm[i]);
    for (int i = 0; i < 4; ++i) k.push_back(iso.theta[i]);
    return k;
  };
  elems.insert(key(queue[0]));
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [gen, tau] : cert.generators) {
      CHECK(tau.empty());
      CHECK(h.apply(gen) == h);
      Isometry next = gen.compose(queue[head]);
      if (elems.insert(key(next)).second) queue.push_back(next);
    }
  }
  CHECK(elems.size() == 432);
}

TEST_CASE("inequivalent codes get distinct digests") {
  Code h = hamming_code(2);
  Code other = h;
  other.erase(*other.members().rbegin());
  other.insert(h.complement().members().front());
  CHECK(certificate(other, Flavor::full).digest != certificate(h, Flavor::full).digest);

  // flavors refine each other: permutation flavor separates a translate
  Code shifted = h.translated(TernaryWord::parse(4, "1000").index());
  CHECK(certificate(shifted, Flavor::full).digest == certificate(h, Flavor::full).digest);
  CHECK(certificate(shifted, Flavor::permutation).digest !=
        certificate(h, Flavor::permutation).digest);
}

TEST_CASE("collection certificates and the block projection") {
  // three parallel cosets of a line in F_3^2 - blocks are interchangeable
  Code line(2);
  for (int a = 0; a < 3; ++a) line.insert(TernaryWord::parse(2, std::string(2, char('0' + a))).index());
  Collection col;
  col.blocks = {line, line.translated(TernaryWord::parse(2, "10").index()),
                line.translated(TernaryWord::parse(2, "20").index())};
  REQUIRE(col.pairwise_disjoint());

  CanonicalCertificate full = certificate(col, Flavor::full);
  PermGroup blocks = project_block_group(full, 3);
  CHECK(blocks.order() == 6);  // all of Sym(3): the cosets are alike

  CanonicalCertificate strong = certificate(col, Flavor::strong);
  PermGroup pinned = project_block_group(strong, 3);
  CHECK(pinned.order() == 2);  // last block fixed, first two may swap
  for (const auto& [iso, tau] : strong.generators) {
    REQUIRE(tau.size() == 3);
    CHECK(tau[2] == 2);
    Collection img;
    for (int b = 0; b < 3; ++b) img.blocks.push_back(col.blocks[b].apply(iso));
    for (int b = 0; b < 3; ++b) CHECK(img.blocks[b] == col.blocks[tau[b]]);
  }

  // reordering interchangeable blocks leaves the full digest alone
  Collection swapped;
  swapped.blocks = {col.blocks[1], col.blocks[0], col.blocks[2]};
  CHECK(certificate(swapped, Flavor::full).digest == full.digest);
}
