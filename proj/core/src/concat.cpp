#include "tpc/concat.hpp"

#include <algorithm>
#include <numeric>

#include "tpc/canonical.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"

namespace tpc {
namespace {

const Code& host9() {
  static const Code h = parity_mds(9);
  return h;
}

const Code& space4() {
  static const Code f = Code(4).complement();
  return f;
}

void validate_parts(const Collection& cbar, const Collection& pbar) {
  if (cbar.k() != 9 || cbar.length() != 9)
    fail_usage("inner partition must have 9 blocks of length 9");
  if (pbar.k() != 9 || pbar.length() != 4)
    fail_usage("outer partition must have 9 blocks of length 4");
  if (!cbar.pairwise_disjoint() || !(cbar.merged() == host9()))
    fail_usage("inner blocks must partition the zero-sum host");
  if (!pbar.pairwise_disjoint() || !(pbar.merged() == space4()))
    fail_usage("outer blocks must partition the length-4 space");
  for (const Code& b : cbar.blocks)
    if (!is_rm_like(b, host9())) fail_usage("inner block is not a tiling code");
  for (const Code& b : pbar.blocks)
    if (!is_1perfect(b)) fail_usage("outer block is not a perfect code");
}

}  // namespace

Code build_concatenated(const Collection& cbar, const Collection& pbar,
                        const Perm& tau) {
  validate_parts(cbar, pbar);
  if (tau.size() != 9 || !is_perm(tau))
    fail_usage("tau must be a permutation of the 9 blocks");
  Code d(13);
  for (int i = 0; i < 9; ++i)
    for (uint32_t c : cbar.blocks[i].members())
      for (uint32_t p : pbar.blocks[tau[i]].members())
        d.insert(c + p * kPow3[9]);
  return d;
}

std::vector<Perm> reduced_taus(const Collection& cbar, const Collection& pbar) {
  validate_parts(cbar, pbar);
  PermGroup tc = project_block_group(certificate(cbar, Flavor::full), 9);
  PermGroup tp = project_block_group(certificate(pbar, Flavor::full), 9);
  std::vector<Perm> out;
  for (const DoubleCoset& dc : double_coset_reps(tp, tc)) out.push_back(dc.rep);
  return out;
}

std::vector<ConcatStructure> concat_supports(const Code& code) {
  if (code.n() != 13) fail_usage("concatenation analysis needs length 13");
  std::vector<ConcatStructure> out;
  if (code.size() != 59049) return out;
  const Space& sp13 = Space::get(13);

  // a valid inner support carries a weight-9 word orthogonal to all
  // codeword differences; enumerate the dual span to find the candidates
  Code dspan = span_code(13, dual_words(code), TernaryWord::zero(13));
  std::vector<TernaryWord> witness;
  for (uint32_t idx : dspan.members()) {
    if (idx == 0) continue;
    TernaryWord w = TernaryWord::from_index(13, idx);
    if (w.weight() != 9) continue;
    bool dup = false;
    for (const TernaryWord& seen : witness) {
      bool same = true;
      for (int i = 0; i < 13; ++i) same &= (seen.t[i] != 0) == (w.t[i] != 0);
      dup |= same;
    }
    if (!dup) witness.push_back(w);
  }

  for (const TernaryWord& dw : witness) {
    // move the support to the front, scale it so inner parts sum to a
    // constant, and translate a codeword to zero
    Isometry norm = Isometry::identity(13);
    int ipos = 0, opos = 9;
    std::vector<int> supp;
    for (int i = 0; i < 13; ++i) {
      if (dw.t[i] != 0) {
        supp.push_back(i);
        norm.perm[i] = uint8_t(ipos++);
      } else {
        norm.perm[i] = uint8_t(opos++);
      }
      norm.theta[norm.perm[i]] = dw.t[i] == 2 ? kS3Neg : 0;
    }
    Code moved = code.apply(norm);
    uint32_t base = moved.members()[0];
    Code centered = moved.translated(sp13.neg(base));

    // fibers of the inner part over the 81 outer parts
    std::vector<std::vector<uint16_t>> fiber(81);
    bool good = true;
    for (uint32_t m : centered.members()) fiber[m / kPow3[9]].push_back(uint16_t(m % kPow3[9]));
    for (const auto& f : fiber) good &= f.size() == 729;
    if (!good) continue;

    std::vector<std::vector<uint16_t>> distinct;
    std::vector<int> fid(81, -1);
    for (int o = 0; o < 81 && int(distinct.size()) <= 9; ++o) {
      for (size_t j = 0; j < distinct.size(); ++j)
        if (distinct[j] == fiber[o]) {
          fid[o] = int(j);
          break;
        }
      if (fid[o] < 0) {
        fid[o] = int(distinct.size());
        distinct.push_back(fiber[o]);
      }
    }
    if (distinct.size() != 9) continue;

    std::vector<Code> inner_blocks;
    Code inner_union(9);
    for (const auto& f : distinct) {
      Code fc(9);
      for (uint16_t m : f) fc.insert(m);
      good &= fc.disjoint(inner_union);
      inner_union = inner_union.set_union(fc);
      inner_blocks.push_back(std::move(fc));
    }
    if (!good || !(inner_union == host9())) continue;
    for (const Code& fc : inner_blocks) good &= is_rm_like(fc, host9());
    std::vector<Code> outer_blocks(9, Code(4));
    for (int o = 0; o < 81; ++o) outer_blocks[fid[o]].insert(uint32_t(o));
    for (const Code& pc : outer_blocks) good &= is_1perfect(pc);
    if (!good) continue;

    // sort both partitions and derive the pairing
    std::vector<int> corder(9), porder(9), pinv(9);
    std::iota(corder.begin(), corder.end(), 0);
    std::iota(porder.begin(), porder.end(), 0);
    std::sort(corder.begin(), corder.end(), [&](int a, int b) {
      return inner_blocks[a].lex_less(inner_blocks[b]);
    });
    std::sort(porder.begin(), porder.end(), [&](int a, int b) {
      return outer_blocks[a].lex_less(outer_blocks[b]);
    });
    for (int l = 0; l < 9; ++l) pinv[porder[l]] = l;

    ConcatStructure st;
    st.support = supp;
    std::vector<Code> cb, pb;
    st.tau.resize(9);
    for (int i = 0; i < 9; ++i) {
      cb.push_back(inner_blocks[corder[i]]);
      pb.push_back(outer_blocks[porder[i]]);
      st.tau[i] = uint8_t(pinv[corder[i]]);
    }
    st.cbar = Collection(std::move(cb));
    st.pbar = Collection(std::move(pb));
    st.embed = norm.inverse().compose(
        Isometry::translation(TernaryWord::from_index(13, base)));
    check(build_concatenated(st.cbar, st.pbar, st.tau).apply(st.embed) == code,
          "recovered structure must rebuild the code");
    out.push_back(std::move(st));
  }
  return out;
}

Collection coset_partition(const Code& code, const Code& ambient) {
  if (code.n() != ambient.n()) fail_usage("code and ambient set length differ");
  if (code.empty() || !code.test(0)) fail_usage("code must contain the zero word");
  if (kernel_order(code) != code.size()) fail_usage("code must be linear");
  if (!code.subset_of(ambient)) fail_usage("code must lie inside the ambient set");
  std::vector<Code> blocks;
  Code seen(code.n());
  for (uint32_t v : ambient.members()) {
    if (seen.test(v)) continue;
    Code t = code.translated(v);
    if (!t.subset_of(ambient)) fail_usage("cosets do not tile the ambient set");
    seen = seen.set_union(t);
    blocks.push_back(std::move(t));
  }
  return Collection(std::move(blocks));
}

}  // namespace tpc
