#pragma once

#include "tpc/code.hpp"

namespace tpc {

// 1-perfect: radius-1 balls around codewords tile the space
bool is_1perfect(const Code& c);

// distance-2 MDS: (n, 3^{n-1}, 2)
bool is_mds2(const Code& c);

// the standard distance-2 MDS code {x : sum of coordinates = 0}
Code parity_mds(int n);

// (3^m, 3^{n-m-1}, 3) code inside a distance-2 MDS host such that every word
// outside the host is adjacent to exactly one codeword
bool is_rm_like(const Code& c, const Code& m_host);

}  // namespace tpc
