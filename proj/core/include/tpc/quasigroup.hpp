#pragma once

#include <random>

#include "tpc/gf3.hpp"

namespace tpc {

// t-ary quasigroup of order 3 in affine form f(z) = sum coeff_i z_i + cst;
// all t-ary quasigroups of order 3 are of this shape
struct AffineQuasigroup {
  uint8_t arity = 0;
  std::array<uint8_t, 4> coeff{};  // each in {1,2}
  uint8_t cst = 0;                 // in {0,1,2}

  uint8_t eval(const uint8_t* z) const {
    int s = cst;
    for (int i = 0; i < arity; ++i) s += coeff[i] * z[i];
    return uint8_t(s % 3);
  }

  // dense id in [0, 3*2^arity): bit i of the high part encodes coeff_i == 2
  int id() const;
  static AffineQuasigroup from_id(int arity, int id);

  bool operator==(const AffineQuasigroup& o) const {
    return arity == o.arity && cst == o.cst &&
           std::equal(coeff.begin(), coeff.begin() + arity, o.coeff.begin());
  }
};

// gamma_{i,a}: swap the two symbols of {0,1,2} \ {a} in argument i.
// For affine f this flips coeff_i and adds 2*a*coeff_i to the constant.
AffineQuasigroup gamma_transform(const AffineQuasigroup& q, int i, int a);

// shortest sequence of (argument, fixed symbol) gamma moves turning `from`
// into `to`, found by breadth-first search over the 3*2^t quasigroups
std::vector<std::pair<int, int>> gamma_path(const AffineQuasigroup& from,
                                            const AffineQuasigroup& to);

}  // namespace tpc
