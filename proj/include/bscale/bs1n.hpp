#pragma once

#include "bscale/bigint.hpp"
#include "bscale/group_params.hpp"
#include "bscale/word.hpp"

#include <string>
#include <tuple>

namespace bscale {

/// Unique form t^{-p} a^q t^r of an element of BS(1,n), with p, r >= 0 and
/// n | q only if p = 0 or r = 0.
struct Bs1nNormalForm {
  BigInt p = 0;
  BigInt q = 0;
  BigInt r = 0;
  friend bool operator==(const Bs1nNormalForm&, const Bs1nNormalForm&) = default;
  friend bool operator<(const Bs1nNormalForm& x, const Bs1nNormalForm& y) {
    return std::tie(x.p, x.q, x.r) < std::tie(y.p, y.q, y.r);
  }
};

/// [[top_left, top_right], [0, 1]] with exact rational entries.
struct Bs1nMatrix {
  BigRational top_left = 1;
  BigRational top_right = 0;

  Bs1nMatrix operator*(const Bs1nMatrix& o) const {
    return {top_left * o.top_left, top_left * o.top_right + top_right};
  }
  friend bool operator==(const Bs1nMatrix&, const Bs1nMatrix&) = default;
};

/// Requires |m| = 1, otherwise DomainError.
Bs1nNormalForm bs1n_normal_form(const GroupParams& p, const Word& w);

/// Image of w under a -> [[1,1],[0,1]], t -> [[n/m,0],[0,1]]. Requires |m| = 1.
Bs1nMatrix bs1n_matrix(const GroupParams& p, const Word& w);

Word expand(const Bs1nNormalForm& nf);
std::string to_string(const Bs1nMatrix& mat);

}  // namespace bscale
