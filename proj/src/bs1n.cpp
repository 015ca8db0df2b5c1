#include "bscale/bs1n.hpp"

#include "bscale/errors.hpp"

namespace bscale {

namespace {

// With |m| = 1 the relation reads t a^k t^-1 = a^{k s} for s = n/m = n*m.
std::int64_t require_bs1n(const GroupParams& p) {
  if (p.abs_m() != 1) throw DomainError("BS(1,n) operation requires |m| = 1, got " + p.to_string());
  return p.n * p.m;
}

}  // namespace

Bs1nNormalForm bs1n_normal_form(const GroupParams& p, const Word& w) {
  const std::int64_t s = require_bs1n(p);
  // Maintain t^-p a^q t^r while appending letters on the right.
  BigInt tp = 0;
  BigInt q = 0;
  BigInt tr = 0;
  for (const auto& run : w.runs()) {
    switch (run.letter) {
      case Letter::APos:
      case Letter::ANeg: {
        // t^r a^k = a^{k s^r} t^r
        const BigInt k = run.letter == Letter::APos ? run.count : BigInt(-run.count);
        q += k * big_pow(s, static_cast<std::uint64_t>(tr));
        break;
      }
      case Letter::TPos:
        tr += run.count;
        break;
      case Letter::TNeg: {
        // t^r t^-1 cancels while r > 0; then a^q t^-1 = t^-1 a^{q s}.
        const BigInt cancel = tr < run.count ? tr : run.count;
        tr -= cancel;
        const BigInt rest = run.count - cancel;
        if (rest > 0) {
          q *= big_pow(s, static_cast<std::uint64_t>(rest));
          tp += rest;
        }
        break;
      }
    }
  }
  // Strip pinches t^-1 a^{s c} t -> a^c.
  while (tp > 0 && tr > 0 && q % s == 0) {
    q /= s;
    --tp;
    --tr;
  }
  return {tp, q, tr};
}

Bs1nMatrix bs1n_matrix(const GroupParams& p, const Word& w) {
  const std::int64_t s = require_bs1n(p);
  Bs1nMatrix result;
  for (const auto& run : w.runs()) {
    // Whole runs at once: a^k = [[1,k],[0,1]], t^k = [[s^k,0],[0,1]].
    Bs1nMatrix block;
    switch (run.letter) {
      case Letter::APos: block.top_right = BigRational(run.count); break;
      case Letter::ANeg: block.top_right = BigRational(-run.count); break;
      case Letter::TPos:
        block.top_left = BigRational(big_pow(s, static_cast<std::uint64_t>(run.count)));
        break;
      case Letter::TNeg:
        block.top_left =
            BigRational(1) / BigRational(big_pow(s, static_cast<std::uint64_t>(run.count)));
        break;
    }
    result = result * block;
  }
  return result;
}

Word expand(const Bs1nNormalForm& nf) {
  return Word::t_power(-nf.p) * Word::a_power(nf.q) * Word::t_power(nf.r);
}

std::string to_string(const Bs1nMatrix& mat) {
  return "[[" + mat.top_left.str() + "," + mat.top_right.str() + "],[0,1]]";
}

}  // namespace bscale
