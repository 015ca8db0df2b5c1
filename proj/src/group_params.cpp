#include "bscale/group_params.hpp"

#include "bscale/errors.hpp"

#include <numeric>

namespace bscale {

GroupParams GroupParams::make(std::int64_t m, std::int64_t n) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 31;
  if (m == 0 || n == 0) throw DomainError("BS(m,n) requires m and n nonzero");
  if (m > kLimit || m < -kLimit || n > kLimit || n < -kLimit) {
    throw DomainError("|m| and |n| must not exceed 2^31");
  }
  GroupParams p;
  p.m = m;
  p.n = n;
  const std::int64_t am = p.abs_m();
  const std::int64_t an = p.abs_n();
  p.g = std::gcd(am, an);
  p.l = am / p.g * an;
  if (an % am == 0) {
    p.divisor_case = true;
    p.r = n / m;
  } else if (am % an == 0) {
    p.divisor_case = true;
    p.r = m / n;
  } else {
    p.divisor_case = false;
  }
  return p;
}

std::string GroupParams::to_string() const {
  return "BS(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace bscale
