#pragma once

#include "bscale/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace bscale {

/// Parameters of BS(m,n) = <a,t | t a^m t^-1 = a^n>.
///
/// `l` and `g` are taken on absolute values. `divisor_case` holds when one of
/// |m|, |n| divides the other; `r` is then n/m (if |m| divides |n|) or m/n.
struct GroupParams {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t l = 1;
  std::int64_t g = 1;
  bool divisor_case = true;
  std::optional<std::int64_t> r;

  /// Throws DomainError if m or n is zero or larger than 2^31 in magnitude.
  static GroupParams make(std::int64_t m, std::int64_t n);

  std::int64_t abs_m() const noexcept { return m < 0 ? -m : m; }
  std::int64_t abs_n() const noexcept { return n < 0 ? -n : n; }
  /// l/|n|: the expansion factor for positive t-exponent.
  std::int64_t l_over_n() const noexcept { return l / abs_n(); }
  /// l/|m|: the expansion factor for negative t-exponent.
  std::int64_t l_over_m() const noexcept { return l / abs_m(); }
  bool discrete() const noexcept { return abs_m() == abs_n(); }
  /// Intersection subgroup exponent for the Lambda graph in the divisor case.
  std::int64_t lambda_base() const noexcept { return abs_m() < abs_n() ? abs_m() : abs_n(); }

  std::string to_string() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

}  // namespace bscale
