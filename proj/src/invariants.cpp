#include "bscale/invariants.hpp"

#include "bscale/errors.hpp"
#include "bscale/group_core.hpp"
#include "bscale/intersection_graph.hpp"

#include <algorithm>

namespace bscale {

ScaleValue scale_for_exponent(const GroupParams& p, std::int64_t rho) {
  ScaleValue s;
  s.base = rho >= 0 ? p.l_over_n() : p.l_over_m();
  s.exponent = static_cast<std::uint64_t>(rho >= 0 ? rho : -rho);
  s.value = big_pow(s.base, s.exponent);
  return s;
}

ScaleValue scale(const GroupParams& p, const Word& w) {
  return scale_for_exponent(p, t_exponent(w));
}

MollerSequence moller_sequence(const GroupParams& p, const Word& w, std::size_t kmax) {
  MollerSequence out;
  out.scale = scale(p, w);
  auto normalized = conjugacy_normalize(p, w);
  out.normalized = std::move(normalized.word);
  out.conjugator = std::move(normalized.conjugator);
  out.stable_from = 2 * out.normalized.t_inverse_count() + 1;

  if (p.discrete()) {
    // <a^m> is normal; the completion is discrete and every index is 1.
    out.indices.assign(kmax, BigInt(1));
  } else {
    // z^k is reduced for every k, so the walk for z^{k+1} continues the walk for z^k.
    const auto path = out.normalized.t_path();
    BigInt x = 1;
    out.indices.reserve(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
      x = walk(p, path, x, 1);
      out.indices.push_back(x);
    }
  }

  const auto ratio_ok = [&](std::size_t k) {  // r_{k+1} = s * r_k, 1-based k
    return out.indices[k] == out.scale.value * out.indices[k - 1];
  };
  out.verified = true;
  for (std::size_t k = out.stable_from; k + 1 <= kmax; ++k) {
    if (!ratio_ok(k)) out.verified = false;
  }
  out.first_stable = 0;
  if (kmax >= 2) {
    std::size_t k = kmax - 1;
    if (ratio_ok(k)) {
      while (k > 1 && ratio_ok(k - 1)) --k;
      out.first_stable = k;
    }
  }
  return out;
}

ModularValue modular(const GroupParams& p, const Word& w) {
  const std::int64_t rho = t_exponent(w);
  // |m/n| = (|m|/g) / (|n|/g) is already in lowest terms.
  const BigInt num = p.abs_m() / p.g;
  const BigInt den = p.abs_n() / p.g;
  const auto e = static_cast<std::uint64_t>(rho >= 0 ? rho : -rho);
  if (rho >= 0) return {big_pow(num, e), big_pow(den, e)};
  return {big_pow(den, e), big_pow(num, e)};
}

int flat_rank(const GroupParams& p) { return p.discrete() ? 0 : 1; }

std::int64_t pi_kernel(const GroupParams& p) { return p.discrete() ? p.abs_m() : 0; }

BigInt orbit_order(const GroupParams& p, const Word& w) {
  // Stabilizer of w<a> in <a> is <a> cap w<a>w^-1.
  const Word reduced = britton_reduce(p, w);
  return trace(p, reduced.inverse(), 1, 1);
}

namespace {

bool is_product_of_powers(BigInt y, std::int64_t A, std::int64_t B) {
  if (A > 1) {
    while (y % A == 0) y /= A;
  }
  if (B > 1) {
    while (y % B == 0) y /= B;
  }
  return y == 1;
}

}  // namespace

bool has_orbit_shape(const GroupParams& p, const BigInt& d) {
  if (d < 1) return false;
  const std::int64_t A = p.l_over_m();
  const std::int64_t B = p.l_over_n();
  for (std::int64_t k = 1; k * k <= p.g; ++k) {
    if (p.g % k != 0) continue;
    for (std::int64_t divisor : {k, p.g / k}) {
      if (d % divisor == 0 && is_product_of_powers(d / divisor, A, B)) return true;
    }
  }
  return false;
}

std::set<BigInt> scale_value_set(const GroupParams& p, std::uint64_t rho_max) {
  std::set<BigInt> values;
  for (std::uint64_t rho = 0; rho <= rho_max; ++rho) {
    values.insert(big_pow(BigInt(p.l_over_m()), rho));
    values.insert(big_pow(BigInt(p.l_over_n()), rho));
  }
  return values;
}

std::vector<std::int64_t> prime_divisors(std::int64_t x) {
  std::vector<std::int64_t> primes;
  if (x < 0) x = -x;
  for (std::int64_t q = 2; q * q <= x; ++q) {
    if (x % q != 0) continue;
    primes.push_back(q);
    while (x % q == 0) x /= q;
  }
  if (x > 1) primes.push_back(x);
  return primes;
}

StructureReport structure_report(const GroupParams& p, const std::optional<Word>& w) {
  StructureReport r;
  r.primes_vplus = prime_divisors(p.l_over_n());
  r.primes_vminus = prime_divisors(p.l_over_m());
  r.quotient_order_bound = p.g;
  r.flat_rank = flat_rank(p);
  r.kernel_exponent = pi_kernel(p);
  r.discrete = p.discrete();
  if (w) {
    r.rho = t_exponent(*w);
    r.scale = scale(p, *w);
    if (*r.rho < 0) {
      std::swap(r.primes_vplus, r.primes_vminus);
      r.swap_applied = true;
    }
  }
  return r;
}

nlohmann::json to_json(const ScaleValue& s) {
  return {{"base", static_cast<std::int64_t>(s.base)},
          {"exponent", s.exponent},
          {"value", s.value.str()}};
}

nlohmann::json to_json(const ModularValue& v) {
  return {{"numerator", v.numerator.str()}, {"denominator", v.denominator.str()}};
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json j = {{"primes_vplus", r.primes_vplus},
                      {"primes_vminus", r.primes_vminus},
                      {"quotient_order_bound", r.quotient_order_bound},
                      {"flat_rank", r.flat_rank},
                      {"kernel_exponent", r.kernel_exponent},
                      {"quasi_centre", r.quasi_centre},
                      {"swap_applied", r.swap_applied},
                      {"discrete", r.discrete}};
  if (r.rho) j["rho"] = *r.rho;
  if (r.scale) j["scale"] = to_json(*r.scale);
  return j;
}

nlohmann::json to_json(const MollerSequence& s) {
  nlohmann::json indices = nlohmann::json::array();
  for (const auto& x : s.indices) indices.push_back(x.str());
  return {{"indices", indices},
          {"normalized", to_string(s.normalized)},
          {"conjugator", to_string(s.conjugator)},
          {"scale", to_json(s.scale)},
          {"stable_from", s.stable_from},
          {"first_stable", s.first_stable},
          {"verified", s.verified}};
}

}  // namespace bscale
