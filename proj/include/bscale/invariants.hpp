#pragma once

#include "bscale/bigint.hpp"
#include "bscale/group_params.hpp"
#include "bscale/word.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bscale {

struct ScaleValue {
  BigInt base = 1;
  std::uint64_t exponent = 0;
  BigInt value = 1;
  friend bool operator==(const ScaleValue&, const ScaleValue&) = default;
};

/// (l/|n|)^rho for rho >= 0, (l/|m|)^|rho| for rho < 0.
ScaleValue scale_for_exponent(const GroupParams& p, std::int64_t rho);
ScaleValue scale(const GroupParams& p, const Word& w);

struct MollerSequence {
  std::vector<BigInt> indices;  ///< r_1 .. r_kmax
  Word normalized;              ///< z, conjugate to the input
  Word conjugator;              ///< h with h z h^-1 = input
  ScaleValue scale;
  /// Ratios r_{k+1}/r_k must equal the scale for every k >= stable_from.
  std::size_t stable_from = 1;
  /// First k from which every computed ratio equals the scale (0 if none).
  std::size_t first_stable = 0;
  bool verified = false;
};

/// [<a> : <a> cap z^-k <a> z^k] for k = 1..kmax, traced on the graph for the
/// conjugacy-normalized z. In the discrete case every index is 1.
MollerSequence moller_sequence(const GroupParams& p, const Word& w, std::size_t kmax);

struct ModularValue {
  BigInt numerator = 1;
  BigInt denominator = 1;
  friend bool operator==(const ModularValue&, const ModularValue&) = default;
};

/// |m/n|^rho in lowest terms.
ModularValue modular(const GroupParams& p, const Word& w);

int flat_rank(const GroupParams& p);

/// |m| when |m| = |n| (the kernel is <a^m>), otherwise 0 for the trivial kernel.
std::int64_t pi_kernel(const GroupParams& p);

/// Size of the <a>-orbit of the coset w<a>.
BigInt orbit_order(const GroupParams& p, const Word& w);

/// True iff d = g' (l/|m|)^r (l/|n|)^s for some r, s >= 0 and g' | g.
bool has_orbit_shape(const GroupParams& p, const BigInt& d);

std::set<BigInt> scale_value_set(const GroupParams& p, std::uint64_t rho_max);

std::vector<std::int64_t> prime_divisors(std::int64_t x);

struct StructureReport {
  std::vector<std::int64_t> primes_vplus;
  std::vector<std::int64_t> primes_vminus;
  std::int64_t quotient_order_bound = 1;
  int flat_rank = 0;
  std::int64_t kernel_exponent = 0;
  std::string quasi_centre = "ker Delta";
  bool swap_applied = false;
  bool discrete = false;
  std::optional<std::int64_t> rho;
  std::optional<ScaleValue> scale;
};

StructureReport structure_report(const GroupParams& p, const std::optional<Word>& w = std::nullopt);

nlohmann::json to_json(const ScaleValue& s);
nlohmann::json to_json(const ModularValue& v);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const MollerSequence& s);

}  // namespace bscale
