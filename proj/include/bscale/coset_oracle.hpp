#pragma once

#include "bscale/bigint.hpp"
#include "bscale/group_core.hpp"
#include "bscale/group_params.hpp"
#include "bscale/word.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bscale {

// Brute-force ground truth built on Britton reduction and normal forms. The
// scans and the ball never consult the intersection graph; orbit_census reports
// the graph-side orbit orders of the ball's vertices.

inline constexpr std::size_t kDefaultVertexBudget = 200000;

/// A left coset w<a>, i.e. an element normal form with the tail dropped.
struct CosetId {
  std::vector<NormalFormSyllable> syllables;
  friend auto operator<=>(const CosetId&, const CosetId&) = default;
};

CosetId coset_of(const GroupParams& p, const Word& w);
Word representative(const CosetId& c);

struct TreeEdge {
  std::size_t from;
  std::size_t to;
  int label;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// The radius-R ball of the Bass-Serre tree around the base vertex <a>.
struct CosetTable {
  GroupParams params;
  std::size_t radius = 0;
  std::vector<CosetId> vertices;       ///< BFS order, ties broken lexicographically
  std::vector<std::size_t> distance;   ///< distance from the base vertex
  std::vector<TreeEdge> edges;         ///< parent -> child
  std::vector<std::size_t> boundary;   ///< vertices at distance == radius
  std::map<CosetId, std::size_t> index;

  std::optional<std::size_t> find(const CosetId& c) const;
};

/// Number of vertices in a ball of radius R; saturates at SIZE_MAX.
std::size_t ball_size(const GroupParams& p, std::size_t R);

/// Throws BudgetError if the ball would exceed `budget` vertices.
CosetTable enumerate_ball(const GroupParams& p, std::size_t R,
                          std::size_t budget = kDefaultVertexBudget);

/// gen . (coset v), or nullopt when the image leaves the ball.
std::optional<std::size_t> act(const GroupParams& p, const CosetTable& table, Letter gen,
                               std::size_t v);

/// g (l/|m|)^B (l/|n|)^B with B the t-letter count.
BigInt default_scan_bound(const GroupParams& p, std::size_t t_letters);

/// Brute-force edge of the intersection graph: the minimal c in 1..c_max with
/// t^-eps a^{xc} t^eps in <a>, returning |exponent of the image|.
std::optional<BigInt> step_bruteforce(const GroupParams& p, const BigInt& x, int eps,
                                      const BigInt& c_max);

/// Minimal d in 1..d_max with w^-1 a^d w in <a>.
std::optional<BigInt> orbit_order_bruteforce(const GroupParams& p, const Word& w,
                                             const BigInt& d_max);

/// Minimal e in 1..d_max with w^k a^e w^-k in <a>; this is the index
/// [<a> : <a> cap w^-k <a> w^k].
std::optional<BigInt> index_bruteforce(const GroupParams& p, const Word& w, std::size_t k,
                                       const BigInt& d_max);

/// Orbit order of every vertex of the ball, as value -> multiplicity.
/// Cycle type of the a-action on the ball (a fixes the base vertex, so it
/// preserves distance and permutes every sphere): cycle length -> count.
std::map<std::size_t, std::size_t> a_cycle_lengths(const GroupParams& p, const CosetTable& table);

std::map<BigInt, std::size_t> orbit_census(const GroupParams& p, std::size_t R,
                                           std::size_t budget = kDefaultVertexBudget);

std::string export_dot(const CosetTable& table);
nlohmann::json to_json(const CosetTable& table);

}  // namespace bscale
