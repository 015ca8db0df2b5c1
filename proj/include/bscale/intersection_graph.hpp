#pragma once

#include "bscale/bigint.hpp"
#include "bscale/group_params.hpp"
#include "bscale/word.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bscale {

// Nodes x stand for the subgroup <a^x>. An edge x -> y labelled t^eps means
//   t^-eps <a^x> t^eps  intersect  <a>  =  <a^y>.
// The graphs are infinite and never materialized; everything here is lazy.

enum class NodeShape { Root, LeftRay, RightRay, Interior, Unstructured };

const char* to_string(NodeShape s) noexcept;

/// A classified node of Omega.
///   Root          value 1,                         level 0
///   LeftRay(i)    |m| (l/|n|)^i,                   level i+1, dist_left 0
///   RightRay(i)   |n| (l/|m|)^i,                   level i+1, dist_left i+1
///   Interior(i,j) l (l/|n|)^i (l/|m|)^j,           level i+j+2, dist_left j+1
/// Unstructured is only produced in the divisor case; level and dist_left are
/// then 0 and carry no meaning.
struct OmegaNode {
  BigInt value = 1;
  NodeShape shape = NodeShape::Root;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t level = 0;
  std::uint64_t dist_left = 0;

  std::string label() const;
  friend bool operator==(const OmegaNode&, const OmegaNode&) = default;
};

struct GraphEdge {
  int eps;
  BigInt target;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// y = |m| x / gcd(x, |n|) for eps = +1, y = |n| x / gcd(x, |m|) for eps = -1.
BigInt step(const GroupParams& p, const BigInt& x, int eps);

/// lcm(step(x, eps), h): the generator exponent of t^-eps <a^x> t^eps cap <a^h>.
BigInt step_h(const GroupParams& p, const BigInt& x, int eps, const BigInt& h);

/// Folds step_h over a t-sign sequence. No precondition on where it came from.
BigInt walk(const GroupParams& p, std::span<const int> t_signs, const BigInt& start,
            const BigInt& h);

/// y with w^-1 <a^start> w cap <a^h> = <a^y>. Throws PreconditionError unless
/// w is freely reduced and pinch-free.
BigInt trace(const GroupParams& p, const Word& w, const BigInt& start = 1, const BigInt& h = 1);

/// Throws NotANodeError for integers outside the node set; Unstructured in the
/// divisor case.
OmegaNode classify_node(const GroupParams& p, const BigInt& x);

/// The two outgoing edges, t first.
std::array<GraphEdge, 2> edges_from(const GroupParams& p, const BigInt& x);

/// Length of the shortest directed path x -> y. DomainError in the divisor
/// case or if y is unreachable from x.
std::uint64_t shortest_path_len(const GroupParams& p, const BigInt& x, const BigInt& y);

struct TraceGeometry {
  std::int64_t t_max = 0;
  std::int64_t mu = 0;
  OmegaNode end_node;
};

/// Walks p(t^R w) from the root and checks that it ends at level R + t_max
/// and distance |mu| from the left side. Requires R > number of t^-1 letters.
TraceGeometry trace_geometry(const GroupParams& p, const Word& w, std::uint64_t R);

/// Nodes of level <= max_level ordered by (level, dist_left). In the divisor
/// case: nodes within max_level steps of the root, in BFS order.
std::vector<OmegaNode> omega_nodes(const GroupParams& p, std::uint64_t max_level);

/// DOT rendering of the subgraph induced on omega_nodes(p, max_level).
std::string omega_to_dot(const GroupParams& p, std::uint64_t max_level);

}  // namespace bscale
