#include "bscale/intersection_graph.hpp"

#include "bscale/errors.hpp"
#include "bscale/group_core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace bscale {

const char* to_string(NodeShape s) noexcept {
  switch (s) {
    case NodeShape::Root: return "Root";
    case NodeShape::LeftRay: return "LeftRay";
    case NodeShape::RightRay: return "RightRay";
    case NodeShape::Interior: return "Interior";
    case NodeShape::Unstructured: return "Unstructured";
  }
  return "?";
}

std::string OmegaNode::label() const {
  switch (shape) {
    case NodeShape::Root:
    case NodeShape::Unstructured: return to_string(shape);
    case NodeShape::LeftRay:
    case NodeShape::RightRay: return std::string(to_string(shape)) + "(" + std::to_string(i) + ")";
    case NodeShape::Interior:
      return "Interior(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return "?";
}

BigInt step(const GroupParams& p, const BigInt& x, int eps) {
  if (x < 1) throw PreconditionError("graph nodes are positive integers");
  if (eps > 0) return p.abs_m() * x / big_gcd(x, p.abs_n());
  return p.abs_n() * x / big_gcd(x, p.abs_m());
}

BigInt step_h(const GroupParams& p, const BigInt& x, int eps, const BigInt& h) {
  if (h < 1) throw PreconditionError("intersection exponent h must be positive");
  return big_lcm(step(p, x, eps), h);
}

BigInt walk(const GroupParams& p, std::span<const int> t_signs, const BigInt& start,
            const BigInt& h) {
  BigInt x = start;
  if (h == 1) {
    for (int eps : t_signs) x = step(p, x, eps);
  } else {
    for (int eps : t_signs) x = step_h(p, x, eps, h);
  }
  return x;
}

BigInt trace(const GroupParams& p, const Word& w, const BigInt& start, const BigInt& h) {
  if (!is_freely_reduced(w)) throw PreconditionError("trace: word is not freely reduced");
  if (find_pinch(p, to_syllables(w))) throw PreconditionError("trace: word contains a pinch");
  const auto path = w.t_path();
  return walk(p, path, start, h);
}

namespace {

// Divides out `base` as often as possible; returns the multiplicity.
std::uint64_t strip_power(BigInt& y, std::int64_t base) {
  std::uint64_t k = 0;
  while (y % base == 0) {
    y /= base;
    ++k;
  }
  return k;
}

OmegaNode make_node(const GroupParams& p, NodeShape shape, std::uint64_t i, std::uint64_t j) {
  const BigInt A = p.l_over_n();
  const BigInt B = p.l_over_m();
  OmegaNode node;
  node.shape = shape;
  node.i = i;
  node.j = j;
  switch (shape) {
    case NodeShape::Root:
      node.value = 1;
      break;
    case NodeShape::LeftRay:
      node.value = p.abs_m() * big_pow(A, i);
      node.level = i + 1;
      break;
    case NodeShape::RightRay:
      node.value = p.abs_n() * big_pow(B, i);
      node.level = i + 1;
      node.dist_left = i + 1;
      break;
    case NodeShape::Interior:
      node.value = p.l * big_pow(A, i) * big_pow(B, j);
      node.level = i + j + 2;
      node.dist_left = j + 1;
      break;
    case NodeShape::Unstructured:
      break;
  }
  return node;
}

void require_structured(const GroupParams& p, const char* what) {
  if (p.divisor_case) {
    throw DomainError(std::string(what) + " is undefined when one of |m|, |n| divides the other (" +
                      p.to_string() + ")");
  }
}

}  // namespace

OmegaNode classify_node(const GroupParams& p, const BigInt& x) {
  if (x < 1) throw NotANodeError("not a node: " + x.str());
  if (p.divisor_case) {
    OmegaNode node;
    node.value = x;
    node.shape = NodeShape::Unstructured;
    return node;
  }
  if (x == 1) return make_node(p, NodeShape::Root, 0, 0);
  const std::int64_t A = p.l_over_n();
  const std::int64_t B = p.l_over_m();
  if (x % p.l == 0) {
    BigInt y = x / p.l;
    const auto i = strip_power(y, A);
    const auto j = strip_power(y, B);
    if (y == 1) return make_node(p, NodeShape::Interior, i, j);
  } else if (x % p.abs_m() == 0) {
    BigInt y = x / p.abs_m();
    const auto i = strip_power(y, A);
    if (y == 1) return make_node(p, NodeShape::LeftRay, i, 0);
  }
  if (x % p.l != 0 && x % p.abs_n() == 0) {
    BigInt y = x / p.abs_n();
    const auto i = strip_power(y, B);
    if (y == 1) return make_node(p, NodeShape::RightRay, i, 0);
  }
  throw NotANodeError("not a node of the graph for " + p.to_string() + ": " + x.str());
}

std::array<GraphEdge, 2> edges_from(const GroupParams& p, const BigInt& x) {
  classify_node(p, x);
  return {GraphEdge{+1, step(p, x, +1)}, GraphEdge{-1, step(p, x, -1)}};
}

std::uint64_t shortest_path_len(const GroupParams& p, const BigInt& x, const BigInt& y) {
  require_structured(p, "shortest_path_len");
  const OmegaNode from = classify_node(p, x);
  const OmegaNode to = classify_node(p, y);
  if (x == y) return 0;
  // Edges never decrease the level, so a path to y stays within level(y).
  const std::uint64_t level_cap = to.level;
  if (from.level > level_cap) {
    throw DomainError("no directed path from " + x.str() + " to " + y.str());
  }
  std::map<BigInt, std::uint64_t> dist{{x, 0}};
  std::deque<BigInt> queue{x};
  while (!queue.empty()) {
    BigInt u = std::move(queue.front());
    queue.pop_front();
    const std::uint64_t du = dist.at(u);
    for (int eps : {+1, -1}) {
      BigInt v = step(p, u, eps);
      if (dist.contains(v)) continue;
      if (classify_node(p, v).level > level_cap) continue;
      if (v == y) return du + 1;
      dist.emplace(v, du + 1);
      queue.push_back(std::move(v));
    }
  }
  throw DomainError("no directed path from " + x.str() + " to " + y.str());
}

TraceGeometry trace_geometry(const GroupParams& p, const Word& w, std::uint64_t R) {
  require_structured(p, "trace_geometry");
  const auto w_path = w.t_path();
  const auto inverse_count =
      static_cast<std::uint64_t>(std::count(w_path.begin(), w_path.end(), -1));
  if (R <= inverse_count) {
    throw PreconditionError("trace_geometry: R must exceed the number of t^-1 letters (" +
                            std::to_string(inverse_count) + ")");
  }
  std::vector<int> path(R, +1);
  path.insert(path.end(), w_path.begin(), w_path.end());

  TraceGeometry geo;
  std::int64_t prefix = 0;
  for (int eps : w_path) {
    prefix += eps;
    geo.t_max = std::max(geo.t_max, prefix);
  }
  geo.mu = prefix - geo.t_max;
  geo.end_node = classify_node(p, walk(p, path, 1, 1));

  const auto expected_level = static_cast<std::uint64_t>(static_cast<std::int64_t>(R) + geo.t_max);
  const auto expected_dist = static_cast<std::uint64_t>(-geo.mu);
  if (geo.end_node.level != expected_level || geo.end_node.dist_left != expected_dist) {
    throw std::logic_error("trace_geometry: path ended at " + geo.end_node.label() +
                           ", expected level " + std::to_string(expected_level) +
                           " and distance " + std::to_string(expected_dist));
  }
  return geo;
}

std::vector<OmegaNode> omega_nodes(const GroupParams& p, std::uint64_t max_level) {
  std::vector<OmegaNode> nodes;
  if (p.divisor_case) {
    std::set<BigInt> seen{BigInt(1)};
    std::vector<BigInt> frontier{BigInt(1)};
    nodes.push_back(classify_node(p, 1));
    for (std::uint64_t depth = 0; depth < max_level; ++depth) {
      std::vector<BigInt> next;
      for (const auto& u : frontier) {
        for (int eps : {+1, -1}) {
          BigInt v = step(p, u, eps);
          if (seen.insert(v).second) {
            nodes.push_back(classify_node(p, v));
            next.push_back(std::move(v));
          }
        }
      }
      frontier = std::move(next);
    }
    return nodes;
  }
  nodes.push_back(make_node(p, NodeShape::Root, 0, 0));
  for (std::uint64_t level = 1; level <= max_level; ++level) {
    nodes.push_back(make_node(p, NodeShape::LeftRay, level - 1, 0));
    for (std::uint64_t j = 0; j + 2 <= level; ++j) {
      nodes.push_back(make_node(p, NodeShape::Interior, level - 2 - j, j));
    }
    nodes.push_back(make_node(p, NodeShape::RightRay, level - 1, 0));
  }
  return nodes;
}

std::string omega_to_dot(const GroupParams& p, std::uint64_t max_level) {
  const auto nodes = omega_nodes(p, max_level);
  std::map<BigInt, std::size_t> id;
  for (std::size_t k = 0; k < nodes.size(); ++k) id.emplace(nodes[k].value, k);

  std::ostringstream out;
  out << "digraph omega {\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out << "  n" << k << " [label=\"" << nodes[k].value.str() << "\\n" << nodes[k].label()
        << "\"];\n";
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (const auto& e : edges_from(p, nodes[k].value)) {
      auto it = id.find(e.target);
      if (it == id.end()) continue;
      out << "  n" << k << " -> n" << it->second << " [label=\"" << (e.eps > 0 ? "t" : "t^-1")
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bscale
