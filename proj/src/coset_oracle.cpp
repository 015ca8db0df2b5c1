#include "bscale/coset_oracle.hpp"

#include "bscale/errors.hpp"
#include "bscale/invariants.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace bscale {

CosetId coset_of(const GroupParams& p, const Word& w) {
  return CosetId{element_normal_form(p, w).syllables};
}

Word representative(const CosetId& c) { return expand(ElementNormalForm{c.syllables, 0}); }

std::optional<std::size_t> CosetTable::find(const CosetId& c) const {
  auto it = index.find(c);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t ball_size(const GroupParams& p, std::size_t R) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  const auto degree = static_cast<std::size_t>(p.abs_m() + p.abs_n());
  std::size_t total = 1;
  std::size_t layer = 1;
  for (std::size_t r = 1; r <= R; ++r) {
    const std::size_t branching = r == 1 ? degree : degree - 1;
    if (branching != 0 && layer > kMax / branching) return kMax;
    layer *= branching;
    if (total > kMax - layer) return kMax;
    total += layer;
  }
  return total;
}

CosetTable enumerate_ball(const GroupParams& p, std::size_t R, std::size_t budget) {
  const std::size_t expected = ball_size(p, R);
  if (expected > budget) {
    throw BudgetError("ball of radius " + std::to_string(R) + " in " + p.to_string() +
                      " exceeds the vertex budget of " + std::to_string(budget));
  }
  CosetTable table;
  table.params = p;
  table.radius = R;
  table.vertices.reserve(expected);
  table.vertices.push_back(CosetId{});
  table.distance.push_back(0);
  table.index.emplace(CosetId{}, 0);

  struct Child {
    CosetId id;
    std::size_t parent;
    int label;
  };
  std::vector<std::size_t> layer{0};
  for (std::size_t r = 1; r <= R; ++r) {
    std::vector<Child> children;
    for (std::size_t v : layer) {
      const Word rep = representative(table.vertices[v]);
      for (int eps : {+1, -1}) {
        const std::int64_t count = eps > 0 ? p.abs_n() : p.abs_m();
        const Letter t = eps > 0 ? Letter::TPos : Letter::TNeg;
        for (std::int64_t c = 0; c < count; ++c) {
          CosetId child = coset_of(p, rep * Word::a_power(c) * Word::single(t));
          if (table.index.contains(child)) continue;  // the parent
          children.push_back({std::move(child), v, eps});
        }
      }
    }
    std::sort(children.begin(), children.end(),
              [](const Child& x, const Child& y) { return x.id < y.id; });
    layer.clear();
    for (auto& child : children) {
      const std::size_t idx = table.vertices.size();
      if (!table.index.emplace(child.id, idx).second) {
        throw std::logic_error("coset enumerated twice: not a tree");
      }
      table.vertices.push_back(std::move(child.id));
      table.distance.push_back(r);
      table.edges.push_back({child.parent, idx, child.label});
      layer.push_back(idx);
    }
  }
  for (std::size_t v = 0; v < table.vertices.size(); ++v) {
    if (table.distance[v] == R) table.boundary.push_back(v);
  }
  return table;
}

std::optional<std::size_t> act(const GroupParams& p, const CosetTable& table, Letter gen,
                               std::size_t v) {
  if (v >= table.vertices.size()) throw PreconditionError("act: vertex index out of range");
  return table.find(coset_of(p, Word::single(gen) * representative(table.vertices[v])));
}

BigInt default_scan_bound(const GroupParams& p, std::size_t t_letters) {
  return p.g * big_pow(BigInt(p.l_over_m()), t_letters) * big_pow(BigInt(p.l_over_n()), t_letters);
}

namespace {

// Smallest e in 1..e_max with left a^e right in <a>.
std::optional<BigInt> scan_conjugates(const GroupParams& p, const Word& left, const Word& right,
                                      const BigInt& e_max) {
  const SyllableForm l = to_syllables(left);
  const SyllableForm r = to_syllables(right);
  SyllableForm s;
  s.t = l.t;
  s.t.insert(s.t.end(), r.t.begin(), r.t.end());
  s.a.assign(l.a.begin(), l.a.end() - 1);
  const std::size_t middle = s.a.size();
  s.a.push_back(0);
  s.a.insert(s.a.end(), r.a.begin() + 1, r.a.end());
  const BigInt base = l.a.back() + r.a.front();
  for (BigInt e = 1; e <= e_max; ++e) {
    s.a[middle] = base + e;
    if (britton_reduce(p, s).t.empty()) return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BigInt> step_bruteforce(const GroupParams& p, const BigInt& x, int eps,
                                      const BigInt& c_max) {
  const Word open = Word::t_power(-eps);
  const Word close = Word::t_power(eps);
  for (BigInt c = 1; c <= c_max; ++c) {
    if (auto k = as_power_of_a(p, open * Word::a_power(x * c) * close)) return big_abs(*k);
  }
  return std::nullopt;
}

std::optional<BigInt> orbit_order_bruteforce(const GroupParams& p, const Word& w,
                                             const BigInt& d_max) {
  return scan_conjugates(p, w.inverse(), w, d_max);
}

std::optional<BigInt> index_bruteforce(const GroupParams& p, const Word& w, std::size_t k,
                                       const BigInt& d_max) {
  const Word wk = w.power(k);
  return scan_conjugates(p, wk, wk.inverse(), d_max);
}

std::map<std::size_t, std::size_t> a_cycle_lengths(const GroupParams& p, const CosetTable& table) {
  std::map<std::size_t, std::size_t> cycles;
  std::vector<bool> seen(table.vertices.size(), false);
  for (std::size_t v = 0; v < table.vertices.size(); ++v) {
    if (seen[v]) continue;
    std::size_t length = 0;
    std::size_t u = v;
    do {
      seen[u] = true;
      ++length;
      auto next = act(p, table, Letter::APos, u);
      if (!next) throw std::logic_error("a-action left the ball");
      u = *next;
    } while (u != v);
    ++cycles[length];
  }
  return cycles;
}

std::map<BigInt, std::size_t> orbit_census(const GroupParams& p, std::size_t R,
                                           std::size_t budget) {
  const CosetTable table = enumerate_ball(p, R, budget);
  std::map<BigInt, std::size_t> census;
  for (const auto& v : table.vertices) ++census[orbit_order(p, representative(v))];
  return census;
}

std::string export_dot(const CosetTable& table) {
  std::ostringstream out;
  out << "digraph bass_serre {\n";
  for (std::size_t v = 0; v < table.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << display(representative(table.vertices[v])) << "\"];\n";
  }
  for (const auto& e : table.edges) {
    out << "  v" << e.from << " -> v" << e.to;
    if (e.label > 0) {
      out << " [label=\"t\"];\n";
    } else {
      out << " [label=\"t^-1\", style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const CosetTable& table) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : table.vertices) vertices.push_back(to_string(representative(v)));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : table.edges) edges.push_back({e.from, e.to, e.label});
  return {{"params", {{"m", table.params.m}, {"n", table.params.n}}},
          {"radius", table.radius},
          {"vertices", vertices},
          {"edges", edges},
          {"boundary", table.boundary}};
}

}  // namespace bscale
