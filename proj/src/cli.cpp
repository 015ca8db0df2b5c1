#include "bscale/cli.hpp"

#include "bscale/bs1n.hpp"
#include "bscale/coset_oracle.hpp"
#include "bscale/errors.hpp"
#include "bscale/group_core.hpp"
#include "bscale/intersection_graph.hpp"
#include "bscale/invariants.hpp"
#include "bscale/random_words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace bscale::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool json_output = false;
  std::size_t budget = kDefaultVertexBudget;
  std::uint64_t seed = 0;
};

std::int64_t parse_int64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw UsageError("invalid " + what + ": '" + text + "'");
  return value;
}

std::pair<std::int64_t, std::int64_t> parse_group(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--group expects m,n");
  return {parse_int64(text.substr(0, comma), "m"), parse_int64(text.substr(comma + 1), "n")};
}

BigInt parse_positive(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw UsageError("invalid " + what + ": '" + text + "'");
  }
  BigInt value(text);
  if (value < 1) throw UsageError(what + " must be positive");
  return value;
}

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += x.str();
  }
  return out;
}

template <typename Container>
std::string join_ints(const Container& xs, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

std::string eps_label(int eps) { return eps > 0 ? "t" : "t^-1"; }

// Cross-oracle checks shared with the test suites, sized to run in seconds.
class SelfCheck {
 public:
  SelfCheck(const GroupParams& p, std::uint64_t seed, std::ostream& out)
      : p_(p), rng_(seed), out_(out) {}

  bool run() {
    check("britton_idempotent_and_rho_invariant", 300, [&] {
      const Word w = random_word_upto(rng_, 12);
      const Word r = britton_reduce(p_, w);
      return britton_reduce(p_, r) == r && is_reduced(p_, r) && t_exponent(r) == t_exponent(w) &&
             equal_elements(p_, w, r);
    });
    check("normal_form_round_trip", 300, [&] {
      const Word w = random_word_upto(rng_, 12);
      const Word u = random_word_upto(rng_, 12);
      const auto nf = element_normal_form(p_, w);
      const bool same = element_normal_form(p_, u) == nf;
      return equal_elements(p_, expand(nf), w) && element_normal_form(p_, expand(nf)) == nf &&
             same == equal_elements(p_, w, u);
    });
    check("conjugacy_certificate", 300, [&] {
      const Word w = random_word_upto(rng_, 12);
      const auto cn = conjugacy_normalize(p_, w);
      return is_cyclically_reduced(p_, cn.word) &&
             equal_elements(p_, cn.conjugator * cn.word * cn.conjugator.inverse(), w);
    });
    check("trace_matches_index_scan", 150, [&] {
      const Word w = random_reduced_word(p_, rng_, 6);
      const BigInt bound = default_scan_bound(p_, w.t_letter_count());
      const auto brute = index_bruteforce(p_, w, 1, bound);
      return brute && *brute == trace(p_, w);
    });
    check("orbit_order_matches_scan", 150, [&] {
      const Word w = random_word_upto(rng_, 8);
      const BigInt bound = default_scan_bound(p_, w.t_letter_count());
      const auto brute = orbit_order_bruteforce(p_, w, bound);
      const BigInt d = orbit_order(p_, w);
      return brute && *brute == d && has_orbit_shape(p_, d);
    });
    if (!p_.divisor_case) {
      check("edges_match_bruteforce_step", 1, [&] {
        for (const auto& node : omega_nodes(p_, 4)) {
          for (const auto& e : edges_from(p_, node.value)) {
            auto brute = step_bruteforce(p_, node.value, e.eps, p_.l);
            if (!brute || *brute != e.target) return false;
          }
        }
        return true;
      });
    }
    check("moller_ratio_stabilizes", 200, [&] {
      const auto seq = moller_sequence(p_, random_word_upto(rng_, 10), 8);
      return seq.verified;
    });
    check("scale_power_and_conjugation", 200, [&] {
      const Word w = random_word_upto(rng_, 10);
      const Word h = random_word_upto(rng_, 6);
      const BigInt s = scale(p_, w).value;
      for (std::size_t j = 1; j <= 4; ++j) {
        if (scale(p_, w.power(j)).value != big_pow(s, j)) return false;
      }
      return scale(p_, h * w * h.inverse()).value == s;
    });
    check("modular_is_scale_ratio", 200, [&] {
      const Word w = random_word_upto(rng_, 10);
      const auto mod = modular(p_, w);
      return BigRational(mod.numerator, mod.denominator) ==
             BigRational(scale(p_, w).value, scale(p_, w.inverse()).value);
    });
    if (p_.abs_m() == 1) {
      check("matrix_decides_equality", 300, [&] {
        const Word w = random_word_upto(rng_, 12);
        const Word u = random_word_upto(rng_, 12);
        const bool by_matrix = bs1n_matrix(p_, w) == bs1n_matrix(p_, u);
        return by_matrix == equal_elements(p_, w, u) &&
               bs1n_matrix(p_, w * u) == bs1n_matrix(p_, w) * bs1n_matrix(p_, u) &&
               (bs1n_normal_form(p_, w) == bs1n_normal_form(p_, u)) == by_matrix;
      });
    }
    return failures_ == 0;
  }

 private:
  void check(const std::string& name, std::size_t trials, const std::function<bool()>& trial) {
    std::size_t failed = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      if (!trial()) ++failed;
    }
    if (failed == 0) {
      out_ << "PASS " << name << " (" << trials << ")\n";
    } else {
      out_ << "FAIL " << name << " (" << failed << "/" << trials << ")\n";
      ++failures_;
    }
  }

  GroupParams p_;
  std::mt19937_64 rng_;
  std::ostream& out_;
  std::size_t failures_ = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scale, modular function and local structure of the totally disconnected "
               "completions of Baumslag-Solitar groups BS(m,n)",
               "bscale"};
  CliConfig config;
  std::string group_text;
  app.add_option("--group", group_text, "Group parameters m,n")->required();
  app.add_flag("--json", config.json_output, "Emit JSON instead of text");
  app.add_option("--budget", config.budget, "Vertex budget for Bass-Serre balls")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1, 1);

  std::string word;
  std::string word2;
  std::size_t kmax = 8;
  std::string start_text;
  std::string h_text;
  std::uint64_t levels = 3;
  std::string x_text;
  std::string y_text;
  std::string dmax_text;
  std::size_t radius = 1;
  std::string dot_path;
  std::uint64_t rho_max = 3;

  auto* reduce = app.add_subcommand("reduce", "Britton-reduce a word");
  reduce->add_option("word", word)->required();
  auto* nf = app.add_subcommand("nf", "Canonical normal form of an element");
  nf->add_option("word", word)->required();
  auto* rho = app.add_subcommand("rho", "t-exponent sum");
  rho->add_option("word", word)->required();
  auto* equal = app.add_subcommand("equal", "Decide equality of two words");
  equal->add_option("word", word)->required();
  equal->add_option("other", word2)->required();
  auto* scale_cmd = app.add_subcommand("scale", "Scale of an element");
  scale_cmd->add_option("word", word)->required();
  auto* modular_cmd = app.add_subcommand("modular", "Modular function of an element");
  modular_cmd->add_option("word", word)->required();
  auto* flat_rank_cmd = app.add_subcommand("flat-rank", "Flat rank of the completion");
  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel of the action on cosets of <a>");
  auto* moller = app.add_subcommand("moller", "Index sequence [<a> : <a> cap z^-k<a>z^k]");
  moller->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
  moller->add_option("word", word)->required();
  auto* trace_cmd = app.add_subcommand("trace", "Walk the intersection graph along a word");
  trace_cmd->add_option("--start", start_text);
  trace_cmd->set_help_flag("--help", "Print this help message and exit");
  trace_cmd->add_option("--h", h_text);
  trace_cmd->add_option("word", word)->required();
  auto* omega_edges = app.add_subcommand("omega-edges", "Edges of nodes up to a level");
  omega_edges->add_option("--levels", levels);
  auto* omega_dist = app.add_subcommand("omega-dist", "Directed distance between two nodes");
  omega_dist->add_option("x", x_text)->required();
  omega_dist->add_option("y", y_text)->required();
  auto* orbit = app.add_subcommand("orbit", "Order of the <a>-orbit of the coset w<a>");
  orbit->add_option("word", word)->required();
  auto* orbit_brute = app.add_subcommand("orbit-brute", "Orbit order by exhaustive scan");
  orbit_brute->add_option("--dmax", dmax_text);
  orbit_brute->add_option("word", word)->required();
  auto* ball = app.add_subcommand("ball", "Enumerate a ball of the Bass-Serre tree");
  ball->add_option("--radius", radius)->required();
  ball->add_option("--dot", dot_path);
  auto* census = app.add_subcommand("census", "Orbit orders over a ball");
  census->add_option("--radius", radius)->required();
  auto* structure = app.add_subcommand("structure", "Local structure report");
  structure->add_option("word", word);
  auto* matrix = app.add_subcommand("matrix", "BS(1,n) matrix image");
  matrix->add_option("word", word)->required();
  auto* scale_set = app.add_subcommand("scale-set", "Scale values up to |rho| <= P");
  scale_set->add_option("--rho-max", rho_max);
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the cross-oracle checks");
  selfcheck->add_option("--seed", config.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto [m, n] = parse_group(group_text);
    config.m = m;
    config.n = n;
    const GroupParams p = GroupParams::make(config.m, config.n);
    const bool json_out = config.json_output;

    const auto notice = [&] {
      if (json_out) return;
      if (p.discrete()) {
        err << "notice: |m| = |n|: the completion is discrete; every scale is 1\n";
      } else if (p.divisor_case) {
        err << "notice: " << p.to_string()
            << " is in the divisor case; tracing defaults to the Lambda graph with h = "
            << p.lambda_base() << "\n";
      }
    };
    const auto emit = [&](const json& j, const std::string& text) {
      if (json_out) {
        out << j.dump() << "\n";
      } else {
        out << text << "\n";
      }
    };

    if (reduce->parsed()) {
      const Word r = britton_reduce(p, parse_word(word));
      emit(json{{"word", to_string(r)}}, display(r));
    } else if (nf->parsed()) {
      const Word w = parse_word(word);
      const auto form = element_normal_form(p, w);
      json syl = json::array();
      std::string text = "syllables:";
      for (const auto& s : form.syllables) {
        syl.push_back({s.c, s.eps});
        text += " (" + std::to_string(s.c) + "," + (s.eps > 0 ? "+1" : "-1") + ")";
      }
      text += "; tail: " + form.tail.str();
      json j{{"syllables", syl}, {"tail", form.tail.str()}, {"word", to_string(expand(form))}};
      if (p.abs_m() == 1) {
        const auto t = bs1n_normal_form(p, w);
        text += "\nbs1n: " + t.p.str() + " " + t.q.str() + " " + t.r.str();
        j["bs1n"] = {{"p", t.p.str()}, {"q", t.q.str()}, {"r", t.r.str()}};
      }
      emit(j, text);
    } else if (rho->parsed()) {
      const auto value = t_exponent(parse_word(word));
      emit(json{{"rho", value}}, std::to_string(value));
    } else if (equal->parsed()) {
      const bool same = equal_elements(p, parse_word(word), parse_word(word2));
      emit(json{{"equal", same}}, same ? "true" : "false");
    } else if (scale_cmd->parsed()) {
      notice();
      const auto s = scale(p, parse_word(word));
      emit(to_json(s), s.value.str());
    } else if (modular_cmd->parsed()) {
      const auto v = modular(p, parse_word(word));
      emit(to_json(v), v.numerator.str() + "/" + v.denominator.str());
    } else if (flat_rank_cmd->parsed()) {
      emit(json{{"flat_rank", flat_rank(p)}}, std::to_string(flat_rank(p)));
    } else if (kernel_cmd->parsed()) {
      emit(json{{"kernel_exponent", pi_kernel(p)}}, std::to_string(pi_kernel(p)));
    } else if (moller->parsed()) {
      notice();
      const auto seq = moller_sequence(p, parse_word(word), kmax);
      std::string text = join(seq.indices);
      if (seq.indices.size() >= 2) {
        const auto& last = seq.indices.back();
        const auto& prev = seq.indices[seq.indices.size() - 2];
        const BigRational ratio(last, prev);
        text += " | ratio " + ratio.str();
      }
      text += " | scale " + seq.scale.value.str() + (seq.verified ? " OK" : " UNSTABLE");
      emit(to_json(seq), text);
      if (!seq.verified) {
        err << "diagnostic: ratio r_(k+1)/r_k differs from the scale for some k >= "
            << seq.stable_from << "\n";
      }
    } else if (trace_cmd->parsed()) {
      notice();
      const BigInt fallback = p.divisor_case ? BigInt(p.lambda_base()) : BigInt(1);
      const BigInt start = start_text.empty() ? fallback : parse_positive(start_text, "--start");
      const BigInt h = h_text.empty() ? fallback : parse_positive(h_text, "--h");
      const BigInt y = trace(p, parse_word(word), start, h);
      emit(json{{"start", start.str()}, {"h", h.str()}, {"value", y.str()}}, y.str());
    } else if (omega_edges->parsed()) {
      notice();
      json j = json::array();
      std::string text;
      for (const auto& node : omega_nodes(p, levels)) {
        for (const auto& e : edges_from(p, node.value)) {
          j.push_back({{"from", node.value.str()},
                       {"shape", node.label()},
                       {"level", node.level},
                       {"label", eps_label(e.eps)},
                       {"to", e.target.str()}});
          if (!text.empty()) text += '\n';
          text += node.value.str() + " " + eps_label(e.eps) + " " + e.target.str();
        }
      }
      emit(j, text);
    } else if (omega_dist->parsed()) {
      notice();
      const auto d = shortest_path_len(p, parse_positive(x_text, "x"), parse_positive(y_text, "y"));
      emit(json{{"distance", d}}, std::to_string(d));
    } else if (orbit->parsed()) {
      const auto d = orbit_order(p, parse_word(word));
      emit(json{{"orbit_order", d.str()}}, d.str());
    } else if (orbit_brute->parsed()) {
      const Word w = parse_word(word);
      const BigInt bound = dmax_text.empty() ? default_scan_bound(p, w.t_letter_count())
                                             : parse_positive(dmax_text, "--dmax");
      const auto d = orbit_order_bruteforce(p, w, bound);
      emit(json{{"orbit_order", d ? json(d->str()) : json(nullptr)}}, d ? d->str() : "none");
    } else if (ball->parsed()) {
      const auto table = enumerate_ball(p, radius, config.budget);
      if (!dot_path.empty()) {
        std::ofstream file(dot_path);
        if (!file) throw UsageError("cannot write " + dot_path);
        file << export_dot(table);
      }
      emit(to_json(table), "vertices " + std::to_string(table.vertices.size()) + " edges " +
                               std::to_string(table.edges.size()) + " boundary " +
                               std::to_string(table.boundary.size()));
    } else if (census->parsed()) {
      notice();
      const auto values = orbit_census(p, radius, config.budget);
      bool shape_ok = true;
      json j = json::array();
      std::string text;
      for (const auto& [value, count] : values) {
        shape_ok = shape_ok && has_orbit_shape(p, value);
        j.push_back({{"order", value.str()}, {"count", count}});
        if (!text.empty()) text += ' ';
        text += value.str() + ":" + std::to_string(count);
      }
      emit(json{{"census", j}, {"shape_ok", shape_ok}},
           text + " | shape " + (shape_ok ? "OK" : "VIOLATED"));
    } else if (structure->parsed()) {
      notice();
      std::optional<Word> w;
      if (!word.empty()) w = parse_word(word);
      const auto report = structure_report(p, w);
      std::string text = "primes_vplus: " + join_ints(report.primes_vplus) +
                         "\nprimes_vminus: " + join_ints(report.primes_vminus) +
                         "\nquotient_order_bound: " + std::to_string(report.quotient_order_bound) +
                         "\nflat_rank: " + std::to_string(report.flat_rank) +
                         "\nkernel_exponent: " + std::to_string(report.kernel_exponent) +
                         "\nquasi_centre: " + report.quasi_centre +
                         "\nswap_applied: " + (report.swap_applied ? "true" : "false");
      if (report.scale) text += "\nscale: " + report.scale->value.str();
      emit(to_json(report), text);
    } else if (matrix->parsed()) {
      const auto mat = bs1n_matrix(p, parse_word(word));
      emit(json{{"top_left", mat.top_left.str()}, {"top_right", mat.top_right.str()}},
           to_string(mat));
    } else if (scale_set->parsed()) {
      const auto values = scale_value_set(p, rho_max);
      json j = json::array();
      std::vector<BigInt> list(values.begin(), values.end());
      for (const auto& v : list) j.push_back(v.str());
      emit(j, join(list));
    } else if (selfcheck->parsed()) {
      SelfCheck check(p, config.seed, out);
      return check.run() ? kOk : kCheckFailed;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kWordParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace bscale::cli
