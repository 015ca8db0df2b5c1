// Randomized cross-checks between the graph calculus and the brute-force
// oracles, over a spread of parameter pairs including negative and divisor cases.

#include "bscale/coset_oracle.hpp"
#include "bscale/group_core.hpp"
#include "bscale/intersection_graph.hpp"
#include "bscale/invariants.hpp"
#include "bscale/random_words.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bscale;

namespace {

std::vector<GroupParams> groups() {
  std::vector<GroupParams> out;
  for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {-2, 3}, {2, -5}, {4, 6}, {2, 4}, {4, -2}, {1, 3},
                      {-1, 2}, {3, 3}, {2, -2}, {6, 9}}) {
    out.push_back(GroupParams::make(m, n));
  }
  return out;
}

BigRational as_rational(const ModularValue& v) { return {v.numerator, v.denominator}; }

}  // namespace

TEST(Properties, IndexOfPowersMatchesTrace) {
  std::mt19937_64 rng(51);
  std::size_t checked = 0;
  for (const auto& p : groups()) {
    if (p.discrete()) continue;
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_reduced_word(p, rng, 8);
      const Word z = conjugacy_normalize(p, w).word;
      for (std::size_t k = 1; k <= 3; ++k) {
        // Scanning exactly up to the predicted value checks both membership
        // and minimality.
        const BigInt predicted = trace(p, z.power(k));
        if (predicted > 50000) continue;
        EXPECT_EQ(index_bruteforce(p, z, k, predicted), predicted)
            << p.to_string() << " " << to_string(z) << " k=" << k;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Properties, TraceIsAWalkOnThePath) {
  std::mt19937_64 rng(52);
  for (const auto& p : groups()) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_reduced_word(p, rng, 12);
      const auto path = w.t_path();
      EXPECT_EQ(trace(p, w), walk(p, path, 1, 1));
      // Splitting the word splits the walk.
      const std::size_t cut = path.empty() ? 0 : rng() % path.size();
      const std::span<const int> all(path);
      EXPECT_EQ(walk(p, all.subspan(cut), walk(p, all.first(cut), 1, 1), 1), trace(p, w));
    }
  }
}

TEST(Properties, OrbitOrderMatchesScan) {
  std::mt19937_64 rng(53);
  for (const auto& p : groups()) {
    for (int trial = 0; trial < 60; ++trial) {
      const Word w = random_word_upto(rng, 8);
      const BigInt d = orbit_order(p, w);
      EXPECT_TRUE(has_orbit_shape(p, d)) << p.to_string() << " " << d;
      EXPECT_EQ(orbit_order_bruteforce(p, w, d), d) << p.to_string() << " " << to_string(w);
      EXPECT_LE(d, default_scan_bound(p, w.t_letter_count()));
      // Orbit order depends only on the coset w<a>.
      EXPECT_EQ(orbit_order(p, w * Word::a_power(static_cast<long>(rng() % 7) - 3)), d);
    }
  }
}

TEST(Properties, ScaleAxioms) {
  std::mt19937_64 rng(54);
  for (const auto& p : groups()) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word_upto(rng, 10);
      const Word h = random_word_upto(rng, 6);
      const BigInt s = scale(p, w).value;
      for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(scale(p, w.power(j)).value, big_pow(s, j));
      EXPECT_EQ(scale(p, h * w * h.inverse()).value, s);
      EXPECT_EQ(scale(p, britton_reduce(p, w)).value, s);
      if (p.discrete()) EXPECT_EQ(s, 1);
    }
  }
}

TEST(Properties, ModularIsAHomomorphism) {
  std::mt19937_64 rng(55);
  for (const auto& p : groups()) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word_upto(rng, 10);
      const Word u = random_word_upto(rng, 10);
      EXPECT_EQ(as_rational(modular(p, w * u)), as_rational(modular(p, w)) * as_rational(modular(p, u)));
      EXPECT_EQ(as_rational(modular(p, w)),
                BigRational(scale(p, w).value, scale(p, w.inverse()).value));
    }
  }
}

TEST(Properties, MollerRatioStabilizes) {
  std::mt19937_64 rng(56);
  for (const auto& p : groups()) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word_upto(rng, 10);
      const auto seq = moller_sequence(p, w, 8);
      EXPECT_TRUE(seq.verified) << p.to_string() << " " << to_string(w);
      EXPECT_TRUE(oracle::naive_equal(p, seq.conjugator * seq.normalized * seq.conjugator.inverse(), w));
    }
  }
}

TEST(Properties, TraceGeometryLaw) {
  std::mt19937_64 rng(57);
  for (const auto& p : groups()) {
    if (p.divisor_case || p.discrete()) continue;
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word_upto(rng, 12);
      const auto R = w.t_inverse_count() + 1 + rng() % 3;
      const auto geo = trace_geometry(p, w, R);
      EXPECT_EQ(geo.end_node.level, R + static_cast<std::uint64_t>(geo.t_max));
      EXPECT_EQ(geo.end_node.dist_left, static_cast<std::uint64_t>(geo.mu < 0 ? -geo.mu : geo.mu));
    }
  }
}
