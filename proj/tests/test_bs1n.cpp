#include "bscale/bs1n.hpp"
#include "bscale/errors.hpp"
#include "bscale/group_core.hpp"
#include "bscale/random_words.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bscale;

namespace {

const GroupParams G12 = GroupParams::make(1, 2);

Bs1nNormalForm NF(long p, long q, long r) { return {BigInt(p), BigInt(q), BigInt(r)}; }

}  // namespace

TEST(Bs1nNormalForm, Examples) {
  EXPECT_EQ(bs1n_normal_form(G12, parse_word("a t a")), NF(0, 3, 1));
  EXPECT_EQ(bs1n_normal_form(G12, parse_word("")), NF(0, 0, 0));
  EXPECT_EQ(bs1n_normal_form(G12, parse_word("T a^2 t")), NF(0, 1, 0));
  EXPECT_EQ(bs1n_normal_form(G12, parse_word("T a t")), NF(1, 1, 1));
  EXPECT_EQ(bs1n_normal_form(G12, parse_word("T a^4 T t^3")), NF(0, 2, 1));
}

TEST(Bs1nNormalForm, RequiresUnitM) {
  EXPECT_THROW(bs1n_normal_form(GroupParams::make(2, 3), parse_word("a")), DomainError);
  EXPECT_THROW(bs1n_matrix(GroupParams::make(2, 3), parse_word("a")), DomainError);
}

TEST(Bs1nMatrix, Examples) {
  EXPECT_EQ(to_string(bs1n_matrix(G12, parse_word("a"))), "[[1,1],[0,1]]");
  EXPECT_EQ(to_string(bs1n_matrix(G12, parse_word("t a T"))), "[[1,2],[0,1]]");
  EXPECT_EQ(bs1n_matrix(G12, parse_word("t a T")), bs1n_matrix(G12, parse_word("a^2")));
  for (int n : {2, 3, -3, 5}) {
    EXPECT_EQ(bs1n_matrix(GroupParams::make(1, n), Word{}), Bs1nMatrix{});
  }
  EXPECT_EQ(to_string(bs1n_matrix(G12, parse_word("T a"))), "[[1/2,1/2],[0,1]]");
}

TEST(Bs1n, AgreesWithOracles) {
  std::mt19937_64 rng(21);
  for (auto [m, n] : {std::pair{1, 2}, {1, 3}, {1, -2}, {-1, 3}, {-1, -4}, {1, 1}, {1, -1}}) {
    const auto p = GroupParams::make(m, n);
    for (int trial = 0; trial < 400; ++trial) {
      const Word w = random_word_upto(rng, 12);
      const Word u = random_word_upto(rng, 12);
      const auto mat = bs1n_matrix(p, w);
      const auto aff = oracle::affine_image(p, w);
      EXPECT_EQ(mat.top_left, aff.mul);
      EXPECT_EQ(mat.top_right, aff.add);

      const auto nf = bs1n_normal_form(p, w);
      EXPECT_GE(nf.p, 0);
      EXPECT_GE(nf.r, 0);
      if (nf.p > 0 && nf.r > 0 && (p.abs_n() > 1)) EXPECT_NE(nf.q % p.n, 0) << to_string(w);
      EXPECT_TRUE(oracle::naive_equal(p, expand(nf), w)) << p.to_string() << " " << to_string(w);

      const bool same = oracle::naive_equal(p, w, u);
      EXPECT_EQ(bs1n_normal_form(p, u) == nf, same);
      // The matrix image is faithful only for |n| >= 2; t maps to +-1 when |n| = 1.
      if (p.abs_n() > 1) EXPECT_EQ(bs1n_matrix(p, u) == mat, same);
    }
  }
}
