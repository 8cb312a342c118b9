#include <gtest/gtest.h>

#include <random>

#include "braidcode/errors.hpp"
#include "braidcode/word_problem.hpp"
#include "test_support.hpp"

using namespace braidcode;
using braidcode::testing::random_word;

namespace {

const LaurentPoly t = LaurentPoly::t();
const LaurentPoly one(1);

BraidWord pure(int i, int j, int n) { return pure_generator({i, j}, n); }

BraidWord product(std::initializer_list<BraidWord> parts) {
  auto it = parts.begin();
  BraidWord w = *it;
  for (++it; it != parts.end(); ++it) w = concat(w, *it);
  return w;
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return product({a, b, invert(a), invert(b)});
}

// Empty, or the lowest generator present occurs with one sign only.
bool is_handle_free_shape(const BraidWord& w) {
  if (w.empty()) return true;
  int lowest = w.strands();
  for (Letter l : w.letters()) lowest = std::min(lowest, l.index());
  int sign = 0;
  for (Letter l : w.letters()) {
    if (l.index() != lowest) continue;
    if (sign == 0) sign = l.sign();
    if (l.sign() != sign) return false;
  }
  return true;
}

}  // namespace

TEST(HandleReduce, Examples) {
  EXPECT_TRUE(handle_reduce(make_word(3, {1, -1})).empty());
  EXPECT_EQ(handle_reduce(make_word(3, {1, 1})), make_word(3, {1, 1}));
  const BraidWord lhs = make_word(3, {1, 2, 1});
  const BraidWord rhs = make_word(3, {2, 1, 2});
  EXPECT_TRUE(handle_reduce(concat(lhs, invert(rhs))).empty());
}

TEST(HandleReduce, SingleHandleRewrite) {
  // sigma_1 sigma_2 sigma_1^-1 -> sigma_2^-1 sigma_1 sigma_2
  const HandleReduction r = handle_reduce_traced(make_word(3, {1, 2, -1}));
  EXPECT_EQ(r.word, make_word(3, {-2, 1, 2}));
  EXPECT_EQ(r.steps, 1u);
}

TEST(HandleReduce, StepCeiling) {
  EXPECT_THROW(handle_reduce(make_word(3, {1, 2, -1, 2, 1, -2, -1}), 0), StepLimitError);
  EXPECT_NO_THROW(handle_reduce(make_word(3, {1, 1}), 0));
}

TEST(IsTrivial, Battery) {
  const BraidWord s = product({pure(2, 3, 3), pure(1, 3, 3), pure(2, 3, 3)});
  EXPECT_TRUE(is_trivial(concat(s, invert(s))));
  EXPECT_FALSE(is_trivial(make_word(3, {1, 1})));
  EXPECT_FALSE(is_trivial(commutator(pure(2, 3, 3), pure(1, 3, 3))));
  EXPECT_TRUE(is_trivial(commutator(pure(1, 2, 4), pure(3, 4, 4))));
  EXPECT_TRUE(is_trivial(BraidWord(6)));
}

TEST(IsTrivial, CommutatorOracle) {
  // Independent witness: the commutator's Burau matrix is not the identity.
  EXPECT_FALSE(burau(commutator(pure(2, 3, 3), pure(1, 3, 3))).is_identity());
}

TEST(IsTrivial, NontrivialWithZeroExponentAndPurePermutation) {
  // Passes both fast rejects, so only handle reduction can decide it.
  const BraidWord w = commutator(make_word(3, {1, 1}), make_word(3, {2, 2}));
  EXPECT_EQ(exponent_sum(w), 0);
  EXPECT_TRUE(permutation(w).is_identity());
  EXPECT_FALSE(is_trivial(w));
  EXPECT_EQ(burau_verdict(w), BurauVerdict::NonTrivial);
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2})));
  EXPECT_FALSE(equivalent(make_word(3, {1, 2}), make_word(3, {2, 1})));
  EXPECT_TRUE(equivalent(make_word(4, {1, 3}), make_word(4, {3, 1})));
  EXPECT_THROW(equivalent(BraidWord(3), BraidWord(4)), ValidationError);
}

TEST(Burau, HandComputedBraidRelation) {
  LaurentMatrix expected(3);
  expected.at(0, 0) = one - t;
  expected.at(0, 1) = t - t * t;
  expected.at(0, 2) = t * t;
  expected.at(1, 0) = one - t;
  expected.at(1, 1) = t;
  expected.at(2, 0) = one;
  EXPECT_EQ(burau(make_word(3, {1, 2, 1})), expected);
  EXPECT_EQ(burau(make_word(3, {2, 1, 2})), expected);
}

TEST(Burau, SquareOfGeneratorInB2) {
  LaurentMatrix expected(2);
  expected.at(0, 0) = one - t + t * t;
  expected.at(0, 1) = t - t * t;
  expected.at(1, 0) = one - t;
  expected.at(1, 1) = t;
  EXPECT_EQ(burau(make_word(2, {1, 1})), expected);
  EXPECT_EQ(burau_verdict(make_word(2, {1, 1})), BurauVerdict::NonTrivial);
}

TEST(Burau, IdentityCases) {
  EXPECT_TRUE(burau(BraidWord(4)).is_identity());
  EXPECT_TRUE(burau(make_word(3, {1, -1})).is_identity());
  EXPECT_TRUE((burau_generator(Letter(2), 4) * burau_generator(Letter(-2), 4)).is_identity());
}

TEST(Burau, ColumnUpdateMatchesFullProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord w = random_word(rng, n, 10);
    LaurentMatrix m = LaurentMatrix::identity(n);
    for (Letter l : w.letters()) m = m * burau_generator(l, n);
    EXPECT_EQ(burau(w), m);
  }
}

TEST(BurauVerdict, Cases) {
  EXPECT_EQ(burau_verdict(BraidWord(5)), BurauVerdict::Trivial);
  EXPECT_EQ(burau_verdict(BraidWord(2)), BurauVerdict::Trivial);
  EXPECT_EQ(burau_verdict(make_word(5, {1, -1})), BurauVerdict::Inconclusive);
  EXPECT_EQ(burau_verdict(make_word(3, {1, -1})), BurauVerdict::Trivial);
  EXPECT_EQ(burau_verdict(make_word(5, {4, 4})), BurauVerdict::NonTrivial);
}

TEST(WordProblemProperties, InverseAnnihilates) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord w = random_word(rng, 2 + trial % 7, 50);
    EXPECT_TRUE(is_trivial(concat(w, invert(w))));
  }
}

TEST(WordProblemProperties, FastRejectsAreConsistent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 3000; ++trial) {
    const BraidWord w = random_word(rng, 3 + trial % 3, 8);
    if (handle_reduce(w).empty()) {
      EXPECT_EQ(exponent_sum(w), 0);
      EXPECT_TRUE(permutation(w).is_identity());
      EXPECT_TRUE(is_trivial(w));
    }
  }
}

TEST(WordProblemProperties, ReductionPreservesElementAndShape) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 2;  // Burau is faithful here
    const BraidWord w = random_word(rng, n, 24);
    const BraidWord r = handle_reduce(w);
    EXPECT_EQ(burau(r), burau(w)) << trial;
    EXPECT_TRUE(is_handle_free_shape(r));
    EXPECT_TRUE(equivalent(w, r));
    EXPECT_TRUE(equivalent(w, free_reduce(w)));
  }
}

TEST(WordProblemProperties, ReductionShapeOnLargerBraids) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 4;
    const BraidWord w = random_word(rng, n, 30);
    const BraidWord r = handle_reduce(w);
    EXPECT_TRUE(is_handle_free_shape(r));
    EXPECT_EQ(exponent_sum(r), exponent_sum(w));
    EXPECT_EQ(permutation(r), permutation(w));
    // Non-identity Burau image is a sound non-triviality witness at any n.
    if (!burau(w).is_identity()) EXPECT_FALSE(r.empty());
  }
}

TEST(WordProblemProperties, EquivalenceRelation) {
  std::mt19937_64 rng(15);
  std::vector<BraidWord> words;
  const BraidWord base = random_word(rng, 4, 6);
  // A family of words equal to `base` built with braid and commutation relations.
  words.push_back(base);
  words.push_back(concat(base, make_word(4, {1, 2, 1, -2, -1, -2})));
  words.push_back(concat(make_word(4, {1, 3, -1, -3}), base));
  words.push_back(concat(base, make_word(4, {2, -3, 3, -2})));
  words.push_back(random_word(rng, 4, 6));
  for (const auto& a : words) {
    EXPECT_TRUE(equivalent(a, a));
    for (const auto& b : words) {
      EXPECT_EQ(equivalent(a, b), equivalent(b, a));
      for (const auto& c : words) {
        if (equivalent(a, b) && equivalent(b, c)) EXPECT_TRUE(equivalent(a, c));
      }
    }
  }
  EXPECT_TRUE(equivalent(words[0], words[1]));
  EXPECT_TRUE(equivalent(words[0], words[2]));
  EXPECT_TRUE(equivalent(words[0], words[3]));
}
