#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "braidcode/codec.hpp"
#include "braidcode/errors.hpp"
#include "braidcode/word_problem.hpp"
#include "test_support.hpp"

using namespace braidcode;
using braidcode::testing::digits;
using braidcode::testing::random_string;

TEST(CodeScheme, BinaryAndTernaryTables) {
  const CodeScheme two(2);
  EXPECT_EQ(two.strands(), 3);
  EXPECT_EQ(two.distinguished(), 3);
  EXPECT_EQ(two.generator(0), (PureGeneratorId{2, 3}));
  EXPECT_EQ(two.generator(1), (PureGeneratorId{1, 3}));

  const CodeScheme three(3);
  EXPECT_EQ(three.strands(), 4);
  EXPECT_EQ(three.generator(0), (PureGeneratorId{3, 4}));
  EXPECT_EQ(three.generator(1), (PureGeneratorId{2, 4}));
  EXPECT_EQ(three.generator(2), (PureGeneratorId{1, 4}));
}

TEST(CodeScheme, GeneralPattern) {
  const CodeScheme five(5);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(five.generator(k), (PureGeneratorId{5 - k, 6}));
  for (int n = 2; n <= 12; ++n) {
    const CodeScheme s(n);
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(s.generator(a).j, s.distinguished());
      for (int b = a + 1; b < n; ++b) EXPECT_NE(s.generator(a), s.generator(b));
    }
  }
  EXPECT_THROW(CodeScheme(1), ValidationError);
  EXPECT_THROW(CodeScheme(2).generator(2), ValidationError);
}

TEST(Encode, PaperExamples) {
  const CodeScheme s(2);
  EXPECT_EQ(encode(s, digits(2, "0")).signed_indices(), (std::vector<int>{2, 2}));
  EXPECT_EQ(encode(s, digits(2, "010")).signed_indices(),
            (std::vector<int>{2, 2, 2, 1, 1, -2, 2, 2}));
  EXPECT_TRUE(encode(s, SymbolString(2)).empty());
  EXPECT_THROW(encode(s, digits(3, "0")), ValidationError);
}

TEST(InverseString, PaperExample) {
  const CodeScheme s(2);
  EXPECT_EQ(inverse_string(s, digits(2, "010")).signed_indices(),
            (std::vector<int>{-2, -2, 2, -1, -1, -2, -2, -2}));
  EXPECT_TRUE(inverse_string(s, SymbolString(2)).empty());
}

TEST(InverseString, IsInvertOfEncode) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 9;
    const CodeScheme s(n);
    const SymbolString str = random_string(rng, n, 20);
    EXPECT_EQ(inverse_string(s, str), invert(encode(s, str)));
  }
}

TEST(VerifyRoundtrip, Examples) {
  EXPECT_TRUE(verify_roundtrip(CodeScheme(2), digits(2, "010")));
  EXPECT_TRUE(verify_roundtrip(CodeScheme(3), SymbolString(3)));
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> sym(0, 7);
  std::vector<int> symbols(40);
  for (int& x : symbols) x = sym(rng);
  EXPECT_TRUE(verify_roundtrip(CodeScheme(8), SymbolString(8, symbols)));
}

TEST(DecodeExhaustive, Examples) {
  const CodeScheme s(2);
  EXPECT_EQ(decode_exhaustive(s, encode(s, digits(2, "01")), 3), digits(2, "01"));
  EXPECT_EQ(decode_exhaustive(s, BraidWord(3), 3), SymbolString(2));
  EXPECT_EQ(decode_exhaustive(s, make_word(3, {1, 1}), 3), std::nullopt);
}

TEST(DecodeExhaustive, RecoversEquivalentButDifferentSpelling) {
  const CodeScheme s(2);
  // l_13 written with an inserted sigma_1 sigma_1^-1 and a braid-relation detour.
  const BraidWord disguised =
      concat(make_word(3, {1, -1, 1, 2, 1, -2, -1, -2}), encode(s, digits(2, "10")));
  EXPECT_EQ(decode_exhaustive(s, disguised, 3), digits(2, "10"));
}

TEST(DecodeExhaustive, Errors) {
  const CodeScheme s(2);
  EXPECT_THROW(decode_exhaustive(s, BraidWord(4), 3), ValidationError);
  EXPECT_THROW(decode_exhaustive(s, BraidWord(3), 30), ResourceError);
  EXPECT_THROW(decode_exhaustive(s, encode(s, digits(2, "0")), 30), ResourceError);
}

TEST(DecodeExhaustive, InvertsEncodeOnShortStrings) {
  for (int n : {2, 3}) {
    const CodeScheme s(n);
    for (const auto& str : enumerate_strings(n, 0, 4, 1000)) {
      EXPECT_EQ(decode_exhaustive(s, encode(s, str), static_cast<int>(str.size())), str);
    }
  }
}

TEST(InjectivityCheck, Examples) {
  const InjectivityReport two = injectivity_check(CodeScheme(2), 5);
  EXPECT_TRUE(two.pass());
  EXPECT_EQ(two.strings, 62u);
  EXPECT_EQ(two.pairs, 1891u);

  const InjectivityReport three = injectivity_check(CodeScheme(3), 3);
  EXPECT_TRUE(three.pass());
  EXPECT_EQ(three.strings, 39u);

  const InjectivityReport single = injectivity_check(CodeScheme(2), 1);
  EXPECT_TRUE(single.pass());
  EXPECT_EQ(single.pairs, 1u);
  EXPECT_FALSE(burau(pure_generator({2, 3}, 3)) == burau(pure_generator({1, 3}, 3)));
}

TEST(InjectivityCheck, Budget) {
  EXPECT_THROW(injectivity_check(CodeScheme(2), 5, Execution::Serial, 100), ResourceError);
  EXPECT_THROW(injectivity_check(CodeScheme(2), 0), ValidationError);
}

TEST(CodecProperties, CodeWordsArePure) {
  std::mt19937_64 rng(23);
  for (int n : {2, 3, 8}) {
    const CodeScheme s(n);
    for (int trial = 0; trial < 200; ++trial) {
      const SymbolString str = random_string(rng, n, 40);
      const BraidWord w = encode(s, str);
      EXPECT_TRUE(permutation(w).is_identity());
      EXPECT_EQ(exponent_sum(w), 2 * static_cast<std::int64_t>(str.size()));
      EXPECT_TRUE(verify_roundtrip(s, str));
    }
  }
}

TEST(CodecProperties, OrderSensitivity) {
  const CodeScheme s(2);
  for (int len = 2; len <= 4; ++len) {
    for (const auto& str : enumerate_strings(2, len, len, 100)) {
      std::vector<int> perm(str.symbols().begin(), str.symbols().end());
      std::sort(perm.begin(), perm.end());
      do {
        const SymbolString other(2, perm);
        if (other == str) continue;
        EXPECT_FALSE(equivalent(encode(s, str), encode(s, other)));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(CodecProperties, DisjointGeneratorsCommute) {
  // Why schemes share a distinguished strand: l_12 and l_34 commute in B4.
  const BraidWord l12 = pure_generator({1, 2}, 4);
  const BraidWord l34 = pure_generator({3, 4}, 4);
  EXPECT_TRUE(equivalent(concat(l12, l34), concat(l34, l12)));
}

TEST(CodecProperties, AllThreeGeneratorsOfB3CollideAtLengthThree) {
  // Test fixture only, not a supported scheme: l_12, l_13, l_23 inside B3.
  // No two of them commute, but their product is the central full twist, so
  // its cyclic shifts encode the same braid.
  const BraidWord l12 = pure_generator({1, 2}, 3);
  const BraidWord l13 = pure_generator({1, 3}, 3);
  const BraidWord l23 = pure_generator({2, 3}, 3);
  EXPECT_FALSE(equivalent(concat(l12, l13), concat(l13, l12)));
  EXPECT_FALSE(equivalent(concat(l12, l23), concat(l23, l12)));
  EXPECT_FALSE(equivalent(concat(l13, l23), concat(l23, l13)));
  const BraidWord twist = concat(concat(l12, l13), l23);
  EXPECT_TRUE(equivalent(twist, concat(concat(l13, l23), l12)));
  EXPECT_TRUE(equivalent(twist, concat(concat(l23, l12), l13)));
  EXPECT_TRUE(equivalent(twist, make_word(3, {1, 2, 1, 1, 2, 1})));
}

TEST(Symbols, Enumeration) {
  EXPECT_EQ(count_strings(2, 0, 4), 31u);
  EXPECT_EQ(count_strings(3, 1, 3), 39u);
  const auto all = enumerate_strings(2, 0, 2, 10);
  ASSERT_EQ(all.size(), 7u);
  EXPECT_TRUE(all[0].empty());
  EXPECT_EQ(all[1], digits(2, "0"));
  EXPECT_EQ(all[6], digits(2, "11"));
  EXPECT_THROW(enumerate_strings(2, 0, 10, 100), ResourceError);
  EXPECT_THROW(SymbolString(2, {0, 2}), ValidationError);
}
