#include "pacioli/algebra.hpp"

#include <gtest/gtest.h>

#include "support/oracle.hpp"

namespace pacioli {
namespace {

using testing::Gen;
using testing::Signed;
namespace oracle = testing::oracle;

constexpr int kTrials = 1000;

TTerm T(NatVec d, NatVec c) { return TTerm(std::move(d), std::move(c)); }

TEST(NatVecTest, RejectsNegativeComponents) {
  EXPECT_THROW(NatVec({1, -1}), std::domain_error);
}

TEST(NatVecTest, ComponentwiseMin) {
  EXPECT_EQ(componentwise_min({6, 0, 10}, {0, 3, 0}), (NatVec{0, 0, 0}));
  EXPECT_EQ(componentwise_min({5, 5}, {5, 5}), (NatVec{5, 5}));
  EXPECT_EQ(componentwise_min({12}, {5}), (NatVec{5}));
}

TEST(NatVecTest, ComponentwiseMaxAgreesWithOracle) {
  EXPECT_EQ(oracle::max({6, 0, 10}, {0, 3, 0}), (Signed{6, 3, 10}));
  EXPECT_EQ(componentwise_max({6, 0, 10}, {0, 3, 0}), (NatVec{6, 3, 10}));
  EXPECT_EQ(componentwise_max({0, 0}, {0, 0}), (NatVec{0, 0}));
  EXPECT_EQ(oracle::max({12}, {5}), (Signed{12}));
  EXPECT_EQ(componentwise_max({12}, {5}), (NatVec{12}));
}

TEST(NatVecTest, Disjoint) {
  EXPECT_TRUE(disjoint({6, 0, 10}, {0, 3, 0}));
  EXPECT_TRUE(disjoint({0, 0}, {0, 0}));
  EXPECT_FALSE(disjoint({12}, {5}));
}

TEST(NatVecTest, DimensionMismatchIsReported) {
  EXPECT_THROW(componentwise_min({1, 2}, {1}), DimensionMismatch);
  EXPECT_THROW(componentwise_max({1}, {1, 2}), DimensionMismatch);
  EXPECT_THROW(disjoint({1, 2, 3}, {1}), DimensionMismatch);
  EXPECT_THROW(T({1}, {1, 2}), DimensionMismatch);
  EXPECT_THROW(T({1}, {0}) + T({1, 2}, {0, 0}), DimensionMismatch);
  EXPECT_THROW(group_equal(T({1}, {0}), T({1, 2}, {0, 0})), DimensionMismatch);
  try {
    componentwise_min({1, 2}, {1});
    FAIL();
  } catch (const DimensionMismatch& e) {
    EXPECT_EQ(e.expected(), 2u);
    EXPECT_EQ(e.actual(), 1u);
  }
}

TEST(JordanTest, WorkedExamples) {
  auto [p1, n1] = jordan_decompose({6, -3, 10});
  EXPECT_EQ(p1, (NatVec{6, 0, 10}));
  EXPECT_EQ(n1, (NatVec{0, 3, 0}));

  auto [p2, n2] = jordan_decompose({0, 0, 0});
  EXPECT_EQ(p2, NatVec::zero(3));
  EXPECT_EQ(n2, NatVec::zero(3));

  auto [p3, n3] = jordan_decompose({-2, 5, -2});
  EXPECT_EQ(p3, (NatVec{0, 5, 0}));
  EXPECT_EQ(n3, (NatVec{2, 0, 2}));
}

TEST(TTermTest, Add) {
  EXPECT_EQ(T({15000}, {0}) + T({1500}, {2000}), T({16500}, {2000}));
  EXPECT_EQ(T({7}, {3}) + TTerm::zero(1), T({7}, {3}));
  EXPECT_EQ(testing::to_oracle(T({9000, 40, 50}, {0, 0, 0}) + T({0, 0, 0}, {0, 0, 30})).credit,
            oracle::add({0, 0, 0}, {0, 0, 30}));
  EXPECT_EQ(T({9000, 40, 50}, {0, 0, 0}) + T({0, 0, 0}, {0, 0, 30}),
            T({9000, 40, 50}, {0, 0, 30}));
}

TEST(TTermTest, GroupEqualityIsCrossSums) {
  EXPECT_TRUE(group_equal(T({16500}, {2000}), T({14500}, {0})));
  EXPECT_TRUE(group_equal(TTerm::zero(1), TTerm::zero(1)));
  // 7 + 7 vs 5 + 5
  EXPECT_FALSE(group_equal(T({7}, {5}), T({5}, {7})));
  // Structurally different, group-equal.
  EXPECT_NE(T({16500}, {2000}), T({14500}, {0}));
}

TEST(TTermTest, Negate) {
  EXPECT_EQ(negate(T({7}, {5})), T({5}, {7}));
  EXPECT_EQ(T({7}, {5}) + negate(T({7}, {5})), T({12}, {12}));
  EXPECT_TRUE(is_zero_account(T({12}, {12})));
  EXPECT_EQ(negate(TTerm::zero(1)), TTerm::zero(1));
  EXPECT_EQ(negate(T({6, 0, 10}, {0, 3, 0})), T({0, 3, 0}, {6, 0, 10}));
  EXPECT_EQ(testing::to_oracle(debit_value(negate(T({6, 0, 10}, {0, 3, 0})))),
            oracle::neg({6, -3, 10}));
}

TEST(TTermTest, Reduce) {
  EXPECT_EQ(reduce(T({12}, {5})), T({7}, {0}));
  EXPECT_EQ(reduce(TTerm::zero(1)), TTerm::zero(1));
  EXPECT_EQ(reduce(T({10500, 55, 50}, {800, 15, 30})), T({9700, 40, 20}, {0, 0, 0}));
  EXPECT_EQ(reduce(T({1000, 15, 30}, {1500, 55, 50})), T({0, 0, 0}, {500, 40, 20}));
}

TEST(TTermTest, ZeroAccount) {
  EXPECT_TRUE(is_zero_account(T({12}, {12})));
  EXPECT_TRUE(is_zero_account(TTerm::zero(1)));
  EXPECT_FALSE(is_zero_account(T({7}, {0})));
}

TEST(IsomorphismTest, DebitValue) {
  EXPECT_EQ(debit_value(T({16500}, {2000})), IntVec{14500});
  EXPECT_EQ(debit_value(TTerm::zero(1)), IntVec{0});
  EXPECT_EQ(debit_value(T({1000, 15, 30}, {1500, 55, 50})), (IntVec{-500, -40, -20}));
}

TEST(IsomorphismTest, CreditValue) {
  EXPECT_EQ(credit_value(T({1000, 15, 30}, {1500, 55, 50})), (IntVec{500, 40, 20}));
  EXPECT_EQ(credit_value(TTerm::zero(1)), IntVec{0});
  EXPECT_EQ(credit_value(T({7}, {5})), IntVec{-2});
}

TEST(IsomorphismTest, Encode) {
  EXPECT_EQ(encode_debit({15000}), T({15000}, {0}));
  EXPECT_EQ(encode_debit({0}), TTerm::zero(1));
  EXPECT_EQ(encode_debit({6, -3, 10}), T({6, 0, 10}, {0, 3, 0}));
  EXPECT_EQ(encode_credit({10000}), T({0}, {10000}));
  EXPECT_EQ(encode_credit({0}), TTerm::zero(1));
  EXPECT_EQ(encode_credit({-1000, 40, 50}), T({1000, 0, 0}, {0, 40, 50}));
}

TEST(TTermTest, ArbitraryMagnitudeDoesNotWrap) {
  const Integer big = Integer(1) << 200;
  const TTerm a(NatVec{big}, NatVec{0});
  const TTerm sum = a + a;
  EXPECT_EQ(sum.debit()[0], big * 2);
  EXPECT_EQ(debit_value(negate(sum))[0], -(big * 2));
}

TEST(FormattingTest, ScalarsBareVectorsParenthesized) {
  EXPECT_EQ(to_string(T({16500}, {2000})), "[16500 // 2000]");
  EXPECT_EQ(to_string(T({6, 0, 10}, {0, 3, 0})), "[(6, 0, 10) // (0, 3, 0)]");
  EXPECT_EQ(to_string(IntVec{-500, -40, -20}), "(-500, -40, -20)");
}

// ---------------------------------------------------------------------------
// Randomized laws, each checked against the int64 oracle.

class AlgebraLaws : public ::testing::TestWithParam<std::size_t> {};

TEST_P(AlgebraLaws, OperationsAgreeWithSignedOracle) {
  const std::size_t n = GetParam();
  Gen gen(0xA1 + n);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto pa = gen.pair(n);
    const auto pb = gen.pair(n);
    const TTerm a = testing::term(pa);
    const TTerm b = testing::term(pb);

    EXPECT_EQ(testing::to_oracle(debit_value(a + b)),
              oracle::add(oracle::value(pa), oracle::value(pb)));
    EXPECT_EQ(testing::to_oracle(debit_value(negate(a))), oracle::neg(oracle::value(pa)));
    EXPECT_EQ(testing::to_oracle(credit_value(a)), oracle::neg(oracle::value(pa)));
    EXPECT_EQ(group_equal(a, b), oracle::value(pa) == oracle::value(pb));
    EXPECT_EQ(is_zero_account(a), oracle::is_zero(oracle::value(pa)));

    const auto r = testing::to_oracle(reduce(a));
    const auto expected = oracle::reduced(pa);
    EXPECT_EQ(r.debit, expected.debit);
    EXPECT_EQ(r.credit, expected.credit);

    EXPECT_EQ(testing::to_oracle(componentwise_min(a.debit(), a.credit())),
              oracle::min(pa.debit, pa.credit));
    EXPECT_EQ(testing::to_oracle(componentwise_max(a.debit(), a.credit())),
              oracle::max(pa.debit, pa.credit));
  }
}

TEST_P(AlgebraLaws, GroupAxioms) {
  const std::size_t n = GetParam();
  Gen gen(0xB2 + n);
  const TTerm zero = TTerm::zero(n);
  for (int trial = 0; trial < kTrials; ++trial) {
    const TTerm a = testing::term(gen.pair(n));
    const TTerm b = testing::term(gen.pair(n));
    const TTerm c = testing::term(gen.pair(n));

    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a + zero, a);
    EXPECT_TRUE(group_equal(zero + a, a));
    EXPECT_TRUE(is_zero_account(a + negate(a)));
    EXPECT_TRUE(group_equal(a + negate(a), zero));
  }
}

TEST_P(AlgebraLaws, EqualityIsAnEquivalenceAndACongruence) {
  const std::size_t n = GetParam();
  Gen gen(0xC3 + n);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto pa = gen.pair(n);
    const TTerm a = testing::term(pa);
    // b is a by construction plus a random common shift, so group_equal(a, b).
    const auto shift = gen.unsigned_vec(n);
    const TTerm b = a + TTerm(testing::nat(shift), testing::nat(shift));
    const TTerm c = testing::term(gen.pair(n));
    // d is b shifted again.
    const auto shift2 = gen.unsigned_vec(n);
    const TTerm d = b + TTerm(testing::nat(shift2), testing::nat(shift2));

    EXPECT_TRUE(group_equal(a, a));
    EXPECT_TRUE(group_equal(a, b));
    EXPECT_TRUE(group_equal(b, a));
    EXPECT_TRUE(group_equal(b, d));
    EXPECT_TRUE(group_equal(a, d));
    EXPECT_TRUE(group_equal(a + c, b + c));
    EXPECT_EQ(group_equal(a, c), group_equal(d, c));
  }
}

TEST_P(AlgebraLaws, ReducedFormIsCanonical) {
  const std::size_t n = GetParam();
  Gen gen(0xD4 + n);
  for (int trial = 0; trial < kTrials; ++trial) {
    // Small range so that equal classes come up often.
    const TTerm a = testing::term(gen.pair(n, 6));
    const TTerm b = testing::term(gen.pair(n, 6));
    const TTerm ra = reduce(a);

    EXPECT_TRUE(is_reduced(ra));
    EXPECT_TRUE(disjoint(ra.debit(), ra.credit()));
    EXPECT_TRUE(group_equal(ra, a));
    EXPECT_EQ(reduce(ra), ra);
    EXPECT_EQ(group_equal(a, b), reduce(a) == reduce(b));
  }
}

TEST_P(AlgebraLaws, IsomorphismLaws) {
  const std::size_t n = GetParam();
  Gen gen(0xE5 + n);
  for (int trial = 0; trial < kTrials; ++trial) {
    const TTerm a = testing::term(gen.pair(n));
    const TTerm b = testing::term(gen.pair(n));
    const IntVec x = testing::ints(gen.signed_vec(n));

    EXPECT_EQ(debit_value(a + b), debit_value(a) + debit_value(b));
    EXPECT_EQ(credit_value(a + b), credit_value(a) + credit_value(b));
    EXPECT_EQ(debit_value(encode_debit(x)), x);
    EXPECT_EQ(credit_value(encode_credit(x)), x);
    EXPECT_TRUE(group_equal(encode_debit(debit_value(a)), a));
    EXPECT_TRUE(group_equal(encode_credit(credit_value(a)), a));
    EXPECT_EQ(credit_value(a), -debit_value(a));
    EXPECT_EQ(group_equal(a, b), debit_value(a) == debit_value(b));
    EXPECT_TRUE(is_reduced(encode_debit(x)));
    EXPECT_TRUE(is_reduced(encode_credit(x)));
    EXPECT_EQ(encode_debit(debit_value(a)), reduce(a));
  }
}

TEST_P(AlgebraLaws, JordanDecompositionLaws) {
  const std::size_t n = GetParam();
  Gen gen(0xF6 + n);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Signed xs = gen.signed_vec(n);
    const IntVec x = testing::ints(xs);
    const auto [pos, neg] = jordan_decompose(x);

    EXPECT_EQ(testing::to_oracle(pos), oracle::max(xs, Signed(n)));
    EXPECT_EQ(testing::to_oracle(neg), oracle::neg(oracle::min(xs, Signed(n))));
    EXPECT_EQ(pos.to_signed() - neg.to_signed(), x);
    EXPECT_TRUE(disjoint(pos, neg));

    // Any other non-negative pair with the same difference is pos+s, neg+s,
    // and is disjoint only when s == 0.
    const Signed s = gen.unsigned_vec(n, 3);
    const NatVec p2 = pos + testing::nat(s);
    const NatVec n2 = neg + testing::nat(s);
    EXPECT_EQ(p2.to_signed() - n2.to_signed(), x);
    EXPECT_EQ(disjoint(p2, n2), oracle::is_zero(s));
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, AlgebraLaws, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace pacioli
