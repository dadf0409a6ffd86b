#include <gtest/gtest.h>

#include "pscodes/galois.hpp"

using namespace pscodes;

namespace {

// Carry-less product reduced by the field polynomial, bit by bit.
std::uint32_t slow_gf2m_mul(std::uint32_t a, std::uint32_t b, int m, std::uint32_t poly) {
    std::uint32_t r = 0;
    for (int i = 0; i < m; ++i)
        if (b >> i & 1) r ^= a << i;
    for (int d = 2 * m - 2; d >= m; --d)
        if (r >> d & 1) r ^= poly << (d - m);
    return r;
}

} // namespace

TEST(PrimeField, SmallExamples) {
    PrimeField f5(5), f7(7);
    EXPECT_EQ(f5.add(3, 4), 2u);
    EXPECT_EQ(f7.inv(1), 1u);
    EXPECT_EQ(f7.sub(2, 5), 4u);
    EXPECT_EQ(f7.neg(0), 0u);
    EXPECT_EQ(f7.reduce(-1), 6u);
    EXPECT_EQ(f7.pow(3, 6), 1u);
}

TEST(PrimeField, RejectsCompositeAndTooLarge) {
    EXPECT_THROW(PrimeField(4), FieldError);
    EXPECT_THROW(PrimeField(1), FieldError);
    EXPECT_THROW(PrimeField(std::uint64_t{1} << 31 | 1), FieldError);
    PrimeField f(31);
    EXPECT_THROW(f.inv(0), FieldError);
    EXPECT_THROW(f.add(31, 1), FieldError);
}

TEST(PrimeField, AxiomsExhaustive) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 13u, 31u}) {
        PrimeField f(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            if (a) {
                int hits = 0;
                for (std::uint32_t x = 1; x < p; ++x) hits += (a * x) % p == 1;
                ASSERT_EQ(hits, 1);
                EXPECT_EQ((a * f.inv(a)) % p, 1u);
                EXPECT_EQ(f.pow(a, p - 1), 1u);
            }
            for (std::uint32_t b = 0; b < p; ++b) {
                EXPECT_EQ(f.add(a, b), (a + b) % p);
                EXPECT_EQ(f.add(f.sub(a, b), b), a);
                EXPECT_EQ(f.mul(a, b), (a * b) % p);
                if (b) EXPECT_EQ(f.mul(f.div(a, b), b), a);
            }
        }
    }
}

TEST(BinaryExtField, AlphaFourIsAlphaPlusOne) {
    BinaryExtField f(4, 0x13);
    EXPECT_EQ(f.alpha_pow(4), 0b0011u);
    EXPECT_EQ(f.antilog_table()[4], 0b0011u);
    EXPECT_EQ(f.log(1), 0u);
}

TEST(BinaryExtField, AntilogCycleOfGf4) {
    BinaryExtField f(2);
    EXPECT_EQ(f.group_order(), 3u);
    EXPECT_EQ(f.alpha_pow(3), 1u);
    EXPECT_NE(f.alpha_pow(1), 1u);
    EXPECT_NE(f.alpha_pow(2), 1u);
}

TEST(BinaryExtField, NonPrimitivePolynomialRejected) {
    // x^4 + x^3 + x^2 + x + 1 is irreducible but alpha has order 5.
    EXPECT_THROW(BinaryExtField(4, 0x1F), FieldError);
}

TEST(BinaryExtField, TableMultiplicationMatchesCarryless) {
    for (int m = 2; m <= 8; ++m) {
        BinaryExtField f(m);
        const auto q = f.size();
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) ASSERT_EQ(f.mul(a, b), slow_gf2m_mul(a, b, m, f.primitive_poly())) << m << ' ' << a << ' ' << b;
        for (std::uint32_t a = 1; a < q; ++a) {
            EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            EXPECT_EQ(f.alpha_pow(f.log(a)), a);
        }
    }
}

TEST(BinaryExtField, EveryTabulatedPolynomialIsPrimitive) {
    for (int m = 2; m <= 16; ++m) EXPECT_NO_THROW(BinaryExtField{m}) << m;
}

TEST(BinaryExtField, NegativeExponents) {
    BinaryExtField f(5);
    for (int e = -40; e < 40; ++e) EXPECT_EQ(f.mul(f.alpha_pow(e), f.alpha_pow(-e)), 1u);
}

TEST(FieldArith, TaggedOperationsAndMixing) {
    PrimeField f5(5), f7(7);
    EXPECT_EQ(field_arith(f5, element(f5, 3), element(f5, 4), FieldOp::add).value, 2u);
    EXPECT_EQ(field_arith(f5, element(f5, 2), element(f5, 3), FieldOp::pow).value, 3u);
    EXPECT_EQ(field_arith(f5, element(f5, 2), element(f5, 0), FieldOp::inv).value, 3u);
    EXPECT_THROW(field_arith(f5, element(f5, 1), element(f7, 1), FieldOp::add), FieldError);
    EXPECT_THROW(element(f5, 5), FieldError);
    BinaryExtField g(4);
    EXPECT_EQ(field_arith(g, element(g, 0b1000), element(g, 0b0010), FieldOp::mul).value, 0b0011u);
    EXPECT_THROW(field_arith(g, element(g, 1), element(f5, 1), FieldOp::add), FieldError);
}
