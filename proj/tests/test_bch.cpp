#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pscodes/bch.hpp"
#include "pscodes/oracle.hpp"

using namespace pscodes;

namespace {

std::string generator_string(const BchCode& c) {
    std::string s;
    for (auto b : c.generator()) s += static_cast<char>('0' + b);
    return s; // low degree first
}

BitString random_bits(std::mt19937_64& rng, int n) {
    BitString b;
    for (int i = 0; i < n; ++i) b.push_back(rng() & 1);
    return b;
}

} // namespace

TEST(BchBuild, Hamming15) {
    BchCode c(4, 1);
    EXPECT_EQ(c.length(), 15);
    EXPECT_EQ(c.dimension(), 11);
    EXPECT_EQ(generator_string(c), "11001"); // 1 + x + x^4
}

TEST(BchBuild, Code15_7) {
    BchCode c(4, 2);
    EXPECT_EQ(c.dimension(), 7);
    EXPECT_EQ(c.dimension(), 15 - 4 * 2);
    EXPECT_EQ(generator_string(c), "100010111"); // 1 + x^4 + x^6 + x^7 + x^8
}

TEST(BchBuild, Code63_51AndWindow) {
    BchCode c(6, 2);
    EXPECT_EQ(c.length(), 63);
    EXPECT_EQ(c.dimension(), 51);
    EXPECT_TRUE(BchCode::dimension_window_holds(6, 2));
    EXPECT_FALSE(BchCode::dimension_window_holds(5, 7));
    EXPECT_THROW(BchCode(5, 7), std::invalid_argument);
    BchCode wide(5, 7, BchBound::any);
    EXPECT_EQ(wide.dimension(), 6);
    EXPECT_EQ(wide.designed_distance(), 15);
}

TEST(BchEncode, ZeroAndRemainder) {
    BchCode c(4, 2);
    EXPECT_EQ(c.encode(BitString(7)), BitString(15));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        auto m = random_bits(rng, 7);
        auto w = c.encode(m);
        EXPECT_TRUE(c.is_codeword(w));
        EXPECT_EQ(c.message_of(w), m);
    }
}

TEST(BchEncode, MinimumWeight15_7IsFive) {
    BchCode c(4, 2);
    std::size_t best = 99;
    for (const auto& w : binary_codebook(c))
        if (w.weight()) best = std::min(best, w.weight());
    EXPECT_EQ(best, 5u);
}

TEST(BchEncode, MinimumWeight31_6IsFifteen) {
    BchCode c(5, 7, BchBound::any);
    std::size_t best = 99;
    for (const auto& w : binary_codebook(c))
        if (w.weight()) best = std::min(best, w.weight());
    EXPECT_EQ(best, 15u);
}

TEST(BchDecode, CleanAndSingleFlipOnZero) {
    BchCode c(4, 2);
    auto z = BitString(15);
    auto d = c.decode(z);
    ASSERT_TRUE(d.ok());
    EXPECT_EQ(d->codeword, z);
    for (std::size_t i = 0; i < 15; ++i) {
        auto y = z;
        y.flip(i);
        auto e = c.decode(y);
        ASSERT_TRUE(e.ok());
        EXPECT_EQ(e->codeword, z);
        EXPECT_EQ(e->corrected, 1);
    }
}

TEST(BchDecode, AllDoubleErrorPatterns15_7) {
    BchCode c(4, 2);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto w = c.encode(random_bits(rng, 7));
        for (std::size_t i = 0; i < 15; ++i)
            for (std::size_t j = i + 1; j < 15; ++j) {
                auto y = w;
                y.flip(i);
                y.flip(j);
                auto d = c.decode(y);
                ASSERT_TRUE(d.ok());
                EXPECT_EQ(d->codeword, w);
            }
    }
}

TEST(BchDecode, AgreesWithNearestCodewordRandom15_7) {
    BchCode c(4, 2);
    const auto book = binary_codebook(c);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        auto w = book[rng() % book.size()];
        const int flips = static_cast<int>(rng() % 3);
        for (int q = 0; q < flips; ++q) w.flip(rng() % 15);
        auto nearest = brute_nearest_codeword(w, book);
        auto d = c.decode(w);
        ASSERT_TRUE(d.ok());
        EXPECT_EQ(d->codeword, nearest.codeword);
    }
}

TEST(BchDecode, RadiusSweep63_51) {
    BchCode c(6, 2);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        auto w = c.encode(random_bits(rng, 51));
        auto y = w;
        const int flips = static_cast<int>(rng() % 3);
        std::set<std::size_t> pos;
        while (static_cast<int>(pos.size()) < flips) pos.insert(rng() % 63);
        for (auto p : pos) y.flip(p);
        auto d = c.decode(y);
        ASSERT_TRUE(d.ok());
        EXPECT_EQ(d->codeword, w);
        EXPECT_EQ(d->corrected, flips);
    }
}

TEST(BchDecode, RadiusSweep31_6UpToSeven) {
    BchCode c(5, 7, BchBound::any);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        auto w = c.encode(random_bits(rng, 6));
        auto y = w;
        const int flips = static_cast<int>(rng() % 8);
        std::set<std::size_t> pos;
        while (static_cast<int>(pos.size()) < flips) pos.insert(rng() % 31);
        for (auto p : pos) y.flip(p);
        auto d = c.decode(y);
        ASSERT_TRUE(d.ok());
        EXPECT_EQ(d->codeword, w);
    }
}

TEST(BchDecode, BeyondRadiusIsTypedOrNearest) {
    BchCode c(4, 2);
    const auto book = binary_codebook(c);
    int failures = 0;
    for (std::uint64_t v = 0; v < (1u << 15); ++v) {
        auto y = BitString::from_uint(v, 15);
        auto d = c.decode(y);
        if (!d) {
            ++failures;
            continue;
        }
        EXPECT_TRUE(c.is_codeword(d->codeword));
        EXPECT_LE(hamming_distance(d->codeword, y), 2u);
    }
    EXPECT_EQ(failures, (1 << 15) - 128 * (1 + 15 + 105));
}
