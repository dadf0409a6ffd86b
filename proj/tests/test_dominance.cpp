#include <gtest/gtest.h>

#include "pscodes/dominance.hpp"

using namespace pscodes;

TEST(SuffixDominant, Examples) {
    EXPECT_TRUE(is_suffix_dominant(BitString::parse("0011")));
    EXPECT_FALSE(is_suffix_dominant(BitString::parse("10")));
    EXPECT_TRUE(is_suffix_dominant(BitString::parse("0")));
}

TEST(SuffixDominant, HalfRangeEqualsFullRangeExhaustive) {
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (1u << n); ++v) {
            auto c = BitString::from_uint(v, static_cast<std::size_t>(n));
            ASSERT_EQ(is_suffix_dominant(c), is_suffix_dominant_full(c)) << c.str();
        }
}

TEST(DominantCode, EnumerativeFirstIndexIsAllZero) {
    DominantCode code(4, DominantRealization::enumerative);
    EXPECT_EQ(code.unrank(0).str(), "0000");
}

TEST(DominantCode, CodebookSizeMatchesEnumeration) {
    for (int n = 1; n <= 16; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t v = 0; v < (1u << n); ++v) count += is_suffix_dominant_full(BitString::from_uint(v, static_cast<std::size_t>(n)));
        DominantCode code(n, DominantRealization::enumerative);
        EXPECT_EQ(code.codebook_size(), count) << n;
        EXPECT_EQ(code.message_length(), static_cast<int>(std::bit_width(count)) - 1);
    }
}

TEST(DominantCode, UnrankFollowsLexicographicOrder) {
    for (int n = 1; n <= 12; ++n) {
        DominantCode code(n, DominantRealization::enumerative);
        std::uint64_t index = 0;
        for (std::uint64_t v = 0; v < (1u << n); ++v) {
            auto c = BitString::from_uint(v, static_cast<std::size_t>(n));
            if (!is_suffix_dominant_full(c)) continue;
            ASSERT_EQ(code.unrank(index), c);
            ASSERT_EQ(code.rank(c), index);
            ++index;
        }
    }
}

TEST(DominantCode, EnumerativeRoundTripExhaustive) {
    for (int n = 1; n <= 16; ++n) {
        DominantCode code(n, DominantRealization::enumerative);
        const auto k = static_cast<std::size_t>(code.message_length());
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            auto msg = BitString::from_uint(m, k);
            auto c = code.encode(msg);
            ASSERT_EQ(c.size(), static_cast<std::size_t>(n));
            ASSERT_TRUE(is_suffix_dominant(c));
            auto d = code.decode(c);
            ASSERT_TRUE(d.ok());
            ASSERT_EQ(*d, msg);
        }
    }
}

TEST(DominantCode, InterleaveOddSingleBit) {
    DominantCode code(2, DominantRealization::interleave);
    EXPECT_EQ(code.message_length(), 1);
    for (auto m : {"0", "1"}) {
        auto c = code.encode(BitString::parse(m));
        EXPECT_EQ(c.size(), 2u);
        EXPECT_TRUE(is_suffix_dominant_full(c));
        EXPECT_EQ(code.decode(c)->str(), m);
    }
}

TEST(DominantCode, InterleaveRoundTripExhaustive) {
    for (int k = 1; k <= 8; ++k) {
        DominantCode code(2 * k, DominantRealization::interleave);
        for (std::uint64_t m = 0; m < (1u << k); ++m) {
            auto msg = BitString::from_uint(m, static_cast<std::size_t>(k));
            auto c = code.encode(msg);
            ASSERT_TRUE(is_suffix_dominant_full(c));
            auto d = code.decode(c);
            ASSERT_TRUE(d.ok());
            ASSERT_EQ(*d, msg);
        }
    }
}

TEST(DominantCode, RejectsNonDominantAndOutsideImage) {
    DominantCode enumerative(6, DominantRealization::enumerative);
    auto d = enumerative.decode(BitString::parse("100000"));
    ASSERT_FALSE(d.ok());
    EXPECT_EQ(d.failure().kind, FailureKind::dominance);
    // the largest dominant string ranks beyond 2^message_length - 1
    auto top = enumerative.decode(BitString::parse("111111"));
    ASSERT_FALSE(top.ok());
    EXPECT_EQ(top.failure().kind, FailureKind::not_in_codebook);

    DominantCode interleave(4, DominantRealization::interleave);
    auto e = interleave.decode(BitString::parse("0111"));
    ASSERT_FALSE(e.ok());
    EXPECT_EQ(e.failure().kind, FailureKind::not_in_codebook);
    EXPECT_THROW(DominantCode(5, DominantRealization::interleave), std::invalid_argument);
    EXPECT_THROW(DominantCode(63, DominantRealization::enumerative), std::invalid_argument);
}

TEST(DominantCode, Length30SupportsLargeMessages) {
    DominantCode code(30, DominantRealization::enumerative);
    EXPECT_GE(code.message_length(), 26);
    auto msg = BitString::from_uint((std::uint64_t{1} << code.message_length()) - 1, static_cast<std::size_t>(code.message_length()));
    auto c = code.encode(msg);
    EXPECT_TRUE(is_suffix_dominant_full(c));
    EXPECT_EQ(*code.decode(c), msg);
}
