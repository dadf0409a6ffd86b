#include <gtest/gtest.h>

#include <random>

#include "pscodes/grs.hpp"
#include "pscodes/oracle.hpp"

using namespace pscodes;

namespace {

using Word = std::vector<Symbol>;

// Kernel of the parity-check matrix, found by testing every word of F_p^n.
std::vector<Word> kernel_by_enumeration(std::uint64_t p, int n, int r, const Word& alphas, const Word& omegas, const Word& target = {}) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (int l = 0; l < r && ok; ++l) {
            std::uint64_t s = 0;
            for (int i = 0; i < n; ++i) {
                std::uint64_t pw = 1;
                for (int e = 0; e < l; ++e) pw = pw * alphas[static_cast<std::size_t>(i)] % p;
                s = (s + omegas[static_cast<std::size_t>(i)] * pw % p * w[static_cast<std::size_t>(i)]) % p;
            }
            ok = s == (target.empty() ? 0 : target[static_cast<std::size_t>(l)]);
        }
        if (ok) out.push_back(w);
        int pos = n - 1;
        while (pos >= 0 && ++w[static_cast<std::size_t>(pos)] == p) w[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return out;
}

std::size_t hamming(const Word& a, const Word& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

} // namespace

TEST(GrsParams, Validation) {
    auto g = GrsParams::standard(7, 6, 2);
    EXPECT_EQ(g.dimension(), 4);
    g.alphas[1] = g.alphas[0];
    EXPECT_THROW(g.validate(), std::invalid_argument);
    EXPECT_THROW(GrsParams::standard(5, 5, 2), std::invalid_argument); // alpha 5 = 0
    EXPECT_THROW(GrsParams::standard(7, 4, 4), std::invalid_argument);
}

TEST(GrsEncode, ZeroMessage) {
    auto g = GrsParams::standard(7, 6, 2);
    EXPECT_EQ(grs_encode(Word(4, 0), g), Word(6, 0));
}

TEST(GrsEncode, P7UnitMessageMatchesLinearSolveOracle) {
    auto g = GrsParams::standard(7, 6, 2);
    const Word msg{1, 0, 0, 0};
    auto cw = grs_encode(msg, g);
    // the unique completion of (1,0,0,0,?,?) in the kernel
    int matches = 0;
    for (const auto& w : kernel_by_enumeration(7, 6, 2, g.alphas, g.omegas))
        if (std::equal(msg.begin(), msg.end(), w.begin())) {
            ++matches;
            EXPECT_EQ(w, cw);
        }
    EXPECT_EQ(matches, 1);
    EXPECT_EQ(grs_syndromes(cw, g), (Syndromes{0, 0}));
}

TEST(GrsSyndromes, UnitVectorAtThree) {
    auto g = GrsParams::standard(7, 6, 2);
    Word e(6, 0);
    e[2] = 1;
    EXPECT_EQ(grs_syndromes(e, g), (Syndromes{1, 3}));
}

TEST(GrsSyndromes, SingleErrorLinearity) {
    auto g = GrsParams::standard(11, 8, 4);
    g.omegas = {1, 2, 3, 4, 5, 6, 7, 8};
    PrimeField f(11);
    auto cw = grs_encode(Word{3, 1, 4, 1}, g);
    for (int i = 0; i < 8; ++i)
        for (Symbol v = 1; v < 11; ++v) {
            auto y = cw;
            y[static_cast<std::size_t>(i)] = f.add(y[static_cast<std::size_t>(i)], v);
            auto s = grs_syndromes(y, g);
            for (int l = 0; l < 4; ++l)
                EXPECT_EQ(s[static_cast<std::size_t>(l)], f.mul(f.mul(g.omegas[static_cast<std::size_t>(i)], f.pow(g.alphas[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(l))), v));
        }
}

TEST(GrsEncode, EncodeIsSystematicAndInKernel) {
    auto g = GrsParams::standard(13, 10, 4);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Word msg(6);
        for (auto& v : msg) v = static_cast<Symbol>(rng() % 13);
        auto cw = grs_encode(msg, g);
        EXPECT_TRUE(std::equal(msg.begin(), msg.end(), cw.begin()));
        EXPECT_EQ(grs_syndromes(cw, g), Syndromes(4, 0));
    }
}

TEST(GrsDecode, AgreesWithBruteForceWithinRadiusExhaustive) {
    auto g = GrsParams::standard(5, 4, 2);
    const auto book = kernel_by_enumeration(5, 4, 2, g.alphas, g.omegas);
    ASSERT_EQ(book.size(), 25u);
    ASSERT_EQ(grs_codebook(g).size(), 25u);
    Word y(4, 0);
    std::size_t checked = 0;
    for (int v = 0; v < 625; ++v) {
        for (int i = 0, q = v; i < 4; ++i, q /= 5) y[static_cast<std::size_t>(i)] = static_cast<Symbol>(q % 5);
        auto nearest = brute_nearest_codeword(y, book);
        if (nearest.distance > 1) continue;
        ++checked;
        auto dec = grs_decode(y, g);
        ASSERT_TRUE(dec.ok());
        EXPECT_EQ(*dec, nearest.codeword);
        EXPECT_FALSE(nearest.tie);
    }
    EXPECT_EQ(checked, 25u * (1 + 4 * 4));
}

TEST(GrsDecode, ConsistentWordReturnedUnchanged) {
    auto g = GrsParams::standard(7, 6, 2);
    auto cw = grs_encode(Word{1, 2, 3, 4}, g);
    auto dec = grs_decode(cw, g, Syndromes{0, 0});
    ASSERT_TRUE(dec.ok());
    EXPECT_EQ(*dec, cw);
}

TEST(GrsDecode, SingleErasureWithOneParity) {
    auto g = GrsParams::standard(7, 6, 1);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Word msg(5);
        for (auto& v : msg) v = static_cast<Symbol>(rng() % 7);
        auto cw = grs_encode(msg, g);
        const int pos = static_cast<int>(rng() % 6);
        auto y = cw;
        y[static_cast<std::size_t>(pos)] = static_cast<Symbol>(rng() % 7);
        const int er[] = {pos};
        auto dec = grs_decode(y, g, std::nullopt, er);
        ASSERT_TRUE(dec.ok());
        EXPECT_EQ(*dec, cw);
    }
}

// Error/erasure mixes with 2e + f <= r, checked against the unique codeword
// agreeing with y outside the erasures in all but e places.
TEST(GrsDecode, ErrorsAndErasuresAgainstEnumeration) {
    auto g = GrsParams::standard(7, 6, 3);
    const auto book = kernel_by_enumeration(7, 6, 3, g.alphas, g.omegas);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        const auto& cw = book[rng() % book.size()];
        const int f = static_cast<int>(rng() % 4);
        const int e = (3 - f) / 2;
        std::vector<int> pos{0, 1, 2, 3, 4, 5};
        std::shuffle(pos.begin(), pos.end(), rng);
        auto y = cw;
        std::vector<int> erasures(pos.begin(), pos.begin() + f);
        for (int q = 0; q < f + e; ++q) y[static_cast<std::size_t>(pos[static_cast<std::size_t>(q)])] = static_cast<Symbol>((cw[static_cast<std::size_t>(pos[static_cast<std::size_t>(q)])] + 1 + rng() % 6) % 7);
        std::sort(erasures.begin(), erasures.end());
        int candidates = 0;
        for (const auto& c : book) {
            std::size_t d = 0;
            for (std::size_t i = 0; i < 6; ++i)
                if (!std::binary_search(erasures.begin(), erasures.end(), static_cast<int>(i))) d += c[i] != y[i];
            candidates += d <= static_cast<std::size_t>(e);
        }
        ASSERT_EQ(candidates, 1);
        auto dec = grs_decode(y, g, std::nullopt, erasures);
        ASSERT_TRUE(dec.ok()) << to_string(dec.failure().kind);
        EXPECT_EQ(*dec, cw);
    }
}

TEST(GrsDecode, KnownSyndromeCoset) {
    auto g = GrsParams::standard(31, 30, 4);
    std::mt19937_64 rng(2);
    PrimeField f(31);
    for (int trial = 0; trial < 200; ++trial) {
        Word x(30);
        for (auto& v : x) v = static_cast<Symbol>(rng() % 31);
        const auto target = grs_syndromes(x, g);
        auto y = x;
        for (int q = 0; q < 2; ++q) {
            auto i = static_cast<std::size_t>(rng() % 30);
            y[i] = f.add(y[i], static_cast<Symbol>(1 + rng() % 30));
        }
        auto dec = grs_decode(y, g, target);
        ASSERT_TRUE(dec.ok());
        EXPECT_EQ(*dec, x);
    }
}

TEST(GrsDecode, BeyondRadiusNeverReturnsFarWord) {
    auto g = GrsParams::standard(5, 4, 2);
    Word y(4, 0);
    int failures = 0;
    for (int v = 0; v < 625; ++v) {
        for (int i = 0, q = v; i < 4; ++i, q /= 5) y[static_cast<std::size_t>(i)] = static_cast<Symbol>(q % 5);
        auto dec = grs_decode(y, g);
        if (!dec) {
            ++failures;
            continue;
        }
        EXPECT_LE(hamming(*dec, y), 1u);
        EXPECT_EQ(grs_syndromes(*dec, g), Syndromes(2, 0));
    }
    EXPECT_GT(failures, 0);
}

TEST(GrsDecode, TooManyErasuresIsTypedFailure) {
    auto g = GrsParams::standard(7, 6, 2);
    Word y(6, 1);
    const int er[] = {0, 1, 2};
    auto dec = grs_decode(y, g, std::nullopt, er);
    ASSERT_FALSE(dec.ok());
    EXPECT_EQ(dec.failure().kind, FailureKind::radius_exceeded);
}
