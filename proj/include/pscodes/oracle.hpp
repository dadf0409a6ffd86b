// Brute-force references used to cross-check the efficient decoders.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bch.hpp"
#include "compositions.hpp"
#include "grs.hpp"

namespace pscodes {

class OracleError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::uint64_t kMaxCodebook = std::uint64_t{1} << 20;
inline constexpr int kMaxInverseBits = 22;

template <class Word>
struct Nearest {
    Word codeword{};
    std::size_t distance = 0;
    bool tie = false; // another codeword sits at the same distance
};

namespace detail {

template <class Word>
std::size_t word_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("word_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

} // namespace detail

/// Minimum-distance codeword; ties go to the lexicographically smallest and are flagged.
template <class Word>
Nearest<Word> brute_nearest_codeword(const Word& y, std::vector<Word> codebook) {
    if (codebook.empty()) throw std::invalid_argument("brute_nearest_codeword: empty codebook");
    if (codebook.size() > kMaxCodebook) throw OracleError("brute_nearest_codeword: codebook exceeds 2^20 words");
    std::sort(codebook.begin(), codebook.end());
    Nearest<Word> best;
    best.distance = std::numeric_limits<std::size_t>::max();
    for (const auto& c : codebook) {
        const auto d = detail::word_distance(y, c);
        if (d < best.distance) best = {c, d, false};
        else if (d == best.distance) best.tie = true;
    }
    return best;
}

/// All codewords of a GRS code (p^k of them).
inline std::vector<std::vector<Symbol>> grs_codebook(const GrsParams& g) {
    const auto p = g.field.modulus();
    const int k = g.dimension();
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        count *= p;
        if (count > kMaxCodebook) throw OracleError("grs_codebook: more than 2^20 codewords");
    }
    std::vector<std::vector<Symbol>> book;
    book.reserve(count);
    std::vector<Symbol> msg(static_cast<std::size_t>(k), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto v = idx;
        for (int i = k - 1; i >= 0; --i) {
            msg[static_cast<std::size_t>(i)] = static_cast<Symbol>(v % p);
            v /= p;
        }
        book.push_back(grs_encode(msg, g));
    }
    return book;
}

/// All codewords of a systematic binary code (2^dimension of them).
template <SystematicBinaryCode Code>
std::vector<BitString> binary_codebook(const Code& code) {
    const int k = code.dimension();
    if (k > 20) throw OracleError("binary_codebook: more than 2^20 codewords");
    std::vector<BitString> book;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << k); ++idx)
        book.push_back(code.encode(BitString::from_uint(idx, static_cast<std::size_t>(k))));
    return book;
}

/// Every tuple (c_1..c_h) of length-n strings with distance(M(c_1..c_h), Y) <= t,
/// in lexicographic order of the tuple.
inline std::vector<std::vector<BitString>> brute_inverse_compositions(const CompositionMultiset& y, int n, int h, int t) {
    if (n < 1 || h < 1) throw std::invalid_argument("brute_inverse_compositions: n and h must be positive");
    if (static_cast<long long>(n) * h > kMaxInverseBits) throw OracleError("brute_inverse_compositions: search space exceeds 2^22");
    if (y.n() != n) throw std::invalid_argument("brute_inverse_compositions: multiset length differs from n");
    const std::uint64_t per = std::uint64_t{1} << n;
    std::vector<BitString> strings;
    strings.reserve(per);
    for (std::uint64_t v = 0; v < per; ++v) strings.push_back(BitString::from_uint(v, static_cast<std::size_t>(n)));

    std::vector<std::vector<BitString>> out;
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(h), 0);
    std::vector<BitString> tuple(static_cast<std::size_t>(h));
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = strings[idx[i]];
        if (distance(multi_compositions(tuple), y) <= t) out.push_back(tuple);
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == per) idx[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

} // namespace pscodes
