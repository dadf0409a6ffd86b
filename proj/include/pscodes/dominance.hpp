// Suffix-dominant strings: wt(c[j]) <= wt(rev(c)[j]) for every prefix length j.
// Two codes whose codewords all have this property: an enumerative code that
// unranks into the lexicographically sorted set of dominant strings, and the
// h = 1 interleaving map (rate 1/2).
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "compositions.hpp"
#include "outcome.hpp"
#include "phi.hpp"

namespace pscodes {

/// Checks prefix lengths j <= ceil(n/2) only; that range implies all j <= n.
inline bool is_suffix_dominant(const BitString& c) {
    const auto n = c.size();
    auto pw = prefix_weights(c);
    for (std::size_t j = 1; j <= (n + 1) / 2; ++j)
        if (pw[j] > pw[n] - pw[n - j]) return false;
    return true;
}

/// Same predicate checked over every prefix length.
inline bool is_suffix_dominant_full(const BitString& c) {
    const auto n = c.size();
    auto pw = prefix_weights(c);
    for (std::size_t j = 1; j <= n; ++j)
        if (pw[j] > pw[n] - pw[n - j]) return false;
    return true;
}

enum class DominantRealization { enumerative, interleave };

class DominantCode {
public:
    /// Longest enumerative code whose counts fit in 64 bits.
    static constexpr int kMaxEnumerativeLength = 62;

    DominantCode(int n1, DominantRealization realization) : n1_(n1), realization_(realization) {
        if (n1 < 1) throw std::invalid_argument("dominant code length must be >= 1");
        if (realization == DominantRealization::interleave) {
            if (n1 % 2) throw std::invalid_argument("interleave realization needs even length, got " + std::to_string(n1));
            message_length_ = n1 / 2;
        } else {
            if (n1 > kMaxEnumerativeLength) throw std::invalid_argument("enumerative realization supports n1 <= 62");
            std::vector<std::int8_t> free(static_cast<std::size_t>(n1), -1);
            codebook_size_ = count_completions(free);
            message_length_ = static_cast<int>(std::bit_width(codebook_size_)) - 1;
        }
    }

    int length() const noexcept { return n1_; }
    int message_length() const noexcept { return message_length_; }
    DominantRealization realization() const noexcept { return realization_; }
    /// Number of dominant strings of length n1 (enumerative only).
    std::uint64_t codebook_size() const noexcept { return codebook_size_; }

    BitString encode(const BitString& msg) const {
        if (msg.size() != static_cast<std::size_t>(message_length_))
            throw std::invalid_argument("dominant_encode: message must have " + std::to_string(message_length_) + " bits");
        if (realization_ == DominantRealization::interleave) {
            std::vector<BitString> z{msg};
            return phi_encode(z, PhiSpec{1, message_length_}).front();
        }
        return unrank(msg.empty() ? 0 : msg.to_uint());
    }

    Outcome<BitString> decode(const BitString& c) const {
        if (c.size() != static_cast<std::size_t>(n1_)) throw std::invalid_argument("dominant_decode: word length differs from n1");
        if (!is_suffix_dominant(c)) return Failure{FailureKind::dominance, "word is not suffix-dominant"};
        if (realization_ == DominantRealization::interleave) {
            const PhiSpec spec{1, message_length_};
            auto z = phi_extract(c, spec);
            std::vector<BitString> zs{z};
            if (phi_encode(zs, spec).front() != c) return Failure{FailureKind::not_in_codebook, "word is outside the interleave image"};
            return z;
        }
        const auto index = rank(c);
        if (message_length_ < 64 && index >= (std::uint64_t{1} << message_length_))
            return Failure{FailureKind::not_in_codebook, "rank " + std::to_string(index) + " beyond message space"};
        return BitString::from_uint(index, static_cast<std::size_t>(message_length_));
    }

    /// Index-th dominant string in lexicographic order (0 < 1).
    BitString unrank(std::uint64_t index) const {
        if (realization_ != DominantRealization::enumerative) throw std::logic_error("unrank needs the enumerative realization");
        if (index >= codebook_size_) throw std::out_of_range("dominant code index out of range");
        std::vector<std::int8_t> fixed(static_cast<std::size_t>(n1_), -1);
        for (auto& bit : fixed) {
            bit = 0;
            const auto zeros = count_completions(fixed);
            if (index >= zeros) {
                index -= zeros;
                bit = 1;
            }
        }
        BitString out;
        for (auto b : fixed) out.push_back(b == 1);
        return out;
    }

    /// Lexicographic index of a dominant string.
    std::uint64_t rank(const BitString& c) const {
        if (realization_ != DominantRealization::enumerative) throw std::logic_error("rank needs the enumerative realization");
        std::vector<std::int8_t> fixed(static_cast<std::size_t>(n1_), -1);
        std::uint64_t index = 0;
        for (std::size_t pos = 0; pos < c.size(); ++pos) {
            fixed[pos] = 0;
            if (c[pos]) {
                index += count_completions(fixed);
                fixed[pos] = 1;
            }
        }
        return index;
    }

private:
    /// Dominant strings agreeing with `fixed` (-1 = free). Walks the pairs
    /// (c_l, c_{n+1-l}) from the outside in; the state is the running surplus
    /// of suffix weight over prefix weight, which must stay nonnegative.
    std::uint64_t count_completions(const std::vector<std::int8_t>& fixed) const {
        const auto n = fixed.size();
        const auto pairs = n / 2;
        std::vector<std::uint64_t> ways(pairs + 2, 0), next(pairs + 2, 0);
        ways[0] = 1;
        auto options = [](std::int8_t v) { return v < 0 ? std::pair{0, 1} : std::pair{int{v}, int{v}}; };
        for (std::size_t l = 0; l < pairs; ++l) {
            std::fill(next.begin(), next.end(), 0);
            auto [alo, ahi] = options(fixed[l]);
            auto [blo, bhi] = options(fixed[n - 1 - l]);
            for (std::size_t d = 0; d <= l; ++d) {
                if (!ways[d]) continue;
                for (int a = alo; a <= ahi; ++a)
                    for (int b = blo; b <= bhi; ++b) {
                        const auto nd = static_cast<std::int64_t>(d) + b - a;
                        if (nd >= 0) next[static_cast<std::size_t>(nd)] += ways[d];
                    }
            }
            std::swap(ways, next);
        }
        std::uint64_t total = 0;
        for (auto w : ways) total += w;
        if (n % 2 && fixed[pairs] < 0) total *= 2;
        return total;
    }

    int n1_;
    DominantRealization realization_;
    int message_length_ = 0;
    std::uint64_t codebook_size_ = 0;
};

} // namespace pscodes
