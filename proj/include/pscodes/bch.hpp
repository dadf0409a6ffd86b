// Narrow-sense primitive binary BCH codes of length 2^m - 1.
//
// Coordinate q of a word corresponds to the coefficient of x^(n-1-q), so the
// systematic message occupies the first `dimension` coordinates.
#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "compositions.hpp"
#include "galois.hpp"
#include "locator.hpp"
#include "outcome.hpp"

namespace pscodes {

/// Whether to enforce 2t - 1 <= 2^ceil(m/2) + 1, the window in which the
/// dimension is guaranteed to be exactly n - m t.
enum class BchBound { guaranteed_dimension, any };

struct BchDecoded {
    BitString codeword;
    BitString message;
    int corrected = 0;
};

class BchCode {
public:
    BchCode(int m, int t, BchBound bound = BchBound::guaranteed_dimension) : field_(m), t_(t) {
        if (t < 1) throw std::invalid_argument("BCH capability t must be >= 1");
        n_ = static_cast<int>(field_.group_order());
        if (bound == BchBound::guaranteed_dimension && !dimension_window_holds(m, t))
            throw std::invalid_argument("BCH parameters violate 2t-1 <= 2^ceil(m/2)+1 (m=" + std::to_string(m) + ", t=" + std::to_string(t) + ")");
        if (2 * t + 1 > n_) throw std::invalid_argument("BCH designed distance exceeds length");

        // g(x) = lcm of minimal polynomials of alpha^1, alpha^3, ..., alpha^(2t-1).
        std::vector<std::uint32_t> gen{1};
        std::set<int> covered;
        for (int i = 1; i <= 2 * t - 1; i += 2) {
            if (covered.count(i)) continue;
            std::vector<int> coset;
            for (int e = i; !covered.count(e); e = (2 * e) % n_) {
                covered.insert(e);
                coset.push_back(e);
            }
            gen = mul_ext(gen, minimal_poly(coset));
        }
        generator_.reserve(gen.size());
        for (auto c : gen) {
            if (c > 1) throw std::logic_error("BCH generator has a non-binary coefficient");
            generator_.push_back(static_cast<std::uint8_t>(c));
        }
        k_ = n_ - (static_cast<int>(generator_.size()) - 1);
        if (k_ < 1) throw std::invalid_argument("BCH code has no information positions");
    }

    static bool dimension_window_holds(int m, int t) { return 2 * t - 1 <= (1 << ((m + 1) / 2)) + 1; }

    int length() const noexcept { return n_; }
    int dimension() const noexcept { return k_; }
    int capability() const noexcept { return t_; }
    /// Correction radius guaranteed by the decoder (equals the designed capability).
    int radius() const noexcept { return t_; }
    int designed_distance() const noexcept { return 2 * t_ + 1; }
    int degree() const noexcept { return field_.degree(); }
    const BinaryExtField& field() const noexcept { return field_; }
    /// Generator polynomial over GF(2), coefficient i multiplies x^i.
    const std::vector<std::uint8_t>& generator() const noexcept { return generator_; }

    BitString encode(const BitString& msg) const {
        if (msg.size() != static_cast<std::size_t>(k_)) throw std::invalid_argument("bch_encode: message length must equal dimension " + std::to_string(k_));
        const auto n = static_cast<std::size_t>(n_), k = static_cast<std::size_t>(k_);
        std::vector<std::uint8_t> poly(n, 0); // by degree
        for (std::size_t q = 0; q < k; ++q) poly[n - 1 - q] = msg[q];
        auto rem = remainder(poly);
        BitString out = msg;
        for (std::size_t q = k; q < n; ++q) out.push_back(rem[n - 1 - q]);
        return out;
    }

    bool is_codeword(const BitString& word) const {
        if (word.size() != static_cast<std::size_t>(n_)) return false;
        std::vector<std::uint8_t> poly(word.size());
        for (std::size_t q = 0; q < word.size(); ++q) poly[word.size() - 1 - q] = word[q];
        auto rem = remainder(poly);
        return std::all_of(rem.begin(), rem.end(), [](auto b) { return b == 0; });
    }

    BitString message_of(const BitString& codeword) const { return codeword.prefix(static_cast<std::size_t>(k_)); }

    /// Corrects up to t bit errors; anything else is reported as a Failure.
    Outcome<BchDecoded> decode(const BitString& word) const {
        if (word.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("bch_decode: word length must be " + std::to_string(n_));
        const auto& f = field_;
        const auto n = static_cast<std::size_t>(n_);

        std::vector<std::uint32_t> syn(static_cast<std::size_t>(2 * t_), 0);
        for (std::size_t q = 0; q < n; ++q) {
            if (!word[q]) continue;
            const auto deg = static_cast<std::int64_t>(n - 1 - q);
            for (std::size_t l = 0; l < syn.size(); ++l) syn[l] ^= f.alpha_pow(deg * static_cast<std::int64_t>(l + 1));
        }
        BchDecoded out{word, {}, 0};
        if (std::all_of(syn.begin(), syn.end(), [](auto v) { return v == 0; })) {
            out.message = message_of(word);
            return out;
        }
        // S_{l+1} = sum X^(l+1) = sum_k X_k * X_k^l: BM on the shifted sequence with Y_k = X_k.
        auto [loc, L] = detail::berlekamp_massey(f, syn, {1}, 0);
        if (L > t_) return Failure{FailureKind::radius_exceeded, std::to_string(L) + " errors exceed t = " + std::to_string(t_)};
        if (detail::poly_degree(loc) != L) return Failure{FailureKind::locator_degree_mismatch, "locator degree differs from linear complexity"};

        int roots = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const auto deg = static_cast<std::int64_t>(n - 1 - q);
            if (detail::poly_eval(f, loc, f.alpha_pow(-deg)) == 0) {
                out.codeword.flip(q);
                ++roots;
            }
        }
        if (roots != L) return Failure{FailureKind::root_count_short, std::to_string(roots) + " roots for locator degree " + std::to_string(L)};
        if (!is_codeword(out.codeword)) return Failure{FailureKind::syndrome_check, "corrected word is not a codeword"};
        out.corrected = roots;
        out.message = message_of(out.codeword);
        return out;
    }

private:
    std::vector<std::uint32_t> mul_ext(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= field_.mul(a[i], b[j]);
        return out;
    }

    std::vector<std::uint32_t> minimal_poly(const std::vector<int>& coset) const {
        std::vector<std::uint32_t> p{1};
        for (int e : coset) p = mul_ext(p, {field_.alpha_pow(e), 1}); // (x + alpha^e)
        return p;
    }

    /// poly (indexed by degree) mod generator, returned indexed by degree.
    std::vector<std::uint8_t> remainder(std::vector<std::uint8_t> poly) const {
        const auto gdeg = generator_.size() - 1;
        for (std::size_t d = poly.size(); d-- > gdeg;) {
            if (!poly[d]) continue;
            for (std::size_t i = 0; i <= gdeg; ++i) poly[d - gdeg + i] ^= generator_[i];
        }
        poly.resize(std::min(poly.size(), gdeg));
        poly.resize(gdeg, 0);
        return poly;
    }

    BinaryExtField field_;
    int t_;
    int n_ = 0;
    int k_ = 0;
    std::vector<std::uint8_t> generator_;
};

/// A binary code usable as the outer "good code": systematic on the first
/// dimension() coordinates, decoding up to radius() errors with typed failures.
template <class C>
concept SystematicBinaryCode = requires(const C& c, const BitString& b) {
    { c.length() } -> std::convertible_to<int>;
    { c.dimension() } -> std::convertible_to<int>;
    { c.radius() } -> std::convertible_to<int>;
    { c.encode(b) } -> std::same_as<BitString>;
    { c.decode(b) } -> std::same_as<Outcome<BchDecoded>>;
};

static_assert(SystematicBinaryCode<BchCode>);

} // namespace pscodes
