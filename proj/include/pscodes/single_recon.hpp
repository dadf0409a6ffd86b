// Single-string schemes that survive up to t composition errors:
//   C1  binary words whose prefix sums form a GRS codeword (membership + decoder)
//   C2  unary-block expansion of a GRS-constrained word over F_p
//   C3  dominant payload + GRS syndromes carried by a BCH-protected parity tail
//   C4  dominant payload protected by a systematic binary code
#pragma once

#include <bit>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bch.hpp"
#include "compositions.hpp"
#include "dominance.hpp"
#include "grs.hpp"
#include "outcome.hpp"

namespace pscodes {

enum class Verdict { recovered, failed, detected_mismatch };

constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::recovered: return "recovered";
    case Verdict::failed: return "failed";
    case Verdict::detected_mismatch: return "detected-mismatch";
    }
    return "unknown";
}

/// Result of a scheme decoder. `codeword` and `message` are meaningful only
/// when verdict == recovered; `consumed` lists the group sizes the decoder read.
template <class Message>
struct Decoded {
    Verdict verdict = Verdict::failed;
    std::optional<Failure> failure;
    BitString codeword;
    Message message{};
    std::vector<int> consumed;

    bool recovered() const noexcept { return verdict == Verdict::recovered; }
};

/// A named parameter inequality; fatal checks reject the parameter set,
/// non-fatal ones are reported as warnings.
struct ParamCheck {
    std::string name;
    double lhs;
    std::string op; // "<", "<=", ">"
    double rhs;
    bool holds;
    bool fatal;
};

namespace detail {

template <class Message>
Decoded<Message> failed(Failure f, std::vector<int> consumed) {
    Decoded<Message> d;
    d.verdict = Verdict::failed;
    d.failure = std::move(f);
    d.consumed = std::move(consumed);
    return d;
}

/// Final verification shared by all decoders: the reconstruction must lie
/// within the error budget of the received multiset.
template <class Message>
Decoded<Message> verified(BitString codeword, Message message, const CompositionMultiset& y, int t, std::vector<int> consumed) {
    Decoded<Message> d;
    d.consumed = std::move(consumed);
    if (codeword.size() != static_cast<std::size_t>(y.n())) {
        d.verdict = Verdict::detected_mismatch;
        return d;
    }
    const auto dist = distance(prefix_suffix_compositions(codeword), y);
    d.verdict = dist <= t ? Verdict::recovered : Verdict::detected_mismatch;
    if (d.verdict == Verdict::detected_mismatch)
        d.failure = Failure{FailureKind::membership, "reconstruction is at distance " + std::to_string(dist) + " > t"};
    d.codeword = std::move(codeword);
    d.message = std::move(message);
    return d;
}

inline std::vector<int> size_range(int from, int to) {
    std::vector<int> v;
    for (int j = from; j <= to; ++j) v.push_back(j);
    return v;
}

/// 0-based positions j-1 (for sizes j = offset+1 .. offset+count) whose group is not a pair.
inline std::vector<int> pair_erasures(const CompositionMultiset& y, int offset, int count) {
    std::vector<int> e;
    for (int j = 1; j <= count; ++j)
        if (y.group(offset + j).size() != 2) e.push_back(j - 1);
    return e;
}

/// Binary string from prefix sums over F_p, or a typed failure.
inline Outcome<BitString> bits_from_prefix_sums(const PrimeField& f, std::span<const Symbol> x) {
    BitString c;
    Symbol prev = 0;
    for (auto s : x) {
        const auto diff = f.sub(s, prev);
        if (diff > 1) return Failure{FailureKind::non_binary_difference, "prefix-sum difference " + std::to_string(diff)};
        c.push_back(diff == 1);
        prev = s;
    }
    return c;
}

} // namespace detail

/// Bits t_j = (b_j - b_{j-1}) mod 2 from the lower masses of an h = 1 view (b_0 = 0).
inline BitString mass_diff_string(const NormalizedView& view) {
    if (view.h != 1) throw std::invalid_argument("mass_diff_string needs an h = 1 view");
    BitString t;
    for (int j = 1; j <= view.n; ++j) t.push_back(((view.lower(j) - view.lower(j - 1)) % 2 + 2) % 2 == 1);
    return t;
}

// ---------------------------------------------------------------- C1

struct C1Params {
    GrsParams grs; // length n, r = 2t - t1
    int t;
    int t1; // erasure share of the budget known in advance (0 = none)

    static C1Params make(std::uint64_t p, int n, int t, int t1 = 0) {
        if (t < 1 || 2 * t >= n) throw std::invalid_argument("C1 needs 1 <= t < n/2");
        if (t1 < 0 || t1 > t) throw std::invalid_argument("C1 erasure budget must satisfy 0 <= t1 <= t");
        if (p < static_cast<std::uint64_t>(n) + 1) throw std::invalid_argument("C1 needs p >= n + 1");
        return {GrsParams::standard(p, n, 2 * t - t1), t, t1};
    }
    int n() const noexcept { return grs.n; }
};

/// Whether the prefix sums of c satisfy every parity check.
inline bool c1_membership(const BitString& c, const C1Params& params) {
    if (c.size() != static_cast<std::size_t>(params.n())) return false;
    std::vector<Symbol> s;
    Symbol acc = 0;
    for (auto b : c) s.push_back(acc = params.grs.field.add(acc, b));
    for (auto v : grs_syndromes(s, params.grs))
        if (v) return false;
    return true;
}

/// All suffix-dominant binary members of the code, in lexicographic order (n <= 20).
inline std::vector<BitString> c1_codebook(const C1Params& params) {
    const int n = params.n();
    if (n > 20) throw std::invalid_argument("C1 codebook enumeration limited to n <= 20");
    std::vector<BitString> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        auto c = BitString::from_uint(v, static_cast<std::size_t>(n));
        if (is_suffix_dominant(c) && c1_membership(c, params)) out.push_back(std::move(c));
    }
    return out;
}

inline Decoded<BitString> c1_decode(const CompositionMultiset& y, const C1Params& params) {
    const int n = params.n();
    if (y.n() != n) throw std::invalid_argument("c1_decode: ambient length differs from n");
    auto consumed = detail::size_range(1, n);
    const auto view = normalize(y, 1);
    std::vector<Symbol> lower;
    for (int j = 1; j <= n; ++j) lower.push_back(params.grs.field.reduce(view.lower(j)));
    const auto erasures = detail::pair_erasures(y, 0, n);
    auto x = grs_decode(lower, params.grs, std::nullopt, erasures);
    if (!x) return detail::failed<BitString>(x.failure(), consumed);
    auto c = detail::bits_from_prefix_sums(params.grs.field, *x);
    if (!c) return detail::failed<BitString>(c.failure(), consumed);
    if (!c1_membership(*c, params)) return detail::failed<BitString>({FailureKind::membership, "not a member of the code"}, consumed);
    if (!is_suffix_dominant(*c)) return detail::failed<BitString>({FailureKind::dominance, "reconstruction is not suffix-dominant"}, consumed);
    auto word = *c;
    return detail::verified(std::move(word), *c, y, params.t, std::move(consumed));
}

// ---------------------------------------------------------------- C2

struct C2Params {
    int n1;
    int t;
    GrsParams grs; // over F_p, length n1, r = 2t

    static C2Params make(int n1, int t, std::uint64_t p) {
        if (t < 1 || 2 * t >= n1) throw std::invalid_argument("C2 needs 1 <= t < n1/2");
        if (p < static_cast<std::uint64_t>(n1) + 1) throw std::invalid_argument("C2 needs p >= n1 + 1");
        return {n1, t, GrsParams::standard(p, n1, 2 * t)};
    }
    int p() const noexcept { return static_cast<int>(grs.field.modulus()); }
    int block() const noexcept { return 2 * p() - 1; }
    int n() const noexcept { return n1 * block(); }
    int message_length() const noexcept { return n1 - 2 * t; }
    /// Blocks 1..ceil(n1/2) use the low form.
    int low_blocks() const noexcept { return (n1 + 1) / 2; }
};

namespace detail {
inline BitString c2_expand(std::span<const Symbol> block_weights, const C2Params& params) {
    BitString v;
    const auto len = static_cast<std::size_t>(params.block());
    for (std::size_t j = 0; j < block_weights.size(); ++j) {
        BitString blk(len);
        for (std::size_t q = 0; q < block_weights[j]; ++q) blk.set(q, true);
        v.append(blk);
    }
    return v;
}
} // namespace detail

/// Message symbols -> binary string of n1 blocks of length 2p-1.
inline BitString c2_encode(std::span<const Symbol> msg, const C2Params& params) {
    if (msg.size() != static_cast<std::size_t>(params.message_length()))
        throw std::invalid_argument("c2_encode: message must have n1 - 2t = " + std::to_string(params.message_length()) + " symbols");
    const auto& f = params.grs.field;
    const auto s = grs_encode(msg, params.grs);
    std::vector<Symbol> weights;
    Symbol prev = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const auto cj = f.sub(s[j], prev);
        prev = s[j];
        weights.push_back(static_cast<int>(j) < params.low_blocks() ? cj : static_cast<Symbol>(params.p()) + cj);
    }
    return detail::c2_expand(weights, params);
}

/// Reads only the block-boundary groups j(2p-1).
inline Decoded<std::vector<Symbol>> c2_decode(const CompositionMultiset& y, const C2Params& params) {
    using Result = std::vector<Symbol>;
    if (y.n() != params.n()) throw std::invalid_argument("c2_decode: ambient length differs from n1(2p-1)");
    const auto& f = params.grs.field;
    const int blk = params.block();
    std::vector<int> consumed;
    for (int j = 1; j <= params.n1; ++j) consumed.push_back(j * blk);

    const auto view = normalize(y, 1);
    std::vector<Symbol> lower;
    std::vector<int> erasures;
    for (int j = 1; j <= params.n1; ++j) {
        lower.push_back(f.reduce(view.lower(j * blk)));
        if (y.group(j * blk).size() != 2) erasures.push_back(j - 1);
    }
    auto x = grs_decode(lower, params.grs, std::nullopt, erasures);
    if (!x) return detail::failed<Result>(x.failure(), consumed);
    const auto& s = *x;
    const auto n1 = static_cast<std::size_t>(params.n1);
    const auto p = static_cast<Symbol>(params.p());

    std::vector<Symbol> weights(n1, 0);
    auto at = [&](std::size_t j) { return j == 0 ? Symbol{0} : s[j - 1]; }; // s_0 = 0
    for (std::size_t j = 1; j <= static_cast<std::size_t>(params.low_blocks()); ++j) weights[j - 1] = f.sub(at(j), at(j - 1));
    auto suffix = [&](std::size_t j) { return f.sub(at(n1), at(n1 - j)); }; // s̄_j = s_n1 - s_{n1-j}
    for (std::size_t j = 1; j <= n1 / 2; ++j) weights[n1 - j] = p + f.sub(suffix(j), suffix(j - 1));

    auto v = detail::c2_expand(weights, params);
    Result msg(s.begin(), s.begin() + params.message_length());
    if (c2_encode(msg, params) != v)
        return detail::failed<Result>({FailureKind::membership, "reassembled blocks do not re-encode"}, consumed);
    return detail::verified(std::move(v), std::move(msg), y, params.t, std::move(consumed));
}

// ---------------------------------------------------------------- C3

struct C3Params {
    int n1, n2, t;
    DominantCode dominant;
    BchCode bch;
    GrsParams grs; // alphas 1..n1, omegas 1, r = 2t

    static C3Params make(int n1, int n2, int t, std::uint64_t p, DominantRealization realization = DominantRealization::enumerative) {
        if (n1 < 1 || t < 1) throw std::invalid_argument("C3 needs n1 >= 1 and t >= 1");
        if (n2 < 3 || !std::has_single_bit(static_cast<unsigned>(n2 + 1))) throw std::invalid_argument("C3 needs n2 + 1 to be a power of two");
        if (p < static_cast<std::uint64_t>(n1) + 1) throw std::invalid_argument("C3 needs p >= n1 + 1");
        if (2 * t >= n1) throw std::invalid_argument("C3 needs 2t < n1 for the GRS layer");
        const int m = std::countr_zero(static_cast<unsigned>(n2 + 1));
        for (const auto& c : checks(n1, n2, t, p))
            if (c.fatal && !c.holds) throw std::invalid_argument("C3 parameter check failed: " + c.name);
        C3Params out{n1, n2, t, DominantCode(n1, realization), BchCode(m, t), GrsParams::standard(p, n1, 2 * t)};
        if (out.bch.dimension() < out.u_bits()) throw std::invalid_argument("C3: BCH dimension too small for the syndrome payload");
        return out;
    }

    /// Required inequalities (fatal) and the asymptotic parameter window (warnings).
    static std::vector<ParamCheck> checks(int n1, int n2, int t, std::uint64_t p) {
        const double m = std::log2(static_cast<double>(n2) + 1);
        const double width = std::bit_width(p - 1);
        const int mceil = static_cast<int>(std::ceil(m / 2));
        std::vector<ParamCheck> v;
        auto add = [&](std::string name, double lhs, std::string op, double rhs, bool fatal) {
            bool holds = op == "<" ? lhs < rhs : op == "<=" ? lhs <= rhs : lhs > rhs;
            v.push_back({std::move(name), lhs, std::move(op), rhs, holds, fatal});
        };
        add("n2 - t*log(n2+1) > 2t*ceil(log p)", n2 - t * m, ">", 2 * t * width, true);
        add("2t - 1 <= 2^ceil(log(n2+1)/2) + 1", 2 * t - 1, "<=", std::ldexp(1.0, mceil) + 1, true);
        add("4(log n1 + 1)^2 < n2", 4 * std::pow(std::log2(static_cast<double>(n1)) + 1, 2), "<", n2, false);
        add("n2 < n1", n2, "<", n1, false);
        add("2t < sqrt(n2)", 2 * t, "<", std::sqrt(static_cast<double>(n2)), false);
        return v;
    }

    int p() const noexcept { return static_cast<int>(grs.field.modulus()); }
    int symbol_width() const noexcept { return std::bit_width(static_cast<unsigned>(p() - 1)); }
    int u_bits() const noexcept { return 2 * t * symbol_width(); }
    int n() const noexcept { return n1 + 2 * n2; }
    int message_length() const noexcept { return dominant.message_length(); }
};

namespace detail {

inline std::vector<Symbol> prefix_weight_symbols(const BitString& w, const PrimeField& f) {
    std::vector<Symbol> x;
    Symbol acc = 0;
    for (auto b : w) x.push_back(acc = f.add(acc, b));
    return x;
}

/// p_j = (v_j + sum_{i<j} p_i) mod 2, and its inverse v_j = p_j xor (sum_{i<j} p_i mod 2).
inline BitString parity_string(const BitString& v) {
    BitString p;
    std::uint8_t acc = 0;
    for (auto b : v) {
        const std::uint8_t pj = b ^ acc;
        p.push_back(pj);
        acc ^= pj;
    }
    return p;
}

} // namespace detail

inline BitString c3_encode(const BitString& msg, const C3Params& params) {
    const auto& f = params.grs.field;
    const auto w = params.dominant.encode(msg);
    const auto x = detail::prefix_weight_symbols(w, f);
    const auto hx = grs_syndromes(x, params.grs);
    BitString u;
    const auto width = static_cast<std::size_t>(params.symbol_width());
    for (auto s : hx) u.append(BitString::from_uint(s, width));
    BitString padded = u;
    while (padded.size() < static_cast<std::size_t>(params.bch.dimension())) padded.push_back(false);
    const auto v = params.bch.encode(padded);
    const auto p = detail::parity_string(v);
    BitString c(static_cast<std::size_t>(params.n2));
    c.append(w);
    c.append(p.reversed());
    return c;
}

inline Decoded<BitString> c3_decode(const CompositionMultiset& y, const C3Params& params) {
    if (y.n() != params.n()) throw std::invalid_argument("c3_decode: ambient length differs from n1 + 2 n2");
    const auto& f = params.grs.field;
    const int n1 = params.n1, n2 = params.n2;
    auto consumed = detail::size_range(1, n2 + n1);
    const auto view = normalize(y, 1);

    BitString parity;
    for (int j = 1; j <= n2; ++j) parity.push_back((view.lower(j) + view.upper(j)) % 2 == 1);
    auto outer = params.bch.decode(parity);
    if (!outer) return detail::failed<BitString>(outer.failure(), consumed);
    const auto& v = outer->codeword;
    const auto& payload = outer->message;

    const auto width = static_cast<std::size_t>(params.symbol_width());
    const auto ubits = static_cast<std::size_t>(params.u_bits());
    for (std::size_t q = ubits; q < payload.size(); ++q)
        if (payload[q]) return detail::failed<BitString>({FailureKind::padding_nonzero, "syndrome payload padding is not zero"}, consumed);
    Syndromes hx;
    for (std::size_t q = 0; q < ubits; q += width) {
        const auto s = payload.slice(q, width).to_uint();
        if (s >= f.modulus()) return detail::failed<BitString>({FailureKind::symbol_out_of_range, "unpacked syndrome " + std::to_string(s) + " >= p"}, consumed);
        hx.push_back(static_cast<Symbol>(s));
    }

    std::vector<Symbol> lower;
    for (int j = 1; j <= n1; ++j) lower.push_back(f.reduce(view.lower(n2 + j)));
    const auto erasures = detail::pair_erasures(y, n2, n1);
    auto x = grs_decode(lower, params.grs, hx, erasures);
    if (!x) return detail::failed<BitString>(x.failure(), consumed);
    auto w = detail::bits_from_prefix_sums(f, *x);
    if (!w) return detail::failed<BitString>(w.failure(), consumed);
    auto msg = params.dominant.decode(*w);
    if (!msg) return detail::failed<BitString>(msg.failure(), consumed);

    BitString c(static_cast<std::size_t>(n2));
    c.append(*w);
    c.append(detail::parity_string(v).reversed());
    if (c3_encode(*msg, params) != c)
        return detail::failed<BitString>({FailureKind::membership, "payload and syndrome tail are inconsistent"}, consumed);
    return detail::verified(std::move(c), *msg, y, params.t, std::move(consumed));
}

// ---------------------------------------------------------------- C4

template <SystematicBinaryCode Code>
struct C4Params {
    int n1, n2, t;
    DominantCode dominant;
    Code good;

    static C4Params make(int t, DominantCode dominant, Code good) {
        const int n1 = dominant.length(), n2 = good.length();
        if (t < 1 || 4 * t >= n2) throw std::invalid_argument("C4 needs 1 <= t < n2/4");
        if (n1 >= n2) throw std::invalid_argument("C4 needs n1 < n2");
        if (good.dimension() != n1) throw std::invalid_argument("C4 needs the good code's dimension to equal n1");
        if (good.radius() < 2 * t) throw std::invalid_argument("C4 needs a good code correcting 2t errors");
        return {n1, n2, t, std::move(dominant), std::move(good)};
    }

    int n() const noexcept { return 2 * n2 - n1; }
    int message_length() const noexcept { return dominant.message_length(); }
};

template <SystematicBinaryCode Code>
BitString c4_encode(const BitString& msg, const C4Params<Code>& params) {
    const auto w = params.dominant.encode(msg);
    BitString c(static_cast<std::size_t>(params.n2 - params.n1));
    c.append(params.good.encode(w));
    return c;
}

template <SystematicBinaryCode Code>
Decoded<BitString> c4_decode(const CompositionMultiset& y, const C4Params<Code>& params) {
    if (y.n() != params.n()) throw std::invalid_argument("c4_decode: ambient length differs from 2 n2 - n1");
    const int lead = params.n2 - params.n1;
    auto consumed = detail::size_range(std::max(1, lead), params.n());
    const auto t_all = mass_diff_string(normalize(y, 1));
    const auto tail = t_all.slice(static_cast<std::size_t>(lead), static_cast<std::size_t>(params.n2));
    auto inner = params.good.decode(tail);
    if (!inner) return detail::failed<BitString>(inner.failure(), consumed);
    const auto w = inner->codeword.prefix(static_cast<std::size_t>(params.n1));
    auto msg = params.dominant.decode(w);
    if (!msg) return detail::failed<BitString>(msg.failure(), consumed);
    BitString c(static_cast<std::size_t>(lead));
    c.append(inner->codeword);
    return detail::verified(std::move(c), *msg, y, params.t, std::move(consumed));
}

} // namespace pscodes
