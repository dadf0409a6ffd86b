// Reconstruction of h interleaved strings from the union of their
// prefix-suffix compositions, with and without composition errors.
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bch.hpp"
#include "compositions.hpp"
#include "outcome.hpp"
#include "phi.hpp"
#include "single_recon.hpp"

namespace pscodes {

struct MultiDecoded {
    Verdict verdict = Verdict::failed;
    std::optional<Failure> failure;
    std::optional<int> failed_index;    // 0-based string whose inner decode failed
    std::vector<BitString> strings;     // c_1..c_h
    std::vector<BitString> messages;    // z_1..z_h
    std::vector<BitString> extracted;   // information bits read from the masses, before inner decoding
    std::vector<int> consumed;

    bool recovered() const noexcept { return verdict == Verdict::recovered; }
};

/// Per-string consecutive mass differences read along the weight chain:
/// sorted slot 2i carries prefix masses of string i, slot 2i+1 its suffix masses.
/// Entry [i][q] is the raw difference for coordinate q (0-based) of string i.
inline std::vector<std::vector<int>> chain_differences(const NormalizedView& view) {
    const auto n = static_cast<std::size_t>(view.n);
    const auto h = static_cast<std::size_t>(view.h);
    std::vector<std::vector<int>> diff(h, std::vector<int>(n, 0));
    auto mass = [&](std::size_t l, std::size_t slot) { return l == 0 ? 0 : view.at(static_cast<int>(l))[slot]; };
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t l = 1; l <= (n + 1) / 2; ++l) diff[i][l - 1] = mass(l, 2 * i) - mass(l - 1, 2 * i);
        for (std::size_t l = 1; l <= n / 2; ++l) diff[i][n - l] = mass(l, 2 * i + 1) - mass(l - 1, 2 * i + 1);
    }
    return diff;
}

/// Error-free decoding: exact chain differences, then the information positions.
inline MultiDecoded multi_decode_free(const CompositionMultiset& x, const PhiSpec& spec) {
    spec.validate();
    if (x.n() != spec.length()) throw std::invalid_argument("multi_decode_free: ambient length differs from k(h+1)");
    MultiDecoded out;
    out.consumed = detail::size_range(1, x.n());
    const auto diff = chain_differences(normalize(x, spec.h));
    for (std::size_t i = 0; i < diff.size(); ++i) {
        BitString c;
        for (int d : diff[i]) {
            if (d != 0 && d != 1) {
                out.failure = Failure{FailureKind::non_binary_difference, "string " + std::to_string(i + 1) + " has mass step " + std::to_string(d)};
                out.failed_index = static_cast<int>(i);
                out.strings.clear();
                out.messages.clear();
                return out;
            }
            c.push_back(d == 1);
        }
        out.messages.push_back(phi_extract(c, spec));
        out.strings.push_back(std::move(c));
    }
    out.extracted = out.messages;
    if (multi_compositions(phi_encode(out.messages, spec)) != x) {
        out.verdict = Verdict::detected_mismatch;
        out.failure = Failure{FailureKind::membership, "re-encoded strings do not reproduce the multiset"};
        return out;
    }
    out.verdict = Verdict::recovered;
    return out;
}

/// Decoding with up to t errors; every z_i must be a codeword of `good`
/// (length k, radius >= 4t). Parity of the chain differences gives each string
/// up to 4t bit errors at the information positions, which `good` removes.
template <SystematicBinaryCode Code>
MultiDecoded multi_decode_errors(const CompositionMultiset& y, const PhiSpec& spec, const Code& good, int t) {
    spec.validate();
    if (y.n() != spec.length()) throw std::invalid_argument("multi_decode_errors: ambient length differs from k(h+1)");
    if (good.length() != spec.k) throw std::invalid_argument("multi_decode_errors: good code length must equal k");
    if (t < 0 || good.radius() < 4 * t) throw std::invalid_argument("multi_decode_errors: good code must correct 4t errors");

    MultiDecoded out;
    out.consumed = detail::size_range(1, y.n());
    const auto diff = chain_differences(normalize(y, spec.h));
    for (std::size_t i = 0; i < diff.size(); ++i) {
        BitString c;
        for (int d : diff[i]) c.push_back((d % 2 + 2) % 2 == 1);
        out.extracted.push_back(phi_extract(c, spec));
    }
    for (std::size_t i = 0; i < out.extracted.size(); ++i) {
        auto dec = good.decode(out.extracted[i]);
        if (!dec) {
            out.failure = dec.failure();
            out.failed_index = static_cast<int>(i);
            out.messages.clear();
            return out;
        }
        out.messages.push_back(dec->codeword);
    }
    out.strings = phi_encode(out.messages, spec);
    const auto dist = distance(multi_compositions(out.strings), y);
    if (dist > t) {
        out.verdict = Verdict::detected_mismatch;
        out.failure = Failure{FailureKind::membership, "reconstruction is at distance " + std::to_string(dist) + " > t"};
        return out;
    }
    out.verdict = Verdict::recovered;
    return out;
}

} // namespace pscodes
