// Joint interleaving map for h strings of length k: every output string has
// length k(h+1), and the 2h prefix/suffix weights of the outputs are totally
// ordered (c_1 prefix <= c_1 suffix <= c_2 prefix <= ... <= c_h suffix) for every
// length up to ceil(k(h+1)/2).
#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "compositions.hpp"

namespace pscodes {

struct PhiSpec {
    int h = 1; // number of strings
    int k = 1; // information length

    int length() const noexcept { return k * (h + 1); }

    void validate() const {
        if (h < 1) throw std::invalid_argument("phi: h must be >= 1");
        if (k < 1) throw std::invalid_argument("phi: k must be >= 1");
    }
};

/// Intermediate arrays of the even-k map. Indices are 0-based: w[s] is half
/// string s+1, r[j] the indicator string of column j+1, u[s][j] the short
/// string placed before w[s][j].
struct PhiTrace {
    std::vector<BitString> w;              // 2h rows of length k/2
    std::vector<BitString> r;              // k/2 rows of length 2h
    std::vector<std::vector<BitString>> u; // [2h][k/2], each of length h
    std::vector<BitString> v;              // 2h rows of length (k/2)(h+1)
};

namespace detail {

inline void check_inputs(std::span<const BitString> z, const PhiSpec& spec) {
    spec.validate();
    if (z.size() != static_cast<std::size_t>(spec.h))
        throw std::invalid_argument("phi: expected " + std::to_string(spec.h) + " strings, got " + std::to_string(z.size()));
    for (const auto& zi : z)
        if (zi.size() != static_cast<std::size_t>(spec.k))
            throw std::invalid_argument("phi: every input must have length " + std::to_string(spec.k));
}

} // namespace detail

/// The even-k construction, exposing every intermediate array.
inline PhiTrace phi_trace(std::span<const BitString> z, const PhiSpec& spec) {
    detail::check_inputs(z, spec);
    if (spec.k % 2) throw std::invalid_argument("phi_trace: k must be even");
    const auto h = static_cast<std::size_t>(spec.h);
    const auto half = static_cast<std::size_t>(spec.k / 2);

    PhiTrace tr;
    for (const auto& zi : z) {
        tr.w.push_back(zi.prefix(half));
        tr.w.push_back(zi.reversed().prefix(half));
    }
    tr.u.assign(2 * h, std::vector<BitString>(half));
    for (std::size_t j = 0; j < half; ++j) {
        BitString rj(2 * h);
        std::uint8_t prev = 0;
        std::size_t drops = 0;
        for (std::size_t s = 0; s < 2 * h; ++s) {
            const auto cur = tr.w[s][j];
            if (cur < prev) {
                rj.set(s, true);
                ++drops;
            }
            prev = cur;
            BitString us(h);
            for (std::size_t q = h - drops; q < h; ++q) us.set(q, true);
            tr.u[s][j] = std::move(us);
        }
        tr.r.push_back(std::move(rj));
    }
    for (std::size_t s = 0; s < 2 * h; ++s) {
        BitString vs;
        for (std::size_t j = 0; j < half; ++j) {
            vs.append(tr.u[s][j]);
            vs.push_back(tr.w[s][j]);
        }
        tr.v.push_back(std::move(vs));
    }
    return tr;
}

/// 1-based coordinates of the phi_{k+1} output deleted for odd k. They lie in
/// the 2(h+1) central coordinates, which hold u_{2i-1,K}, the duplicated bit
/// twice, and the reversed u_{2i,K} (K = ceil(k/2)). The kept coordinates form
/// a centred window; for even h it is h+2 wide and loses the second copy of
/// the duplicated bit.
inline std::vector<int> phi_odd_deleted(const PhiSpec& spec) {
    const int h = spec.h, start = ((spec.k + 1) / 2 - 1) * (h + 1);
    const int lo = (h + 1) / 2, width = h % 2 ? h + 1 : h + 2;
    std::vector<int> out;
    for (int q = 0; q < 2 * (h + 1); ++q) {
        const bool kept = q >= lo && q < lo + width && !(h % 2 == 0 && q == h + 1);
        if (!kept) out.push_back(start + q + 1);
    }
    return out;
}

/// phi_k(z_1..z_h) -> (c_1..c_h); odd k duplicates the middle bit, maps with
/// phi_{k+1}, then deletes the h+1 coordinates from phi_odd_deleted.
inline std::vector<BitString> phi_encode(std::span<const BitString> z, const PhiSpec& spec) {
    detail::check_inputs(z, spec);
    if (spec.k % 2 == 0) {
        auto tr = phi_trace(z, spec);
        std::vector<BitString> out;
        for (std::size_t i = 0; i < z.size(); ++i) {
            BitString ci = tr.v[2 * i];
            ci.append(tr.v[2 * i + 1].reversed());
            out.push_back(std::move(ci));
        }
        return out;
    }
    const auto mid = static_cast<std::size_t>((spec.k + 1) / 2); // 1-based index of the repeated bit
    std::vector<BitString> padded;
    for (const auto& zi : z) {
        BitString zb = zi.prefix(mid);
        zb.append(zi.slice(mid - 1, static_cast<std::size_t>(spec.k) - mid + 1));
        padded.push_back(std::move(zb));
    }
    const auto deleted = phi_odd_deleted(spec);
    std::vector<BitString> out;
    for (const auto& cb : phi_encode(padded, PhiSpec{spec.h, spec.k + 1})) {
        BitString ci;
        for (std::size_t q = 0; q < cb.size(); ++q)
            if (!std::binary_search(deleted.begin(), deleted.end(), static_cast<int>(q) + 1)) ci.push_back(cb[q]);
        out.push_back(std::move(ci));
    }
    return out;
}

/// 1-based coordinate of information bit j (1-based) inside each output string.
/// First-half bits sit at multiples of h+1; the second half is laid out
/// reversed, so bit j > ceil(k/2) sits right after the block boundary (h+1)(j-1).
/// For odd k the middle bit sits inside the central window.
inline int phi_info_position(int j, const PhiSpec& spec) {
    const int mid = (spec.k + 1) / 2;
    if (spec.k % 2 && j == mid) return (spec.h + 1) * (mid - 1) + spec.h / 2 + 1;
    return j <= mid ? (spec.h + 1) * j : (spec.h + 1) * (j - 1) + 1;
}

/// Reads the information bits back out of one output string.
inline BitString phi_extract(const BitString& c, const PhiSpec& spec) {
    if (c.size() != static_cast<std::size_t>(spec.length())) throw std::invalid_argument("phi_extract: length differs from k(h+1)");
    BitString z;
    for (int j = 1; j <= spec.k; ++j) z.push_back(c[static_cast<std::size_t>(phi_info_position(j, spec) - 1)]);
    return z;
}

/// True iff wt(c_1[l]) <= wt(rev c_1[l]) <= wt(c_2[l]) <= ... <= wt(rev c_h[l])
/// for every l <= ceil(n/2).
inline bool dominance_chain_check(std::span<const BitString> c) {
    if (c.empty()) return true;
    const auto n = c.front().size();
    std::vector<std::vector<int>> pre, suf;
    for (const auto& ci : c) {
        if (ci.size() != n) throw std::invalid_argument("dominance_chain_check: length mismatch");
        pre.push_back(prefix_weights(ci));
        suf.push_back(prefix_weights(ci.reversed()));
    }
    for (std::size_t l = 1; l <= (n + 1) / 2; ++l) {
        int prev = -1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (pre[i][l] < prev || suf[i][l] < pre[i][l]) return false;
            prev = suf[i][l];
        }
    }
    return true;
}

} // namespace pscodes
