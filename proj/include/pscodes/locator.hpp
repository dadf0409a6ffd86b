// Berlekamp-Massey over any field exposing add/sub/mul/div, seeded with an
// erasure locator. Syndromes are indexed from 0: S_l = sum_k Y_k X_k^l, and the
// returned locator is prod (1 - X_k x).
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pscodes::detail {

struct Locator {
    std::vector<std::uint32_t> coeffs; // coefficient i multiplies x^i
    int length;                        // linear complexity L
};

template <class Field>
Locator berlekamp_massey(const Field& f, std::span<const std::uint32_t> s, std::vector<std::uint32_t> seed, int seed_degree) {
    auto c = seed, b = seed;
    int L = seed_degree, m = 1;
    std::uint32_t last = 1;
    const int r = static_cast<int>(s.size());
    for (int k = seed_degree; k < r; ++k) {
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= k; ++i)
            d = f.add(d, f.mul(c[i], s[static_cast<std::size_t>(k) - i]));
        if (d == 0) {
            ++m;
            continue;
        }
        const auto coef = f.div(d, last);
        const auto shift = static_cast<std::size_t>(m);
        auto next = c;
        if (next.size() < b.size() + shift) next.resize(b.size() + shift, 0);
        for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] = f.sub(next[i + shift], f.mul(coef, b[i]));
        if (2 * L <= k + seed_degree) {
            b = c;
            L = k + 1 + seed_degree - L;
            last = d;
            m = 1;
        } else {
            ++m;
        }
        c = std::move(next);
    }
    return {std::move(c), L};
}

template <class Field>
std::uint32_t poly_eval(const Field& f, std::span<const std::uint32_t> a, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

inline int poly_degree(std::span<const std::uint32_t> a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

} // namespace pscodes::detail
