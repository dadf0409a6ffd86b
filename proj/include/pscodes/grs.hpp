// Generalized Reed-Solomon codes over F_p given by the parity-check matrix
// H[l][i] = omega_i * alpha_i^l, l = 0..r-1. Systematic encoding, syndromes, and
// error/erasure decoding (Berlekamp-Massey, exhaustive root search, Forney),
// optionally toward a coset with externally supplied syndromes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "galois.hpp"
#include "locator.hpp"
#include "outcome.hpp"

namespace pscodes {

using Symbol = std::uint32_t;
using Syndromes = std::vector<Symbol>;

struct GrsParams {
    PrimeField field;
    int n;
    int r; // number of parity checks
    std::vector<Symbol> alphas;
    std::vector<Symbol> omegas;

    /// alphas = (1, 2, ..., n), omegas all one.
    static GrsParams standard(std::uint64_t p, int n, int r) {
        GrsParams g{PrimeField(p), n, r, {}, {}};
        for (int i = 1; i <= n; ++i) g.alphas.push_back(g.field.reduce(i));
        g.omegas.assign(static_cast<std::size_t>(n), 1);
        g.validate();
        return g;
    }

    int dimension() const noexcept { return n - r; }

    /// Alphas must be distinct and nonzero (roots of the error locator are their inverses).
    void validate() const {
        if (n < 1) throw std::invalid_argument("GRS length must be positive");
        if (r < 0 || r >= n) throw std::invalid_argument("GRS parity count must satisfy 0 <= r < n");
        if (alphas.size() != static_cast<std::size_t>(n) || omegas.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("GRS alphas/omegas must have length n");
        std::set<Symbol> seen;
        for (auto a : alphas) {
            if (!field.contains(a) || a == 0) throw std::invalid_argument("GRS evaluation points must be nonzero field elements");
            if (!seen.insert(a).second) throw std::invalid_argument("GRS evaluation points must be distinct");
        }
        for (auto w : omegas)
            if (!field.contains(w) || w == 0) throw std::invalid_argument("GRS column multipliers must be nonzero");
    }
};

namespace detail {

using Poly = std::vector<Symbol>; // coefficient i multiplies x^i

/// Solves A x = b over F_p for square nonsingular A; returns nullopt if singular.
inline std::optional<std::vector<Symbol>> solve_linear(const PrimeField& f, std::vector<std::vector<Symbol>> a, std::vector<Symbol> b) {
    const auto m = a.size();
    for (std::size_t col = 0; col < m; ++col) {
        auto piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        auto inv = f.inv(a[col][col]);
        for (auto& v : a[col]) v = f.mul(v, inv);
        b[col] = f.mul(b[col], inv);
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            auto factor = a[row][col];
            for (std::size_t k = 0; k < m; ++k) a[row][k] = f.sub(a[row][k], f.mul(factor, a[col][k]));
            b[row] = f.sub(b[row], f.mul(factor, b[col]));
        }
    }
    return b;
}

} // namespace detail

/// S_l = sum_i omega_i alpha_i^l y_i for l = 0..r-1.
inline Syndromes grs_syndromes(std::span<const Symbol> y, const GrsParams& g) {
    if (y.size() != static_cast<std::size_t>(g.n)) throw std::invalid_argument("grs_syndromes: word length differs from n");
    const auto& f = g.field;
    Syndromes s(static_cast<std::size_t>(g.r), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        Symbol term = f.mul(g.omegas[i], f.reduce(y[i]));
        for (auto& sl : s) {
            sl = f.add(sl, term);
            term = f.mul(term, g.alphas[i]);
        }
    }
    return s;
}

/// Systematic encoder: message on the first n - r coordinates, parity on the last r.
inline std::vector<Symbol> grs_encode(std::span<const Symbol> msg, const GrsParams& g) {
    const auto k = static_cast<std::size_t>(g.dimension());
    if (msg.size() != k) throw std::invalid_argument("grs_encode: message length must be n - r = " + std::to_string(k));
    const auto& f = g.field;
    std::vector<Symbol> word(msg.begin(), msg.end());
    for (auto& v : word) v = f.reduce(v);
    word.resize(static_cast<std::size_t>(g.n), 0);
    if (g.r == 0) return word;

    auto partial = grs_syndromes(word, g);
    const auto r = static_cast<std::size_t>(g.r);
    std::vector<std::vector<Symbol>> a(r, std::vector<Symbol>(r));
    std::vector<Symbol> b(r);
    for (std::size_t l = 0; l < r; ++l) {
        for (std::size_t i = 0; i < r; ++i) a[l][i] = f.mul(g.omegas[k + i], f.pow(g.alphas[k + i], l));
        b[l] = f.neg(partial[l]);
    }
    auto tail = detail::solve_linear(f, std::move(a), std::move(b));
    if (!tail) throw std::logic_error("grs_encode: singular parity system (evaluation points not distinct)");
    std::copy(tail->begin(), tail->end(), word.begin() + static_cast<std::ptrdiff_t>(k));
    return word;
}

/// Finds x with grs_syndromes(x) == true_syndromes (zero when absent) nearest to y,
/// provided 2 * errors + erasures <= r. Erased positions are 0-based indices.
inline Outcome<std::vector<Symbol>> grs_decode(std::span<const Symbol> y_in, const GrsParams& g,
                                               const std::optional<Syndromes>& true_syndromes = std::nullopt,
                                               std::span<const int> erasures = {}) {
    using detail::Poly;
    const auto& f = g.field;
    const auto r = static_cast<std::size_t>(g.r);
    if (y_in.size() != static_cast<std::size_t>(g.n)) throw std::invalid_argument("grs_decode: word length differs from n");
    if (true_syndromes && true_syndromes->size() != r) throw std::invalid_argument("grs_decode: true syndrome count differs from r");

    std::vector<Symbol> y(y_in.begin(), y_in.end());
    for (auto& v : y) v = f.reduce(v);

    std::set<int> erased(erasures.begin(), erasures.end());
    if (erased.size() != erasures.size()) throw std::invalid_argument("grs_decode: duplicate erasure position");
    for (int e : erased)
        if (e < 0 || e >= g.n) throw std::invalid_argument("grs_decode: erasure position out of range");
    const auto n_erasures = static_cast<int>(erased.size());
    if (n_erasures > g.r) return Failure{FailureKind::radius_exceeded, "more erasures than parity checks"};

    auto s = grs_syndromes(y, g);
    if (true_syndromes)
        for (std::size_t l = 0; l < r; ++l) s[l] = f.sub(s[l], (*true_syndromes)[l] % f.modulus());

    // Erasure locator Gamma(x) = prod (1 - alpha_e x).
    Poly gamma{1};
    for (int e : erased) {
        Poly next(gamma.size() + 1, 0);
        const auto a = g.alphas[static_cast<std::size_t>(e)];
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            next[i] = f.add(next[i], gamma[i]);
            next[i + 1] = f.sub(next[i + 1], f.mul(a, gamma[i]));
        }
        gamma = std::move(next);
    }

    auto [c, L] = detail::berlekamp_massey(f, s, gamma, n_erasures);

    const int n_errors = L - n_erasures;
    if (2 * n_errors + n_erasures > g.r)
        return Failure{FailureKind::radius_exceeded, std::to_string(n_errors) + " errors and " + std::to_string(n_erasures) + " erasures exceed r = " + std::to_string(g.r)};
    if (detail::poly_degree(c) != L)
        return Failure{FailureKind::locator_degree_mismatch, "locator degree " + std::to_string(detail::poly_degree(c)) + " != " + std::to_string(L)};

    // Roots of the locator are inverses of error-position evaluation points.
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.n); ++i)
        if (detail::poly_eval(f, c, f.inv(g.alphas[i])) == 0) positions.push_back(i);
    if (static_cast<int>(positions.size()) != L)
        return Failure{FailureKind::root_count_short, std::to_string(positions.size()) + " locator roots for degree " + std::to_string(L)};

    // Forney: Omega = S * Lambda mod x^r; Y = -X Omega(X^-1) / Lambda'(X^-1); e = Y / omega.
    Poly omega(r, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < r && i + j < r; ++j) omega[i + j] = f.add(omega[i + j], f.mul(c[i], s[j]));
    Poly deriv(c.size() > 1 ? c.size() - 1 : 1, 0);
    for (std::size_t i = 1; i < c.size(); ++i) deriv[i - 1] = f.mul(f.reduce(static_cast<std::int64_t>(i)), c[i]);

    for (auto i : positions) {
        const auto x = g.alphas[i];
        const auto xinv = f.inv(x);
        const auto den = detail::poly_eval(f, deriv, xinv);
        if (den == 0) return Failure{FailureKind::locator_degree_mismatch, "repeated locator root"};
        auto mag = f.neg(f.mul(x, f.div(detail::poly_eval(f, omega, xinv), den)));
        mag = f.div(mag, g.omegas[i]);
        y[i] = f.sub(y[i], mag);
    }

    auto check = grs_syndromes(y, g);
    for (std::size_t l = 0; l < r; ++l) {
        const Symbol want = true_syndromes ? (*true_syndromes)[l] % f.modulus() : 0;
        if (check[l] != want) return Failure{FailureKind::syndrome_check, "syndrome " + std::to_string(l) + " mismatch after correction"};
    }
    return y;
}

} // namespace pscodes
