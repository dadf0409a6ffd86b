// Exact arithmetic in prime fields F_p and binary extension fields GF(2^m).
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pscodes {

/// Raised for arithmetic that has no result in the field (division by zero,
/// operands from different fields, out-of-range representatives).
class FieldError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

/// Prime field F_p with p < 2^31. Elements are plain integers in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint64_t p) : p_(static_cast<value_type>(p)) {
        if (p >= (std::uint64_t{1} << 31)) throw FieldError("prime modulus must be below 2^31");
        if (!detail::is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    }

    value_type modulus() const noexcept { return p_; }
    value_type order() const noexcept { return p_; }

    /// Canonical representative of an arbitrary integer.
    value_type reduce(std::int64_t x) const noexcept {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    value_type add(value_type a, value_type b) const {
        check(a), check(b);
        auto s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const {
        check(a), check(b);
        return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
    }
    value_type neg(value_type a) const {
        check(a);
        return a == 0 ? 0 : p_ - a;
    }
    value_type mul(value_type a, value_type b) const {
        check(a), check(b);
        return static_cast<value_type>(std::uint64_t{a} * b % p_);
    }
    value_type pow(value_type a, std::uint64_t e) const {
        check(a);
        std::uint64_t base = a, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(acc);
    }
    value_type inv(value_type a) const {
        check(a);
        if (a == 0) throw FieldError("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    bool contains(value_type a) const noexcept { return a < p_; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    void check(value_type a) const {
        if (a >= p_) throw FieldError("value " + std::to_string(a) + " outside F_" + std::to_string(p_));
    }

    value_type p_;
};

/// Canonical primitive polynomials over GF(2), bit-encoded, for degree m = 2..16.
inline constexpr std::array<std::uint32_t, 17> kPrimitivePolys = {
    0, 0,
    0x7,     // x^2+x+1
    0xB,     // x^3+x+1
    0x13,    // x^4+x+1
    0x25,    // x^5+x^2+1
    0x43,    // x^6+x+1
    0x89,    // x^7+x^3+1
    0x11D,   // x^8+x^4+x^3+x^2+1
    0x211,   // x^9+x^4+1
    0x409,   // x^10+x^3+1
    0x805,   // x^11+x^2+1
    0x1053,  // x^12+x^6+x^4+x+1
    0x201B,  // x^13+x^4+x^3+x+1
    0x4443,  // x^14+x^10+x^6+x+1
    0x8003,  // x^15+x+1
    0x1100B, // x^16+x^12+x^3+x+1
};

/// GF(2^m) in polynomial basis with log/antilog tables; 2 <= m <= 16.
class BinaryExtField {
public:
    using value_type = std::uint32_t;

    explicit BinaryExtField(int m) : BinaryExtField(m, m >= 2 && m <= 16 ? kPrimitivePolys[m] : 0) {}

    BinaryExtField(int m, std::uint32_t primitive_poly) : m_(m), poly_(primitive_poly) {
        if (m < 2 || m > 16) throw FieldError("extension degree must lie in [2, 16]");
        if ((poly_ >> m) != 1u) throw FieldError("primitive polynomial must have degree m");
        const value_type order = (value_type{1} << m) - 1;
        antilog_.assign(order, 0);
        log_.assign(order + 1, 0);
        value_type x = 1;
        for (value_type i = 0; i < order; ++i) {
            if (i > 0 && x == 1) throw FieldError("polynomial is not primitive: x has order " + std::to_string(i));
            antilog_[i] = x;
            log_[x] = i;
            x <<= 1;
            if (x >> m) x ^= poly_;
        }
        if (x != 1) throw FieldError("polynomial is not primitive");
    }

    int degree() const noexcept { return m_; }
    std::uint32_t primitive_poly() const noexcept { return poly_; }
    value_type size() const noexcept { return value_type{1} << m_; }
    /// Order of the multiplicative group, 2^m - 1.
    value_type group_order() const noexcept { return size() - 1; }

    const std::vector<value_type>& log_table() const noexcept { return log_; }
    const std::vector<value_type>& antilog_table() const noexcept { return antilog_; }

    value_type alpha_pow(std::int64_t e) const noexcept {
        auto o = static_cast<std::int64_t>(group_order());
        auto r = e % o;
        return antilog_[static_cast<std::size_t>(r < 0 ? r + o : r)];
    }
    value_type log(value_type a) const {
        check(a);
        if (a == 0) throw FieldError("logarithm of zero");
        return log_[a];
    }

    value_type add(value_type a, value_type b) const { return check(a), check(b), a ^ b; }
    value_type sub(value_type a, value_type b) const { return add(a, b); }
    value_type mul(value_type a, value_type b) const {
        check(a), check(b);
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % group_order()];
    }
    value_type inv(value_type a) const {
        check(a);
        if (a == 0) throw FieldError("inverse of zero in GF(2^" + std::to_string(m_) + ")");
        return antilog_[(group_order() - log_[a]) % group_order()];
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    value_type pow(value_type a, std::uint64_t e) const {
        check(a);
        if (a == 0) return e == 0 ? 1 : 0;
        return antilog_[(std::uint64_t{log_[a]} * (e % group_order())) % group_order()];
    }

    friend bool operator==(const BinaryExtField& a, const BinaryExtField& b) noexcept {
        return a.m_ == b.m_ && a.poly_ == b.poly_;
    }

private:
    void check(value_type a) const {
        if (a >= size()) throw FieldError("value " + std::to_string(a) + " outside GF(2^" + std::to_string(m_) + ")");
    }

    int m_;
    std::uint32_t poly_;
    std::vector<value_type> log_;
    std::vector<value_type> antilog_;
};

/// Identifies the field an element belongs to: F_p (tag = p) or GF(2^m) (tag = primitive polynomial).
struct FieldTag {
    enum class Kind : std::uint8_t { prime, binary_ext } kind;
    std::uint32_t tag;
    friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

/// An element tagged with its field, for callers that mix fields and want it checked.
struct FieldElement {
    std::uint32_t value;
    FieldTag field;
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

enum class FieldOp { add, sub, mul, div, pow, inv };

inline FieldElement element(const PrimeField& f, std::uint32_t v) {
    if (!f.contains(v)) throw FieldError("value out of range");
    return {v, {FieldTag::Kind::prime, f.modulus()}};
}
inline FieldElement element(const BinaryExtField& f, std::uint32_t v) {
    if (v >= f.size()) throw FieldError("value out of range");
    return {v, {FieldTag::Kind::binary_ext, f.primitive_poly()}};
}

namespace detail {
template <class Field>
std::uint32_t apply(const Field& f, FieldOp op, std::uint32_t a, std::uint32_t b) {
    switch (op) {
    case FieldOp::add: return f.add(a, b);
    case FieldOp::sub: return f.sub(a, b);
    case FieldOp::mul: return f.mul(a, b);
    case FieldOp::div: return f.div(a, b);
    case FieldOp::pow: return f.pow(a, b);
    case FieldOp::inv: return f.inv(a);
    }
    throw FieldError("unknown field operation");
}
} // namespace detail

/// Tagged arithmetic. For `pow`, `b.value` is the exponent; for `inv`, `b` is ignored.
template <class Field>
FieldElement field_arith(const Field& f, FieldElement a, FieldElement b, FieldOp op) {
    const auto own = element(f, 0).field;
    if (a.field != own || (op != FieldOp::pow && op != FieldOp::inv && b.field != own))
        throw FieldError("operands from different fields");
    return {detail::apply(f, op, a.value, b.value), own};
}

} // namespace pscodes
