// Typed decoder outcomes. A decoder either returns a value or a Failure that
// names what went wrong; it never returns a silently wrong value on purpose.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace pscodes {

enum class FailureKind {
    radius_exceeded,         // more errors/erasures than the code's guaranteed radius
    locator_degree_mismatch, // error locator has the wrong degree
    root_count_short,        // locator roots fewer than its degree
    syndrome_check,          // post-decode syndrome re-check failed
    symbol_out_of_range,     // unpacked field symbol >= p
    padding_nonzero,         // zero padding of a systematic message is not zero
    non_binary_difference,   // consecutive mass/prefix-sum difference is not 0 or 1
    membership,              // reconstructed word is not a codeword
    dominance,               // reconstructed word is not suffix-dominant
    not_in_codebook,         // word is outside the image of the encoder
};

constexpr std::string_view to_string(FailureKind k) noexcept {
    switch (k) {
    case FailureKind::radius_exceeded: return "radius-exceeded";
    case FailureKind::locator_degree_mismatch: return "locator-degree-mismatch";
    case FailureKind::root_count_short: return "root-count-short";
    case FailureKind::syndrome_check: return "syndrome-check";
    case FailureKind::symbol_out_of_range: return "symbol-out-of-range";
    case FailureKind::padding_nonzero: return "padding-nonzero";
    case FailureKind::non_binary_difference: return "non-binary-difference";
    case FailureKind::membership: return "membership";
    case FailureKind::dominance: return "dominance";
    case FailureKind::not_in_codebook: return "not-in-codebook";
    }
    return "unknown";
}

struct Failure {
    FailureKind kind;
    std::string detail;
};

template <class T>
class Outcome {
public:
    Outcome(T value) : v_(std::move(value)) {}
    Outcome(Failure f) : v_(std::move(f)) {}

    bool ok() const noexcept { return std::holds_alternative<T>(v_); }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const& {
        if (!ok()) throw std::logic_error("Outcome::value on failure: " + std::string(to_string(failure().kind)));
        return std::get<T>(v_);
    }
    T&& value() && {
        if (!ok()) throw std::logic_error("Outcome::value on failure: " + std::string(to_string(failure().kind)));
        return std::get<T>(std::move(v_));
    }
    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

    const Failure& failure() const& { return std::get<Failure>(v_); }

private:
    std::variant<T, Failure> v_;
};

} // namespace pscodes
