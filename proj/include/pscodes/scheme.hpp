// Uniform facade over the five schemes (c1, c2, c3, c4, multi) plus the
// canonical key=value parameter file format used by the command-line tool.
#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bch.hpp"
#include "channel.hpp"
#include "compositions.hpp"
#include "dominance.hpp"
#include "multi_recon.hpp"
#include "single_recon.hpp"

namespace pscodes {

struct SchemeParams {
    std::string scheme; // c1 | c2 | c3 | c4 | multi
    int n = 0;          // c1
    int n1 = 0;         // c2, c3, c4
    int n2 = 0;         // c3
    int t = 0;
    int t1 = 0;         // c1 erasure share
    std::uint64_t p = 0;
    DominantRealization realization = DominantRealization::enumerative; // c3, c4
    int h = 0, k = 0;   // multi
    int good_m = 0, good_t = 0; // c4, multi: BCH(2^m - 1) correcting good_t errors

    bool operator==(const SchemeParams&) const = default;
};

inline std::string_view to_string(DominantRealization r) noexcept {
    return r == DominantRealization::enumerative ? "enumerative" : "interleave";
}

inline std::string to_text(const SchemeParams& sp) {
    std::ostringstream os;
    os << "scheme=" << sp.scheme << '\n';
    auto kv = [&](const char* key, auto value) { os << key << '=' << value << '\n'; };
    if (sp.scheme == "c1") {
        kv("p", sp.p), kv("n", sp.n), kv("t", sp.t), kv("t1", sp.t1);
    } else if (sp.scheme == "c2") {
        kv("p", sp.p), kv("n1", sp.n1), kv("t", sp.t);
    } else if (sp.scheme == "c3") {
        kv("p", sp.p), kv("n1", sp.n1), kv("n2", sp.n2), kv("t", sp.t), kv("realization", to_string(sp.realization));
    } else if (sp.scheme == "c4") {
        kv("n1", sp.n1), kv("t", sp.t), kv("realization", to_string(sp.realization)), kv("good_m", sp.good_m), kv("good_t", sp.good_t);
    } else if (sp.scheme == "multi") {
        kv("h", sp.h), kv("k", sp.k), kv("t", sp.t), kv("good_m", sp.good_m), kv("good_t", sp.good_t);
    }
    return os.str();
}

namespace detail {

template <class Int>
Int parse_int(std::string_view key, std::string_view text) {
    Int v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) throw FormatError("parameter " + std::string(key) + ": not an integer: '" + std::string(text) + "'");
    return v;
}

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace detail

inline void set_param(SchemeParams& sp, std::string_view key, std::string_view value) {
    using detail::parse_int;
    if (key == "scheme") sp.scheme = std::string(value);
    else if (key == "n") sp.n = parse_int<int>(key, value);
    else if (key == "n1") sp.n1 = parse_int<int>(key, value);
    else if (key == "n2") sp.n2 = parse_int<int>(key, value);
    else if (key == "t") sp.t = parse_int<int>(key, value);
    else if (key == "t1") sp.t1 = parse_int<int>(key, value);
    else if (key == "p") sp.p = parse_int<std::uint64_t>(key, value);
    else if (key == "h") sp.h = parse_int<int>(key, value);
    else if (key == "k") sp.k = parse_int<int>(key, value);
    else if (key == "good_m") sp.good_m = parse_int<int>(key, value);
    else if (key == "good_t") sp.good_t = parse_int<int>(key, value);
    else if (key == "realization") {
        if (value == "enumerative") sp.realization = DominantRealization::enumerative;
        else if (value == "interleave") sp.realization = DominantRealization::interleave;
        else throw FormatError("unknown realization '" + std::string(value) + "'");
    } else
        throw FormatError("unknown parameter '" + std::string(key) + "'");
}

inline SchemeParams parse_params(std::istream& in) {
    SchemeParams sp;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto s = detail::trim(line);
        if (s.empty() || s.front() == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw FormatError("line " + std::to_string(lineno) + ": expected key=value");
        set_param(sp, detail::trim(std::string_view(s).substr(0, eq)), detail::trim(std::string_view(s).substr(eq + 1)));
    }
    if (sp.scheme.empty()) throw FormatError("parameter file has no scheme");
    return sp;
}

inline SchemeParams parse_params(const std::string& text) {
    std::istringstream in(text);
    return parse_params(in);
}

/// Scheme-independent decode result; `message` uses the scheme's text format.
struct SchemeDecoded {
    Verdict verdict = Verdict::failed;
    std::optional<Failure> failure;
    std::string message;
    std::vector<BitString> codewords;
    std::vector<int> consumed;
    std::optional<int> failed_index; // multi only
};

/// Message text: bit schemes use a 0/1 string, c2 comma-separated integers,
/// multi one 0/1 record per string joined by commas.
class Scheme {
public:
    virtual ~Scheme() = default;
    virtual const SchemeParams& params() const = 0;
    virtual int budget() const = 0;
    virtual int length() const = 0;
    virtual int strings() const { return 1; }
    /// Size of the message space, saturating at 2^63.
    virtual std::uint64_t message_count() const = 0;
    virtual std::string message_at(std::uint64_t index) const = 0;
    virtual std::string canonical_message(const std::string& text) const = 0;
    virtual std::vector<BitString> encode(const std::string& message) const = 0;
    virtual SchemeDecoded decode(const CompositionMultiset& y) const = 0;
    /// Largest bit disagreement between the information read directly off
    /// the masses of y and the transmitted strings.
    virtual int mass_bit_errors(const CompositionMultiset& y, const std::vector<BitString>& codewords) const = 0;
    virtual std::vector<ParamCheck> checks() const { return {}; }

    std::string random_message(std::mt19937_64& rng) const {
        const auto count = message_count();
        return message_at(detail::uniform_below(rng, count));
    }

    CompositionMultiset compose(const std::vector<BitString>& codewords) const { return multi_compositions(codewords); }
};

namespace detail {

inline constexpr std::uint64_t kSaturated = std::uint64_t{1} << 63;

inline std::uint64_t pow_saturating(std::uint64_t base, int exp) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > kSaturated / base) return kSaturated;
        v *= base;
    }
    return v;
}

inline BitString parse_bits(const std::string& text, std::size_t expected, std::string_view what) {
    auto b = BitString::parse(trim(text));
    if (b.size() != expected) throw FormatError(std::string(what) + " must have " + std::to_string(expected) + " bits, got " + std::to_string(b.size()));
    return b;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

template <class Message>
SchemeDecoded lift(const Decoded<Message>& d, std::string message) {
    SchemeDecoded out;
    out.verdict = d.verdict;
    out.failure = d.failure;
    out.consumed = d.consumed;
    if (d.verdict != Verdict::failed) {
        out.codewords = {d.codeword};
        out.message = std::move(message);
    }
    return out;
}

inline int single_mass_errors(const CompositionMultiset& y, const std::vector<BitString>& codewords) {
    return static_cast<int>(hamming_distance(mass_diff_string(normalize(y, 1)), codewords.at(0)));
}

class C1Scheme final : public Scheme {
public:
    explicit C1Scheme(SchemeParams sp) : sp_(std::move(sp)), params_(C1Params::make(sp_.p, sp_.n, sp_.t, sp_.t1)), book_(c1_codebook(params_)) {}
    const SchemeParams& params() const override { return sp_; }
    int budget() const override { return params_.t; }
    int length() const override { return params_.n(); }
    std::uint64_t message_count() const override { return book_.size(); }
    std::string message_at(std::uint64_t i) const override { return book_.at(i).str(); }
    std::string canonical_message(const std::string& text) const override {
        auto c = parse_bits(text, static_cast<std::size_t>(params_.n()), "c1 message");
        if (!std::binary_search(book_.begin(), book_.end(), c)) throw FormatError("c1 message is not a suffix-dominant codeword");
        return c.str();
    }
    std::vector<BitString> encode(const std::string& message) const override { return {BitString::parse(canonical_message(message))}; }
    SchemeDecoded decode(const CompositionMultiset& y) const override {
        auto d = c1_decode(y, params_);
        return lift(d, d.message.str());
    }
    int mass_bit_errors(const CompositionMultiset& y, const std::vector<BitString>& c) const override { return single_mass_errors(y, c); }
    const C1Params& raw() const { return params_; }

private:
    SchemeParams sp_;
    C1Params params_;
    std::vector<BitString> book_;
};

class C2Scheme final : public Scheme {
public:
    explicit C2Scheme(SchemeParams sp) : sp_(std::move(sp)), params_(C2Params::make(sp_.n1, sp_.t, sp_.p)) {}
    const SchemeParams& params() const override { return sp_; }
    int budget() const override { return params_.t; }
    int length() const override { return params_.n(); }
    std::uint64_t message_count() const override { return pow_saturating(static_cast<std::uint64_t>(params_.p()), params_.message_length()); }
    std::string message_at(std::uint64_t index) const override {
        std::vector<Symbol> m(static_cast<std::size_t>(params_.message_length()));
        const auto p = static_cast<std::uint64_t>(params_.p());
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            *it = static_cast<Symbol>(index % p);
            index /= p;
        }
        return format(m);
    }
    std::string canonical_message(const std::string& text) const override { return format(parse(text)); }
    std::vector<BitString> encode(const std::string& message) const override { return {c2_encode(parse(message), params_)}; }
    SchemeDecoded decode(const CompositionMultiset& y) const override {
        auto d = c2_decode(y, params_);
        return lift(d, format(d.message));
    }
    int mass_bit_errors(const CompositionMultiset& y, const std::vector<BitString>& c) const override { return single_mass_errors(y, c); }

    static std::string format(const std::vector<Symbol>& m) {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
        return s;
    }

private:
    std::vector<Symbol> parse(const std::string& text) const {
        std::vector<Symbol> m;
        for (const auto& part : split(trim(text), ',')) {
            if (part.empty() || part.front() == '-') throw FormatError("c2 message symbols must be nonnegative integers");
            m.push_back(params_.grs.field.reduce(parse_int<std::uint64_t>("message", part)));
        }
        if (m.size() != static_cast<std::size_t>(params_.message_length()))
            throw FormatError("c2 message must have " + std::to_string(params_.message_length()) + " symbols");
        return m;
    }

    SchemeParams sp_;
    C2Params params_;
};

class C3Scheme final : public Scheme {
public:
    explicit C3Scheme(SchemeParams sp) : sp_(std::move(sp)), params_(C3Params::make(sp_.n1, sp_.n2, sp_.t, sp_.p, sp_.realization)) {}
    const SchemeParams& params() const override { return sp_; }
    int budget() const override { return params_.t; }
    int length() const override { return params_.n(); }
    std::uint64_t message_count() const override { return pow_saturating(2, params_.message_length()); }
    std::string message_at(std::uint64_t i) const override { return BitString::from_uint(i, static_cast<std::size_t>(params_.message_length())).str(); }
    std::string canonical_message(const std::string& text) const override {
        return parse_bits(text, static_cast<std::size_t>(params_.message_length()), "c3 message").str();
    }
    std::vector<BitString> encode(const std::string& message) const override {
        return {c3_encode(BitString::parse(canonical_message(message)), params_)};
    }
    SchemeDecoded decode(const CompositionMultiset& y) const override {
        auto d = c3_decode(y, params_);
        return lift(d, d.message.str());
    }
    int mass_bit_errors(const CompositionMultiset& y, const std::vector<BitString>& c) const override { return single_mass_errors(y, c); }
    std::vector<ParamCheck> checks() const override { return C3Params::checks(sp_.n1, sp_.n2, sp_.t, sp_.p); }

private:
    SchemeParams sp_;
    C3Params params_;
};

class C4Scheme final : public Scheme {
public:
    explicit C4Scheme(SchemeParams sp)
        : sp_(std::move(sp)),
          params_(C4Params<BchCode>::make(sp_.t, DominantCode(sp_.n1, sp_.realization), BchCode(sp_.good_m, sp_.good_t, BchBound::any))) {}
    const SchemeParams& params() const override { return sp_; }
    int budget() const override { return params_.t; }
    int length() const override { return params_.n(); }
    std::uint64_t message_count() const override { return pow_saturating(2, params_.message_length()); }
    std::string message_at(std::uint64_t i) const override { return BitString::from_uint(i, static_cast<std::size_t>(params_.message_length())).str(); }
    std::string canonical_message(const std::string& text) const override {
        return parse_bits(text, static_cast<std::size_t>(params_.message_length()), "c4 message").str();
    }
    std::vector<BitString> encode(const std::string& message) const override {
        return {c4_encode(BitString::parse(canonical_message(message)), params_)};
    }
    SchemeDecoded decode(const CompositionMultiset& y) const override {
        auto d = c4_decode(y, params_);
        return lift(d, d.message.str());
    }
    /// Only the last n2 coordinates feed the inner decoder.
    int mass_bit_errors(const CompositionMultiset& y, const std::vector<BitString>& c) const override {
        const auto lead = static_cast<std::size_t>(params_.n2 - params_.n1);
        const auto len = static_cast<std::size_t>(params_.n2);
        return static_cast<int>(hamming_distance(mass_diff_string(normalize(y, 1)).slice(lead, len), c.at(0).slice(lead, len)));
    }

private:
    SchemeParams sp_;
    C4Params<BchCode> params_;
};

/// h strings of length k; with t > 0 every string is a codeword of the good code
/// and the message carries its systematic part.
class MultiScheme final : public Scheme {
public:
    explicit MultiScheme(SchemeParams sp) : sp_(std::move(sp)), spec_{sp_.h, sp_.k} {
        spec_.validate();
        if (sp_.t < 0) throw std::invalid_argument("multi needs t >= 0");
        if (sp_.t > 0) {
            good_.emplace(sp_.good_m, sp_.good_t, BchBound::any);
            if (good_->length() != spec_.k) throw std::invalid_argument("multi: good code length must equal k");
            if (good_->radius() < 4 * sp_.t) throw std::invalid_argument("multi: good code must correct 4t errors");
        }
    }
    const SchemeParams& params() const override { return sp_; }
    int budget() const override { return sp_.t; }
    int length() const override { return spec_.length(); }
    int strings() const override { return spec_.h; }
    int record_bits() const { return good_ ? good_->dimension() : spec_.k; }
    std::uint64_t message_count() const override { return pow_saturating(2, record_bits() * spec_.h); }
    std::string message_at(std::uint64_t index) const override {
        const auto rb = static_cast<std::size_t>(record_bits());
        std::vector<std::string> rec;
        for (int i = spec_.h - 1; i >= 0; --i) {
            rec.insert(rec.begin(), BitString::from_uint(index & ((std::uint64_t{1} << rb) - 1), rb).str());
            index >>= rb;
        }
        return join(rec);
    }
    std::string canonical_message(const std::string& text) const override {
        std::vector<std::string> rec;
        for (const auto& r : records(text)) rec.push_back(r.str());
        return join(rec);
    }
    std::vector<BitString> encode(const std::string& message) const override {
        auto z = records(message);
        if (good_)
            for (auto& zi : z) zi = good_->encode(zi);
        return phi_encode(z, spec_);
    }
    SchemeDecoded decode(const CompositionMultiset& y) const override {
        const auto d = good_ ? multi_decode_errors(y, spec_, *good_, sp_.t) : multi_decode_free(y, spec_);
        SchemeDecoded out;
        out.verdict = d.verdict;
        out.failure = d.failure;
        out.consumed = d.consumed;
        out.failed_index = d.failed_index;
        if (d.verdict != Verdict::failed) {
            out.codewords = d.strings;
            std::vector<std::string> rec;
            for (const auto& z : d.messages) rec.push_back(good_ ? good_->message_of(z).str() : z.str());
            out.message = join(rec);
        }
        return out;
    }
    int mass_bit_errors(const CompositionMultiset& y, const std::vector<BitString>& c) const override {
        const auto diff = chain_differences(normalize(y, spec_.h));
        int worst = 0;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            BitString par;
            for (int d : diff[i]) par.push_back((d % 2 + 2) % 2 == 1);
            worst = std::max(worst, static_cast<int>(hamming_distance(phi_extract(par, spec_), phi_extract(c.at(i), spec_))));
        }
        return worst;
    }

private:
    std::vector<BitString> records(const std::string& text) const {
        const auto parts = split(trim(text), ',');
        if (parts.size() != static_cast<std::size_t>(spec_.h)) throw FormatError("multi message must have " + std::to_string(spec_.h) + " records");
        std::vector<BitString> out;
        for (const auto& p : parts) out.push_back(parse_bits(p, static_cast<std::size_t>(record_bits()), "multi record"));
        return out;
    }
    static std::string join(const std::vector<std::string>& rec) {
        std::string s;
        for (std::size_t i = 0; i < rec.size(); ++i) s += (i ? "," : "") + rec[i];
        return s;
    }

    SchemeParams sp_;
    PhiSpec spec_;
    std::optional<BchCode> good_;
};

} // namespace detail

/// Builds a scheme; invalid parameters throw std::invalid_argument.
inline std::unique_ptr<Scheme> make_scheme(const SchemeParams& sp) {
    if (sp.scheme == "c1") return std::make_unique<detail::C1Scheme>(sp);
    if (sp.scheme == "c2") return std::make_unique<detail::C2Scheme>(sp);
    if (sp.scheme == "c3") return std::make_unique<detail::C3Scheme>(sp);
    if (sp.scheme == "c4") return std::make_unique<detail::C4Scheme>(sp);
    if (sp.scheme == "multi") return std::make_unique<detail::MultiScheme>(sp);
    throw std::invalid_argument("unknown scheme '" + sp.scheme + "'");
}

} // namespace pscodes
