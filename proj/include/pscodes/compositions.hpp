// Binary strings, prefix-suffix composition multisets, the group distance,
// and decoder-side normalization to a fixed number of masses per size.
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pscodes {

/// Raised when a composition multiset or bit string is malformed.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n, std::uint8_t fill = 0) : bits_(n, fill ? 1 : 0) {}
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto& b : bits_)
            if (b > 1) throw FormatError("bit value other than 0/1");
    }

    static BitString parse(std::string_view s) {
        BitString out;
        out.bits_.reserve(s.size());
        for (char ch : s) {
            if (ch != '0' && ch != '1') throw FormatError(std::string("invalid bit character '") + ch + "'");
            out.bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return out;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }
    void flip(std::size_t i) { bits_.at(i) ^= 1; }
    void push_back(bool v) { bits_.push_back(v ? 1 : 0); }
    void append(const BitString& o) { bits_.insert(bits_.end(), o.bits_.begin(), o.bits_.end()); }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    auto begin() const noexcept { return bits_.begin(); }
    auto end() const noexcept { return bits_.end(); }

    std::size_t weight() const noexcept { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

    /// First `len` bits.
    BitString prefix(std::size_t len) const {
        return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(std::min(len, size()))));
    }
    BitString slice(std::size_t from, std::size_t len) const {
        if (from + len > size()) throw std::out_of_range("BitString::slice");
        auto b = bits_.begin() + static_cast<std::ptrdiff_t>(from);
        return BitString(std::vector<std::uint8_t>(b, b + static_cast<std::ptrdiff_t>(len)));
    }
    BitString reversed() const { return BitString(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend())); }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
        return s;
    }

    /// Big-endian integer value of at most 64 bits.
    std::uint64_t to_uint() const {
        if (size() > 64) throw std::overflow_error("BitString too long for integer conversion");
        std::uint64_t v = 0;
        for (auto b : bits_) v = (v << 1) | b;
        return v;
    }
    static BitString from_uint(std::uint64_t v, std::size_t width) {
        BitString out(width);
        for (std::size_t i = 0; i < width; ++i) out.bits_[width - 1 - i] = (v >> i) & 1;
        return out;
    }

    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline std::size_t hamming_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Weights of the prefixes of lengths 0..n (entry 0 is the empty prefix).
inline std::vector<int> prefix_weights(const BitString& c) {
    std::vector<int> w(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) w[j + 1] = w[j] + c[j];
    return w;
}

/// (zero-count, one-count) of a string; size = a + b, mass = b.
struct CompositionPair {
    int zeros = 0;
    int mass = 0;

    int size() const noexcept { return zeros + mass; }

    /// Canonical order: size, then mass, then zero-count.
    friend bool operator<(const CompositionPair& x, const CompositionPair& y) noexcept {
        if (x.size() != y.size()) return x.size() < y.size();
        if (x.mass != y.mass) return x.mass < y.mass;
        return x.zeros < y.zeros;
    }
    friend bool operator==(const CompositionPair&, const CompositionPair&) = default;
};

inline CompositionPair composition(const BitString& s) {
    if (s.empty()) throw std::invalid_argument("composition of an empty string");
    auto w = static_cast<int>(s.weight());
    return {static_cast<int>(s.size()) - w, w};
}

/// A multiset of composition pairs over ambient length n, stored as groups
/// keyed by size. Every group is kept sorted, so equality is multiset equality.
class CompositionMultiset {
public:
    CompositionMultiset() = default;
    explicit CompositionMultiset(int n) : n_(n), groups_(static_cast<std::size_t>(n) + 1) {
        if (n < 1) throw FormatError("ambient length must be positive");
    }

    int n() const noexcept { return n_; }

    /// Pairs of size j (1 <= j <= n), sorted by mass then zero-count.
    const std::vector<CompositionPair>& group(int j) const {
        check_size(j);
        return groups_[static_cast<std::size_t>(j)];
    }

    void insert(CompositionPair pr) {
        check_pair(pr);
        auto& g = groups_[static_cast<std::size_t>(pr.size())];
        g.insert(std::upper_bound(g.begin(), g.end(), pr), pr);
    }
    /// Inserts the pair of size j with the given mass.
    void insert_mass(int j, int mass) { insert({j - mass, mass}); }

    /// Removes one instance; returns false if absent.
    bool erase(CompositionPair pr) {
        if (pr.size() < 1 || pr.size() > n_) return false;
        auto& g = groups_[static_cast<std::size_t>(pr.size())];
        auto it = std::find(g.begin(), g.end(), pr);
        if (it == g.end()) return false;
        g.erase(it);
        return true;
    }

    void replace_group(int j, std::vector<CompositionPair> pairs) {
        check_size(j);
        for (auto& pr : pairs) {
            check_pair(pr);
            if (pr.size() != j) throw FormatError("pair size differs from its group");
        }
        std::sort(pairs.begin(), pairs.end());
        groups_[static_cast<std::size_t>(j)] = std::move(pairs);
    }

    std::size_t total() const noexcept {
        std::size_t s = 0;
        for (auto& g : groups_) s += g.size();
        return s;
    }

    friend bool operator==(const CompositionMultiset&, const CompositionMultiset&) = default;

private:
    void check_size(int j) const {
        if (j < 1 || j > n_) throw std::out_of_range("group size " + std::to_string(j) + " outside [1, n]");
    }
    void check_pair(const CompositionPair& pr) const {
        if (pr.zeros < 0 || pr.mass < 0 || pr.size() < 1 || pr.size() > n_)
            throw FormatError("composition (" + std::to_string(pr.zeros) + "," + std::to_string(pr.mass) + ") outside ambient length " + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::vector<CompositionPair>> groups_;
};

/// M(c): compositions of every prefix and every suffix of c.
inline CompositionMultiset prefix_suffix_compositions(const BitString& c) {
    if (c.empty()) throw std::invalid_argument("prefix_suffix_compositions of an empty string");
    const int n = static_cast<int>(c.size());
    CompositionMultiset m(n);
    auto pw = prefix_weights(c);
    for (int j = 1; j <= n; ++j) {
        m.insert_mass(j, pw[static_cast<std::size_t>(j)]);
        m.insert_mass(j, pw[static_cast<std::size_t>(n)] - pw[static_cast<std::size_t>(n - j)]);
    }
    return m;
}

/// Multiset union of M(c_i) over strings of a common length.
inline CompositionMultiset multi_compositions(std::span<const BitString> strings) {
    if (strings.empty()) throw std::invalid_argument("multi_compositions needs at least one string");
    const auto n = strings.front().size();
    if (n == 0) throw std::invalid_argument("multi_compositions of empty strings");
    CompositionMultiset m(static_cast<int>(n));
    for (const auto& c : strings) {
        if (c.size() != n) throw std::invalid_argument("multi_compositions: length mismatch");
        auto pw = prefix_weights(c);
        const auto total = pw.back();
        for (std::size_t j = 1; j <= n; ++j) {
            m.insert_mass(static_cast<int>(j), pw[j]);
            m.insert_mass(static_cast<int>(j), total - pw[n - j]);
        }
    }
    return m;
}

/// d(X, Y): number of sizes whose groups differ.
inline int distance(const CompositionMultiset& x, const CompositionMultiset& y) {
    if (x.n() != y.n()) throw std::invalid_argument("distance: ambient lengths differ");
    int d = 0;
    for (int j = 1; j <= x.n(); ++j) d += x.group(j) != y.group(j);
    return d;
}

/// Exactly 2h ascending masses per size, for decoders.
struct NormalizedView {
    int n = 0;
    int h = 1;
    std::vector<std::vector<int>> masses; // index 0 unused

    const std::vector<int>& at(int j) const { return masses.at(static_cast<std::size_t>(j)); }
    /// Smallest mass at size j for h = 1 views; b_0 = 0.
    int lower(int j) const { return j == 0 ? 0 : at(j).front(); }
    int upper(int j) const { return j == 0 ? 0 : at(j).back(); }

    friend bool operator==(const NormalizedView&, const NormalizedView&) = default;
};

/// Truncates oversized groups (dropping the largest masses) and pads undersized
/// groups with mass-0 pairs so that every size carries exactly 2h masses.
inline NormalizedView normalize(const CompositionMultiset& y, int h) {
    if (h < 1) throw std::invalid_argument("normalize: multiplicity must be >= 1");
    const auto want = static_cast<std::size_t>(2 * h);
    NormalizedView v{y.n(), h, std::vector<std::vector<int>>(static_cast<std::size_t>(y.n()) + 1)};
    for (int j = 1; j <= y.n(); ++j) {
        auto& out = v.masses[static_cast<std::size_t>(j)];
        for (const auto& pr : y.group(j)) out.push_back(pr.mass);
        std::sort(out.begin(), out.end());
        if (out.size() > want) out.resize(want);
        while (out.size() < want) out.insert(out.begin(), 0);
    }
    return v;
}

inline CompositionMultiset to_multiset(const NormalizedView& v) {
    CompositionMultiset m(v.n);
    for (int j = 1; j <= v.n; ++j)
        for (int b : v.at(j)) m.insert_mass(j, b);
    return m;
}

// Text format:
//   n=<int>
//   <size>: <a>,<b> <a>,<b> ...
// one line per nonempty group, pairs in canonical order.

inline std::string to_text(const CompositionMultiset& m) {
    std::ostringstream os;
    os << "n=" << m.n() << '\n';
    for (int j = 1; j <= m.n(); ++j) {
        const auto& g = m.group(j);
        if (g.empty()) continue;
        os << j << ':';
        for (const auto& pr : g) os << ' ' << pr.zeros << ',' << pr.mass;
        os << '\n';
    }
    return os.str();
}

inline CompositionMultiset parse_multiset(std::istream& in) {
    std::string line;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            line = line.substr(first);
            auto last = line.find_last_not_of(" \t\r");
            line.resize(last + 1);
            return true;
        }
        return false;
    };
    if (!next_content_line() || line.rfind("n=", 0) != 0) throw FormatError("multiset: missing 'n=<int>' header");
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line.substr(2), &pos);
        if (pos != line.size() - 2) throw FormatError("multiset: malformed header");
    } catch (const std::logic_error&) {
        throw FormatError("multiset: malformed header '" + line + "'");
    }
    CompositionMultiset m(n);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    while (next_content_line()) {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw FormatError("multiset: missing ':' in '" + line + "'");
        std::istringstream head(line.substr(0, colon));
        int size = 0;
        if (!(head >> size) || size < 1 || size > n) throw FormatError("multiset: group size outside [1, n] in '" + line + "'");
        if (seen[static_cast<std::size_t>(size)]) throw FormatError("multiset: duplicate group " + std::to_string(size));
        seen[static_cast<std::size_t>(size)] = true;
        std::istringstream body(line.substr(colon + 1));
        std::string tok;
        std::vector<CompositionPair> pairs;
        while (body >> tok) {
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw FormatError("multiset: malformed pair '" + tok + "'");
            CompositionPair pr;
            try {
                std::size_t pa = 0, pb = 0;
                pr.zeros = std::stoi(tok.substr(0, comma), &pa);
                pr.mass = std::stoi(tok.substr(comma + 1), &pb);
                if (pa != comma || pb != tok.size() - comma - 1) throw FormatError("");
            } catch (const std::logic_error&) {
                throw FormatError("multiset: malformed pair '" + tok + "'");
            }
            if (pr.zeros < 0 || pr.mass < 0 || pr.size() != size)
                throw FormatError("multiset: pair '" + tok + "' does not have size " + std::to_string(size));
            pairs.push_back(pr);
        }
        m.replace_group(size, std::move(pairs));
    }
    return m;
}

inline CompositionMultiset parse_multiset(const std::string& text) {
    std::istringstream in(text);
    return parse_multiset(in);
}

} // namespace pscodes
