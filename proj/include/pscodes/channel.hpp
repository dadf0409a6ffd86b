// Budgeted composition errors: one error event per size group.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "compositions.hpp"

namespace pscodes {

class PlanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Substitute {
    int old_mass;
    int new_mass;
    friend bool operator==(const Substitute&, const Substitute&) = default;
};
struct Insert {
    CompositionPair pair;
    friend bool operator==(const Insert&, const Insert&) = default;
};
struct Delete {
    int mass;
    friend bool operator==(const Delete&, const Delete&) = default;
};
struct ReplaceGroup {
    std::vector<CompositionPair> pairs;
    friend bool operator==(const ReplaceGroup&, const ReplaceGroup&) = default;
};

using ErrorAction = std::variant<Substitute, Insert, Delete, ReplaceGroup>;

struct ErrorEvent {
    int size;
    ErrorAction action;
    friend bool operator==(const ErrorEvent&, const ErrorEvent&) = default;
};

using ErrorPlan = std::vector<ErrorEvent>;

namespace detail {

inline void apply_event(CompositionMultiset& y, const ErrorEvent& ev) {
    const int j = ev.size;
    if (j < 1 || j > y.n()) throw PlanError("error event at size " + std::to_string(j) + " outside [1, n]");
    const auto before = y.group(j);
    std::visit(
        [&](const auto& a) {
            using A = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<A, Substitute>) {
                if (a.old_mass == a.new_mass) throw PlanError("substitution leaves group " + std::to_string(j) + " unchanged");
                if (a.new_mass < 0 || a.new_mass > j) throw PlanError("substituted mass outside [0, size]");
                if (!y.erase({j - a.old_mass, a.old_mass}))
                    throw PlanError("substitution: mass " + std::to_string(a.old_mass) + " absent from group " + std::to_string(j));
                y.insert_mass(j, a.new_mass);
            } else if constexpr (std::is_same_v<A, Insert>) {
                if (a.pair.zeros < 0 || a.pair.mass < 0 || a.pair.size() != j)
                    throw PlanError("inserted pair does not have size " + std::to_string(j));
                y.insert(a.pair);
            } else if constexpr (std::is_same_v<A, Delete>) {
                if (!y.erase({j - a.mass, a.mass}))
                    throw PlanError("deletion: mass " + std::to_string(a.mass) + " absent from group " + std::to_string(j));
            } else {
                for (const auto& pr : a.pairs)
                    if (pr.zeros < 0 || pr.mass < 0 || pr.size() != j)
                        throw PlanError("replacement pair does not have size " + std::to_string(j));
                y.replace_group(j, a.pairs);
            }
        },
        ev.action);
    if (y.group(j) == before) throw PlanError("error event leaves group " + std::to_string(j) + " unchanged");
}

/// Uniform integer in [0, bound) by rejection; stable across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

} // namespace detail

/// Applies every event to a copy of X. distance(X, result) == plan.size().
inline CompositionMultiset corrupt(const CompositionMultiset& x, const ErrorPlan& plan) {
    std::set<int> sizes;
    for (const auto& ev : plan)
        if (!sizes.insert(ev.size).second) throw PlanError("plan touches size " + std::to_string(ev.size) + " twice");
    auto y = x;
    for (const auto& ev : plan) detail::apply_event(y, ev);
    return y;
}

/// Seeded plan with t events at distinct sizes. Action kinds are drawn uniformly
/// from {substitute, insert, delete}; an empty group always receives an insertion.
/// The generator is std::mt19937_64 seeded with `seed`.
inline ErrorPlan random_plan(const CompositionMultiset& x, int t, std::uint64_t seed) {
    if (t < 0 || t > x.n()) throw PlanError("error budget outside [0, n]");
    std::mt19937_64 rng(seed);
    std::vector<int> sizes(static_cast<std::size_t>(x.n()));
    std::iota(sizes.begin(), sizes.end(), 1);
    // partial Fisher-Yates
    for (int i = 0; i < t; ++i) {
        auto k = static_cast<std::size_t>(i) + detail::uniform_below(rng, sizes.size() - static_cast<std::size_t>(i));
        std::swap(sizes[static_cast<std::size_t>(i)], sizes[k]);
    }
    sizes.resize(static_cast<std::size_t>(t));
    std::sort(sizes.begin(), sizes.end());

    ErrorPlan plan;
    for (int j : sizes) {
        const auto& g = x.group(j);
        auto kind = detail::uniform_below(rng, 3);
        if (g.empty()) kind = 1;
        const auto span = static_cast<std::uint64_t>(j) + 1;
        if (kind == 0) {
            int old_mass = g[detail::uniform_below(rng, g.size())].mass;
            int new_mass = static_cast<int>(detail::uniform_below(rng, span - 1));
            if (new_mass >= old_mass) ++new_mass;
            plan.push_back({j, Substitute{old_mass, new_mass}});
        } else if (kind == 1) {
            int mass = static_cast<int>(detail::uniform_below(rng, span));
            plan.push_back({j, Insert{{j - mass, mass}}});
        } else {
            plan.push_back({j, Delete{g[detail::uniform_below(rng, g.size())].mass}});
        }
    }
    return plan;
}

// Plan text: one event per line
//   <size> substitute <old_mass> <new_mass>
//   <size> insert <a>,<b>
//   <size> delete <mass>
//   <size> replace <a>,<b> ...

inline std::string to_text(const ErrorPlan& plan) {
    std::ostringstream os;
    for (const auto& ev : plan) {
        os << ev.size << ' ';
        std::visit(
            [&](const auto& a) {
                using A = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<A, Substitute>) os << "substitute " << a.old_mass << ' ' << a.new_mass;
                else if constexpr (std::is_same_v<A, Insert>) os << "insert " << a.pair.zeros << ',' << a.pair.mass;
                else if constexpr (std::is_same_v<A, Delete>) os << "delete " << a.mass;
                else {
                    os << "replace";
                    for (const auto& pr : a.pairs) os << ' ' << pr.zeros << ',' << pr.mass;
                }
            },
            ev.action);
        os << '\n';
    }
    return os.str();
}

inline ErrorPlan parse_plan(std::istream& in) {
    auto read_pair = [](const std::string& tok) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw PlanError("malformed pair '" + tok + "'");
        try {
            return CompositionPair{std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))};
        } catch (const std::logic_error&) {
            throw PlanError("malformed pair '" + tok + "'");
        }
    };
    ErrorPlan plan;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        ErrorEvent ev{};
        std::string kind;
        if (!(ls >> ev.size >> kind)) throw PlanError("malformed plan line '" + line + "'");
        if (kind == "substitute") {
            Substitute s{};
            if (!(ls >> s.old_mass >> s.new_mass)) throw PlanError("malformed substitution '" + line + "'");
            ev.action = s;
        } else if (kind == "insert") {
            std::string tok;
            if (!(ls >> tok)) throw PlanError("malformed insertion '" + line + "'");
            ev.action = Insert{read_pair(tok)};
        } else if (kind == "delete") {
            Delete d{};
            if (!(ls >> d.mass)) throw PlanError("malformed deletion '" + line + "'");
            ev.action = d;
        } else if (kind == "replace") {
            ReplaceGroup r;
            std::string tok;
            while (ls >> tok) r.pairs.push_back(read_pair(tok));
            ev.action = std::move(r);
        } else {
            throw PlanError("unknown action '" + kind + "'");
        }
        std::string extra;
        if (kind != "replace" && ls >> extra) throw PlanError("trailing tokens in '" + line + "'");
        plan.push_back(std::move(ev));
    }
    return plan;
}

inline ErrorPlan parse_plan(const std::string& text) {
    std::istringstream in(text);
    return parse_plan(in);
}

} // namespace pscodes
