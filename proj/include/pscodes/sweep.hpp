// encode -> compose -> corrupt -> decode sweeps with aggregated verdicts.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "channel.hpp"
#include "scheme.hpp"

namespace pscodes {

struct SweepReport {
    std::string scheme;
    std::string params; // canonical parameter text
    std::string mode;   // "exhaustive" or "randomized seed=<s> trials=<m>x<p>"
    int budget = 0;
    std::uint64_t total = 0;
    std::uint64_t recovered = 0;
    std::uint64_t typed_failure = 0;
    std::uint64_t detected_mismatch = 0;
    std::uint64_t silent_wrong = 0; // verdict recovered but message differs
    int max_mass_bit_errors = 0;

    bool all_recovered() const noexcept { return total == recovered; }
};

inline std::string to_text(const SweepReport& r) {
    std::ostringstream os;
    os << "scheme=" << r.scheme << '\n'
       << "mode=" << r.mode << '\n'
       << "budget=" << r.budget << '\n'
       << "total=" << r.total << '\n'
       << "recovered=" << r.recovered << '\n'
       << "typed_failure=" << r.typed_failure << '\n'
       << "detected_mismatch=" << r.detected_mismatch << '\n'
       << "silent_wrong=" << r.silent_wrong << '\n'
       << "max_mass_bit_errors=" << r.max_mass_bit_errors << '\n';
    std::istringstream params(r.params);
    for (std::string line; std::getline(params, line);) os << "param." << line << '\n';
    return os.str();
}

/// Every error action the exhaustive sweep applies to one group: each present
/// mass substituted by every other mass in [0, j], each present mass deleted,
/// and one extra pair of every mass in [0, j] inserted.
inline std::vector<ErrorAction> group_actions(const CompositionMultiset& x, int j) {
    std::set<int> present;
    for (const auto& pr : x.group(j)) present.insert(pr.mass);
    std::vector<ErrorAction> out;
    for (int m : present)
        for (int nm = 0; nm <= j; ++nm)
            if (nm != m) out.push_back(Substitute{m, nm});
    for (int m : present) out.push_back(Delete{m});
    for (int m = 0; m <= j; ++m) out.push_back(Insert{{j - m, m}});
    return out;
}

/// Calls `visit` with every plan that touches at most `budget` distinct sizes
/// (the empty plan included), one event per touched size.
inline void for_each_plan(const CompositionMultiset& x, int budget, const std::function<void(const ErrorPlan&)>& visit) {
    const int n = x.n();
    std::vector<std::vector<ErrorAction>> actions(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) actions[static_cast<std::size_t>(j)] = group_actions(x, j);
    ErrorPlan plan;
    std::function<void(int)> rec = [&](int from) {
        visit(plan);
        if (static_cast<int>(plan.size()) == budget) return;
        for (int j = from; j <= n; ++j)
            for (const auto& a : actions[static_cast<std::size_t>(j)]) {
                plan.push_back({j, a});
                rec(j + 1);
                plan.pop_back();
            }
    };
    rec(1);
}

inline std::uint64_t count_plans(const CompositionMultiset& x, int budget) {
    std::uint64_t count = 0;
    for_each_plan(x, budget, [&](const ErrorPlan&) { ++count; });
    return count;
}

struct SweepOptions {
    int budget = -1;                 // -1: the scheme's own t
    bool exhaustive = true;
    std::uint64_t seed = 0;          // randomized mode
    std::uint64_t messages = 0;      // randomized: messages drawn
    std::uint64_t plans_per_message = 0;
    std::uint64_t max_cases = 50'000'000; // exhaustive feasibility limit
};

namespace detail {

inline void tally(SweepReport& rep, const Scheme& s, const std::string& message, const std::vector<BitString>& codewords, const CompositionMultiset& y) {
    ++rep.total;
    rep.max_mass_bit_errors = std::max(rep.max_mass_bit_errors, s.mass_bit_errors(y, codewords));
    const auto d = s.decode(y);
    switch (d.verdict) {
    case Verdict::recovered:
        if (d.message == message && d.codewords == codewords) ++rep.recovered;
        else ++rep.silent_wrong;
        break;
    case Verdict::failed: ++rep.typed_failure; break;
    case Verdict::detected_mismatch: ++rep.detected_mismatch; break;
    }
}

/// Seed of the i-th case of a randomized sweep.
inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t{out[0]} << 32) | out[1];
}

} // namespace detail

/// Exhaustive: every message times every plan from for_each_plan.
/// Randomized: `messages` random messages, each with `plans_per_message`
/// random plans of exactly `budget` events; case i uses seed case_seed(seed, i).
inline SweepReport sweep(const Scheme& s, const SweepOptions& opt) {
    SweepReport rep;
    rep.scheme = s.params().scheme;
    rep.params = to_text(s.params());
    rep.budget = opt.budget < 0 ? s.budget() : opt.budget;
    if (opt.exhaustive) {
        rep.mode = "exhaustive";
        const auto count = s.message_count();
        if (count > opt.max_cases) throw std::length_error("exhaustive sweep: message space too large");
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto msg = s.message_at(i);
            const auto cw = s.encode(msg);
            const auto x = s.compose(cw);
            if (i == 0 && count * count_plans(x, rep.budget) > opt.max_cases) throw std::length_error("exhaustive sweep: too many cases");
            for_each_plan(x, rep.budget, [&](const ErrorPlan& plan) { detail::tally(rep, s, msg, cw, corrupt(x, plan)); });
        }
        return rep;
    }
    rep.mode = "randomized seed=" + std::to_string(opt.seed) + " trials=" + std::to_string(opt.messages) + "x" + std::to_string(opt.plans_per_message);
    std::mt19937_64 rng(opt.seed);
    std::uint64_t case_index = 0;
    for (std::uint64_t m = 0; m < opt.messages; ++m) {
        const auto msg = s.random_message(rng);
        const auto cw = s.encode(msg);
        const auto x = s.compose(cw);
        for (std::uint64_t q = 0; q < opt.plans_per_message; ++q)
            detail::tally(rep, s, msg, cw, corrupt(x, random_plan(x, rep.budget, detail::case_seed(opt.seed, case_index++))));
    }
    return rep;
}

} // namespace pscodes
