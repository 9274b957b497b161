#pragma once
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "closed_forms.hpp"
#include "dfinite.hpp"
#include "guessing.hpp"
#include "identities.hpp"
#include "walks.hpp"

// Cross-method equivalence battery: independent routes to the same numbers,
// compared exactly. A failing check names the first disagreement it finds.
namespace halfline {

struct SelfCheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty when passing
};

struct SelfCheck {
    std::string name;
    std::function<std::string()> run; // empty string = pass
};

// First coefficient where a candidate series departs from the oracle.
inline std::string series_disagreement(const SeriesT& oracle, const SeriesT& candidate,
                                       const std::string& label) {
    if (oracle.order() != candidate.order())
        return label + " has order " + std::to_string(candidate.order()) + ", expected " +
               std::to_string(oracle.order());
    for (int n = 0; n <= oracle.order(); ++n)
        if (!(oracle.coeff(n) == candidate.coeff(n)))
            return label + " disagrees at t^" + std::to_string(n);
    return "";
}

// The five solution methods for F(x;t), checked against the fixed point.
inline std::string five_way_detail(const SeriesT& fixpoint, const SeriesT& kernel,
                                   const SeriesT& wiener, const SeriesT& orbit,
                                   const SeriesT& factored) {
    const std::pair<const SeriesT*, const char*> routes[] = {
        {&kernel, "classical-kernel"},
        {&wiener, "wiener-hopf"},
        {&orbit, "orbit-sum"},
        {&factored, "factor-product"},
    };
    for (const auto& [series, label] : routes) {
        std::string d = series_disagreement(fixpoint, *series, label);
        if (!d.empty()) return d;
    }
    return "";
}

namespace detail {

inline std::string check_five_way(int order) {
    SeriesT fix = fixpoint_solve(StepSet({-1, 1}), order);
    WHFactors wh = wh_factorize(order);
    return five_way_detail(fix, classical_kernel(order).F, wiener_hopf(order), orbit_sum(order),
                           (wh.F0 * wh.Fplus).truncate(order));
}

inline std::string check_convergents(int height_max, int order) {
    for (int k = 0; k <= height_max; ++k) {
        SeriesT conv = cf_convergent(k, order).series;
        CountTable capped = bounded_dp(k, order);
        for (int n = 0; n <= order; ++n)
            if (conv.coeff(n).coeff(0) != capped.count(0, n))
                return "height-" + std::to_string(k) + " convergent disagrees with the bounded "
                                                       "walk count at length " +
                       std::to_string(n);
    }
    return "";
}

inline std::string check_cycle_sweep(int size_max) {
    for (int r = 1; r <= size_max; ++r)
        for (int s = 1; r + s <= size_max; ++s) {
            if (std::gcd(r, s) != 1) continue;
            if (cycle_count(r, s) != cycle_brute(r, s))
                return "cycle count disagrees with enumeration at (r, s) = (" +
                       std::to_string(r) + ", " + std::to_string(s) + ")";
        }
    for (int n = 1; n <= 7; ++n)
        if (cycle_count(n, n + 1) != lagrange_f0(2 * n))
            return "cycle count (n, n+1) disagrees with coefficient extraction at n = " +
                   std::to_string(n);
    return "";
}

inline std::string check_pipeline_closure(int len) {
    GuessReport rep = guess_algebraic(classical_kernel(8).F0, 0, 2, 2);
    if (!rep.candidate) return "no algebraic candidate for the excursion series";
    PRec rec = ode_to_rec(algebraic_to_ode(*rep.candidate));
    std::vector<Rational> by_rec = rec_unroll(rec, {Rational(1), Rational(0)}, len);
    std::vector<Rational> by_dp = excursion_counts(StepSet({-1, 1}), len);
    for (int n = 0; n <= len; ++n)
        if (by_rec[static_cast<std::size_t>(n)] != by_dp[static_cast<std::size_t>(n)])
            return "recurrence and dynamic programming disagree at length " + std::to_string(n);
    return "";
}

} // namespace detail

inline std::vector<SelfCheck> default_battery(int five_way_order = 30, int closure_len = 500) {
    return {
        {"five-way-agreement", [=] { return detail::check_five_way(five_way_order); }},
        {"convergent-bounds", [] { return detail::check_convergents(6, 24); }},
        {"cycle-sweep", [] { return detail::check_cycle_sweep(10); }},
        {"pipeline-closure", [=] { return detail::check_pipeline_closure(closure_len); }},
    };
}

inline std::vector<SelfCheckResult> run_battery(const std::vector<SelfCheck>& checks) {
    std::vector<SelfCheckResult> out;
    out.reserve(checks.size());
    for (const auto& c : checks) {
        std::string detail = c.run();
        out.push_back({c.name, detail.empty(), std::move(detail)});
    }
    return out;
}

} // namespace halfline
