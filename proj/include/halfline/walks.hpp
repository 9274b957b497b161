#pragma once
#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "series.hpp"

namespace halfline {

// Finite set of integer steps. Zero steps are allowed (they contribute x^0
// to the step polynomial); an empty set is refused. A set without negative
// steps makes the half-line constraint vacuous -- allowed but observable
// through has_negative_step() so callers can warn.
class StepSet {
public:
    explicit StepSet(const std::vector<int>& steps) {
        std::set<int> uniq(steps.begin(), steps.end());
        if (uniq.empty()) fail("EmptyStepSet", "step set must be nonempty");
        steps_.assign(uniq.begin(), uniq.end());
    }

    const std::vector<int>& steps() const { return steps_; }
    int min_step() const { return steps_.front(); }
    int max_step() const { return steps_.back(); }
    bool has_negative_step() const { return steps_.front() < 0; }

    // S(x) = sum over steps s of x^s.
    LaurentPoly step_poly() const {
        LaurentPoly p;
        for (int s : steps_) p.add_term(s, Rational(1));
        return p;
    }

    friend bool operator==(const StepSet& a, const StepSet& b) { return a.steps_ == b.steps_; }

private:
    std::vector<int> steps_; // sorted, unique
};

// Walk counts f(i;n): number of length-n walks from 0 to i that never leave
// the half-line. Row n maps reachable positions to counts; entries are
// sorted by position and never zero.
struct CountTable {
    using Row = std::vector<std::pair<int, Rational>>;

    int max_len = 0;
    std::vector<Row> rows;

    Rational count(int position, int length) const {
        const Row& row = rows.at(static_cast<std::size_t>(length));
        auto it = std::lower_bound(row.begin(), row.end(), position,
                                   [](const auto& e, int p) { return e.first < p; });
        if (it == row.end() || it->first != position) return Rational(0);
        return it->second;
    }
};

// Dynamic-programming enumeration: row n from row n-1 via
// f(i;n) = sum_{s in S} f(i-s;n-1), restricted to i >= 0 and i-s >= 0.
inline CountTable dp_count(const StepSet& s, int max_len) {
    if (max_len < 0) fail("BadOrder", "walk length must be non-negative");
    CountTable t;
    t.max_len = max_len;
    t.rows.reserve(static_cast<std::size_t>(max_len) + 1);
    t.rows.push_back({{0, Rational(1)}});
    std::vector<Rational> scratch;
    for (int n = 1; n <= max_len; ++n) {
        const CountTable::Row& prev = t.rows.back();
        int hi = prev.empty() ? 0 : prev.back().first + std::max(s.max_step(), 0);
        scratch.assign(static_cast<std::size_t>(hi) + 1, Rational(0));
        for (const auto& [i, c] : prev)
            for (int step : s.steps()) {
                int j = i + step;
                if (j >= 0) scratch[static_cast<std::size_t>(j)] += c;
            }
        CountTable::Row row;
        for (int i = 0; i <= hi; ++i)
            if (!scratch[static_cast<std::size_t>(i)].is_zero())
                row.emplace_back(i, std::move(scratch[static_cast<std::size_t>(i)]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Position-0 column of dp_count with O(row) memory: the excursion counts
// f(0;n) for n = 0..max_len. Same DP, rows discarded as they are consumed.
inline std::vector<Rational> excursion_counts(const StepSet& s, int max_len) {
    if (max_len < 0) fail("BadOrder", "walk length must be non-negative");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(max_len) + 1);
    CountTable::Row prev{{0, Rational(1)}};
    out.push_back(Rational(1));
    std::vector<Rational> scratch;
    for (int n = 1; n <= max_len; ++n) {
        int hi = prev.empty() ? 0 : prev.back().first + std::max(s.max_step(), 0);
        scratch.assign(static_cast<std::size_t>(hi) + 1, Rational(0));
        for (const auto& [i, c] : prev)
            for (int step : s.steps()) {
                int j = i + step;
                if (j >= 0) scratch[static_cast<std::size_t>(j)] += c;
            }
        CountTable::Row row;
        for (int i = 0; i <= hi; ++i)
            if (!scratch[static_cast<std::size_t>(i)].is_zero())
                row.emplace_back(i, std::move(scratch[static_cast<std::size_t>(i)]));
        out.push_back(row.empty() || row.front().first != 0 ? Rational(0) : row.front().second);
        prev = std::move(row);
    }
    return out;
}

// One application of the walk functional: F -> 1 + [x>=](t * S(x) * F).
inline SeriesT walk_functional(const StepSet& s, const SeriesT& f) {
    SeriesT r = nonneg_part(s.step_poly() * f).shift_t(1).truncate(f.order());
    r.set_coeff(0, r.coeff(0) + LaurentPoly(1));
    return r;
}

// Solve F = 1 + [x>=](t*S(x)*F) by fixed-point iteration from F = 1.
// The t^n coefficient stabilizes after n rounds, so order N needs exactly N.
inline SeriesT fixpoint_solve(const StepSet& s, int order) {
    SeriesT f = SeriesT::one(order);
    for (int i = 0; i < order; ++i) f = walk_functional(s, f);
    return f;
}

// Generating series of a count table: [t^n] = sum_i f(i;n) x^i.
inline SeriesT table_to_series(const CountTable& t) {
    SeriesT r(t.max_len);
    for (int n = 0; n <= t.max_len; ++n) {
        LaurentPoly p;
        for (const auto& [i, c] : t.rows[static_cast<std::size_t>(n)]) p.add_term(i, c);
        r.set_coeff(n, std::move(p));
    }
    return r;
}

} // namespace halfline
