#pragma once
#include <algorithm>
#include <numeric>

#include "walks.hpp"

// Combinatorial counterparts of the closed forms: continued-fraction
// convergents against a height-bounded DP, the reflection-principle count,
// and the cycle-lemma count with an exhaustive cross-check.
namespace halfline {

// k-th convergent of F(0;t) = 1/(1 - t^2/(1 - t^2/(...))): the generating
// series of excursions of height at most k.
struct Convergent {
    int k;
    SeriesT series;
};

inline Convergent cf_convergent(int k, int n) {
    if (k < 0) fail("BadHeight", "height bound must be non-negative");
    SeriesT f = SeriesT::one(n);
    for (int j = 1; j <= k; ++j)
        f = series_inverse(SeriesT::one(n) - f.shift_t(2).truncate(n));
    return {k, std::move(f)};
}

// dp_count for steps {-1,+1} with positions capped at k. Positions above
// min(k, max_len) are unreachable, so the scratch row stays that small.
inline CountTable bounded_dp(int k, int max_len) {
    if (k < 0) fail("BadHeight", "height bound must be non-negative");
    if (max_len < 0) fail("BadOrder", "walk length must be non-negative");
    CountTable t;
    t.max_len = max_len;
    t.rows.reserve(static_cast<std::size_t>(max_len) + 1);
    t.rows.push_back({{0, Rational(1)}});
    const int cap = std::min(k, max_len);
    std::vector<Rational> scratch;
    for (int n = 1; n <= max_len; ++n) {
        scratch.assign(static_cast<std::size_t>(cap) + 1, Rational(0));
        for (const auto& [i, c] : t.rows.back())
            for (int step : {-1, 1}) {
                int j = i + step;
                if (j >= 0 && j <= cap) scratch[static_cast<std::size_t>(j)] += c;
            }
        CountTable::Row row;
        for (int i = 0; i <= cap; ++i)
            if (!scratch[static_cast<std::size_t>(i)].is_zero())
                row.emplace_back(i, std::move(scratch[static_cast<std::size_t>(i)]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Number of walks 0 -> i of length n staying non-negative, as the binomial
// difference C(n,(n-i)/2) - C(n,(n-i-2)/2). The equivalent single-binomial
// form 2(i+1)/(n+i+2) * C(n,(n-i)/2) is recomputed and asserted equal.
inline Rational reflection_count(long long i, long long n) {
    if (i < 0) fail("BadEndpoint", "endpoint must be non-negative");
    if (n < 0) fail("BadOrder", "walk length must be non-negative");
    if (i > n || (n - i) % 2 != 0) return Rational(0);
    long long m = (n - i) / 2;
    Rational diff(binomial(n, m) - binomial(n, m - 1));
    Rational ratio = Rational(BigInt(2 * (i + 1)), BigInt(n + i + 2)) * Rational(binomial(n, m));
    if (diff != ratio)
        detail::internal_error("the two reflection-count forms disagree");
    return diff;
}

// Cycle lemma: among the C(r+s, s) lattice paths from (0,0) to (r,s) with
// unit east/north steps, exactly a 1/(r+s) fraction stay weakly below the
// line ry = sx, provided gcd(r,s) = 1.
inline Rational cycle_count(long long r, long long s) {
    if (r < 1 || s < 1) fail("BadEndpoint", "cycle-lemma counts need r, s >= 1");
    if (std::gcd(r, s) != 1) fail("NotCoprime", "cycle lemma needs gcd(r,s) = 1");
    Rational c = Rational(binomial(r + s, s)) / Rational(r + s);
    if (c.den() != 1)
        detail::internal_error("cycle-lemma count came out non-integral");
    return c;
}

// Exhaustive oracle for cycle_count: enumerate every east/north step
// sequence and test "weakly below ry = sx" by cross-multiplication.
inline Rational cycle_brute(long long r, long long s) {
    if (r < 1 || s < 1) fail("BadEndpoint", "cycle-lemma counts need r, s >= 1");
    if (std::gcd(r, s) != 1) fail("NotCoprime", "cycle lemma needs gcd(r,s) = 1");
    if (r + s > 22) fail("TooLarge", "exhaustive enumeration is limited to r+s <= 22");
    std::vector<int> seq(static_cast<std::size_t>(r), 0); // 0 = east, 1 = north
    seq.insert(seq.end(), static_cast<std::size_t>(s), 1);
    BigInt good = 0;
    do {
        long long x = 0, y = 0;
        bool below = true;
        for (int step : seq) {
            step ? ++y : ++x;
            if (r * y > s * x) {
                below = false;
                break;
            }
        }
        if (below) ++good;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return Rational(good);
}

} // namespace halfline
