#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "dfinite.hpp"

// Growth of recurrence solutions: exact Poincare-type expansions
// phi^n * n^alpha * (1 + c_1/n + ... + c_K/n^K) for recurrences whose
// characteristic roots are simple and rational, plus high-precision
// estimation of the multiplicative constant from sequence data.
namespace halfline {

struct AsympExpansion {
    Rational phi;            // exponential growth base
    Rational alpha;          // polynomial growth exponent
    std::vector<Rational> c; // correction coefficients c_1..c_K

    int depth() const { return static_cast<int>(c.size()); }
    friend bool operator==(const AsympExpansion&, const AsympExpansion&) = default;
};

namespace detail {

inline Rational pow_rat(const Rational& b, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Coefficients of (1 + j/n)^beta as a series in 1/n, truncated at order m_max:
// v[m] = binom(beta, m) * j^m.
inline std::vector<Rational> shifted_power(const Rational& beta, int j, int m_max) {
    std::vector<Rational> v(static_cast<std::size_t>(m_max) + 1);
    v[0] = Rational(1);
    Rational binom(1);
    Rational jp(1);
    for (int m = 1; m <= m_max; ++m) {
        binom *= (beta - Rational(m - 1)) / Rational(m);
        jp *= Rational(j);
        v[static_cast<std::size_t>(m)] = binom * jp;
    }
    return v;
}

// The formal residual of substituting phi^n n^alpha (1 + sum c_k n^-k) into
// the recurrence, as a series in 1/n relative to the top order n^(D+alpha):
// out[m] is the coefficient of n^(D-m+alpha) * phi^n, for m = 0..m_max.
inline std::vector<Rational> formal_residual(const PRec& rec, const Rational& phi,
                                             const Rational& alpha,
                                             const std::vector<Rational>& cs, int m_max) {
    const int r = rec.order();
    int bigd = 0;
    for (const auto& q : rec.coeffs) bigd = std::max(bigd, q.deg());

    std::vector<Rational> out(static_cast<std::size_t>(m_max) + 1);
    for (int i = 0; i <= r; ++i) {
        const UniPoly& qi = rec.coeffs[static_cast<std::size_t>(i)];
        if (qi.is_zero()) continue;
        const int j = r - i;
        // W = (1+j/n)^alpha + sum_k c_k n^-k (1+j/n)^(alpha-k)
        std::vector<Rational> w = shifted_power(alpha, j, m_max);
        for (int k = 1; k <= static_cast<int>(cs.size()) && k <= m_max; ++k) {
            std::vector<Rational> part = shifted_power(alpha - Rational(k), j, m_max - k);
            for (int m = k; m <= m_max; ++m)
                w[static_cast<std::size_t>(m)] +=
                    cs[static_cast<std::size_t>(k - 1)] * part[static_cast<std::size_t>(m - k)];
        }
        const Rational scale = pow_rat(phi, j);
        // q_i(n) = n^D * sum_a q_i[D-m] n^-m; convolve with W.
        for (int m1 = 0; m1 <= m_max && m1 <= bigd; ++m1) {
            Rational qc = qi.coeff(bigd - m1);
            if (qc.is_zero()) continue;
            for (int m2 = 0; m1 + m2 <= m_max; ++m2)
                out[static_cast<std::size_t>(m1 + m2)] +=
                    scale * qc * w[static_cast<std::size_t>(m2)];
        }
    }
    return out;
}

// All rational roots of a polynomial with multiplicity flags, by the
// rational-root test on the primitive integer form. Divisor enumeration is
// by trial division; characteristic polynomials here are tiny.
struct RootScan {
    std::vector<Rational> simple;
    bool repeated = false;
    UniPoly leftover; // nonconstant iff some root is irrational
};

inline std::vector<BigInt> positive_divisors(BigInt v) {
    if (v < 0) v = -v;
    std::vector<BigInt> ds;
    for (BigInt d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        ds.push_back(d);
        if (d * d != v) ds.push_back(v / d);
    }
    return ds;
}

inline RootScan rational_roots(const UniPoly& poly) {
    RootScan scan;
    UniPoly work = poly.primitive();
    bool progress = true;
    while (work.deg() >= 1 && progress) {
        progress = false;
        int low = 0;
        while (work.coeff(low).is_zero()) ++low;
        if (low > 0) { // root 0 with multiplicity low
            scan.simple.push_back(Rational(0));
            if (low > 1) scan.repeated = true;
            UniPoly shifted;
            for (int e = low; e <= work.deg(); ++e) shifted.set_coeff(e - low, work.coeff(e));
            work = shifted;
            progress = true;
            continue;
        }
        for (const BigInt& p : positive_divisors(work.coeff(0).num()))
            for (const BigInt& q : positive_divisors(work.leading().num())) {
                for (int sign = 1; sign >= -1; sign -= 2) {
                    Rational cand(sign > 0 ? p : BigInt(-p), q);
                    if (!work.eval(cand).is_zero()) continue;
                    UniPoly lin;
                    lin.set_coeff(1, Rational(1));
                    lin.set_coeff(0, -cand);
                    work = UniPoly::divmod(work, lin).first;
                    if (work.eval(cand).is_zero()) scan.repeated = true;
                    scan.simple.push_back(cand);
                    progress = true;
                }
                if (progress) break;
            }
    }
    scan.leftover = work;
    return scan;
}

} // namespace detail

// Residual coefficients of an expansion substituted into its recurrence,
// relative orders 0..depth. All-zero means the expansion formally satisfies
// the recurrence through that depth.
inline std::vector<Rational> expansion_residual(const PRec& rec, const AsympExpansion& e,
                                                int depth) {
    if (depth < 0) fail("BadOrder", "residual depth must be nonnegative");
    return detail::formal_residual(rec, e.phi, e.alpha, e.c, depth);
}

// One expansion per characteristic root, dominant growth first. The
// restricted ansatz covers simple rational roots with integer 1/n-orders;
// everything outside it is a named refusal, never an approximation.
inline std::vector<AsympExpansion> poincare_expansion(const PRec& rec, int depth_k) {
    if (depth_k < 0) fail("BadOrder", "expansion depth must be nonnegative");
    const int r = rec.order();
    if (r < 1 || rec.coeffs.front().is_zero())
        fail("BadRecurrence", "recurrence needs order >= 1 and a nonzero leading coefficient");

    int bigd = 0;
    for (const auto& q : rec.coeffs) bigd = std::max(bigd, q.deg());
    UniPoly chi; // characteristic polynomial sum_i a_i u^(r-i)
    for (int i = 0; i <= r; ++i)
        chi.set_coeff(r - i, rec.coeffs[static_cast<std::size_t>(i)].coeff(bigd));
    if (chi.coeff(r).is_zero() || chi.coeff(0).is_zero())
        fail("RamifiedCase", "top-degree coefficients vanish at an end; growth is not of the form "
                             "phi^n * n^alpha");

    detail::RootScan scan = detail::rational_roots(chi);
    if (scan.repeated) fail("RepeatedRoot", "characteristic root with multiplicity > 1");
    if (scan.leftover.deg() >= 1)
        fail("IrrationalRoot", "characteristic factor without rational roots: " +
                                   scan.leftover.str("u"));

    std::sort(scan.simple.begin(), scan.simple.end(), [](const Rational& a, const Rational& b) {
        Rational aa = a.abs(), bb = b.abs();
        if (aa != bb) return bb < aa;
        return b < a;
    });

    const UniPoly dchi = chi.derivative();
    const int m_max = depth_k + 2; // two orders of safety beyond the last solved equation
    std::vector<AsympExpansion> out;
    for (const Rational& phi : scan.simple) {
        // Order n^(D-1): B + alpha * phi * chi'(phi) = 0.
        Rational b(0);
        for (int i = 0; i <= r; ++i)
            b += rec.coeffs[static_cast<std::size_t>(i)].coeff(bigd - 1) *
                 detail::pow_rat(phi, r - i);
        const Rational aprime = phi * dchi.eval(phi);
        if (aprime.is_zero()) detail::internal_error("simple root with vanishing indicial slope");
        AsympExpansion e{phi, -b / aprime, {}};

        // c_s enters the residual first at relative order s+1, linearly;
        // solve each order by evaluating the affine map at two points.
        for (int s = 1; s <= depth_k; ++s) {
            std::vector<Rational> with_zero = e.c;
            with_zero.push_back(Rational(0));
            std::vector<Rational> with_one = e.c;
            with_one.push_back(Rational(1));
            Rational r0 = detail::formal_residual(rec, e.phi, e.alpha, with_zero,
                                                  s + 1)[static_cast<std::size_t>(s) + 1];
            Rational r1 = detail::formal_residual(rec, e.phi, e.alpha, with_one,
                                                  s + 1)[static_cast<std::size_t>(s) + 1];
            if (r0 == r1) detail::internal_error("correction coefficient not determined");
            e.c.push_back(r0 / (r0 - r1));
        }

        std::vector<Rational> residual = detail::formal_residual(rec, e.phi, e.alpha, e.c, m_max);
        for (int m = 0; m <= depth_k + 1; ++m)
            if (!residual[static_cast<std::size_t>(m)].is_zero())
                detail::internal_error("expansion residual does not vanish");
        out.push_back(std::move(e));
    }
    return out;
}

namespace detail {

// floor of a rational number (toward minus infinity).
inline BigInt floor_rat(const Rational& x) {
    BigInt q = x.num() / x.den();
    if (x.num() < 0 && q * x.den() != x.num()) --q;
    return q;
}

// floor(x^(1/q)) for x >= 0 by integer Newton iteration.
inline BigInt iroot_floor(const BigInt& x, int q) {
    if (x < 0) internal_error("integer root of a negative number");
    if (q < 1) internal_error("integer root with exponent < 1");
    if (q == 1 || x == 0 || x == 1) return x;
    const long long bits = static_cast<long long>(boost::multiprecision::msb(x)) + 1;
    BigInt y = BigInt(1) << static_cast<unsigned>(bits / q + 1);
    for (;;) {
        BigInt yq1 = boost::multiprecision::pow(y, static_cast<unsigned>(q - 1));
        BigInt next = ((q - 1) * y + x / yq1) / q;
        if (next >= y) break;
        y = next;
    }
    while (boost::multiprecision::pow(y, static_cast<unsigned>(q)) > x) --y;
    return y;
}

// Fixed-point decimal rendering of scaled = round-toward-zero(v * 10^digits).
inline std::string decimal_string(const BigInt& scaled, int digits) {
    BigInt a = scaled < 0 ? BigInt(-scaled) : scaled;
    BigInt tenp = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    std::string frac = BigInt(a % tenp).str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    return (scaled < 0 ? "-" : "") + BigInt(a / tenp).str() + (digits > 0 ? "." + frac : "");
}

} // namespace detail

// A constant estimate: the value of values[n] / (phi^n n^alpha (1 + ...))
// at the last evaluation point, with the spread over all points as an
// empirical error bracket. Exact rational arithmetic throughout; the only
// rounding is the final truncation to the requested number of digits.
struct ConstantEstimate {
    std::string estimate;  // decimal at the last point
    std::string bracket;   // decimal spread max - min over the points
    BigInt scaled;         // trunc(value * 10^precision) at the last point
    BigInt scaled_spread;  // max - min of the per-point scaled values
    int precision = 0;
};

inline ConstantEstimate estimate_constant(const std::vector<Rational>& values,
                                          const AsympExpansion& e,
                                          const std::vector<long long>& n_points,
                                          int precision = 50) {
    if (e.phi <= Rational(0)) fail("NonPositivePhi", "growth base must be positive, got " + e.phi.str());
    if (precision < 1) fail("BadOrder", "precision must be at least one digit");
    if (n_points.empty()) fail("IndexOutOfRange", "no evaluation points supplied");

    const BigInt tenp = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(precision));
    const int q = static_cast<int>(e.alpha.den());
    const BigInt p = e.alpha.num();

    ConstantEstimate out;
    out.precision = precision;
    bool first = true;
    BigInt lo(0), hi(0);
    for (long long n : n_points) {
        if (n < 1 || n >= static_cast<long long>(values.size()))
            fail("IndexOutOfRange", "no value at index " + std::to_string(n));
        Rational corr(1);
        Rational invn(BigInt(1), BigInt(n));
        Rational invnk(1);
        for (const Rational& ck : e.c) {
            invnk *= invn;
            corr += ck * invnk;
        }
        if (corr.is_zero())
            fail("ZeroDenominator", "correction factor vanishes at n = " + std::to_string(n));
        // ratio = values[n] / (phi^n * corr); value = ratio * n^(-p/q).
        Rational ratio = values[static_cast<std::size_t>(n)] /
                         (detail::pow_rat(e.phi, static_cast<int>(n)) * corr);
        const bool neg = ratio < Rational(0);
        Rational x = (neg ? -ratio : ratio) * Rational(tenp);
        // value * 10^P = (x^q * n^-p)^(1/q)
        Rational xq(1);
        for (int i = 0; i < q; ++i) xq *= x;
        BigInt np = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(p < 0 ? -p : p));
        Rational inner = p >= 0 ? xq / Rational(np) : xq * Rational(np);
        BigInt scaled = detail::iroot_floor(detail::floor_rat(inner), q);
        if (neg) scaled = -scaled;

        out.scaled = scaled;
        if (first || scaled < lo) lo = scaled;
        if (first || scaled > hi) hi = scaled;
        first = false;
    }
    out.scaled_spread = hi - lo;
    out.estimate = detail::decimal_string(out.scaled, precision);
    out.bracket = detail::decimal_string(out.scaled_spread, precision);
    return out;
}

} // namespace halfline
