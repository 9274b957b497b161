#pragma once
#include "laurent_series.hpp"
#include "tripoly.hpp"
#include "walks.hpp"

// Closed-form solutions of the kernel equation for the simple walk
// (steps -1 and +1). Everything here is specific to that step set; general
// step sets are the walk_engine's business.
namespace halfline {

// Kernel polynomial and its two roots in t. The kernel x(1-t(x+1/x))
// clears to -t*x^2 + x - t; its roots as series in t are x0 (a power
// series of valuation 1) and x1 = 1/x0 (a Laurent series of valuation -1).
struct KernelData {
    TriPoly K;
    SeriesT x0;        // stored to order N+1 so /t and products keep order N
    LaurentSeriesT x1; // valuation -1, stored to order N+1
    int order;

    KernelData(TriPoly k, SeriesT root0, LaurentSeriesT root1, int n)
        : K(std::move(k)), x0(std::move(root0)), x1(std::move(root1)), order(n) {}
};

inline TriPoly kernel_poly() {
    TriPoly k;
    k.add_term({2, 1, 0}, Rational(-1));
    k.add_term({1, 0, 0}, Rational(1));
    k.add_term({0, 1, 0}, Rational(-1));
    return k;
}

// x0 = (1 - sqrt(1-4t^2))/(2t), the root that lives in Q[[t]]; x1 as its
// exact reciprocal. The division by 2t is a valuation shift guarded by
// hard assertions that the t^0 and odd-order coefficients cancel.
inline KernelData kernel_roots(int n) {
    if (n < 1) fail("BadOrder", "kernel roots need order >= 1");
    const int work = n + 4;
    SeriesT radicand = SeriesT::one(work);
    radicand.set_coeff(2, LaurentPoly(-4));
    SeriesT num = SeriesT::one(work) - series_sqrt(radicand); // 1 - sqrt(1-4t^2)
    for (int m = 0; m <= work; ++m) {
        bool must_vanish = (m == 0) || (m % 2 == 1);
        if (must_vanish && !num.coeff(m).is_zero())
            detail::internal_error("1 - sqrt(1-4t^2) has an unexpected coefficient at t^" +
                                   std::to_string(m));
    }
    SeriesT x0 = (Rational(BigInt(1), BigInt(2)) * num).shift_t(-1); // order work-1
    LaurentSeriesT x1 = LaurentSeriesT::from_series(x0).reciprocal(); // order work-3 = n+1
    return KernelData(kernel_poly(), x0.truncate(n + 1), std::move(x1), n);
}

struct KernelSolution {
    SeriesT F0; // F(0;t), the excursion series
    SeriesT F;  // F(x;t)
};

// 1 - t(x + 1/x) as a series of the given order.
inline SeriesT one_minus_t_kernel(int n) {
    SeriesT d = SeriesT::one(n);
    if (n >= 1) d.set_coeff(1, LaurentPoly::monomial(1, Rational(-1)) +
                                   LaurentPoly::monomial(-1, Rational(-1)));
    return d;
}

// Classical kernel method: F0 = x0/t, F = (1 - x0/x) / (1 - t(x+1/x)).
inline KernelSolution classical_kernel(int n) {
    KernelData kd = kernel_roots(std::max(n, 1));
    SeriesT f0 = kd.x0.shift_t(-1).truncate(n);
    SeriesT numer = SeriesT::one(n) - LaurentPoly::x(-1) * kd.x0.truncate(n);
    SeriesT f = numer * series_inverse(one_minus_t_kernel(n));
    if (nonneg_part(f) != f)
        detail::internal_error("kernel-method series left Q[x][[t]]");
    return {std::move(f0), std::move(f)};
}

// Wiener-Hopf form: F = -1/(t(x-x1)) = (1/(t*x1)) * sum_k (x/x1)^k.
// Term k of the geometric sum has t-valuation k, so k stops at the order.
inline SeriesT wiener_hopf(int n) {
    KernelData kd = kernel_roots(std::max(n, 1));
    SeriesT front = kd.x1.shift_t(1).reciprocal().to_series().truncate(n); // 1/(t*x1)
    SeriesT ratio = LaurentPoly::x(1) * kd.x1.reciprocal().to_series().truncate(n); // x/x1
    SeriesT geom = SeriesT::one(n);
    SeriesT term = SeriesT::one(n);
    for (int k = 1; k <= n; ++k) {
        term = term * ratio;
        geom = geom + term;
    }
    return front * geom;
}

// Orbit sum: F = [x>=] (1 - 1/x^2) / (1 - t(x+1/x)).
inline SeriesT orbit_sum(int n) {
    SeriesT inv = series_inverse(one_minus_t_kernel(n));
    LaurentPoly front = LaurentPoly(1) - LaurentPoly::x(-2);
    return nonneg_part(front * inv);
}

// Excursion count by coefficient extraction:
// f(0;n) = (1/(n+1)) * [t^-1] (t + 1/t)^(n+1); equals C(n, n/2)/(n/2+1)
// for even n and 0 for odd n (cross-checked internally).
inline Rational lagrange_f0(long long n) {
    if (n < 0) fail("BadOrder", "walk length must be non-negative");
    LaurentPoly base = LaurentPoly::x(1) + LaurentPoly::x(-1); // exponent variable is t here
    LaurentPoly p(1);
    LaurentPoly b = base;
    for (long long e = n + 1; e > 0; e >>= 1) {
        if (e & 1) p *= b;
        if (e > 1) b *= b;
    }
    Rational extracted = p.coeff(-1) / Rational(n + 1);
    Rational direct = (n % 2 == 0)
                          ? Rational(binomial(n, n / 2)) / Rational(n / 2 + 1)
                          : Rational(0);
    if (extracted != direct)
        detail::internal_error("coefficient-extraction and binomial forms disagree");
    return extracted;
}

// Residual of the invariant identity 1 - F0 + t^2*F0^2 for an arbitrary
// candidate series (used by perturbation tests and the self-check battery).
inline SeriesT invariant_residual(const SeriesT& f0) {
    int n = f0.order();
    return SeriesT::one(n) - f0 + (f0 * f0).shift_t(2).truncate(n);
}

// The same residual evaluated at the true excursion series; zero to order.
inline SeriesT invariant_identity_check(int n) {
    SeriesT f0 = classical_kernel(n).F0;
    return invariant_residual(f0);
}

struct WHFactors {
    SeriesT Fminus; // only non-positive x-exponents, [x^0] = 1
    SeriesT F0;     // x-free
    SeriesT Fplus;  // only non-negative x-exponents, [x^0] = 1
};

// Combinatorial factorization of the unconstrained-walk series:
// 1/(1-t(x+1/x)) = Fminus * F0 * Fplus with
// Fminus = 1/(1 - x0/x), F0 = 1/(t*x1), Fplus = 1/(1 - x/x1).
inline WHFactors wh_factorize(int n) {
    KernelData kd = kernel_roots(std::max(n, 1));
    SeriesT x0 = kd.x0.truncate(n);
    SeriesT invx1 = kd.x1.reciprocal().to_series().truncate(n);
    auto geometric = [n](const SeriesT& ratio) {
        SeriesT acc = SeriesT::one(n);
        SeriesT term = SeriesT::one(n);
        for (int k = 1; k <= n; ++k) {
            term = term * ratio;
            acc = acc + term;
        }
        return acc;
    };
    WHFactors f{
        geometric(LaurentPoly::x(-1) * x0),
        kd.x1.shift_t(1).reciprocal().to_series().truncate(n),
        geometric(LaurentPoly::x(1) * invx1),
    };
    return f;
}

} // namespace halfline
