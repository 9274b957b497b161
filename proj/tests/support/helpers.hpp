#pragma once
#include <initializer_list>
#include <random>
#include <utility>

#include <halfline/laurent_series.hpp>
#include <halfline/series.hpp>

// Shared test helpers: terse constructors for expected values and a small
// fixed-seed generator for property-style tests.
namespace th {

using halfline::BigInt;
using halfline::LaurentPoly;
using halfline::LaurentSeriesT;
using halfline::Rational;
using halfline::SeriesT;

inline LaurentPoly L(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
    return p;
}

inline SeriesT S(std::initializer_list<LaurentPoly> coeffs) {
    SeriesT s(static_cast<int>(coeffs.size()) - 1);
    int n = 0;
    for (const auto& p : coeffs) s.set_coeff(n++, p);
    return s;
}

// x-free series from integer coefficients.
inline SeriesT SC(std::initializer_list<long long> coeffs) {
    SeriesT s(static_cast<int>(coeffs.size()) - 1);
    int n = 0;
    for (long long c : coeffs) s.set_coeff(n++, LaurentPoly(c));
    return s;
}

// floor(pi * 10^digits) by Machin's formula in scaled-integer arithmetic:
// pi = 16 atan(1/5) - 4 atan(1/239). Guard digits absorb truncation error.
inline BigInt pi_scaled(int digits) {
    const int guard = 15;
    const BigInt one = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits + guard));
    auto atan_inv = [&one](long long x) {
        BigInt sum = 0, power = one / x;
        const long long x2 = x * x;
        for (long long k = 0; power != 0; ++k) {
            BigInt term = power / (2 * k + 1);
            sum += (k % 2 == 0) ? term : -term;
            power /= x2;
        }
        return sum;
    };
    BigInt pi = 16 * atan_inv(5) - 4 * atan_inv(239);
    return pi / boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(guard));
}

// floor((1/sqrt(pi)) * 10^digits), accurate to an ulp or two:
// 1/sqrt(pi) * 10^d = sqrt(10^(2d+g) / (pi * 10^g)).
inline BigInt inv_sqrt_pi_scaled(int digits) {
    const int guard = digits + 10;
    BigInt num = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(2 * digits + guard));
    return boost::multiprecision::sqrt(num / pi_scaled(guard));
}

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    long long int_in(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    }
    Rational rat(long long num_max = 20, long long den_max = 8) {
        return Rational(BigInt(int_in(-num_max, num_max)), BigInt(int_in(1, den_max)));
    }
    LaurentPoly laurent(int emin = -3, int emax = 3, int terms = 3) {
        LaurentPoly p;
        for (int i = 0; i < terms; ++i) p.add_term(static_cast<int>(int_in(emin, emax)), rat());
        return p;
    }
    SeriesT series(int order, int emin = -3, int emax = 3) {
        SeriesT s(order);
        for (int n = 0; n <= order; ++n) s.set_coeff(n, laurent(emin, emax));
        return s;
    }
};

} // namespace th
