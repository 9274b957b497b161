#pragma once
#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace halfline {

// Power series in t with LaurentPoly coefficients, truncated at a stated
// order: the value is known exactly modulo t^(order+1). Arithmetic between
// two series truncates to the smaller order.
class SeriesT {
public:
    explicit SeriesT(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) fail("BadOrder", "series order must be non-negative");
    }
    static SeriesT constant(const LaurentPoly& p, int order) {
        SeriesT s(order);
        s.c_[0] = p;
        return s;
    }
    static SeriesT one(int order) { return constant(LaurentPoly(1), order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const LaurentPoly& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, LaurentPoly p) { c_.at(static_cast<std::size_t>(n)) = std::move(p); }

    SeriesT truncate(int new_order) const {
        if (new_order > order()) fail("BadOrder", "cannot truncate to a higher order");
        SeriesT r(new_order);
        for (int n = 0; n <= new_order; ++n) r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)];
        return r;
    }

    SeriesT operator-() const {
        SeriesT r(order());
        for (int n = 0; n <= order(); ++n) r.c_[static_cast<std::size_t>(n)] = -coeff(n);
        return r;
    }

    friend SeriesT operator+(const SeriesT& a, const SeriesT& b) {
        SeriesT r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
        return r;
    }
    friend SeriesT operator-(const SeriesT& a, const SeriesT& b) {
        SeriesT r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
        return r;
    }
    // Cauchy product, truncated at the smaller order.
    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        SeriesT r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) {
            LaurentPoly acc;
            for (int k = 0; k <= n; ++k) {
                if (a.coeff(k).is_zero() || b.coeff(n - k).is_zero()) continue;
                acc += a.coeff(k) * b.coeff(n - k);
            }
            r.set_coeff(n, std::move(acc));
        }
        return r;
    }

    friend SeriesT operator*(const LaurentPoly& p, const SeriesT& a) {
        SeriesT r(a.order());
        for (int n = 0; n <= a.order(); ++n) r.set_coeff(n, p * a.coeff(n));
        return r;
    }
    friend SeriesT operator*(const Rational& s, const SeriesT& a) {
        SeriesT r(a.order());
        for (int n = 0; n <= a.order(); ++n) r.set_coeff(n, s * a.coeff(n));
        return r;
    }

    friend bool operator==(const SeriesT& a, const SeriesT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SeriesT& a, const SeriesT& b) { return !(a == b); }

    // Multiply by the exact monomial t^k. For k >= 0 the result is known to
    // a higher order; for k < 0 the low coefficients must vanish.
    SeriesT shift_t(int k) const {
        if (order() + k < 0) fail("BadOrder", "shift would empty the series");
        SeriesT r(order() + k);
        for (int n = 0; n <= order(); ++n) {
            if (n + k < 0) {
                if (!coeff(n).is_zero())
                    fail("NotDivisible", "series has a nonzero coefficient below the shift");
                continue;
            }
            r.set_coeff(n + k, coeff(n));
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }
    bool is_x_free() const {
        for (const auto& p : c_)
            if (!p.is_constant()) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int n = 0; n <= order(); ++n) {
            if (coeff(n).is_zero()) continue;
            std::string cs = coeff(n).str();
            if (coeff(n).term_count() > 1) cs = "(" + cs + ")";
            std::string term = cs;
            if (n > 0) {
                if (cs == "1") term = ""; else term = cs + "*";
                term += "t";
                if (n > 1) term += "^" + std::to_string(n);
            }
            if (!s.empty()) s += " + ";
            s += term;
        }
        if (s.empty()) s = "0";
        return s + " + O(t^" + std::to_string(order() + 1) + ")";
    }

private:
    std::vector<LaurentPoly> c_;
};

inline SeriesT series_arith(const SeriesT& a, const SeriesT& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: fail("BadOperation", std::string("unknown series operation '") + op + "'");
    }
}

// Least t-exponent with a nonzero coefficient; empty when the series is zero
// to its stated order (the +infinity case).
inline std::optional<int> valuation(const SeriesT& a) {
    for (int n = 0; n <= a.order(); ++n)
        if (!a.coeff(n).is_zero()) return n;
    return std::nullopt;
}

// Drop every negative x-exponent from every coefficient. Linear, idempotent.
inline SeriesT nonneg_part(const SeriesT& a) {
    SeriesT r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.set_coeff(n, a.coeff(n).nonneg_part());
    return r;
}

// Multiplicative inverse modulo t^(order+1). Requires [t^0] to be a nonzero
// monomial c*x^k (the only units among Laurent polynomials).
inline SeriesT series_inverse(const SeriesT& a) {
    auto mono = a.coeff(0).as_monomial();
    if (!mono) fail("NotInvertible", "[t^0] coefficient is not a nonzero monomial");
    LaurentPoly inv0 = LaurentPoly::monomial(-mono->first, Rational(1) / mono->second);
    SeriesT r(a.order());
    r.set_coeff(0, inv0);
    for (int n = 1; n <= a.order(); ++n) {
        LaurentPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (a.coeff(k).is_zero() || r.coeff(n - k).is_zero()) continue;
            acc += a.coeff(k) * r.coeff(n - k);
        }
        r.set_coeff(n, -(inv0 * acc));
    }
    return r;
}

namespace detail {
// Pad with zero coefficients up to the given order. Not part of the series
// contract (it fabricates precision); used only inside Newton iterations,
// where the padded tail is corrected by the next step.
inline SeriesT pad_to(const SeriesT& a, int order) {
    if (order <= a.order()) return a.truncate(order);
    SeriesT r(order);
    for (int n = 0; n <= a.order(); ++n) r.set_coeff(n, a.coeff(n));
    return r;
}
} // namespace detail

// Square root with [t^0] = 1 by Newton iteration Y <- (Y + A/Y)/2, order
// doubling each step. Only defined for x-free series.
inline SeriesT series_sqrt(const SeriesT& a) {
    if (!a.is_x_free())
        throw std::invalid_argument("series_sqrt: coefficients must be x-free");
    if (a.coeff(0) != LaurentPoly(1)) fail("BadConstantTerm", "[t^0] must be 1");
    const Rational half(BigInt(1), BigInt(2));
    SeriesT y = SeriesT::one(0);
    while (y.order() < a.order()) {
        int w = std::min(2 * y.order() + 1, a.order());
        SeriesT yw = detail::pad_to(y, w);
        y = half * (yw + a.truncate(w) * series_inverse(yw));
    }
    return y;
}

} // namespace halfline
