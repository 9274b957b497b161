#pragma once
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

// Dense univariate polynomials over the rationals and the fraction field
// they generate. The variable is abstract; callers print it as n, t, or u.
namespace halfline {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long long c) { set_coeff(0, Rational(c)); }
    UniPoly(const Rational& c) { set_coeff(0, c); }

    static UniPoly var() { return monomial(1, Rational(1)); }
    static UniPoly monomial(int e, const Rational& c) {
        UniPoly p;
        p.set_coeff(e, c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; } // -1 when zero
    Rational coeff(int e) const {
        if (e < 0 || e >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(e)];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    void set_coeff(int e, const Rational& v) {
        if (e < 0) fail("BadExponent", "negative exponent in a polynomial");
        if (e >= static_cast<int>(c_.size())) {
            if (v.is_zero()) return;
            c_.resize(static_cast<std::size_t>(e) + 1, Rational(0));
        }
        c_[static_cast<std::size_t>(e)] = v;
        trim();
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        UniPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        if (s.is_zero()) return UniPoly();
        UniPoly r = p;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const {
        UniPoly r;
        for (int e = 1; e <= deg(); ++e)
            r.set_coeff(e - 1, Rational(e) * c_[static_cast<std::size_t>(e)]);
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // p(a*var + b), used for index substitutions like n -> 2n.
    UniPoly compose_linear(const Rational& a, const Rational& b) const {
        UniPoly arg;
        arg.set_coeff(1, a);
        arg.set_coeff(0, b);
        UniPoly r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * arg + UniPoly(c_[i]);
        return r;
    }

    // Quotient and remainder over the rational coefficient field.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
        UniPoly q, r = a;
        while (!r.is_zero() && r.deg() >= b.deg()) {
            int e = r.deg() - b.deg();
            Rational c = r.leading() / b.leading();
            q.set_coeff(e, q.coeff(e) + c);
            UniPoly sub = c * b;
            for (int i = 0; i <= b.deg(); ++i)
                r.set_coeff(e + i, r.coeff(e + i) - sub.coeff(i));
        }
        return {std::move(q), std::move(r)};
    }

    // Rational content gcd(numerators)/lcm(denominators); zero for zero.
    Rational content() const {
        BigInt g = 0, l = 1;
        for (const auto& x : c_) {
            if (x.is_zero()) continue;
            g = boost::multiprecision::gcd(g, x.num() < 0 ? BigInt(-x.num()) : x.num());
            l = boost::multiprecision::lcm(l, x.den());
        }
        return Rational(g, l);
    }

    // Integer coefficients, content 1, positive leading coefficient.
    UniPoly primitive() const {
        if (is_zero()) return UniPoly();
        Rational c = content();
        if (leading() < Rational(0)) c = -c;
        UniPoly r = *this;
        for (auto& x : r.c_) x /= c;
        return r;
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string s;
        for (int e = deg(); e >= 0; --e) {
            Rational c = coeff(e);
            if (c.is_zero()) continue;
            if (!s.empty()) s += c < Rational(0) ? " - " : " + ";
            else if (c < Rational(0)) s += "-";
            Rational a = c < Rational(0) ? -c : c;
            bool unit = a == Rational(1);
            if (!unit || e == 0) s += a.str();
            if (e > 0) {
                if (!unit) s += "*";
                s += var;
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    std::vector<Rational> c_; // ascending exponents, no trailing zeros

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).second;
        a = std::move(b);
        b = r.primitive(); // keeps Euclid's remainders small
    }
    return a.primitive();
}

// Rational function num/den, reduced, with a primitive positive-leading
// denominator (the canonical form folds all scaling into the numerator).
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(UniPoly n) : num_(std::move(n)), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) fail("DivisionByZero", "rational-function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    std::string str(const std::string& var) const {
        if (den_ == UniPoly(1)) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    UniPoly num_, den_;

    void normalize() {
        if (den_.is_zero()) fail("DivisionByZero", "zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        UniPoly g = poly_gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = UniPoly::divmod(num_, g).first;
            den_ = UniPoly::divmod(den_, g).first;
        }
        Rational c = den_.content();
        if (den_.leading() < Rational(0)) c = -c;
        Rational inv = Rational(1) / c;
        num_ = inv * num_;
        den_ = inv * den_;
    }
};

} // namespace halfline
