#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rational.hpp"

namespace halfline {

// Laurent polynomial in x over the rationals: finite support, exponents of
// either sign. Invariant: no zero coefficient is ever stored, so the degree
// bounds are simply the first and last keys of the (ordered) map.
class LaurentPoly {
public:
    using Map = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long long c) { add_term(0, Rational(c)); }
    LaurentPoly(const Rational& c) { add_term(0, c); }

    static LaurentPoly monomial(int exp, Rational c) {
        LaurentPoly p;
        p.add_term(exp, std::move(c));
        return p;
    }
    static LaurentPoly x(int exp = 1) { return monomial(exp, Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> min_deg() const {
        if (c_.empty()) return std::nullopt;
        return c_.begin()->first;
    }
    std::optional<int> max_deg() const {
        if (c_.empty()) return std::nullopt;
        return c_.rbegin()->first;
    }

    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void add_term(int e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = c_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    const Map& terms() const { return c_; }
    std::size_t term_count() const { return c_.size(); }

    // Single term c*x^k? Returns (k, c) if so.
    std::optional<std::pair<int, Rational>> as_monomial() const {
        if (c_.size() != 1) return std::nullopt;
        return std::make_pair(c_.begin()->first, c_.begin()->second);
    }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : p.c_) r.c_.emplace(e, s * c);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Multiply by x^k.
    LaurentPoly shift_x(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
        return r;
    }

    // Substitute x -> 1/x (negate every exponent).
    LaurentPoly mirror() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
        return r;
    }

    // Drop every term with a negative exponent.
    LaurentPoly nonneg_part() const {
        LaurentPoly r;
        for (auto it = c_.lower_bound(0); it != c_.end(); ++it) r.c_.emplace(it->first, it->second);
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : c_) {
            std::string mag = c.abs().str();
            std::string term;
            if (e == 0) {
                term = mag;
            } else {
                term = (mag == "1") ? "" : mag + "*";
                term += var;
                if (e != 1) term += "^" + std::to_string(e);
            }
            if (s.empty()) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            s += term;
        }
        return s;
    }

private:
    Map c_;
};

inline LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: fail("BadOperation", std::string("unknown laurent operation '") + op + "'");
    }
}

} // namespace halfline
