#pragma once
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "series.hpp"

namespace halfline {

// Monomial x^i * t^j * Y^k. Ordered (k, j, i)-lexicographically; the leading
// term of a polynomial is the greatest monomial under this order.
struct TriMono {
    int x = 0, t = 0, y = 0;
    friend bool operator==(const TriMono&, const TriMono&) = default;
};
struct TriMonoLess {
    bool operator()(const TriMono& a, const TriMono& b) const {
        return std::tie(a.y, a.t, a.x) < std::tie(b.y, b.t, b.x);
    }
};

// Exact polynomial in (x, t, Y): kernel polynomials, guessed minimal
// polynomials, annihilator certificates. No zero coefficients stored.
class TriPoly {
public:
    using Map = std::map<TriMono, Rational, TriMonoLess>;

    TriPoly() = default;
    TriPoly(long long c) { add_term({0, 0, 0}, Rational(c)); }
    TriPoly(const Rational& c) { add_term({0, 0, 0}, c); }
    static TriPoly monomial(TriMono m, Rational c) {
        TriPoly p;
        p.add_term(m, std::move(c));
        return p;
    }
    static TriPoly var_x(int e = 1) { return monomial({e, 0, 0}, Rational(1)); }
    static TriPoly var_t(int e = 1) { return monomial({0, e, 0}, Rational(1)); }
    static TriPoly var_y(int e = 1) { return monomial({0, 0, e}, Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    const Map& terms() const { return c_; }

    void add_term(TriMono m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = c_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Rational coeff(TriMono m) const {
        auto it = c_.find(m);
        return it == c_.end() ? Rational(0) : it->second;
    }

    int deg_x() const { return deg_of([](const TriMono& m) { return m.x; }); }
    int deg_t() const { return deg_of([](const TriMono& m) { return m.t; }); }
    int deg_y() const { return deg_of([](const TriMono& m) { return m.y; }); }

    TriPoly operator-() const {
        TriPoly r;
        for (const auto& [m, c] : c_) r.c_.emplace(m, -c);
        return r;
    }
    TriPoly& operator+=(const TriPoly& o) {
        for (const auto& [m, c] : o.c_) add_term(m, c);
        return *this;
    }
    TriPoly& operator-=(const TriPoly& o) {
        for (const auto& [m, c] : o.c_) add_term(m, -c);
        return *this;
    }
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (const auto& [ma, ca] : a.c_)
            for (const auto& [mb, cb] : b.c_)
                r.add_term({ma.x + mb.x, ma.t + mb.t, ma.y + mb.y}, ca * cb);
        return r;
    }
    TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }
    friend TriPoly operator*(const Rational& s, const TriPoly& p) {
        TriPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : p.c_) r.c_.emplace(m, s * c);
        return r;
    }
    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    TriPoly pow(int e) const {
        TriPoly acc(1), b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= b;
            if (e > 1) b *= b;
        }
        return acc;
    }

    TriPoly derivative_y() const {
        TriPoly r;
        for (const auto& [m, c] : c_)
            if (m.y > 0) r.add_term({m.x, m.t, m.y - 1}, Rational(m.y) * c);
        return r;
    }
    TriPoly derivative_t() const {
        TriPoly r;
        for (const auto& [m, c] : c_)
            if (m.t > 0) r.add_term({m.x, m.t - 1, m.y}, Rational(m.t) * c);
        return r;
    }

    TriPoly subst_x_zero() const {
        TriPoly r;
        for (const auto& [m, c] : c_)
            if (m.x == 0) r.c_.emplace(m, c);
        return r;
    }

    // Coefficients of Y^0..Y^deg, each free of Y.
    std::vector<TriPoly> y_coeffs() const {
        std::vector<TriPoly> out(static_cast<std::size_t>(deg_y()) + 1);
        for (const auto& [m, c] : c_)
            out[static_cast<std::size_t>(m.y)].add_term({m.x, m.t, 0}, c);
        return out;
    }
    static TriPoly from_y_coeffs(const std::vector<TriPoly>& cs) {
        TriPoly r;
        for (int k = 0; k < static_cast<int>(cs.size()); ++k)
            for (const auto& [m, c] : cs[static_cast<std::size_t>(k)].c_)
                r.add_term({m.x, m.t, m.y + k}, c);
        return r;
    }

    // Substitute Y := A (truncated series); x^i t^j become coefficient shifts.
    SeriesT eval_y(const SeriesT& a) const {
        auto cs = y_coeffs();
        SeriesT r(a.order()); // Horner in Y
        for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k)
            r = r * a + y_free_to_series(cs[static_cast<std::size_t>(k)], a.order());
        return r;
    }

    // Canonical form: integer content removed, leading ((k,j,i)-lex greatest)
    // coefficient positive.
    TriPoly normalized() const {
        if (c_.empty()) return *this;
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : c_) {
            num_gcd = boost::multiprecision::gcd(num_gcd, c.num());
            den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
        }
        Rational scale(den_lcm, num_gcd);
        if (c_.rbegin()->second.sign() < 0) scale = -scale;
        return scale * *this;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        // print in descending (k, j, i) order so the leading term comes first
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string term;
            auto app = [&term](const std::string& v, int e) {
                if (e == 0) return;
                if (!term.empty()) term += "*";
                term += v;
                if (e != 1) term += "^" + std::to_string(e);
            };
            app("x", m.x);
            app("t", m.t);
            app("Y", m.y);
            std::string mag = c.abs().str();
            if (term.empty()) term = mag;
            else if (mag != "1") term = mag + "*" + term;
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
    template <typename Proj>
    int deg_of(Proj p) const {
        int d = 0;
        for (const auto& [m, c] : c_) d = std::max(d, p(m));
        return d;
    }

    static SeriesT y_free_to_series(const TriPoly& p, int order) {
        SeriesT r(order);
        for (const auto& [m, c] : p.c_) {
            if (m.t > order) continue;
            LaurentPoly cur = r.coeff(m.t);
            cur.add_term(m.x, c);
            r.set_coeff(m.t, std::move(cur));
        }
        return r;
    }

    Map c_;
};

// Remainder of the pseudo-division of a by b with respect to Y:
// lc_Y(b)^q * a = Q*b + R with deg_Y(R) < deg_Y(b). Exact, division-free.
inline TriPoly pseudo_rem_y(const TriPoly& a, const TriPoly& b) {
    if (b.is_zero()) fail("DivisionByZero", "pseudo-division by zero polynomial");
    int db = b.deg_y();
    auto bc = b.y_coeffs();
    TriPoly lcb = bc[static_cast<std::size_t>(db)];
    TriPoly r = a;
    while (!r.is_zero() && r.deg_y() >= db) {
        auto rc = r.y_coeffs();
        int dr = r.deg_y();
        TriPoly lcr = rc[static_cast<std::size_t>(dr)];
        // r <- lcb * r - lcr * Y^(dr-db) * b
        r = lcb * r - lcr * TriPoly::var_y(dr - db) * b;
        if (!r.is_zero() && r.deg_y() >= dr)
            throw std::logic_error("pseudo_rem_y failed to reduce the degree");
    }
    return r;
}

// Does b divide a in Q(x,t)[Y]? (Pseudo-remainder zero; for Y-primitive b
// this is ordinary divisibility of polynomials.)
inline bool divides_y(const TriPoly& b, const TriPoly& a) {
    return pseudo_rem_y(a, b).is_zero();
}

} // namespace halfline
