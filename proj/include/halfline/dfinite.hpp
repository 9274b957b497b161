#pragma once
#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "tripoly.hpp"
#include "unipoly.hpp"

// The D-finite pipeline: algebraic equation -> linear ODE -> P-recurrence ->
// fast exact term generation, plus the hypergeometric product form and the
// quadratic convolution recurrence as an independent oracle.
namespace halfline {

// p_0 F^(d) + p_1 F^(d-1) + ... + p_d F = inhom, coefficients in t.
struct LinODE {
    std::vector<UniPoly> coeffs; // coeffs[0] = p_0 multiplies the highest derivative
    UniPoly inhom;               // zero for homogeneous equations

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const LinODE&, const LinODE&) = default;
};

// q_0(n) f_{n+r} + q_1(n) f_{n+r-1} + ... + q_r(n) f_n = 0, coefficients in n.
struct PRec {
    std::vector<UniPoly> coeffs; // coeffs[0] = q_0 multiplies the highest shift

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const PRec&, const PRec&) = default;
};

namespace detail {

// Dense polynomials in Y over the rational-function field Q(t), ascending,
// trimmed; the workhorse representation for arithmetic modulo P0.
using YPoly = std::vector<RatFunc>;

inline void ytrim(YPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}
inline int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

inline YPoly yadd(const YPoly& a, const YPoly& b) {
    YPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ytrim(r);
    return r;
}
inline YPoly yneg(const YPoly& a) {
    YPoly r = a;
    for (auto& x : r) x = -x;
    return r;
}
inline YPoly ymul(const YPoly& a, const YPoly& b) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ytrim(r);
    return r;
}
inline YPoly yscale(const YPoly& a, const RatFunc& s) {
    YPoly r = a;
    for (auto& x : r) x *= s;
    ytrim(r);
    return r;
}

inline std::pair<YPoly, YPoly> ydivmod(const YPoly& a, const YPoly& b) {
    if (b.empty()) fail("DivisionByZero", "Y-polynomial division by zero");
    YPoly q, r = a;
    while (ydeg(r) >= ydeg(b)) {
        RatFunc c = r.back() / b.back();
        int e = ydeg(r) - ydeg(b);
        if (ydeg(q) < e) q.resize(static_cast<std::size_t>(e) + 1);
        q[static_cast<std::size_t>(e)] += c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[static_cast<std::size_t>(e) + i] -= c * b[i];
        r.pop_back(); // the leading term cancels exactly
        ytrim(r);
    }
    ytrim(q);
    return {std::move(q), std::move(r)};
}

inline YPoly ymonic(YPoly a) {
    if (!a.empty()) a = yscale(a, RatFunc(UniPoly(1)) / a.back());
    return a;
}

inline YPoly ygcd(YPoly a, YPoly b) {
    while (!b.empty()) {
        YPoly r = ydivmod(a, b).second;
        a = std::move(b);
        b = ymonic(std::move(r)); // keeps coefficient growth in check
    }
    return ymonic(std::move(a));
}

// g = gcd(a,b) along with u: u*a = g (mod b). Only the a-cofactor is needed
// (inverting dP0/dY modulo P0).
inline std::pair<YPoly, YPoly> yhalfgcd(const YPoly& a, const YPoly& b) {
    YPoly r0 = a, r1 = b;
    YPoly u0 = {RatFunc(UniPoly(1))}, u1 = {};
    while (!r1.empty()) {
        auto [q, r2] = ydivmod(r0, r1);
        YPoly u2 = yadd(u0, yneg(ymul(q, u1)));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {std::move(r0), std::move(u0)};
}

// Restrict a TriPoly in (t, Y) to a Y-polynomial over Q(t).
inline YPoly to_ypoly(const TriPoly& p) {
    YPoly r(static_cast<std::size_t>(p.deg_y()) + 1);
    for (const auto& [m, c] : p.terms()) {
        UniPoly cur = r[static_cast<std::size_t>(m.y)].num();
        cur.set_coeff(m.t, cur.coeff(m.t) + c);
        r[static_cast<std::size_t>(m.y)] = RatFunc(std::move(cur));
    }
    ytrim(r);
    return r;
}

// d/dt applied coefficient-wise (the Y-slot untouched).
inline YPoly yderiv_coeffs(const YPoly& a) {
    YPoly r = a;
    for (auto& x : r) x = x.derivative();
    ytrim(r);
    return r;
}

// dA/dY.
inline YPoly yderiv_y(const YPoly& a) {
    YPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(RatFunc(Rational(static_cast<long long>(i))) * a[i]);
    ytrim(r);
    return r;
}

// Express target as a linear combination of cols (each a length-dim vector
// over Q(t)); returns the coefficients, or nothing when target is outside
// the span. Plain Gaussian elimination; the matrices are tiny.
inline std::optional<std::vector<RatFunc>> express_in_span(
    const std::vector<std::vector<RatFunc>>& cols, const std::vector<RatFunc>& target) {
    const std::size_t dim = target.size(), k = cols.size();
    std::vector<std::vector<RatFunc>> m(dim, std::vector<RatFunc>(k + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < k; ++c) m[r][c] = cols[c][r];
        m[r][k] = target[r];
    }
    std::vector<std::size_t> pivot_of_col(k, dim);
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < dim; ++col) {
        std::size_t p = row;
        while (p < dim && m[p][col].is_zero()) ++p;
        if (p == dim) continue;
        std::swap(m[p], m[row]);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            RatFunc f = m[r][col] / m[row][col];
            for (std::size_t c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < dim; ++r)
        if (!m[r][k].is_zero()) return std::nullopt; // inconsistent
    std::vector<RatFunc> lambda(k);
    for (std::size_t col = 0; col < k; ++col)
        if (pivot_of_col[col] < dim) {
            const auto& pr = m[pivot_of_col[col]];
            lambda[col] = pr[k] / pr[col];
        }
    return lambda;
}

// Joint canonical scaling: integer coefficients, collective content 1, and
// the lowest-degree nonzero coefficient of lead positive. Returns the factor
// to multiply everything by.
inline Rational joint_scale(const std::vector<const UniPoly*>& polys, const UniPoly& lead) {
    BigInt num_gcd = 0, den_lcm = 1;
    for (const UniPoly* p : polys)
        for (const auto& c : p->coeffs()) {
            if (c.is_zero()) continue;
            num_gcd = boost::multiprecision::gcd(num_gcd, c.num());
            den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
        }
    if (num_gcd.is_zero()) return Rational(1);
    Rational scale(den_lcm, num_gcd);
    for (const auto& c : lead.coeffs())
        if (!c.is_zero()) {
            if (c < Rational(0)) scale = -scale;
            break;
        }
    return scale;
}

inline void canonicalize_ode(LinODE& l) {
    std::size_t lead = 0;
    while (lead + 1 < l.coeffs.size() && l.coeffs[lead].is_zero()) ++lead;
    l.coeffs.erase(l.coeffs.begin(), l.coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
    if (l.coeffs.empty() || l.coeffs.front().is_zero())
        internal_error("differential equation with zero leading coefficient");
    std::vector<const UniPoly*> all;
    for (const auto& p : l.coeffs) all.push_back(&p);
    all.push_back(&l.inhom);
    Rational s = joint_scale(all, l.coeffs.front());
    for (auto& p : l.coeffs) p = s * p;
    l.inhom = s * l.inhom;
}

inline void canonicalize_rec(PRec& r) {
    std::vector<const UniPoly*> all;
    for (const auto& p : r.coeffs) all.push_back(&p);
    if (r.coeffs.empty() || r.coeffs.front().is_zero())
        internal_error("recurrence with zero leading coefficient");
    Rational s = joint_scale(all, r.coeffs.front());
    for (auto& p : r.coeffs) p = s * p;
}

// Does the primitive integer polynomial vanish at some nonnegative integer?
// Any such root divides the constant term (or the constant term is zero and
// 0 itself is a root). Gigantic constant terms are treated as "maybe" — the
// caller then skips an optional simplification rather than risk losing a
// valid evaluation point.
inline bool may_have_nonneg_integer_root(const UniPoly& g) {
    if (g.deg() <= 0) return false;
    Rational c0 = g.coeff(0);
    if (c0.is_zero()) return true;
    BigInt a0 = boost::multiprecision::abs(c0.num());
    if (a0 > 1000000000) return true;
    for (BigInt d = 1; d * d <= a0; ++d) {
        if (a0 % d != 0) continue;
        if (g.eval(Rational(d)).is_zero()) return true;
        if (g.eval(Rational(a0 / d)).is_zero()) return true;
    }
    return false;
}

} // namespace detail

// The inhomogeneous relation the dependence search finds first, and the
// homogeneous equation derived from it.
struct OdeDerivation {
    LinODE minimal_relation;
    LinODE ode;
};

// From P0(t, F) = 0 (squarefree in Y) to a linear ODE for F: invert dP0/dY
// modulo P0 to express F' in the quotient ring, build the derivative tower
// 1, F, F', F'', ... reduced mod P0, and stop at the first linear dependence
// over Q(t). An inhomogeneous relation is homogenized by differentiating
// once more.
inline OdeDerivation derive_ode(const TriPoly& p0_in) {
    if (p0_in.is_zero()) fail("ZeroInput", "cannot derive an equation from the zero polynomial");
    if (p0_in.deg_x() != 0) fail("BadInput", "input must be a polynomial in t and Y only");
    const int dim = p0_in.deg_y();
    if (dim < 1) fail("BadInput", "input must involve Y");

    using detail::YPoly;
    const YPoly p0 = detail::to_ypoly(p0_in);
    const YPoly dp0 = detail::yderiv_y(p0);

    if (detail::ydeg(detail::ygcd(p0, dp0)) > 0)
        fail("NotSquarefree", "polynomial shares a factor with its Y-derivative");

    auto [g, u] = detail::yhalfgcd(dp0, p0);
    if (detail::ydeg(g) != 0)
        fail("NotSquarefree", "dP/dY is not invertible modulo P");
    const YPoly inv_dp0 = detail::ydivmod(detail::yscale(u, RatFunc(UniPoly(1)) / g[0]), p0).second;

    // F' = -P_t(t,F) / P_Y(t,F), expressed in the quotient ring.
    const YPoly yprime =
        detail::ydivmod(detail::ymul(detail::yneg(detail::yderiv_coeffs(p0)), inv_dp0), p0).second;

    // Tower members as dense vectors over Q(t): funcs[0] = 1, funcs[1] = F,
    // funcs[k] = F^(k-1) for k >= 2.
    auto as_vec = [dim](const YPoly& a) {
        std::vector<RatFunc> v(static_cast<std::size_t>(dim));
        for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
        return v;
    };
    std::vector<std::vector<RatFunc>> funcs;
    funcs.push_back(as_vec({RatFunc(UniPoly(1))}));
    YPoly cur = detail::ydivmod({RatFunc(), RatFunc(UniPoly(1))}, p0).second; // Y mod P0
    funcs.push_back(as_vec(cur));

    std::optional<std::vector<RatFunc>> lambda;
    std::size_t j = 1;
    for (;; ++j) {
        std::vector<std::vector<RatFunc>> prior(funcs.begin(), funcs.begin() + static_cast<std::ptrdiff_t>(j));
        lambda = detail::express_in_span(prior, funcs[j]);
        if (lambda) break;
        if (static_cast<int>(j) > dim)
            fail("DependenceNotFound", "no linear dependence in the derivative tower");
        // differentiate the last tower member: d/dt + chain rule through F'
        cur = detail::ydivmod(
            detail::yadd(detail::yderiv_coeffs(cur), detail::ymul(detail::yderiv_y(cur), yprime)), p0)
                  .second;
        funcs.push_back(as_vec(cur));
    }

    // funcs[j] = sum_{i<j} lambda_i funcs[i], i.e.
    // F^(j-1) - lambda_{j-1} F^(j-2) - ... - lambda_1 F = lambda_0.
    const int d = static_cast<int>(j) - 1;
    std::vector<RatFunc> rel(static_cast<std::size_t>(d) + 1);
    rel[0] = RatFunc(UniPoly(1));
    for (int i = 1; i <= d; ++i) rel[static_cast<std::size_t>(i)] = -(*lambda)[j - static_cast<std::size_t>(i)];
    RatFunc rhs = (*lambda)[0];

    UniPoly den(1);
    for (const auto& f : rel) den = UniPoly::divmod(den * f.den(), poly_gcd(den, f.den())).first;
    den = UniPoly::divmod(den * rhs.den(), poly_gcd(den, rhs.den())).first;

    OdeDerivation out;
    out.minimal_relation.coeffs.reserve(rel.size());
    for (const auto& f : rel)
        out.minimal_relation.coeffs.push_back(f.num() * UniPoly::divmod(den, f.den()).first);
    out.minimal_relation.inhom = rhs.num() * UniPoly::divmod(den, rhs.den()).first;
    detail::canonicalize_ode(out.minimal_relation);

    if (out.minimal_relation.inhom.is_zero()) {
        out.ode = out.minimal_relation;
        return out;
    }

    // Divide by the right side b, differentiate, clear by b^2:
    // sum (p_i' b - p_i b') F^(d-i) + p_i b F^(d-i+1) = 0.
    const auto& p = out.minimal_relation.coeffs;
    const UniPoly& b = out.minimal_relation.inhom;
    const UniPoly db = b.derivative();
    std::vector<UniPoly> h(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        h[i] += p[i] * b;
        h[i + 1] += p[i].derivative() * b - p[i] * db;
    }
    out.ode.coeffs = std::move(h);
    detail::canonicalize_ode(out.ode);
    return out;
}

inline LinODE algebraic_to_ode(const TriPoly& p0) { return derive_ode(p0).ode; }

// Translate a homogeneous ODE into a recurrence for the coefficient sequence
// of a solution series: the term c t^a (d/dt)^b picks out, at t-order m,
// the contribution c * (m-a+b)(m-a+b-1)...(m-a+1) * f_{m-a+b}. With f_k := 0
// for k < 0 the resulting identity holds for every m >= 0, because a falling
// factorial starting at a negative argument is zero exactly when its f-index
// is out of range. Collecting by the shift s = b-a and re-indexing so the
// lowest shift is f_n gives the recurrence.
inline PRec ode_to_rec(const LinODE& l) {
    if (!l.inhom.is_zero()) fail("Inhomogeneous", "recurrence translation needs a homogeneous equation");
    if (l.coeffs.empty() || l.coeffs.front().is_zero())
        fail("BadODE", "equation has no leading coefficient");
    const int d = l.order();

    std::map<int, UniPoly> by_shift;
    for (int i = 0; i <= d; ++i) {
        const int b = d - i;
        const UniPoly& pi = l.coeffs[static_cast<std::size_t>(i)];
        for (int a = 0; a <= pi.deg(); ++a) {
            const Rational c = pi.coeff(a);
            if (c.is_zero()) continue;
            const int s = b - a;
            UniPoly ff(c); // c * (n+s)(n+s-1)...(n+s-b+1)
            for (int k = 0; k < b; ++k)
                ff = ff * (UniPoly::var() + UniPoly(Rational(static_cast<long long>(s - k))));
            auto [it, fresh] = by_shift.emplace(s, ff);
            if (!fresh) it->second += ff;
        }
    }
    for (auto it = by_shift.begin(); it != by_shift.end();)
        it = it->second.is_zero() ? by_shift.erase(it) : std::next(it);
    if (by_shift.size() < 2)
        fail("BadODE", "equation collapses to fewer than two coefficient shifts");

    const int s_min = by_shift.begin()->first;
    const int s_max = by_shift.rbegin()->first;
    const int r = s_max - s_min;

    PRec rec;
    rec.coeffs.assign(static_cast<std::size_t>(r) + 1, UniPoly());
    for (const auto& [s, q] : by_shift)
        rec.coeffs[static_cast<std::size_t>(s_max - s)] =
            q.compose_linear(Rational(1), Rational(-s_min));

    // An overall polynomial factor may be divided out, but only when it
    // cannot vanish at an evaluation point n >= 0.
    UniPoly g;
    for (const auto& q : rec.coeffs)
        if (!q.is_zero()) g = g.is_zero() ? q.primitive() : poly_gcd(g, q);
    if (g.deg() > 0 && !detail::may_have_nonneg_integer_root(g))
        for (auto& q : rec.coeffs) {
            auto [quot, rem] = UniPoly::divmod(q, g);
            if (!rem.is_zero()) detail::internal_error("inexact division by a common factor");
            q = std::move(quot);
        }

    detail::canonicalize_rec(rec);
    return rec;
}

// Exact forward unrolling: f_0..f_N from r initial values. The leading
// coefficient is checked over the whole range up front.
inline std::vector<Rational> rec_unroll(const PRec& rec, const std::vector<Rational>& init,
                                        long long n) {
    if (n < 0) fail("BadOrder", "term count must be nonnegative");
    const int r = rec.order();
    if (r < 1 || rec.coeffs.front().is_zero())
        fail("BadRecurrence", "recurrence needs order >= 1 and a nonzero leading coefficient");
    if (static_cast<int>(init.size()) != r)
        fail("BadInit", "expected " + std::to_string(r) + " initial values, got " +
                            std::to_string(init.size()));
    for (long long k = 0; k + r <= n; ++k)
        if (rec.coeffs.front().eval(Rational(k)).is_zero())
            fail("LeadingCoeffVanishes", "leading coefficient vanishes at n = " + std::to_string(k));

    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (const auto& v : init) {
        if (static_cast<long long>(out.size()) > n) break;
        out.push_back(v);
    }
    for (long long k = 0; k + r <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= r; ++i)
            acc += rec.coeffs[static_cast<std::size_t>(i)].eval(Rational(k)) *
                   out[static_cast<std::size_t>(k + r - i)];
        out.push_back(-acc / rec.coeffs.front().eval(Rational(k)));
    }
    return out;
}

// Order-1 recurrences have hypergeometric solutions:
// g(n) = g(0) * prod_{k<n} (-q_1(k)/q_0(k)).
inline Rational first_order_product(const PRec& rec, const Rational& g0, long long n) {
    if (rec.order() != 1) fail("BadRecurrence", "product form requires an order-1 recurrence");
    if (n < 0) fail("BadOrder", "index must be nonnegative");
    Rational acc = g0;
    for (long long k = 0; k < n; ++k) {
        Rational q0 = rec.coeffs[0].eval(Rational(k));
        if (q0.is_zero())
            fail("ZeroDenominator", "leading coefficient vanishes at k = " + std::to_string(k));
        acc *= -rec.coeffs[1].eval(Rational(k)) / q0;
    }
    return acc;
}

// The quadratic recurrence for excursion counts:
// f_0 = 1, f_1 = 0, f_n = sum_{k=0}^{n-2} f_k f_{n-2-k}. Independent of the
// D-finite route, so the two can cross-check each other.
inline std::vector<Rational> convolution_f0(long long n) {
    if (n < 0) fail("BadOrder", "term count must be nonnegative");
    std::vector<Rational> f;
    f.reserve(static_cast<std::size_t>(n) + 1);
    f.push_back(Rational(1));
    if (n >= 1) f.push_back(Rational(0));
    for (long long m = 2; m <= n; ++m) {
        Rational acc(0);
        for (long long k = 0; k + 2 <= m; ++k)
            acc += f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(m - 2 - k)];
        f.push_back(acc);
    }
    return f;
}

// Restrict a recurrence to the even-indexed subsequence g(n) = f(2n).
// Requires every occurring shift to be even; the substitution n -> 2n is
// performed verbatim, with no renormalization, so printed forms keep their
// raw coefficients.
inline PRec even_index_subsequence(const PRec& rec) {
    const int r = rec.order();
    if (r < 1 || rec.coeffs.front().is_zero())
        fail("BadRecurrence", "recurrence needs order >= 1 and a nonzero leading coefficient");
    if (r % 2 != 0) fail("MixedParity", "order must be even to restrict to even indices");
    for (int i = 1; i <= r; i += 2)
        if (!rec.coeffs[static_cast<std::size_t>(i)].is_zero())
            fail("MixedParity", "recurrence links even and odd indices");
    PRec out;
    out.coeffs.reserve(static_cast<std::size_t>(r / 2) + 1);
    for (int i = 0; i <= r; i += 2)
        out.coeffs.push_back(rec.coeffs[static_cast<std::size_t>(i)].compose_linear(Rational(2), Rational(0)));
    return out;
}

} // namespace halfline
