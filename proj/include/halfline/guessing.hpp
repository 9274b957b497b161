#pragma once
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "closed_forms.hpp"
#include "linalg.hpp"
#include "tripoly.hpp"

// Ansatz-based discovery of an annihilating polynomial from truncated series
// data, Newton lifting of series roots, resultant-based closure combinators,
// and the certificate check that a guessed kernel candidate is exact.
namespace halfline {

struct GuessReport {
    std::optional<TriPoly> candidate; // present iff nullspace_dim >= 1
    int nullspace_dim = 0;
    int orders_used = 0;  // truncation order the system was built from
    int confirmed_to = 0; // highest order the candidate was re-checked at
};

// Find P(x,t,Y), deg_x <= dx, deg_t <= dt, deg_Y <= dY, with P(x,t,A) = 0 to
// A's order. Every (t-order, x-exponent) coefficient of the ansatz gives one
// homogeneous linear equation in the unknown p_ijk.
inline GuessReport guess_algebraic(const SeriesT& a, int dx, int dt, int dY) {
    if (dx < 0 || dt < 0 || dY < 0) fail("BadDegree", "degree bounds must be nonnegative");
    const int order = a.order();

    std::vector<SeriesT> pw; // A^0 .. A^dY, exact mod t^(order+1)
    pw.reserve(static_cast<std::size_t>(dY) + 1);
    pw.push_back(SeriesT::one(order));
    for (int k = 1; k <= dY; ++k) pw.push_back(pw.back() * a);

    const int unknowns = (dx + 1) * (dt + 1) * (dY + 1);
    auto flat = [dx, dt](int i, int j, int k) { return (k * (dt + 1) + j) * (dx + 1) + i; };

    // Row per monomial x^e t^m present in some x^i t^j A^k; only t-orders
    // <= order are trusted, and rows are created only when a term lands,
    // so every assembled row has at least one nonzero entry.
    std::map<std::pair<int, int>, std::vector<Rational>> rows;
    for (int k = 0; k <= dY; ++k)
        for (int j = 0; j <= dt; ++j)
            for (int m = 0; m + j <= order; ++m)
                for (const auto& [e, c] : pw[static_cast<std::size_t>(k)].coeff(m).terms())
                    for (int i = 0; i <= dx; ++i) {
                        auto& row = rows[{m + j, e + i}];
                        if (row.empty()) row.assign(static_cast<std::size_t>(unknowns), Rational(0));
                        row[static_cast<std::size_t>(flat(i, j, k))] += c;
                    }

    if (static_cast<int>(rows.size()) < unknowns)
        fail("UnderdeterminedSystem",
             "series order " + std::to_string(order) + " yields " +
                 std::to_string(rows.size()) + " equations for " + std::to_string(unknowns) +
                 " unknowns");

    std::vector<std::vector<Rational>> mat;
    mat.reserve(rows.size());
    for (auto& [key, row] : rows) mat.push_back(std::move(row));

    Nullspace ns = nullspace_basis(mat, unknowns);

    GuessReport rep;
    rep.nullspace_dim = static_cast<int>(ns.basis.size());
    rep.orders_used = order;
    rep.confirmed_to = order;
    if (rep.nullspace_dim == 0) return rep;

    // Dimension > 1: pick the basis vector with the fewest nonzero entries
    // (first on ties) so the reported candidate is deterministic.
    std::size_t best = 0, best_nz = static_cast<std::size_t>(-1);
    for (std::size_t b = 0; b < ns.basis.size(); ++b) {
        std::size_t nz = 0;
        for (const auto& v : ns.basis[b])
            if (!v.is_zero()) ++nz;
        if (nz < best_nz) {
            best = b;
            best_nz = nz;
        }
    }

    TriPoly cand;
    for (int k = 0; k <= dY; ++k)
        for (int j = 0; j <= dt; ++j)
            for (int i = 0; i <= dx; ++i)
                cand.add_term({i, j, k}, ns.basis[best][static_cast<std::size_t>(flat(i, j, k))]);
    rep.candidate = cand.normalized();
    return rep;
}

// Re-check a guessed candidate against a longer truncation of the same
// series. A zero residual raises confirmed_to; a nonzero one refutes the
// candidate (returned as false, report left untouched).
inline bool confirm_candidate(GuessReport& rep, const SeriesT& longer) {
    if (!rep.candidate) fail("NoCandidate", "report carries no candidate to confirm");
    if (valuation(rep.candidate->eval_y(longer)).has_value()) return false;
    if (longer.order() > rep.confirmed_to) rep.confirmed_to = longer.order();
    return true;
}

// Newton iteration Y <- Y - P(Y)/P'(Y) from a seed that annihilates P to its
// own order; the correct order doubles each step, so the unique series root
// extending the seed is reached in O(log N) steps.
inline SeriesT series_root(const TriPoly& p, const SeriesT& seed, int n) {
    if (n < 0) fail("BadOrder", "target order must be nonnegative");
    if (valuation(p.eval_y(seed)).has_value())
        fail("SeedMismatch", "seed does not annihilate the polynomial to the seed's order");
    const TriPoly dp = p.derivative_y();
    if (!dp.eval_y(seed.truncate(0)).coeff(0).as_monomial())
        fail("SingularRoot", "[t^0] of dP/dY at the seed is not invertible");
    SeriesT y = seed;
    if (y.order() >= n) return y.truncate(n);
    while (y.order() < n) {
        int w = std::min(2 * y.order() + 1, n);
        SeriesT yw = detail::pad_to(y, w);
        y = yw - p.eval_y(yw) * series_inverse(dp.eval_y(yw));
    }
    return y;
}

enum class CombineMode { Sum, Product };

namespace detail {

// Determinant by cofactor expansion down the columns with zero pruning.
// Sylvester matrices are banded, so the live branching stays tiny even
// though the worst case is factorial.
inline TriPoly tri_det(const std::vector<std::vector<TriPoly>>& m, std::vector<std::size_t>& live,
                       std::size_t col) {
    if (live.size() == 1) return m[live[0]][col];
    TriPoly acc;
    int sign = 1;
    for (std::size_t i = 0; i < live.size(); ++i) {
        const TriPoly& pivot = m[live[i]][col];
        if (!pivot.is_zero()) {
            std::vector<std::size_t> rest;
            rest.reserve(live.size() - 1);
            for (std::size_t j = 0; j < live.size(); ++j)
                if (j != i) rest.push_back(live[j]);
            TriPoly sub = pivot * tri_det(m, rest, col + 1);
            acc += sign > 0 ? sub : -sub;
        }
        sign = -sign;
    }
    return acc;
}

inline TriPoly sylvester_det(const std::vector<TriPoly>& p, const std::vector<TriPoly>& q) {
    const std::size_t dp = p.size() - 1, dq = q.size() - 1;
    const std::size_t n = dp + dq;
    std::vector<std::vector<TriPoly>> m(n, std::vector<TriPoly>(n));
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t c = 0; c <= dp; ++c) m[r][r + c] = p[dp - c];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t c = 0; c <= dq; ++c) m[dq + r][r + c] = q[dq - c];
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;
    return tri_det(m, live, 0);
}

} // namespace detail

// A nonzero polynomial in Y vanishing at every sum (resp. product) of a root
// of p1 with a root of p2, via the resultant in an auxiliary variable:
//   sum:     Res_u(p1(u), p2(Y - u))
//   product: Res_u(p1(u), u^deg(p2) * p2(Y/u))
inline TriPoly annihilator_combine(const TriPoly& p1, const TriPoly& p2, CombineMode mode) {
    if (p1.is_zero() || p2.is_zero()) fail("ZeroInput", "cannot combine a zero polynomial");
    const int d1 = p1.deg_y(), d2 = p2.deg_y();
    if (d1 == 0 || d2 == 0)
        fail("ZeroInput", "a polynomial constant in Y has no roots to combine");

    // p1(u): coefficients of u^0..u^d1 are Y-free.
    const std::vector<TriPoly> a = p1.y_coeffs();

    // Second argument's coefficients in u keep their Y-dependence.
    const std::vector<TriPoly> c2 = p2.y_coeffs();
    std::vector<TriPoly> b(static_cast<std::size_t>(d2) + 1);
    if (mode == CombineMode::Sum) {
        // p2(Y - u) = sum_j u^j * (-1)^j * sum_{k>=j} C(k,j) c_k Y^(k-j)
        for (int j = 0; j <= d2; ++j) {
            TriPoly acc;
            for (int k = j; k <= d2; ++k)
                acc += Rational(binomial(k, j)) *
                       (c2[static_cast<std::size_t>(k)] * TriPoly::var_y(k - j));
            b[static_cast<std::size_t>(j)] = (j % 2 == 0) ? acc : -acc;
        }
    } else {
        // u^d2 * p2(Y/u) = sum_k c_k Y^k u^(d2-k)
        for (int k = 0; k <= d2; ++k)
            b[static_cast<std::size_t>(d2 - k)] = c2[static_cast<std::size_t>(k)] * TriPoly::var_y(k);
    }

    TriPoly res = detail::sylvester_det(a, b);
    if (res.is_zero())
        detail::internal_error("resultant of root-bearing polynomials vanished");
    return res;
}

struct VerifyReport {
    bool ok = false;
    TriPoly annihilator;                      // A(Y) with A(residual) = 0 exactly
    int y_multiplicity = 0;                   // largest m with Y^m | A
    std::optional<int> first_separating_order; // least order where the cofactor is nonzero at R
    int residual_checked_to = 0;              // R verified zero through this t-order
};

namespace detail {

inline SeriesT x_zero_slice(const SeriesT& a) {
    SeriesT r(a.order());
    for (int m = 0; m <= a.order(); ++m) r.set_coeff(m, LaurentPoly(a.coeff(m).coeff(0)));
    return r;
}

} // namespace detail

// Certificate-style check that a guessed candidate P is exact. The series
// root F extending 1 is rebuilt by Newton iteration and plugged into the
// defining equation of the model:
//   with x-terms:  R = (x - t(1+x^2)) F - x + t F(0;t)   (half-line kernel)
//   x-free:        R = 1 - F + t^2 F^2                   (endpoint-zero law)
// An annihilator A(Y) of R is assembled purely from closure combinators, so
// A(R) = 0 holds exactly, not just to the truncation order. Writing
// A = Y^m B: a nonzero coefficient of B(R) at order <= N proves B(R) != 0,
// hence R^m = 0, hence R = 0 exactly — the truncated residual check then
// certifies the candidate rather than merely sampling it.
inline VerifyReport verify_kernel_report(const TriPoly& p, int n) {
    if (p.is_zero()) fail("ZeroInput", "cannot verify the zero polynomial");
    const SeriesT f = series_root(p, SeriesT::one(0), n);

    SeriesT residual(n);
    TriPoly ann;
    const TriPoly y = TriPoly::var_y();
    if (p.deg_x() == 0) {
        residual = SeriesT::one(n) - f + (f * f).shift_t(2).truncate(n);
        TriPoly one_minus_f = annihilator_combine(annihilator_combine(p, y + TriPoly(1), CombineMode::Product),
                                                  y - TriPoly(1), CombineMode::Sum);
        TriPoly t2_f_sq = annihilator_combine(
            annihilator_combine(p, p, CombineMode::Product), y - TriPoly::var_t(2), CombineMode::Product);
        ann = annihilator_combine(one_minus_f, t2_f_sq, CombineMode::Sum);
    } else {
        const LaurentPoly x_mono = LaurentPoly::x();
        const LaurentPoly steps = LaurentPoly::x(2) + LaurentPoly(1);
        SeriesT kf = x_mono * f - (steps * f).shift_t(1).truncate(n);
        SeriesT tf0 = detail::x_zero_slice(f).shift_t(1).truncate(n);
        residual = kf - SeriesT::constant(x_mono, n) + tf0;

        const TriPoly p0 = p.subst_x_zero();
        TriPoly kf_ann = annihilator_combine(y - kernel_poly(), p, CombineMode::Product);
        TriPoly tail_ann = annihilator_combine(
            annihilator_combine(y - TriPoly::var_t(), p0, CombineMode::Product),
            y + TriPoly::var_x(), CombineMode::Sum);
        ann = annihilator_combine(kf_ann, tail_ann, CombineMode::Sum);
    }

    VerifyReport rep;
    rep.annihilator = ann;
    rep.residual_checked_to = n;

    int mult = ann.deg_y();
    for (const auto& [m, c] : ann.terms()) mult = std::min(mult, m.y);
    rep.y_multiplicity = mult;

    TriPoly cofactor;
    for (const auto& [m, c] : ann.terms()) cofactor.add_term({m.x, m.t, m.y - mult}, c);
    rep.first_separating_order = valuation(cofactor.eval_y(residual));

    if (valuation(residual).has_value()) return rep; // visibly nonzero: refuted
    if (rep.y_multiplicity >= 1 && rep.first_separating_order.has_value()) {
        rep.ok = true;
        return rep;
    }
    fail("InconclusiveOrder",
         "order " + std::to_string(n) + " does not separate the cofactor from the root");
}

inline bool verify_kernel_solution(const TriPoly& p, int n) {
    return verify_kernel_report(p, n).ok;
}

} // namespace halfline
