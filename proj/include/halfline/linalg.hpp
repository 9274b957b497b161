#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include "rational.hpp"

// Exact dense linear algebra for the ansatz solvers. Rows are scaled to
// integers, forward elimination is fraction-free (Bareiss), and rationals
// reappear only in the final back-substitution.
namespace halfline {

struct Nullspace {
    int rank = 0;
    std::vector<std::vector<Rational>> basis; // one vector per free column
};

// Kernel of an m x cols rational matrix. Rows may be fewer or more than
// cols; zero rows are harmless. Basis vectors have a 1 in "their" free
// column and 0 in every other free column (reduced-echelon form), which
// makes the result deterministic and the vectors independent by sight.
inline Nullspace nullspace_basis(const std::vector<std::vector<Rational>>& rows, int cols) {
    // Integer-scale each row by the lcm of its denominators.
    std::vector<std::vector<BigInt>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols)
            detail::internal_error("ragged matrix row");
        BigInt l = 1;
        for (const auto& x : r) l = boost::multiprecision::lcm(l, x.den());
        std::vector<BigInt> s(static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c)
            s[static_cast<std::size_t>(c)] = r[static_cast<std::size_t>(c)].num() *
                                             (l / r[static_cast<std::size_t>(c)].den());
        a.push_back(std::move(s));
    }

    // Bareiss elimination with column pivoting; divisions are exact.
    const int m = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < m; ++col) {
        int p = -1;
        for (int r = row; r < m; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(row)]);
        const auto& pr = a[static_cast<std::size_t>(row)];
        for (int r = row + 1; r < m; ++r) {
            auto& rr = a[static_cast<std::size_t>(r)];
            for (int c = col + 1; c < cols; ++c)
                rr[static_cast<std::size_t>(c)] =
                    (pr[static_cast<std::size_t>(col)] * rr[static_cast<std::size_t>(c)] -
                     rr[static_cast<std::size_t>(col)] * pr[static_cast<std::size_t>(c)]) /
                    prev;
            rr[static_cast<std::size_t>(col)] = 0;
        }
        prev = pr[static_cast<std::size_t>(col)];
        pivot_col.push_back(col);
        ++row;
    }

    Nullspace out;
    out.rank = static_cast<int>(pivot_col.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
        v[static_cast<std::size_t>(fc)] = Rational(1);
        for (int i = out.rank - 1; i >= 0; --i) {
            const auto& ri = a[static_cast<std::size_t>(i)];
            int pc = pivot_col[static_cast<std::size_t>(i)];
            Rational acc(0);
            for (int c = pc + 1; c < cols; ++c)
                if (!v[static_cast<std::size_t>(c)].is_zero())
                    acc += Rational(ri[static_cast<std::size_t>(c)]) * v[static_cast<std::size_t>(c)];
            v[static_cast<std::size_t>(pc)] = -acc / Rational(ri[static_cast<std::size_t>(pc)]);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

} // namespace halfline
