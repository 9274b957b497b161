#include <catch2/catch_amalgamated.hpp>

#include "halfline/guessing.hpp"
#include "halfline/linalg.hpp"
#include "halfline/walks.hpp"
#include "support/helpers.hpp"

using Catch::Matchers::MessageMatches;
using Catch::Matchers::StartsWith;
using namespace halfline;

namespace {

// Minimal polynomial of the full walk series F(x;t), cleared and normalized:
// 1 - Y + 2xtY + t^2 Y^2 - xt Y^2 + x^2 t^2 Y^2.
TriPoly full_min_poly() {
    TriPoly p;
    p.add_term({0, 0, 0}, Rational(1));
    p.add_term({0, 0, 1}, Rational(-1));
    p.add_term({1, 1, 1}, Rational(2));
    p.add_term({0, 2, 2}, Rational(1));
    p.add_term({1, 1, 2}, Rational(-1));
    p.add_term({2, 2, 2}, Rational(1));
    return p;
}

// Minimal polynomial of the excursion series F(0;t): 1 - Y + t^2 Y^2.
TriPoly excursion_min_poly() {
    TriPoly p;
    p.add_term({0, 0, 0}, Rational(1));
    p.add_term({0, 0, 1}, Rational(-1));
    p.add_term({0, 2, 2}, Rational(1));
    return p;
}

bool in_kernel(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v) {
    for (const auto& r : rows) {
        Rational acc(0);
        for (std::size_t c = 0; c < r.size(); ++c) acc += r[c] * v[c];
        if (!acc.is_zero()) return false;
    }
    return true;
}

// Substitute a Y-free polynomial for Y (Horner).
TriPoly subst_y(const TriPoly& p, const TriPoly& s) {
    TriPoly acc;
    auto cs = p.y_coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) acc = acc * s + cs[k];
    return acc;
}

// Evaluate a polynomial that only involves Y at a rational point.
Rational eval_y_const(const TriPoly& p, const Rational& v) {
    Rational acc(0);
    auto cs = p.y_coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) acc = acc * v + cs[k].coeff({0, 0, 0});
    return acc;
}

// floor(sqrt(v) * 10^digits) / 10^digits, exact.
Rational approx_sqrt(long long v, unsigned digits) {
    BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
    BigInt r = boost::multiprecision::sqrt(BigInt(v) * scale * scale);
    return Rational(r, scale);
}

} // namespace

TEST_CASE("fraction-free nullspace computation") {
    SECTION("known two-dimensional kernel") {
        std::vector<std::vector<Rational>> rows = {
            {Rational(1), Rational(2), Rational(3), Rational(4)},
            {Rational(2), Rational(4), Rational(6), Rational(8)},
            {Rational(1), Rational(1), Rational(1), Rational(1)},
        };
        Nullspace ns = nullspace_basis(rows, 4);
        REQUIRE(ns.rank == 2);
        REQUIRE(ns.basis.size() == 2);
        for (const auto& v : ns.basis) REQUIRE(in_kernel(rows, v));
        // reduced-echelon identity pattern on the free columns (2 and 3)
        REQUIRE(ns.basis[0][2] == Rational(1));
        REQUIRE(ns.basis[0][3] == Rational(0));
        REQUIRE(ns.basis[1][2] == Rational(0));
        REQUIRE(ns.basis[1][3] == Rational(1));
    }

    SECTION("full column rank leaves an empty basis") {
        std::vector<std::vector<Rational>> rows = {
            {Rational(1), Rational(0), Rational(0)},
            {Rational(0), Rational(1), Rational(0)},
            {Rational(0), Rational(0), Rational(1)},
        };
        Nullspace ns = nullspace_basis(rows, 3);
        REQUIRE(ns.rank == 3);
        REQUIRE(ns.basis.empty());
    }

    SECTION("zero matrix has the standard basis as kernel") {
        std::vector<std::vector<Rational>> rows(2, std::vector<Rational>(3, Rational(0)));
        Nullspace ns = nullspace_basis(rows, 3);
        REQUIRE(ns.rank == 0);
        REQUIRE(ns.basis.size() == 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                REQUIRE(ns.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                        (i == j ? Rational(1) : Rational(0)));
    }

    SECTION("row scaling does not change the kernel") {
        std::vector<std::vector<Rational>> rows = {
            {Rational(2), Rational(-3), Rational(1)},
            {Rational(1), Rational(1), Rational(-4)},
        };
        auto scaled = rows;
        for (auto& x : scaled[0]) x *= Rational(BigInt(7), BigInt(3));
        Nullspace a = nullspace_basis(rows, 3);
        Nullspace b = nullspace_basis(scaled, 3);
        REQUIRE(a.rank == b.rank);
        REQUIRE(a.basis == b.basis);
    }

    SECTION("random matrices: exact kernel, rank-nullity") {
        th::Gen gen(20240901);
        for (int rep = 0; rep < 25; ++rep) {
            int m = static_cast<int>(gen.int_in(1, 6));
            int cols = static_cast<int>(gen.int_in(1, 6));
            std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m));
            for (auto& r : rows) {
                r.reserve(static_cast<std::size_t>(cols));
                for (int c = 0; c < cols; ++c) r.push_back(gen.rat());
            }
            Nullspace ns = nullspace_basis(rows, cols);
            REQUIRE(ns.rank + static_cast<int>(ns.basis.size()) == cols);
            for (const auto& v : ns.basis) REQUIRE(in_kernel(rows, v));
        }
    }
}

TEST_CASE("algebraic guessing from truncated series") {
    SECTION("full walk series at order 8, cubic ansatz box d=2") {
        SeriesT a = fixpoint_solve(StepSet({-1, 1}), 8);
        GuessReport rep = guess_algebraic(a, 2, 2, 2);
        REQUIRE(rep.nullspace_dim == 1);
        REQUIRE(rep.orders_used == 8);
        REQUIRE(rep.candidate.has_value());
        REQUIRE(*rep.candidate == full_min_poly());
        // soundness: the candidate annihilates the data it was built from
        REQUIRE_FALSE(valuation(rep.candidate->eval_y(a)).has_value());

        // confidence escalation at a strictly longer truncation
        SeriesT longer = fixpoint_solve(StepSet({-1, 1}), 20);
        REQUIRE(confirm_candidate(rep, longer));
        REQUIRE(rep.confirmed_to == 20);
    }

    SECTION("excursion series at order 8, x-free ansatz") {
        SeriesT f0 = classical_kernel(8).F0;
        GuessReport rep = guess_algebraic(f0, 0, 2, 2);
        REQUIRE(rep.nullspace_dim == 1);
        REQUIRE(rep.candidate.has_value());
        REQUIRE(*rep.candidate == excursion_min_poly());
    }

    SECTION("geometric series") {
        SeriesT geo = th::SC({1, 1, 1, 1, 1, 1, 1, 1, 1});
        GuessReport rep = guess_algebraic(geo, 0, 1, 1);
        REQUIRE(rep.nullspace_dim == 1);
        TriPoly expect; // 1 - (1-t)Y
        expect.add_term({0, 0, 0}, Rational(1));
        expect.add_term({0, 0, 1}, Rational(-1));
        expect.add_term({0, 1, 1}, Rational(1));
        REQUIRE(*rep.candidate == expect);
    }

    SECTION("loose degree box: deterministic fewest-terms pick") {
        SeriesT geo = th::SC({1, 1, 1, 1, 1, 1, 1, 1, 1});
        GuessReport rep = guess_algebraic(geo, 0, 2, 1);
        REQUIRE(rep.nullspace_dim == 2);
        TriPoly expect; // the sparse representative 1 - (1-t)Y, not (1+t) times it
        expect.add_term({0, 0, 0}, Rational(1));
        expect.add_term({0, 0, 1}, Rational(-1));
        expect.add_term({0, 1, 1}, Rational(1));
        REQUIRE(*rep.candidate == expect);
        REQUIRE_FALSE(valuation(rep.candidate->eval_y(geo)).has_value());
        GuessReport again = guess_algebraic(geo, 0, 2, 1);
        REQUIRE(*again.candidate == *rep.candidate);
        REQUIRE(again.nullspace_dim == rep.nullspace_dim);
    }

    SECTION("series with no algebraic relation in the box") {
        SeriesT e(8); // exponential-style series 1/n!
        BigInt fact = 1;
        for (int n = 0; n <= 8; ++n) {
            if (n > 0) fact *= n;
            e.set_coeff(n, LaurentPoly(Rational(BigInt(1), fact)));
        }
        GuessReport rep = guess_algebraic(e, 0, 1, 1);
        REQUIRE(rep.nullspace_dim == 0);
        REQUIRE_FALSE(rep.candidate.has_value());
    }

    SECTION("order too small for the ansatz") {
        SeriesT a = fixpoint_solve(StepSet({-1, 1}), 2);
        REQUIRE_THROWS_MATCHES(guess_algebraic(a, 2, 2, 2), DomainError,
                               MessageMatches(StartsWith("UnderdeterminedSystem")));
    }

    SECTION("confirming without a candidate is an error") {
        GuessReport empty;
        SeriesT a = fixpoint_solve(StepSet({-1, 1}), 4);
        REQUIRE_THROWS_MATCHES(confirm_candidate(empty, a), DomainError,
                               MessageMatches(StartsWith("NoCandidate")));
    }
}

TEST_CASE("Newton lifting of series roots") {
    SECTION("full walk series from a one-term seed") {
        SeriesT seed = th::S({th::L({{0, 1}}), th::L({{1, 1}})}); // 1 + xt
        SeriesT root = series_root(full_min_poly(), seed, 12);
        REQUIRE(root == fixpoint_solve(StepSet({-1, 1}), 12));
    }

    SECTION("excursion series from the constant seed") {
        SeriesT root = series_root(excursion_min_poly(), SeriesT::one(0), 10);
        REQUIRE(root == th::SC({1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42}));
    }

    SECTION("square root as a quadratic series root") {
        TriPoly p; // Y^2 - (1 - 4t^2)
        p.add_term({0, 0, 2}, Rational(1));
        p.add_term({0, 0, 0}, Rational(-1));
        p.add_term({0, 2, 0}, Rational(4));
        SeriesT root = series_root(p, SeriesT::one(0), 6);
        REQUIRE(root == series_sqrt(th::SC({1, 0, -4, 0, 0, 0, 0})));
    }

    SECTION("idempotence on its own output") {
        SeriesT seed = th::S({th::L({{0, 1}}), th::L({{1, 1}})});
        SeriesT root = series_root(full_min_poly(), seed, 12);
        REQUIRE(series_root(full_min_poly(), root, 12) == root);
    }

    SECTION("seed that does not annihilate") {
        REQUIRE_THROWS_MATCHES(series_root(excursion_min_poly(), th::SC({2}), 5), DomainError,
                               MessageMatches(StartsWith("SeedMismatch")));
    }

    SECTION("repeated root is rejected") {
        TriPoly p; // (1 - Y)^2
        p.add_term({0, 0, 0}, Rational(1));
        p.add_term({0, 0, 1}, Rational(-2));
        p.add_term({0, 0, 2}, Rational(1));
        REQUIRE_THROWS_MATCHES(series_root(p, SeriesT::one(0), 5), DomainError,
                               MessageMatches(StartsWith("SingularRoot")));
    }

    SECTION("negative target order") {
        REQUIRE_THROWS_MATCHES(series_root(excursion_min_poly(), SeriesT::one(0), -1), DomainError,
                               MessageMatches(StartsWith("BadOrder")));
    }
}

TEST_CASE("closure combinators for algebraic annihilators") {
    const TriPoly y = TriPoly::var_y();

    SECTION("linear inputs: sum and product are exact") {
        TriPoly p1 = y - TriPoly::var_x();
        TriPoly p2 = y - TriPoly::var_t();
        TriPoly s = annihilator_combine(p1, p2, CombineMode::Sum).normalized();
        TriPoly prod = annihilator_combine(p1, p2, CombineMode::Product).normalized();
        REQUIRE(s == (y - TriPoly::var_x() - TriPoly::var_t()).normalized());
        REQUIRE(prod == (y - TriPoly::var_x() * TriPoly::var_t()).normalized());
    }

    SECTION("random monic linear inputs vanish at the combined root") {
        th::Gen gen(777);
        for (int rep = 0; rep < 10; ++rep) {
            TriPoly r1, r2;
            for (int i = 0; i < 3; ++i) {
                r1.add_term({static_cast<int>(gen.int_in(0, 2)), static_cast<int>(gen.int_in(0, 2)), 0},
                            gen.rat());
                r2.add_term({static_cast<int>(gen.int_in(0, 2)), static_cast<int>(gen.int_in(0, 2)), 0},
                            gen.rat());
            }
            TriPoly s = annihilator_combine(y - r1, y - r2, CombineMode::Sum);
            TriPoly p = annihilator_combine(y - r1, y - r2, CombineMode::Product);
            REQUIRE(subst_y(s, r1 + r2).is_zero());
            REQUIRE(subst_y(p, r1 * r2).is_zero());
        }
    }

    SECTION("sum of two quadratic irrationals") {
        TriPoly p1 = y * y - TriPoly(2);
        TriPoly p2 = y * y - TriPoly(3);
        TriPoly s = annihilator_combine(p1, p2, CombineMode::Sum).normalized();
        TriPoly expect = // Y^4 - 10 Y^2 + 1
            TriPoly::var_y(4) - Rational(10) * TriPoly::var_y(2) + TriPoly(1);
        REQUIRE(s == expect.normalized());

        // numerical spot check at the root sqrt(2) + sqrt(3)
        Rational root = approx_sqrt(2, 30) + approx_sqrt(3, 30);
        Rational val = eval_y_const(s, root).abs();
        REQUIRE(val < Rational(BigInt(1), boost::multiprecision::pow(BigInt(10), 20)));
    }

    SECTION("zero and Y-free inputs are rejected") {
        REQUIRE_THROWS_MATCHES(annihilator_combine(TriPoly(), y, CombineMode::Sum), DomainError,
                               MessageMatches(StartsWith("ZeroInput")));
        REQUIRE_THROWS_MATCHES(annihilator_combine(y, TriPoly::var_t(), CombineMode::Product),
                               DomainError, MessageMatches(StartsWith("ZeroInput")));
    }
}

TEST_CASE("kernel-candidate certificate verification") {
    SECTION("exact candidate verifies") {
        VerifyReport rep = verify_kernel_report(full_min_poly(), 16);
        REQUIRE(rep.ok);
        REQUIRE(verify_kernel_solution(full_min_poly(), 16));
        REQUIRE(rep.y_multiplicity >= 1);
        REQUIRE(rep.first_separating_order.has_value());
        REQUIRE(*rep.first_separating_order <= 16);
        REQUIRE(rep.residual_checked_to == 16);

        // the assembled annihilator contains the expected certificate factor
        TriPoly factor; // Y (1 - 4t^2 - t^2 Y^2)
        factor.add_term({0, 0, 1}, Rational(1));
        factor.add_term({0, 2, 1}, Rational(-4));
        factor.add_term({0, 2, 3}, Rational(-1));
        REQUIRE(divides_y(factor, rep.annihilator));
    }

    SECTION("perturbed candidate is refuted") {
        TriPoly bad = full_min_poly();
        bad.add_term({1, 1, 1}, Rational(1)); // 2xtY -> 3xtY
        VerifyReport rep = verify_kernel_report(bad, 16);
        REQUIRE_FALSE(rep.ok);
        REQUIRE_FALSE(verify_kernel_solution(bad, 16));
    }

    SECTION("x-free candidate checks the endpoint-zero law") {
        VerifyReport rep = verify_kernel_report(excursion_min_poly(), 16);
        REQUIRE(rep.ok);
        REQUIRE(rep.y_multiplicity >= 1);
        int nu = rep.first_separating_order.value();
        if (nu >= 1) {
            // below the separating order the certificate cannot conclude
            REQUIRE_THROWS_MATCHES(verify_kernel_solution(excursion_min_poly(), nu - 1),
                                   DomainError,
                                   MessageMatches(StartsWith("InconclusiveOrder")));
        }
    }

    SECTION("zero polynomial is rejected") {
        REQUIRE_THROWS_MATCHES(verify_kernel_solution(TriPoly(), 8), DomainError,
                               MessageMatches(StartsWith("ZeroInput")));
    }
}
