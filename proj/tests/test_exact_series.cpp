#include <catch2/catch_amalgamated.hpp>

#include <halfline/laurent_series.hpp>
#include <halfline/rational.hpp>
#include <halfline/series.hpp>

#include "support/helpers.hpp"

using namespace halfline;
using th::L;
using th::S;
using th::SC;

TEST_CASE("rational normalization and arithmetic") {
    REQUIRE(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    REQUIRE(Rational(BigInt(1), BigInt(-2)).den() == 1 * 2);
    REQUIRE(Rational(BigInt(1), BigInt(-2)).num() == -1);
    REQUIRE(Rational(BigInt(0), BigInt(7)).den() == 1);
    REQUIRE(Rational(3) + Rational(BigInt(1), BigInt(3)) == Rational(BigInt(10), BigInt(3)));
    REQUIRE(Rational(BigInt(2), BigInt(3)) * Rational(BigInt(3), BigInt(4)) ==
            Rational(BigInt(1), BigInt(2)));
    REQUIRE(Rational(1) / Rational(BigInt(-2), BigInt(5)) == Rational(BigInt(-5), BigInt(2)));
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), DomainError);
    REQUIRE(Rational(BigInt(7), BigInt(3)) > Rational(2));
    REQUIRE(pow(Rational(BigInt(2), BigInt(3)), -2) == Rational(BigInt(9), BigInt(4)));
}

TEST_CASE("rational serialization") {
    REQUIRE(Rational(BigInt(-3), BigInt(6)).str() == "-1/2");
    REQUIRE(Rational(5).str() == "5");
    REQUIRE(parse_rational("-22/7") == Rational(BigInt(-22), BigInt(7)));
    REQUIRE(parse_rational("42") == Rational(42));
    REQUIRE_THROWS_AS(parse_rational("x"), DomainError);
}

TEST_CASE("rationals stay in lowest terms under random operations") {
    th::Gen g(20260819);
    for (int i = 0; i < 500; ++i) {
        Rational a = g.rat(1000, 400), b = g.rat(1000, 400);
        Rational r;
        switch (g.int_in(0, 3)) {
            case 0: r = a + b; break;
            case 1: r = a - b; break;
            case 2: r = a * b; break;
            default: r = b.is_zero() ? a : a / b; break;
        }
        REQUIRE(r.den().sign() > 0);
        REQUIRE(boost::multiprecision::gcd(r.num(), r.den()) == 1);
        if (r.is_zero()) REQUIRE(r.den() == 1);
    }
}

TEST_CASE("binomials") {
    // Oracle: Pascal's triangle built by additions only.
    std::vector<std::vector<BigInt>> pascal{{1}};
    for (int n = 1; n <= 30; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(1));
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] =
                pascal.back()[static_cast<std::size_t>(k - 1)] + pascal.back()[static_cast<std::size_t>(k)];
        pascal.push_back(row);
    }
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(binomial(n, k) == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    REQUIRE(binomial(5, -1) == 0);
    REQUIRE(binomial(5, 6) == 0);
    // C(1/2, 3) = (1/2)(-1/2)(-3/2)/6 = 1/16
    REQUIRE(rational_binomial(Rational(BigInt(1), BigInt(2)), 3) == Rational(BigInt(1), BigInt(16)));
    REQUIRE(rational_binomial(Rational(-1), 2) == Rational(1));
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly walk = L({{1, 1}, {-1, 1}}); // x + 1/x
    REQUIRE(laurent_arith(walk, walk, '*') == L({{2, 1}, {0, 2}, {-2, 1}}));
    th::Gen g(7);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly p = g.laurent();
        REQUIRE(laurent_arith(p, LaurentPoly(), '+') == p);
    }
    REQUIRE(laurent_arith(L({{0, 1}, {-2, -1}}), L({{2, 1}}), '*') == L({{2, 1}, {0, -1}}));
}

TEST_CASE("laurent degree bounds and zero pruning") {
    LaurentPoly p = L({{-2, 3}, {5, 1}});
    REQUIRE(p.min_deg() == -2);
    REQUIRE(p.max_deg() == 5);
    LaurentPoly z = p - p;
    REQUIRE(z.is_zero());
    REQUIRE(!z.min_deg().has_value());
    REQUIRE(!z.max_deg().has_value());
    REQUIRE(z.term_count() == 0);
    // cancellation in the middle of a sum must prune too
    LaurentPoly q = L({{0, 1}, {1, 2}}) + L({{1, -2}, {3, 4}});
    REQUIRE(q == L({{0, 1}, {3, 4}}));
    REQUIRE(q.coeff(1).is_zero());
}

TEST_CASE("series arithmetic") {
    SeriesT one_plus = SC({1, 1, 0, 0, 0, 0});
    SeriesT one_minus = SC({1, -1, 0, 0, 0, 0});
    REQUIRE(series_arith(one_plus, one_minus, '*') == SC({1, 0, -1, 0, 0, 0}));

    // the order-2 walk series times 1 is itself
    SeriesT f2 = S({L({{0, 1}}), L({{1, 1}}), L({{0, 1}, {2, 1}})});
    REQUIRE(f2 * SeriesT::one(2) == f2);

    SECTION("mixed orders truncate to the smaller") {
        SeriesT a = SC({1, 2, 3, 4});
        SeriesT b = SC({5, 6});
        REQUIRE((a + b).order() == 1);
        REQUIRE((a * b).order() == 1);
        REQUIRE((a * b) == SC({5, 16}));
    }

    SECTION("ring laws on random inputs") {
        th::Gen g(99);
        for (int i = 0; i < 60; ++i) {
            SeriesT a = g.series(4), b = g.series(4), c = g.series(4);
            REQUIRE(a * b == b * a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + b == b + a);
            REQUIRE((a + b) + c == a + (b + c));
        }
    }
}

TEST_CASE("series inverse") {
    REQUIRE(series_inverse(SC({1, -1, 0, 0, 0})) == SC({1, 1, 1, 1, 1}));

    SeriesT kernel_unit = S({L({{0, 1}}), L({{1, -1}, {-1, -1}}), LaurentPoly()});
    SeriesT inv = series_inverse(kernel_unit);
    REQUIRE(inv.coeff(0) == L({{0, 1}}));
    REQUIRE(inv.coeff(1) == L({{1, 1}, {-1, 1}}));
    REQUIRE(inv.coeff(2) == L({{2, 1}, {0, 2}, {-2, 1}}));

    SeriesT xt = S({L({{1, 1}}), L({{0, 1}})}); // x + t
    REQUIRE(series_inverse(xt) == S({L({{-1, 1}}), L({{-2, -1}})}));

    REQUIRE_THROWS_MATCHES(series_inverse(S({L({{0, 1}, {1, 1}}), LaurentPoly()})), DomainError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::StartsWith("NotInvertible")));
    REQUIRE_THROWS_AS(series_inverse(SC({0, 1})), DomainError);

    SECTION("multiply-back property") {
        th::Gen g(123);
        for (int i = 0; i < 60; ++i) {
            SeriesT a = g.series(5);
            a.set_coeff(0, LaurentPoly::monomial(static_cast<int>(g.int_in(-2, 2)),
                                                 Rational(BigInt(g.int_in(1, 9)), BigInt(g.int_in(1, 4)))));
            REQUIRE(a * series_inverse(a) == SeriesT::one(5));
        }
    }
}

TEST_CASE("series sqrt") {
    REQUIRE(series_sqrt(SeriesT::one(5)) == SeriesT::one(5));
    REQUIRE(series_sqrt(SC({1, 0, -4, 0, 0, 0, 0})) == SC({1, 0, -2, 0, -2, 0, -4}));
    REQUIRE(series_sqrt(SC({1, 2, 1, 0, 0})) == SC({1, 1, 0, 0, 0}));
    REQUIRE_THROWS_MATCHES(series_sqrt(SC({2, 0})), DomainError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::StartsWith("BadConstantTerm")));
    REQUIRE_THROWS_AS(series_sqrt(S({L({{0, 1}}), L({{1, 1}})})), std::invalid_argument);

    SECTION("square-back property") {
        th::Gen g(321);
        for (int i = 0; i < 40; ++i) {
            SeriesT a(6);
            a.set_coeff(0, LaurentPoly(1));
            for (int n = 1; n <= 6; ++n) a.set_coeff(n, LaurentPoly(g.rat()));
            SeriesT r = series_sqrt(a);
            REQUIRE(r * r == a);
            REQUIRE(r.coeff(0) == LaurentPoly(1));
        }
    }
}

TEST_CASE("nonneg part") {
    SeriesT a = S({L({{-1, 1}, {0, 1}, {1, 1}})});
    REQUIRE(nonneg_part(a) == S({L({{0, 1}, {1, 1}})}));

    // (1 - 1/x^2)(1 + (x + 1/x) t): t^0 -> 1, t^1 -> x - 1/x^3 -> x
    SeriesT prod = S({L({{0, 1}, {-2, -1}}), LaurentPoly()}) *
                   S({L({{0, 1}}), L({{1, 1}, {-1, 1}})});
    REQUIRE(nonneg_part(prod) == S({L({{0, 1}}), L({{1, 1}})}));

    SECTION("linear and idempotent") {
        th::Gen g(555);
        for (int i = 0; i < 60; ++i) {
            SeriesT a = g.series(4), b = g.series(4);
            Rational s = g.rat(), u = g.rat();
            SeriesT lhs = nonneg_part(s * a + u * b);
            SeriesT rhs = s * nonneg_part(a) + u * nonneg_part(b);
            REQUIRE(lhs == rhs);
            REQUIRE(nonneg_part(nonneg_part(a)) == nonneg_part(a));
        }
        SeriesT c = g.series(4, 0, 3); // no negative exponents
        REQUIRE(nonneg_part(c) == c);
    }
}

TEST_CASE("valuation") {
    REQUIRE(valuation(SC({0, 0, 1, 1})) == 2);
    REQUIRE(!valuation(SeriesT(10)).has_value());
    SeriesT f2 = S({L({{0, 1}}), L({{1, 1}}), L({{0, 1}, {2, 1}})});
    REQUIRE(valuation(f2 - SeriesT::one(2)) == 1);
}

TEST_CASE("laurent series in t") {
    // normalization strips leading zeros
    LaurentSeriesT a(-2, 2, {LaurentPoly(), LaurentPoly(), LaurentPoly(3), LaurentPoly(1), LaurentPoly()});
    REQUIRE(a.valuation() == 0);
    REQUIRE(a.order() == 2);
    REQUIRE(a.coeff(0) == LaurentPoly(3));
    REQUIRE(a.coeff(-2).is_zero());

    // reciprocal of t^2(1+t): valuation -2, alternating signs
    LaurentSeriesT b(2, 6, {LaurentPoly(1), LaurentPoly(1), LaurentPoly(), LaurentPoly(), LaurentPoly()});
    LaurentSeriesT r = b.reciprocal();
    REQUIRE(r.valuation() == -2);
    REQUIRE(r.coeff(-2) == LaurentPoly(1));
    REQUIRE(r.coeff(-1) == LaurentPoly(-1));
    REQUIRE(r.coeff(0) == LaurentPoly(1));
    // multiply back: must be 1 on the overlap
    LaurentSeriesT prod = b * r;
    REQUIRE(prod.valuation() == 0);
    REQUIRE(prod.coeff(0) == LaurentPoly(1));
    for (int n = 1; n <= prod.order(); ++n) REQUIRE(prod.coeff(n).is_zero());

    REQUIRE_THROWS_AS(r.to_series(), DomainError);
    REQUIRE(LaurentSeriesT::from_series(SC({0, 5})).valuation() == 1);

    SECTION("valuations add under multiplication") {
        th::Gen g(777);
        for (int i = 0; i < 40; ++i) {
            int va = static_cast<int>(g.int_in(-3, 3)), vb = static_cast<int>(g.int_in(-3, 3));
            std::vector<LaurentPoly> ca{LaurentPoly(g.int_in(1, 5)), g.laurent(), g.laurent()};
            std::vector<LaurentPoly> cb{LaurentPoly(g.int_in(1, 5)), g.laurent(), g.laurent()};
            LaurentSeriesT x(va, va + 2, ca), y(vb, vb + 2, cb);
            REQUIRE((x * y).valuation() == va + vb);
        }
    }
}
