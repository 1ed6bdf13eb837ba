#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/fraction.hpp"
#include "charvar/laurent.hpp"
#include "charvar/series.hpp"

using namespace charvar;

namespace {

// Dense univariate builder: coefficients for x^0, x^1, ...
LaurentPoly upoly(Var x, std::initializer_list<long> coeffs) {
    LaurentPoly p;
    int d = 0;
    for (long c : coeffs) p += P_mono(x, d++, Rational(c));
    return p;
}

} // namespace

TEST_CASE("ring operations on small inputs") {
    LaurentPoly q = P_var(Var::q);

    CHECK(one_minus(Var::q, 1) * one_plus(Var::q, 1) == upoly(Var::q, {1, 0, -1}));
    CHECK(pow(one_plus(Var::q, 1), 0) == P_one());
    CHECK(P_const(0) == LaurentPoly());
    CHECK((q - q).is_zero());

    // ((1-u)(1-v))^2 expanded fully, coefficients computed by hand.
    LaurentPoly lhs = pow(one_minus(Var::u, 1) * one_minus(Var::v, 1), 2);
    LaurentPoly rhs;
    auto term = [&](long c, int eu, int ev) {
        rhs += LaurentPoly::monomial(Rational(c), Exp{eu, ev, 0, 0});
    };
    term(1, 0, 0);
    term(-2, 1, 0);
    term(-2, 0, 1);
    term(1, 2, 0);
    term(4, 1, 1);
    term(1, 0, 2);
    term(-2, 2, 1);
    term(-2, 1, 2);
    term(1, 2, 2);
    CHECK(lhs == rhs);
}

TEST_CASE("canonical form drops cancelled terms") {
    LaurentPoly p = upoly(Var::q, {1, 3}) - upoly(Var::q, {0, 3});
    CHECK(p == P_one());
    CHECK(p.terms().size() == 1);
    // adding then subtracting the same term restores the original map
    LaurentPoly r = p;
    r += P_mono(Var::q, 7, Rational(5));
    r -= P_mono(Var::q, 7, Rational(5));
    CHECK(r == p);
}

TEST_CASE("alias exclusion between q and u,v") {
    LaurentPoly q = P_var(Var::q);
    LaurentPoly u = P_var(Var::u);
    CHECK_THROWS_AS(q * u, MixedAliasError);
    CHECK_THROWS_AS(q + u, MixedAliasError);
    CHECK_THROWS_AS(LaurentPoly::monomial(1, Exp{1, 0, 0, 1}), MixedAliasError);
    // t mixes freely with either side
    CHECK_NOTHROW(q * P_var(Var::t));
    CHECK_NOTHROW(u * P_var(Var::t));
}

TEST_CASE("exact division") {
    // (1-q^4)/(1-q^2) = 1+q^2
    CHECK(exact_div(one_minus(Var::q, 4), one_minus(Var::q, 2)) == one_plus(Var::q, 2));

    // (1-q^3)/(1-q^2) fails and carries a remainder
    CHECK_THROWS_AS(exact_div(one_minus(Var::q, 3), one_minus(Var::q, 2)),
                    NonExactDivisionError);

    // (1-q^4)(1-q^3)/(1-q)^2 = 1+2q+3q^2+3q^3+2q^4+q^5
    // oracle: (1+q+q^2+q^3)(1+q+q^2) expanded by hand
    LaurentPoly num = one_minus(Var::q, 4) * one_minus(Var::q, 3);
    LaurentPoly den = pow(one_minus(Var::q, 1), 2);
    CHECK(exact_div(num, den) == upoly(Var::q, {1, 2, 3, 3, 2, 1}));

    // Laurent case: (q - 1)/(1 - q) = -1 (negative exponent shift exercised below)
    CHECK(exact_div(P_var(Var::q) - P_one(), one_minus(Var::q, 1)) == P_const(-1));
    CHECK(exact_div(P_mono(Var::q, 1) - P_mono(Var::q, -1), one_minus(Var::q, 2)) ==
          P_mono(Var::q, -1, Rational(-1)));
}

TEST_CASE("exact division round trip on bivariate inputs") {
    LaurentPoly a = pow(one_minus(Var::u, 1), 2) * one_plus(Var::v, 1) + P_var(Var::u);
    LaurentPoly b = one_minus(Var::u, 1) * one_minus(Var::v, 2) + P_const(3);
    CHECK(exact_div(a * b, b) == a);
    CHECK(exact_div(a * b, a) == b);
}

TEST_CASE("substitution is the expected ring homomorphism") {
    // (q-1)^2 under q -> uv
    LaurentPoly p = pow(P_var(Var::q) - P_one(), 2);
    LaurentPoly uv = P_var(Var::u) * P_var(Var::v);
    LaurentPoly img = substitute(p, {{Var::q, uv}});
    CHECK(img == pow(uv - P_one(), 2));
    CHECK(!img.uses(Var::q));

    // 1 + t^2 + 17t^4 + 17t^6 under t^2 -> q
    LaurentPoly even_t = upoly(Var::t, {1, 0, 1, 0, 17, 0, 17});
    CHECK(collapse_square(even_t, Var::t, Var::q) == upoly(Var::q, {1, 1, 17, 17}));
    CHECK_THROWS_AS(collapse_square(upoly(Var::t, {0, 1}), Var::t, Var::q), OddExponentError);

    // q^6+q^5+17q^4+17q^3 under q -> t^-2, multiplied by t^12
    LaurentPoly diag = upoly(Var::q, {0, 0, 0, 17, 17, 1, 1});
    LaurentPoly back =
        substitute(diag, {{Var::q, P_mono(Var::t, -2)}}) * P_mono(Var::t, 12);
    CHECK(back == upoly(Var::t, {1, 0, 1, 0, 17, 0, 17}));
}

TEST_CASE("substitution with non-monomial images and untouched variables") {
    // u -> -1/t, v -> -1/t turns u*v into t^-2
    LaurentPoly uv = P_var(Var::u) * P_var(Var::v);
    LaurentPoly neg_inv_t = P_mono(Var::t, -1, Rational(-1));
    CHECK(substitute(uv, {{Var::u, neg_inv_t}, {Var::v, neg_inv_t}}) == P_mono(Var::t, -2));

    // untouched variable stays put
    LaurentPoly mixed = P_var(Var::u) + P_var(Var::v);
    LaurentPoly img = substitute(mixed, {{Var::u, P_var(Var::t)}});
    CHECK(img == P_var(Var::t) + P_var(Var::v));
}

TEST_CASE("palindromy checks") {
    CHECK(is_palindromic(upoly(Var::q, {1, 0, 17, 0, 17, 0, 1}), 3));
    CHECK_FALSE(is_palindromic(upoly(Var::q, {1, 0, -4}), 1));
    CHECK(is_palindromic(P_one(), 0));
    CHECK(is_palindromic(LaurentPoly(), 5));
    // odd-degree palindrome via the doubled-center form
    CHECK(is_palindromic_doubled(upoly(Var::q, {1, 1, 2, 2, 1, 1}), 5));
    CHECK_FALSE(is_palindromic_doubled(upoly(Var::q, {1, 1, 2, 1, 1, 2}), 5));
}

TEST_CASE("series arithmetic to a stated order") {
    // oracle for 1/((1-t^2)(1-t^4)): number of ways to write k = 2a + 4b
    auto count = [](int k) {
        long n = 0;
        for (int a = 0; 2 * a <= k; ++a)
            if ((k - 2 * a) % 4 == 0) ++n;
        return Rational(n);
    };
    LaurentPoly den = one_minus(Var::t, 2) * one_minus(Var::t, 4);
    TruncatedSeries s = reciprocal(TruncatedSeries::from_poly(den, Var::t, 6));
    for (int k = 0; k <= 6; ++k) CHECK(s.coeff(k) == count(k));

    TruncatedSeries expected(Var::t, 6);
    expected.set_coeff(0, 1);
    expected.set_coeff(2, 1);
    expected.set_coeff(4, 2);
    expected.set_coeff(6, 2);
    CHECK(s == expected);

    // (1+t^3)^4 * reciprocal to order 3 is 1 + t^2 + 4t^3
    TruncatedSeries num = TruncatedSeries::from_poly(pow(one_plus(Var::t, 3), 4), Var::t, 3);
    TruncatedSeries prod = num * s.truncated(3);
    TruncatedSeries small(Var::t, 3);
    small.set_coeff(0, 1);
    small.set_coeff(2, 1);
    small.set_coeff(3, 4);
    CHECK(prod == small);

    // additive identity at equal order
    TruncatedSeries zero(Var::t, 6);
    CHECK(s + zero == s);

    // operations take the minimum order
    CHECK((s + TruncatedSeries(Var::t, 4)).order() == 4);

    CHECK_THROWS_AS(reciprocal(TruncatedSeries::from_poly(P_var(Var::t), Var::t, 3)),
                    NonUnitConstantTermError);
}

TEST_CASE("series from_poly rejects other variables and negative exponents") {
    CHECK_THROWS_AS(TruncatedSeries::from_poly(P_var(Var::q), Var::t, 3), Error);
    CHECK_THROWS_AS(TruncatedSeries::from_poly(P_mono(Var::t, -1), Var::t, 3), Error);
    // constants are fine
    CHECK(TruncatedSeries::from_poly(P_const(7), Var::t, 2).coeff(0) == 7);
}

TEST_CASE("fraction accumulator") {
    // 1/(1-q) + 1/(1+q) = 2/(1-q^2); times (1-q^2) gives 2
    Frac f(P_one(), one_minus(Var::q, 1));
    f += Frac(P_one(), one_plus(Var::q, 1));
    f *= Frac(one_minus(Var::q, 2));
    CHECK(f.poly() == P_const(2));

    // a non-polynomial total is rejected
    Frac bad(P_one(), one_minus(Var::q, 1));
    CHECK_THROWS_AS(bad.poly(), NonExactDivisionError);
}

TEST_CASE("text rendering") {
    CHECK(to_string(upoly(Var::q, {1, 0, 17, 0, 17, 0, 1})) ==
          "1 + 17*q^2 + 17*q^4 + q^6");
    CHECK(to_string(upoly(Var::q, {1, 0, -4})) == "1 - 4*q^2");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(P_mono(Var::q, -2, Rational(-3))) == "-3*q^-2");
    CHECK(to_string(P_const(Rational(1) / 2) * P_var(Var::t)) == "1/2*t");
    LaurentPoly m = LaurentPoly::monomial(1, Exp{2, 1, 0, 0});
    CHECK(to_string(m) == "u^2*v");
}

TEST_CASE("evaluation at rational points") {
    LaurentPoly p = upoly(Var::q, {1, 0, 17, 0, 17, 0, 1});
    CHECK(p.evaluate({{Var::q, Rational(1)}}) == 36);
    LaurentPoly lp = P_mono(Var::q, -1) + P_var(Var::q);
    CHECK(lp.evaluate({{Var::q, Rational(2)}}) == Rational(5) / 2);
}
