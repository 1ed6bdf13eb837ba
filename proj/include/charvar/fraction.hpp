#pragma once

#include "charvar/laurent.hpp"

namespace charvar {

// Formal quotient of Laurent polynomials, used while transcribing closed
// forms whose individual terms have denominators even though the total is a
// polynomial. No reduction is performed along the way; poly() performs one
// exact division at the end and throws if the sum is not a polynomial.
struct Frac {
    LaurentPoly num;
    LaurentPoly den;

    Frac() : num(), den(P_one()) {}
    /* implicit */ Frac(LaurentPoly n) : num(std::move(n)), den(P_one()) {}
    Frac(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw Error("Frac: zero denominator");
    }

    Frac& operator+=(const Frac& o) {
        num = num * o.den + o.num * den;
        den = den * o.den;
        return *this;
    }
    Frac& operator-=(const Frac& o) {
        num = num * o.den - o.num * den;
        den = den * o.den;
        return *this;
    }
    Frac& operator*=(const Frac& o) {
        num = num * o.num;
        den = den * o.den;
        return *this;
    }

    friend Frac operator+(Frac a, const Frac& b) { return a += b; }
    friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
    friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
    friend Frac operator-(const Frac& a) { return Frac(-a.num, a.den); }

    // The exact polynomial value; throws NonExactDivisionError if the
    // accumulated fraction is not a polynomial.
    LaurentPoly poly() const { return exact_div(num, den); }
};

} // namespace charvar
