#pragma once

#include "charvar/laurent.hpp"
#include "charvar/rational.hpp"

#include <string>
#include <vector>

namespace charvar {

// Univariate formal power series truncated at a stated order (inclusive).
// Coefficients are exact rationals. Binary operations truncate to the
// smaller of the two orders; comparisons are exact on variable, order and
// every stored coefficient.
class TruncatedSeries {
public:
    TruncatedSeries(Var var, int order);

    // Reads a polynomial off as a series. The polynomial must involve no
    // variable besides var and must have no negative exponents; terms above
    // the order are discarded.
    static TruncatedSeries from_poly(const LaurentPoly& p, Var var, int order);

    Var var() const { return var_; }
    int order() const { return order_; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, Rational c);

    TruncatedSeries truncated(int new_order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c);

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    Var var_;
    int order_;
    std::vector<Rational> c_; // c_[k] multiplies var^k, k = 0..order_
};

// Multiplicative inverse as a series; requires a nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& s);

std::string to_string(const TruncatedSeries& s);

} // namespace charvar
