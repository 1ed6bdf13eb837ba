#include "charvar/series.hpp"

#include <algorithm>
#include <sstream>

namespace charvar {

TruncatedSeries::TruncatedSeries(Var var, int order) : var_(var), order_(order) {
    if (order < 0) throw Error("series order must be non-negative");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, Var var, int order) {
    TruncatedSeries s(var, order);
    for (const auto& [e, c] : p.terms()) {
        int deg = 0;
        for (Var x : kAllVars) {
            int k = e[static_cast<int>(x)];
            if (k == 0) continue;
            if (x != var)
                throw Error(std::string("from_poly: polynomial uses ") + var_name(x) +
                            ", expected only " + var_name(var));
            deg = k;
        }
        if (deg < 0) throw Error("from_poly: negative exponent is not a power series");
        if (deg <= order) s.c_[static_cast<size_t>(deg)] = c;
    }
    return s;
}

const Rational& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_) throw Error("series coefficient index out of range");
    return c_[static_cast<size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, Rational c) {
    if (k < 0 || k > order_) throw Error("series coefficient index out of range");
    c_[static_cast<size_t>(k)] = std::move(c);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) throw Error("cannot extend a truncated series");
    TruncatedSeries s(var_, new_order);
    for (int k = 0; k <= new_order; ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
    return s;
}

namespace {
void check_var(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.var() != b.var()) throw Error("series operands use different variables");
}
} // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_var(a, b);
    int order = std::min(a.order(), b.order());
    TruncatedSeries s(a.var(), order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, a.coeff(k) + b.coeff(k));
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_var(a, b);
    int order = std::min(a.order(), b.order());
    TruncatedSeries s(a.var(), order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, a.coeff(k) - b.coeff(k));
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_var(a, b);
    int order = std::min(a.order(), b.order());
    TruncatedSeries s(a.var(), order);
    for (int k = 0; k <= order; ++k) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
        s.set_coeff(k, acc);
    }
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries s(a.var(), a.order());
    for (int k = 0; k <= a.order(); ++k) s.set_coeff(k, a.coeff(k) * c);
    return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return var_ == o.var_ && order_ == o.order_ && c_ == o.c_;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
    if (s.coeff(0) == 0)
        throw NonUnitConstantTermError("reciprocal of a series with zero constant term");
    TruncatedSeries r(s.var(), s.order());
    Rational inv0 = Rational(1) / s.coeff(0);
    r.set_coeff(0, inv0);
    for (int k = 1; k <= s.order(); ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) acc += s.coeff(i) * r.coeff(k - i);
        r.set_coeff(k, -acc * inv0);
    }
    return r;
}

std::string to_string(const TruncatedSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k) == 0) continue;
        const Rational& c = s.coeff(k);
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        Rational mag = negative ? Rational(-c) : c;
        if (k == 0) {
            os << to_string(mag);
        } else {
            std::string var = var_name(s.var());
            if (k != 1) var += "^" + std::to_string(k);
            if (mag == 1)
                os << var;
            else
                os << to_string(mag) << "*" << var;
        }
    }
    if (first) os << "0";
    os << " + O(" << var_name(s.var()) << "^" << s.order() + 1 << ")";
    return os.str();
}

} // namespace charvar
