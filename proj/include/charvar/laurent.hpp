#pragma once

#include "charvar/errors.hpp"
#include "charvar/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

// The fixed variable universe. Polynomials may use any subset, with one
// restriction: q abbreviates the product uv, so q never appears together
// with u or v in a single polynomial. Exponent vectors compare
// lexicographically in this order, which fixes the canonical term order.
enum class Var : int { u = 0, v = 1, t = 2, q = 3 };

inline constexpr int kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::u, Var::v, Var::t, Var::q};

const char* var_name(Var x);
std::optional<Var> var_from_name(std::string_view name);

// Integer exponent vector indexed by Var. Negative entries are allowed:
// these are Laurent polynomials.
using Exp = std::array<int, kNumVars>;

inline int exp_of(const Exp& e, Var x) { return e[static_cast<int>(x)]; }

// Sparse multivariate Laurent polynomial over the rationals in canonical
// form: no zero coefficients are stored and terms are kept sorted by
// lexicographic order on the exponent vector. Equality is structural.
class LaurentPoly {
public:
    using TermMap = std::map<Exp, Rational>;

    LaurentPoly() = default; // zero

    static LaurentPoly constant(Rational c);
    static LaurentPoly variable(Var x);
    static LaurentPoly monomial(Rational c, Var x, int e);
    static LaurentPoly monomial(Rational c, const Exp& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool uses(Var x) const;
    bool uses_any(std::initializer_list<Var> xs) const;
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Exp& e) const;
    // Coefficient of x^d in a polynomial whose only variable is x (or which
    // is constant).
    Rational coeff(Var x, int d) const;

    // Largest / smallest exponent of x over all terms; 0 for the zero
    // polynomial and for polynomials not involving x.
    int degree(Var x) const;
    int low_degree(Var x) const;
    // Largest total degree (sum of exponents) over all terms; 0 for zero.
    int total_degree() const;

    // Variables that actually occur, in canonical u < v < t < q order.
    std::vector<Var> variables() const;

    Rational evaluate(const std::map<Var, Rational>& point) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator-(const LaurentPoly& a);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Internal: adds c * x^e and drops the term if the sum cancels.
    void add_term(const Exp& e, const Rational& c);

private:
    TermMap terms_;
};

// Convenience constructors for the common one-variable building blocks.
inline LaurentPoly P_one() { return LaurentPoly::constant(1); }
inline LaurentPoly P_const(Rational c) { return LaurentPoly::constant(std::move(c)); }
inline LaurentPoly P_var(Var x) { return LaurentPoly::variable(x); }
// x^e with integer (possibly negative) exponent.
inline LaurentPoly P_mono(Var x, int e, Rational c = 1) { return LaurentPoly::monomial(std::move(c), x, e); }
// 1 - x^e
LaurentPoly one_minus(Var x, int e);
// 1 + x^e
LaurentPoly one_plus(Var x, int e);

// p^n. n may be negative only when p is a single term (every monomial is a
// unit in the Laurent ring).
LaurentPoly pow(const LaurentPoly& p, long n);

// Carried by exact_div on failure. The remainder at the point of failure is
// preserved: a nonzero remainder is evidence of a transcription error in a
// closed form, and the tests inspect it.
class NonExactDivisionError : public Error {
public:
    NonExactDivisionError(const std::string& msg, LaurentPoly remainder)
        : Error(msg), remainder_(std::move(remainder)) {}
    const LaurentPoly& remainder() const { return remainder_; }

private:
    LaurentPoly remainder_;
};

// Exact division in the Laurent polynomial ring. Throws
// NonExactDivisionError unless den divides num exactly; the engine never
// forms rational functions.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Ring homomorphism determined by var -> image for each var in rules;
// variables without a rule map to themselves. Negative exponents require the
// image to be a single term. Alias mixing created by a substitution is
// rejected exactly as in the ring operations.
LaurentPoly substitute(const LaurentPoly& p, const std::map<Var, LaurentPoly>& rules);

// The even-power collapse from^2 -> to (e.g. t^2 -> q). Every exponent of
// `from` must be even; otherwise throws OddExponentError.
LaurentPoly collapse_square(const LaurentPoly& p, Var from, Var to);

// Palindromy of a one-variable polynomial about the given center:
// coeff(d) == coeff(2*center - d) for all d. The doubled-center variant
// supports half-integer centers (odd-degree palindromes).
bool is_palindromic(const LaurentPoly& p, int center);
bool is_palindromic_doubled(const LaurentPoly& p, int two_center);

// Terms of total degree <= bound (used for table truncation).
LaurentPoly truncate_total_degree(const LaurentPoly& p, int bound);

// Canonical text rendering: ascending term order, explicit signs, "*"
// between coefficient and variables, "^" for exponents != 1. The zero
// polynomial renders as "0".
std::string to_string(const LaurentPoly& p);

} // namespace charvar
