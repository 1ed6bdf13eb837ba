#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace charvar {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with positive denominator, which is exactly the canonical
// form required of every coefficient in this library. Nothing is ever
// rounded; all arithmetic is exact.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Integer pow2(unsigned e) { return Integer(1) << e; }

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1; // exact: product of j consecutive integers is divisible by j!
    }
    return acc;
}

} // namespace charvar
