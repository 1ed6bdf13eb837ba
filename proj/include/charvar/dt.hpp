#pragma once

#include "charvar/rational.hpp"
#include "charvar/strata.hpp"

#include <map>

namespace charvar {

// Multiplicities of the summands supported on the two singular strata.
// ACoeff entries are indexed by the perverse shift i with |i| <= 2g-4;
// BCoeff entries by the shift j with |j| <= 3g-4. Lookups outside the
// stored range return zero.
enum class MultKind { ACoeff, BCoeff };

struct MultiplicityVector {
    MultKind kind;
    int genus;
    std::map<int, Integer> values;

    Integer at(int i) const {
        auto it = values.find(i);
        return it == values.end() ? Integer(0) : it->second;
    }
};

// Middle-stratum multiplicities a(i) = ceil((2g-3-|i|)/2).
MultiplicityVector a_coeffs(int g);

// Generating sums of the ceiling and floor multiplicity families,
// sum_i ceil((2g-3-|i|)/2) q^{2g-3+i} and the floor analogue. The closed
// forms q(1-q^{2g-3})(1-q^{2g-2})/((1-q)(1-q^2)) and
// q^2(1-q^{2g-4})(1-q^{2g-3})/((1-q)(1-q^2)) are checked against the
// literal sums and an IdentityMismatchError is thrown on disagreement.
struct MultSums {
    LaurentPoly ceil_sum;
    LaurentPoly floor_sum;
};

MultSums multiplicity_sums(int g);

// Deepest-stratum multiplicities b(j), read off as the coefficients of
// q^{j+3g-3} in the displayed rational expression. Throws
// NonExactDivisionError if the expression fails to be a polynomial and
// NegativeMultiplicityError if any coefficient is negative.
MultiplicityVector b_coeffs(int g);

// The master assembly: IE = e_m + (q^2 sigma.plus + q sigma.minus)
// * (1-q^{2g-4})/(1-q^2) + e_omega * q^{2g-2}. In a u,v context every q
// power is read as a power of uv. At g = 2 the correction factor vanishes
// identically; that degeneration is accepted silently.
LaurentPoly assemble_ie(const LaurentPoly& e_m, const SplitPoly& sigma,
                        const LaurentPoly& e_omega, int g);

// Algebraic inversion of assemble_ie: recovers e_m from the intersection
// E-polynomial and the stratum data.
LaurentPoly invert_ie(const LaurentPoly& ie, const SplitPoly& sigma,
                      const LaurentPoly& e_omega, int g);

// E-polynomial of the open part of the middle exceptional divisor,
// computed compositionally as I^+ (sigma.plus - e_omega) + I^- sigma.minus
// and checked against the displayed closed form for the requested side.
// Throws IdentityMismatchError if the two routes disagree.
LaurentPoly e_d2_circ(Side side, int g);

} // namespace charvar
