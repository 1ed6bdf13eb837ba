#pragma once

#include "charvar/dt.hpp"
#include "charvar/series.hpp"

#include <optional>
#include <string_view>

namespace charvar {

// The invariants the engine computes. IE depends on the side; IP, P, IPVar
// and Euler do not. ET and IEVar exist on both sides but only for sl2.
enum class InvariantKind { IE, IP, P, ET, IEVar, IPVar, Euler };

const char* kind_name(InvariantKind k);
std::optional<InvariantKind> kind_from_name(std::string_view name);

// Weight carried by the deepest singular stratum: the number of torsion
// points acting, 2^{2g} for sl2 and 1 for pgl2. Every closed form below is
// polynomial in this weight, and the pgl2 formulas are the sl2 ones with
// the weight set to 1. gl2 invariants are products of pgl2 invariants with
// an abelian factor, so they use weight 1 as well.
Integer torsion_weight(Group group, int g);

// Complex dimension of the moduli space: 6g-6 for sl2/pgl2, 8g-6 for gl2.
int moduli_dim(Group group, int g);

// Intersection E-polynomial of the character variety, a palindromic
// polynomial in q of degree 2*moduli_dim. Internally cross-checked:
// integer coefficients, palindromy, the sl2 value is a polynomial in q^2,
// and for pgl2 the torsion-weight specialization agrees with an
// independently transcribed closed form.
LaurentPoly ie_betti(Group group, int g);

// E-polynomial of the smooth locus of the rank-2 Higgs moduli space with
// the given torsion weight, in u,v.
LaurentPoly e_dol_smooth(int g, const Integer& N);

// Intersection E-polynomial of the Higgs moduli space, in u,v. Two routes
// are computed (stratum assembly and a direct closed form) and must agree.
LaurentPoly ie_dol(Group group, int g);

// Intersection Poincare polynomial in t. Coefficients are checked to be
// non-negative integers.
LaurentPoly ip(Group group, int g);

// Ordinary Poincare polynomial of the sl2 moduli space in t.
LaurentPoly p_ordinary(int g);

// E-polynomial of the semismall desingularization of the sl2 moduli space
// (q-form on the Betti side, u,v-form on the Dolbeault side). Two routes
// are computed (closed form and smooth-plus-fibers assembly) and must
// agree; the Betti value must be palindromic.
LaurentPoly e_t(Side side, int g);

// The parts of the sl2 intersection invariants on which the 2-torsion of
// the Jacobian acts non-trivially; the complementary invariant parts are
// the pgl2 invariants. Each equals the closed form displayed for it and
// the difference sl2 - pgl2 of the full invariants.
struct VariantPolys {
    LaurentPoly ie_betti;
    LaurentPoly ie_dol;
    LaurentPoly ip;
};
VariantPolys variant_polys(int g);

// Intersection Euler characteristic: 2^{2g-2}(2^{2g-1}+1) for sl2 and
// 3*2^{2g-3} for pgl2, cross-checked against the q=1 and u=v=1 values of
// the intersection E-polynomials. Unsupported for gl2 (the abelian factor
// makes it vanish).
Integer euler_char(Group group, int g);

// t^{2 dim} p(-1/t): the curious hard Lefschetz/purity companion of a
// one-variable Laurent polynomial. Applied to IP it returns the diagonal
// u = v = t specialization of the Dolbeault intersection E-polynomial.
LaurentPoly purity_transform(const LaurentPoly& p, int dim);

// Truncated Taylor expansion of (1+t^3)^{2g} / ((1-t^2)(1-t^4)), the
// closed series matching IP below degree 4g-4 up to the single correction
// term -2g t^{4g-5}.
TruncatedSeries ip_leading_series(int g, int order);

// Predicted low-order part of ip - p_ordinary for g >= 6:
// 2g t^3 + t^4 + 2g t^5 - (C(2g,3) - C(2g,2) - 2g) t^6.
LaurentPoly ip_minus_p_low_order(int g);

// One computed invariant, ready for formatting.
struct InvariantResult {
    InvariantKind kind;
    Group group;
    std::optional<Side> side; // engaged only for side-dependent kinds
    int genus;
    Integer torsion;
    LaurentPoly poly; // Euler characteristics are constant polynomials
};

// Dispatch by kind with combination validation: throws
// UnsupportedKindError when the kind requires a side and none is given (or
// vice versa) and UnsupportedGroupError for kinds not defined for the
// group (p, e-t, ie-var, ip-var are sl2-only; euler excludes gl2).
InvariantResult compute_invariant(InvariantKind kind, Group group,
                                  std::optional<Side> side, int g);

} // namespace charvar
