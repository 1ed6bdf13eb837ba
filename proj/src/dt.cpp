#include "charvar/dt.hpp"

#include "charvar/fraction.hpp"

#include <cstdlib>

namespace charvar {

namespace {

void require_genus(int g, int min) {
    if (g < min) throw Error("genus must be at least " + std::to_string(min));
}

Integer ceil_half(int n) { return n <= 0 ? Integer(0) : Integer((n + 1) / 2); }
Integer floor_half(int n) { return n <= 0 ? Integer(0) : Integer(n / 2); }

} // namespace

MultiplicityVector a_coeffs(int g) {
    require_genus(g, 2);
    MultiplicityVector mv{MultKind::ACoeff, g, {}};
    for (int i = -(2 * g - 4); i <= 2 * g - 4; ++i)
        mv.values[i] = ceil_half(2 * g - 3 - std::abs(i));
    return mv;
}

MultSums multiplicity_sums(int g) {
    require_genus(g, 2);
    LaurentPoly ceil_lit, floor_lit;
    for (int i = -(2 * g - 3); i <= 2 * g - 3; ++i) {
        int n = 2 * g - 3 - std::abs(i);
        ceil_lit += P_mono(Var::q, 2 * g - 3 + i, Rational(ceil_half(n)));
        floor_lit += P_mono(Var::q, 2 * g - 3 + i, Rational(floor_half(n)));
    }
    LaurentPoly den = one_minus(Var::q, 1) * one_minus(Var::q, 2);
    LaurentPoly ceil_closed = exact_div(
        P_var(Var::q) * one_minus(Var::q, 2 * g - 3) * one_minus(Var::q, 2 * g - 2), den);
    LaurentPoly floor_closed = exact_div(
        P_mono(Var::q, 2) * one_minus(Var::q, 2 * g - 4) * one_minus(Var::q, 2 * g - 3), den);
    if (ceil_closed != ceil_lit)
        throw IdentityMismatchError("multiplicity_sums: ceiling closed form != literal sum");
    if (floor_closed != floor_lit)
        throw IdentityMismatchError("multiplicity_sums: floor closed form != literal sum");
    return {ceil_closed, floor_closed};
}

MultiplicityVector b_coeffs(int g) {
    require_genus(g, 2);
    // the long numerator factor 1 - q^4 - q^{2g-3} - q^{2g-1} + 2q^{2g}
    LaurentPoly bracket = P_one() - P_mono(Var::q, 4) - P_mono(Var::q, 2 * g - 3) -
                          P_mono(Var::q, 2 * g - 1) + P_mono(Var::q, 2 * g, Rational(2));
    LaurentPoly q1 = one_minus(Var::q, 1);
    LaurentPoly q2 = one_minus(Var::q, 2);
    Frac expr(one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g) * bracket,
              q1 * q1 * q1 * q2);
    expr -= Frac(one_minus(Var::q, 2 * g), q2);
    expr -= Frac(P_var(Var::q) * one_minus(Var::q, 2 * g - 3) * one_minus(Var::q, 2 * g - 2),
                 q1 * q2);
    LaurentPoly poly = expr.poly();

    MultiplicityVector mv{MultKind::BCoeff, g, {}};
    for (const auto& [e, c] : poly.terms()) {
        int j = e[static_cast<int>(Var::q)] - (3 * g - 3);
        if (!is_integer(c))
            throw NonIntegerCoefficientError("b_coeffs: non-integer multiplicity at shift " +
                                             std::to_string(j));
        if (c < 0)
            throw NegativeMultiplicityError("b_coeffs: negative multiplicity at shift " +
                                            std::to_string(j));
        mv.values[j] = numerator(c);
    }
    return mv;
}

namespace {

// In a u,v context the assembly reads q as uv.
LaurentPoly context_q(const LaurentPoly& e_m, const SplitPoly& sigma,
                      const LaurentPoly& e_omega) {
    bool uv = false;
    for (const LaurentPoly* p : {&e_m, &sigma.plus, &sigma.minus, &e_omega})
        if (p->uses(Var::u) || p->uses(Var::v)) uv = true;
    if (uv) return LaurentPoly::monomial(1, Exp{1, 1, 0, 0});
    return P_var(Var::q);
}

LaurentPoly ie_correction(const SplitPoly& sigma, const LaurentPoly& e_omega,
                          const LaurentPoly& q, int g) {
    LaurentPoly q2 = q * q;
    LaurentPoly factor_num = P_one() - pow(q, 2 * g - 4);
    LaurentPoly factor_den = P_one() - q2;
    LaurentPoly num = (q2 * sigma.plus + q * sigma.minus) * factor_num;
    return exact_div(num, factor_den) + e_omega * pow(q, 2 * g - 2);
}

} // namespace

LaurentPoly assemble_ie(const LaurentPoly& e_m, const SplitPoly& sigma,
                        const LaurentPoly& e_omega, int g) {
    require_genus(g, 2);
    LaurentPoly q = context_q(e_m, sigma, e_omega);
    return e_m + ie_correction(sigma, e_omega, q, g);
}

LaurentPoly invert_ie(const LaurentPoly& ie, const SplitPoly& sigma,
                      const LaurentPoly& e_omega, int g) {
    require_genus(g, 2);
    LaurentPoly q = context_q(ie, sigma, e_omega);
    return ie - ie_correction(sigma, e_omega, q, g);
}

LaurentPoly e_d2_circ(Side side, int g) {
    require_genus(g, 2);
    IncidenceData inc = incidence_poincare(g);
    LaurentPoly compositional, closed;

    if (side == Side::Betti) {
        SigmaOmega so = e_sigma_omega({Group::SL2, Side::Betti, g});
        compositional = inc.split.plus * (so.sigma.plus - so.omega) +
                        inc.split.minus * so.sigma.minus;

        LaurentPoly q1 = one_minus(Var::q, 1);
        Frac f(one_minus(Var::q, 2 * g - 2) *
                   (one_minus(Var::q, 2 * g - 3) * pow(one_minus(Var::q, 1), 2 * g - 1) +
                    one_plus(Var::q, 2 * g - 3) * pow(one_plus(Var::q, 1), 2 * g - 1)),
               Rational(2) * q1);
        f -= Frac(Rational(pow2(2 * g)) * pow(one_minus(Var::q, 2 * g - 2), 2),
                  one_minus(Var::q, 2) * q1);
        closed = f.poly();
    } else {
        LaurentPoly uv = LaurentPoly::monomial(1, Exp{1, 1, 0, 0});
        std::map<Var, LaurentPoly> to_uv{{Var::q, uv}};
        SigmaOmega so = e_sigma_omega({Group::SL2, Side::Dolbeault, g});
        compositional = substitute(inc.split.plus, to_uv) * (so.sigma.plus - so.omega) +
                        substitute(inc.split.minus, to_uv) * so.sigma.minus;

        LaurentPoly w1 = P_one() - uv;
        LaurentPoly wg = pow(uv, g);
        LaurentPoly minus_pair = pow(one_minus(Var::u, 1), g) * pow(one_minus(Var::v, 1), g);
        LaurentPoly plus_pair = pow(one_plus(Var::u, 1), g) * pow(one_plus(Var::v, 1), g);
        Frac inner(minus_pair * (P_one() - pow(uv, 2 * g - 3)), w1);
        inner += Frac(plus_pair * (P_one() + pow(uv, 2 * g - 3)), P_one() + uv);
        Frac f = Frac(Rational(1, 2) * wg * (P_one() - pow(uv, 2 * g - 2)), w1) * inner;
        f -= Frac(Rational(pow2(2 * g)) * pow(P_one() - pow(uv, 2 * g - 2), 2),
                  (P_one() - uv * uv) * w1);
        closed = f.poly();
    }

    if (compositional != closed)
        throw IdentityMismatchError("e_d2_circ: compositional value differs from closed form");
    return compositional;
}

} // namespace charvar
