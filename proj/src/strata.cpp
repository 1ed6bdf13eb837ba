#include "charvar/strata.hpp"

#include "charvar/fraction.hpp"

namespace charvar {

namespace {

void require_genus(int g, int min) {
    if (g < min) throw Error("genus must be at least " + std::to_string(min));
}

const Rational kHalf = Rational(1) / 2;

// (1 -/+ u)^g (1 -/+ v)^g
LaurentPoly uv_pair(int g, int sign) {
    LaurentPoly fu = sign > 0 ? one_plus(Var::u, 1) : one_minus(Var::u, 1);
    LaurentPoly fv = sign > 0 ? one_plus(Var::v, 1) : one_minus(Var::v, 1);
    return pow(fu, g) * pow(fv, g);
}

LaurentPoly uv_mono(int e) { return LaurentPoly::monomial(1, Exp{e, e, 0, 0}); }

} // namespace

SplitPoly e_torus_split(int g) {
    require_genus(g, 1);
    LaurentPoly m = pow(one_minus(Var::q, 1), 2 * g);
    LaurentPoly p = pow(one_plus(Var::q, 1), 2 * g);
    return {kHalf * (m + p), kHalf * (m - p)};
}

SplitPoly e_tstar_jac_split(int g) {
    require_genus(g, 1);
    LaurentPoly m = uv_pair(g, -1);
    LaurentPoly p = uv_pair(g, +1);
    LaurentPoly w = uv_mono(g);
    return {kHalf * (w * (m + p)), kHalf * (w * (m - p))};
}

SplitPoly sym2_split(const LaurentPoly& e) {
    std::map<Var, LaurentPoly> square_rules;
    for (Var x : e.variables()) square_rules.emplace(x, P_mono(x, 2));
    LaurentPoly e_sq = substitute(e, square_rules);
    LaurentPoly ee = e * e;
    return {kHalf * (ee + e_sq), kHalf * (ee - e_sq)};
}

SigmaOmega e_sigma_omega(const ModuliSpec& spec) {
    require_genus(spec.genus, 2);
    const int g = spec.genus;
    switch (spec.group) {
    case Group::SL2:
        if (spec.side == Side::Betti) {
            return {e_torus_split(g), P_const(Rational(pow2(2 * g)))};
        }
        return {e_tstar_jac_split(g), P_const(Rational(pow2(2 * g)))};
    case Group::GL2: {
        if (spec.side == Side::Betti) {
            LaurentPoly torus = pow(P_var(Var::q) - P_one(), 2 * g);
            return {sym2_split(torus), torus};
        }
        LaurentPoly tstar_jac = uv_mono(g) * uv_pair(g, -1);
        return {sym2_split(tstar_jac), tstar_jac};
    }
    case Group::PGL2:
        throw UnsupportedGroupError(
            "e_sigma_omega: no separate stratum data for pgl2; derive from sl2");
    }
    throw UnsupportedGroupError("e_sigma_omega: unknown group");
}

IncidenceData incidence_poincare(int g) {
    require_genus(g, 2);
    LaurentPoly full = exact_div(one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g - 3),
                                 pow(one_minus(Var::q, 1), 2));
    LaurentPoly plus = exact_div(pow(one_minus(Var::q, 2 * g - 2), 2),
                                 one_minus(Var::q, 2) * one_minus(Var::q, 1));
    LaurentPoly minus =
        exact_div(P_var(Var::q) * one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g - 4),
                  one_minus(Var::q, 2) * one_minus(Var::q, 1));
    if (plus + minus != full)
        throw ConsistencyError("incidence_poincare: split does not sum to the total");
    return {full, {plus, minus}};
}

MaybeDegenerate e_grassmannian_iso(int k, int g) {
    require_genus(g, 2);
    if (k == 2) {
        LaurentPoly num = one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g);
        LaurentPoly den = one_minus(Var::q, 1) * one_minus(Var::q, 2);
        return {exact_div(num, den), false};
    }
    if (k == 3) {
        if (g == 2) return {LaurentPoly(), true}; // the 1-q^{2g-4} factor vanishes
        LaurentPoly num = one_minus(Var::q, 2 * g - 4) * one_minus(Var::q, 2 * g - 2) *
                          one_minus(Var::q, 2 * g);
        LaurentPoly den =
            one_minus(Var::q, 1) * one_minus(Var::q, 2) * one_minus(Var::q, 3);
        return {exact_div(num, den), false};
    }
    throw Error("e_grassmannian_iso: k must be 2 or 3");
}

ExceptionalData e_exceptional(int g) {
    require_genus(g, 2);
    ExceptionalData out;
    out.degenerate = (g == 2);

    LaurentPoly q1 = one_minus(Var::q, 1);
    LaurentPoly q2 = one_minus(Var::q, 2);
    LaurentPoly den2 = q1 * q1 * q2;
    LaurentPoly den3 = q1 * q1 * q1 * q2;

    out.delta_s = exact_div(
        one_minus(Var::q, 3) * one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g), den2);
    if (g == 2) {
        out.d1 = LaurentPoly();
        out.d13 = LaurentPoly();
    } else {
        out.d1 = exact_div(one_minus(Var::q, 4) * one_minus(Var::q, 2 * g - 4) *
                               one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g),
                           den3);
        out.d13 = exact_div(one_minus(Var::q, 3) * one_minus(Var::q, 2 * g - 4) *
                                one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g),
                            den3);
    }
    out.d3 = exact_div(one_minus(Var::q, 3) * one_minus(Var::q, 2 * g - 3) *
                           one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g),
                       den3);
    out.omega_s = exact_div(
        one_minus(Var::q, 2 * g - 2) * one_minus(Var::q, 2 * g - 1) * one_minus(Var::q, 2 * g),
        den2);
    return out;
}

LaurentPoly cone_ih_truncation(const BettiVector& ih_poincare, int n) {
    LaurentPoly out;
    for (int d = 0; d < n; ++d) {
        long prim = ih_poincare.at(d) - ih_poincare.at(d - 2);
        if (prim < 0)
            throw NegativePrimitiveError(
                "cone_ih_truncation: negative primitive dimension in degree " +
                std::to_string(d));
        if (prim > 0) out += P_mono(Var::t, d, Rational(prim));
    }
    return out;
}

LaurentPoly ih_normal_slice_sigma(int g) {
    require_genus(g, 2);
    return exact_div(one_minus(Var::q, 2 * g - 3), one_minus(Var::q, 1));
}

LaurentPoly ie_normal_slice_omega(int g) {
    require_genus(g, 2);
    return exact_div(one_minus(Var::q, 2 * g), one_minus(Var::q, 2));
}

LaurentPoly ie_omega_r(int g) {
    require_genus(g, 2);
    return exact_div(one_minus(Var::q, 4 * g - 4) * one_minus(Var::q, 2 * g),
                     one_minus(Var::q, 1) * one_minus(Var::q, 2));
}

const char* group_name(Group g) {
    switch (g) {
    case Group::SL2: return "sl2";
    case Group::PGL2: return "pgl2";
    case Group::GL2: return "gl2";
    }
    return "?";
}

const char* side_name(Side s) {
    return s == Side::Betti ? "betti" : "dolbeault";
}

} // namespace charvar
