#include "charvar/invariants.hpp"

#include "charvar/fraction.hpp"

namespace charvar {

namespace {

void require_genus(int g, int min) {
    if (g < min) throw Error("genus must be at least " + std::to_string(min));
}

const Rational kHalf = Rational(1) / 2;

// (uv)^e
LaurentPoly W(int e) { return LaurentPoly::monomial(1, Exp{e, e, 0, 0}); }
// (1-u)^n (1-v)^n
LaurentPoly Xm(int n) { return pow(one_minus(Var::u, 1), n) * pow(one_minus(Var::v, 1), n); }
// (1+u)^n (1+v)^n
LaurentPoly Xp(int n) { return pow(one_plus(Var::u, 1), n) * pow(one_plus(Var::v, 1), n); }

// t^k - 1 and t^k + 1 with the sign conventions of the t-side closed forms
LaurentPoly tk_m1(int k) { return P_mono(Var::t, k) - P_one(); }
LaurentPoly tk_p1(int k) { return P_mono(Var::t, k) + P_one(); }

void check_integer_coeffs(const LaurentPoly& p, const char* what) {
    for (const auto& [e, c] : p.terms())
        if (!is_integer(c))
            throw NonIntegerCoefficientError(std::string(what) +
                                             ": non-integer coefficient " + to_string(c));
}

void check_nonnegative_coeffs(const LaurentPoly& p, const char* what) {
    for (const auto& [e, c] : p.terms())
        if (c < 0)
            throw NegativeCoefficientError(std::string(what) + ": negative coefficient " +
                                           to_string(c));
}

void check_palindromic(const LaurentPoly& p, int center, const char* what) {
    if (!is_palindromic(p, center))
        throw PalindromyError(std::string(what) + ": not palindromic about degree " +
                              std::to_string(center));
}

// Intersection E-polynomial of the character variety with torsion weight N.
LaurentPoly ie_betti_weighted(int g, const Integer& N) {
    LaurentPoly qm = P_var(Var::q) - P_one();
    LaurentPoly qp = P_var(Var::q) + P_one();
    LaurentPoly out = (P_mono(Var::q, 2 * g - 2) + P_one()) * pow(P_mono(Var::q, 2) - P_one(), 2 * g - 2);
    out += kHalf * P_mono(Var::q, 2 * g - 3) * (P_mono(Var::q, 2) + P_one()) *
           (pow(qp, 2 * g - 2) - pow(qm, 2 * g - 2));
    out += (Rational(N) / 2) * P_mono(Var::q, 2 * g - 2) *
           (pow(qp, 2 * g - 2) + pow(qm, 2 * g - 2));
    return out;
}

// Independent transcription of the weight-1 character-variety closed form.
LaurentPoly ie_betti_weight_one_display(int g) {
    LaurentPoly qm = P_var(Var::q) - P_one();
    LaurentPoly qp = P_var(Var::q) + P_one();
    LaurentPoly out = (P_mono(Var::q, 2 * g - 2) + P_one()) * pow(P_mono(Var::q, 2) - P_one(), 2 * g - 2);
    out += kHalf * P_mono(Var::q, 2 * g - 3) *
           (P_mono(Var::q, 2) + P_var(Var::q) + P_one()) * pow(qp, 2 * g - 2);
    out -= kHalf * P_mono(Var::q, 2 * g - 3) *
           (P_mono(Var::q, 2) - P_var(Var::q) + P_one()) * pow(qm, 2 * g - 2);
    return out;
}

// Intersection E-polynomial of the Higgs moduli space with torsion weight
// N, assembled from the smooth locus and the stratum data, then checked
// against a direct transcription of the closed form.
LaurentPoly ie_dol_weighted(int g, const Integer& N) {
    LaurentPoly e_sm = e_dol_smooth(g, N);
    SplitPoly tstar = e_tstar_jac_split(g);
    LaurentPoly assembled =
        assemble_ie(e_sm + tstar.plus, tstar, P_const(Rational(N)), g);

    LaurentPoly w1m = P_one() - W(1);
    LaurentPoly w1p = P_one() + W(1);
    LaurentPoly display = e_sm + kHalf * W(g) * (Xm(g) + Xp(g));
    Frac middle = Frac(Xm(g), w1m) - Frac(Xp(g), w1p);
    middle *= Frac(kHalf * W(g + 1) * (P_one() - W(2 * g - 4)));
    display += middle.poly();
    display += Rational(N) * W(2 * g - 2);

    if (assembled != display)
        throw IdentityMismatchError(
            "ie_dol: stratum assembly differs from the closed form at genus " +
            std::to_string(g));
    return assembled;
}

// Intersection Poincare polynomial with torsion weight N.
LaurentPoly ip_weighted(int g, const Integer& N) {
    LaurentPoly den_main = tk_m1(2) * tk_m1(4);

    Frac acc(pow(tk_p1(3), 2 * g), den_main);
    acc += Frac(Rational(g - 1) * P_mono(Var::t, 4 * g - 3) * pow(tk_p1(1), 2 * g - 2),
                tk_m1(1));
    acc -= Frac(P_mono(Var::t, 4 * g - 4) *
                    (pow(tk_p1(2), 2) * pow(tk_p1(1), 2 * g) -
                     pow(tk_p1(1), 4) * pow(tk_m1(1), 2 * g)),
                Rational(4) * den_main);
    acc += Frac(kHalf * P_mono(Var::t, 4 * g - 4) *
                (pow(tk_p1(1), 2 * g - 2) - pow(tk_m1(1), 2 * g - 2)));
    acc -= Frac(kHalf * P_mono(Var::t, 4 * g - 6) *
                (pow(tk_p1(1), 2 * g) - pow(tk_m1(1), 2 * g)));
    acc += Frac((Rational(Integer(N - 1)) / 2) * P_mono(Var::t, 4 * g - 4) *
                (pow(tk_p1(1), 2 * g - 2) + pow(tk_m1(1), 2 * g - 2)));
    return acc.poly();
}

} // namespace

const char* kind_name(InvariantKind k) {
    switch (k) {
    case InvariantKind::IE: return "ie";
    case InvariantKind::IP: return "ip";
    case InvariantKind::P: return "p";
    case InvariantKind::ET: return "e-t";
    case InvariantKind::IEVar: return "ie-var";
    case InvariantKind::IPVar: return "ip-var";
    case InvariantKind::Euler: return "euler";
    }
    return "?";
}

std::optional<InvariantKind> kind_from_name(std::string_view name) {
    if (name == "ie") return InvariantKind::IE;
    if (name == "ip") return InvariantKind::IP;
    if (name == "p") return InvariantKind::P;
    if (name == "e-t") return InvariantKind::ET;
    if (name == "ie-var") return InvariantKind::IEVar;
    if (name == "ip-var") return InvariantKind::IPVar;
    if (name == "euler") return InvariantKind::Euler;
    return std::nullopt;
}

Integer torsion_weight(Group group, int g) {
    require_genus(g, 2);
    return group == Group::SL2 ? pow2(2 * g) : Integer(1);
}

int moduli_dim(Group group, int g) {
    require_genus(g, 2);
    return group == Group::GL2 ? 8 * g - 6 : 6 * g - 6;
}

LaurentPoly ie_betti(Group group, int g) {
    require_genus(g, 2);
    if (group == Group::GL2) {
        LaurentPoly out = pow(P_var(Var::q) - P_one(), 2 * g) * ie_betti(Group::PGL2, g);
        check_palindromic(out, 4 * g - 3, "ie_betti(gl2)");
        return out;
    }
    LaurentPoly out = ie_betti_weighted(g, torsion_weight(group, g));
    if (group == Group::PGL2 && out != ie_betti_weight_one_display(g))
        throw IdentityMismatchError(
            "ie_betti: weight-1 specialization differs from its closed form at genus " +
            std::to_string(g));
    check_integer_coeffs(out, "ie_betti");
    check_palindromic(out, 3 * g - 3, "ie_betti");
    if (group == Group::SL2)
        for (const auto& [e, c] : out.terms())
            if (exp_of(e, Var::q) % 2 != 0)
                throw ConsistencyError("ie_betti(sl2): odd power q^" +
                                       std::to_string(exp_of(e, Var::q)));
    return out;
}

LaurentPoly e_dol_smooth(int g, const Integer& N) {
    require_genus(g, 2);
    LaurentPoly w1m = P_one() - W(1);
    LaurentPoly w1p = P_one() + W(1);
    LaurentPoly D = pow(w1m, 3) * w1p;

    LaurentPoly acc;
    auto over = [&](const LaurentPoly& num, const LaurentPoly& den) {
        acc += num * exact_div(D, den);
    };

    LaurentPoly u2v = LaurentPoly::monomial(1, Exp{2, 1, 0, 0});
    LaurentPoly uv2 = LaurentPoly::monomial(1, Exp{1, 2, 0, 0});
    over(W(3 * g - 3) *
             (pow(P_one() - u2v, g) * pow(P_one() - uv2, g) - W(g + 1) * Xm(g)),
         w1m * w1m * w1p);
    over(-kHalf * W(3 * g - 3) * Xm(g), w1m);
    over(-kHalf * W(3 * g - 3) * Xp(g), w1p);
    over(-kHalf * W(g) * (Xm(g) + Xp(g)) * (P_one() - W(g - 1)) * (P_one() - W(g)),
         w1m * w1p);
    over(-kHalf * W(g + 1) * (Xm(g) - Xp(g)) * (P_one() - W(g - 2)) * (P_one() - W(g - 1)),
         w1m * w1p);
    over(-W(2 * g - 1) * (P_one() - W(g - 2)) * (Xm(g) - P_const(Rational(N))) *
             (P_one() - W(g - 1)),
         w1m);
    over(-Rational(N) * W(2 * g - 2) * (P_one() - W(g - 1)) * (P_one() - W(g)), w1m);
    over((Rational(N) / 2) * W(3 * g - 3) *
             (Xm(g - 1) + Xp(g - 1) - Rational(2) * W(g - 1)),
         P_one());

    LaurentPoly outer =
        -W(3 * g - 3) * one_minus(Var::u, 1) * one_minus(Var::v, 1);
    over(outer * Rational(1, 4) * Xp(g - 1), w1p);
    over(outer * -W(g - 1) * Xm(g - 1), w1m * w1m * w1p);
    over(outer * Rational(-(g - 1), 2) *
             (P_var(Var::u) + P_var(Var::v) - Rational(2) * W(1)) * Xm(g - 2),
         w1m);
    over(outer * Rational(-(4 * g - 7), 4) * Xm(g - 1), w1m);
    over(outer * kHalf * W(1) * Xm(g - 1), w1m * w1m);

    return exact_div(acc, D);
}

LaurentPoly ie_dol(Group group, int g) {
    require_genus(g, 2);
    if (group == Group::GL2) return W(g) * Xm(g) * ie_dol(Group::PGL2, g);
    return ie_dol_weighted(g, torsion_weight(group, g));
}

LaurentPoly ip(Group group, int g) {
    require_genus(g, 2);
    LaurentPoly out;
    if (group == Group::GL2) {
        out = pow(P_var(Var::t) + P_one(), 2 * g) * ip(Group::PGL2, g);
    } else {
        out = ip_weighted(g, torsion_weight(group, g));
        check_integer_coeffs(out, "ip");
        check_nonnegative_coeffs(out, "ip");
    }
    return out;
}

LaurentPoly p_ordinary(int g) {
    require_genus(g, 2);
    LaurentPoly t = P_var(Var::t);
    LaurentPoly den_main = tk_m1(2) * tk_m1(4);

    Frac acc(pow(tk_p1(3), 2 * g), den_main);
    acc += Frac(pow(tk_p1(1), 2 * g) * tk_p1(2) - pow(tk_m1(1), 2 * g) * tk_m1(2),
                Rational(2) * tk_m1(4));

    LaurentPoly middle_sum;
    for (int k = 2; k <= g; ++k) {
        int m = k % 2;
        Rational c = Rational(binomial(2 * g, k) - binomial(2 * g, k - 2));
        middle_sum += c * P_mono(Var::t, k + 2 * m) * tk_m1(2 * k - 2 * m) *
                      tk_m1(2 * g - 2 * k + 2);
    }
    acc += Frac(middle_sum, tk_m1(1) * tk_m1(4));

    acc -= Frac(kHalf * t * (pow(tk_p1(1), 2 * g) + pow(tk_m1(1), 2 * g)));
    acc += Frac(tk_m1(2 * g + 2), tk_m1(1));
    acc -= Frac(P_mono(Var::t, 4 * g - 4));
    acc += Frac(pow(tk_m1(1), 2 * g) * P_mono(Var::t, 4 * g - 4), Rational(4) * tk_p1(2));

    Frac inner(P_const(Rational(2 * g)), tk_p1(1));
    inner += Frac(P_one(), tk_m1(2));
    inner += Frac(P_const(Rational(5, 2) - Rational(2 * g)));
    acc -= Frac(pow(tk_p1(1), 2 * g) * P_mono(Var::t, 4 * g - 4), Rational(2) * tk_m1(2)) *
           inner;

    acc += Frac((Rational(Integer(pow2(2 * g) - 1)) / 2) * P_mono(Var::t, 4 * g - 4) *
                (pow(tk_p1(1), 2 * g - 2) + pow(tk_m1(1), 2 * g - 2) - P_const(2)));

    LaurentPoly out = acc.poly();
    check_integer_coeffs(out, "p_ordinary");
    check_nonnegative_coeffs(out, "p_ordinary");
    return out;
}

LaurentPoly e_t(Side side, int g) {
    require_genus(g, 2);
    const Integer N = pow2(2 * g);

    ExceptionalData exc = e_exceptional(g);
    LaurentPoly deep_fibers = exc.d1 + exc.d3 - exc.d13;

    if (side == Side::Betti) {
        Frac acc(ie_betti_weighted(g, N));
        acc += Frac(kHalf * P_var(Var::q) *
                        (pow(one_plus(Var::q, 1), 2 * g - 1) * one_plus(Var::q, 2 * g - 3) +
                         pow(one_minus(Var::q, 1), 2 * g - 1) * one_minus(Var::q, 2 * g - 3)) *
                        one_minus(Var::q, 2 * g - 3),
                    one_minus(Var::q, 1));

        LaurentPoly L = P_const(2) - P_var(Var::q) - P_mono(Var::q, 3) -
                        P_mono(Var::q, 2 * g - 4) -
                        P_mono(Var::q, 2 * g - 2, Rational(2)) + P_mono(Var::q, 2 * g - 1) -
                        P_mono(Var::q, 2 * g, Rational(2)) +
                        P_mono(Var::q, 2 * g + 1, Rational(4)) - P_mono(Var::q, 2 * g + 2) +
                        P_mono(Var::q, 2 * g + 3) + P_mono(Var::q, 4 * g - 6) -
                        P_mono(Var::q, 4 * g - 5) + P_mono(Var::q, 4 * g - 4, Rational(4)) -
                        P_mono(Var::q, 4 * g - 3, Rational(2)) + P_mono(Var::q, 4 * g - 2) -
                        P_mono(Var::q, 4 * g - 1, Rational(2)) - P_mono(Var::q, 4 * g + 1) -
                        P_mono(Var::q, 6 * g - 6) - P_mono(Var::q, 6 * g - 4) +
                        P_mono(Var::q, 6 * g - 3, Rational(2));
        acc += Frac(Rational(N) * P_var(Var::q) * L,
                    pow(one_minus(Var::q, 1), 3) * one_minus(Var::q, 2));
        LaurentPoly display = acc.poly();

        // compositional route: smooth locus, middle exceptional fibers,
        // deep exceptional fibers
        SplitPoly torus = e_torus_split(g);
        LaurentPoly e_moduli =
            invert_ie(ie_betti_weighted(g, N), torus, P_const(Rational(N)), g);
        LaurentPoly compositional = (e_moduli - torus.plus) + e_d2_circ(Side::Betti, g) +
                                    Rational(N) * deep_fibers;
        if (display != compositional)
            throw IdentityMismatchError(
                "e_t(betti): closed form differs from the stratified sum at genus " +
                std::to_string(g));
        check_palindromic(display, 3 * g - 3, "e_t(betti)");
        return display;
    }

    LaurentPoly e_sm = e_dol_smooth(g, N);
    LaurentPoly w1m = P_one() - W(1);
    LaurentPoly w1p = P_one() + W(1);
    LaurentPoly D = pow(w1m, 4) * w1p;

    LaurentPoly acc;
    auto over = [&](const LaurentPoly& num, const LaurentPoly& den) {
        acc += num * exact_div(D, den);
    };
    over(e_sm, P_one());
    over(kHalf * W(g) * (P_one() - W(2 * g - 2)) * Xm(g) * (P_one() - W(2 * g - 3)),
         w1m * w1m);
    over(kHalf * W(g) * (P_one() - W(2 * g - 2)) * Xp(g) * (P_one() + W(2 * g - 3)),
         w1m * w1p);
    over(-Rational(N) * pow(P_one() - W(2 * g - 2), 2), w1m * w1m * w1p);
    over(Rational(N) * (P_one() - W(2 * g - 2)) * (P_one() - W(2 * g)) *
             (P_one() - W(4) - W(2 * g - 3) - W(2 * g - 1) +
              Rational(2) * W(2 * g)),
         D);
    LaurentPoly display = exact_div(acc, D);

    LaurentPoly compositional =
        e_sm + e_d2_circ(Side::Dolbeault, g) +
        Rational(N) * substitute(deep_fibers, {{Var::q, W(1)}});
    if (display != compositional)
        throw IdentityMismatchError(
            "e_t(dolbeault): closed form differs from the stratified sum at genus " +
            std::to_string(g));
    return display;
}

VariantPolys variant_polys(int g) {
    require_genus(g, 2);
    const Rational half_weight = Rational(Integer(pow2(2 * g) - 1)) / 2;

    VariantPolys out;
    out.ie_betti = half_weight * P_mono(Var::q, 2 * g - 2) *
                   (pow(P_var(Var::q) + P_one(), 2 * g - 2) +
                    pow(P_var(Var::q) - P_one(), 2 * g - 2));
    out.ie_dol = half_weight * W(3 * g - 3) *
                 (pow(P_var(Var::u) + P_one(), g - 1) * pow(P_var(Var::v) + P_one(), g - 1) +
                  pow(P_var(Var::u) - P_one(), g - 1) * pow(P_var(Var::v) - P_one(), g - 1));
    out.ip = half_weight * P_mono(Var::t, 4 * g - 4) *
             (pow(tk_p1(1), 2 * g - 2) + pow(tk_m1(1), 2 * g - 2));

    if (out.ie_betti != ie_betti(Group::SL2, g) - ie_betti(Group::PGL2, g))
        throw IdentityMismatchError("variant_polys: character-variety part is not the "
                                    "difference of the full invariants");
    if (out.ie_dol != ie_dol(Group::SL2, g) - ie_dol(Group::PGL2, g))
        throw IdentityMismatchError("variant_polys: Higgs part is not the difference of "
                                    "the full invariants");
    if (out.ip != ip(Group::SL2, g) - ip(Group::PGL2, g))
        throw IdentityMismatchError("variant_polys: Poincare part is not the difference "
                                    "of the full invariants");

    LaurentPoly shifted_b = out.ie_betti * P_mono(Var::q, -(2 * g - 2));
    check_palindromic(shifted_b, g - 1, "variant_polys(betti)");
    LaurentPoly diag = substitute(out.ie_dol, {{Var::u, P_var(Var::q)},
                                               {Var::v, P_var(Var::q)}});
    LaurentPoly shifted_d = diag * P_mono(Var::q, -(6 * g - 6));
    check_palindromic(shifted_d, g - 1, "variant_polys(dolbeault)");
    return out;
}

Integer euler_char(Group group, int g) {
    require_genus(g, 2);
    Integer closed;
    if (group == Group::SL2) {
        closed = pow2(2 * g - 2) * (pow2(2 * g - 1) + 1);
    } else if (group == Group::PGL2) {
        closed = 3 * pow2(2 * g - 3);
    } else {
        throw UnsupportedGroupError("euler_char: the abelian factor of gl2 makes the "
                                    "intersection Euler characteristic vanish");
    }
    Rational via_betti = ie_betti(group, g).evaluate({{Var::q, 1}});
    Rational via_dol = ie_dol(group, g).evaluate({{Var::u, 1}, {Var::v, 1}});
    Rational via_ip = ip(group, g).evaluate({{Var::t, -1}});
    if (via_betti != closed || via_dol != closed || via_ip != closed)
        throw ConsistencyError("euler_char: closed form and polynomial evaluations "
                               "disagree at genus " +
                               std::to_string(g));
    return closed;
}

LaurentPoly purity_transform(const LaurentPoly& p, int dim) {
    std::vector<Var> vars = p.variables();
    if (vars.size() > 1)
        throw Error("purity_transform: expected a one-variable polynomial");
    Var x = vars.empty() ? Var::t : vars[0];
    return substitute(p, {{x, LaurentPoly::monomial(-1, x, -1)}}) * P_mono(x, 2 * dim);
}

TruncatedSeries ip_leading_series(int g, int order) {
    require_genus(g, 2);
    TruncatedSeries num = TruncatedSeries::from_poly(pow(tk_p1(3), 2 * g), Var::t, order);
    TruncatedSeries den =
        TruncatedSeries::from_poly(one_minus(Var::t, 2) * one_minus(Var::t, 4), Var::t, order);
    return num * reciprocal(den);
}

LaurentPoly ip_minus_p_low_order(int g) {
    require_genus(g, 2);
    Integer c6 = binomial(2 * g, 3) - binomial(2 * g, 2) - 2 * g;
    return P_mono(Var::t, 3, Rational(2 * g)) + P_mono(Var::t, 4) +
           P_mono(Var::t, 5, Rational(2 * g)) - P_mono(Var::t, 6, Rational(c6));
}

InvariantResult compute_invariant(InvariantKind kind, Group group,
                                  std::optional<Side> side, int g) {
    require_genus(g, 2);
    const bool needs_side =
        kind == InvariantKind::IE || kind == InvariantKind::ET || kind == InvariantKind::IEVar;
    if (needs_side && !side)
        throw UnsupportedKindError(std::string(kind_name(kind)) + " requires a side");

    InvariantResult out;
    out.kind = kind;
    out.group = group;
    if (needs_side) out.side = side;
    out.genus = g;
    out.torsion = torsion_weight(group, g);

    switch (kind) {
    case InvariantKind::IE:
        out.poly = (*side == Side::Betti) ? ie_betti(group, g) : ie_dol(group, g);
        break;
    case InvariantKind::IP:
        out.poly = ip(group, g);
        break;
    case InvariantKind::P:
        if (group != Group::SL2)
            throw UnsupportedGroupError("p is only computed for sl2");
        out.poly = p_ordinary(g);
        break;
    case InvariantKind::ET:
        if (group != Group::SL2)
            throw UnsupportedGroupError("e-t is only computed for sl2");
        out.poly = e_t(*side, g);
        break;
    case InvariantKind::IEVar:
        if (group != Group::SL2)
            throw UnsupportedGroupError("ie-var is only computed for sl2");
        out.poly = (*side == Side::Betti) ? variant_polys(g).ie_betti
                                          : variant_polys(g).ie_dol;
        break;
    case InvariantKind::IPVar:
        if (group != Group::SL2)
            throw UnsupportedGroupError("ip-var is only computed for sl2");
        out.poly = variant_polys(g).ip;
        break;
    case InvariantKind::Euler:
        out.poly = P_const(Rational(euler_char(group, g)));
        break;
    }
    return out;
}

} // namespace charvar
