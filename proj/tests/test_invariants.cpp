#include <doctest.h>

#include "charvar/invariants.hpp"

using namespace charvar;

namespace {

LaurentPoly upoly(Var x, std::initializer_list<long> coeffs) {
    LaurentPoly p;
    int d = 0;
    for (long c : coeffs) p += P_mono(x, d++, Rational(c));
    return p;
}

LaurentPoly uv_mono(int e) { return LaurentPoly::monomial(1, Exp{e, e, 0, 0}); }

LaurentPoly diagonal(const LaurentPoly& e) {
    return substitute(e, {{Var::u, P_var(Var::t)}, {Var::v, P_var(Var::t)}});
}

} // namespace

TEST_CASE("character variety intersection E-polynomials at genus 2") {
    CHECK(ie_betti(Group::SL2, 2) == upoly(Var::q, {1, 0, 17, 0, 17, 0, 1}));
    CHECK(ie_betti(Group::PGL2, 2) == upoly(Var::q, {1, 0, 2, 0, 2, 0, 1}));
    CHECK(ie_betti(Group::GL2, 2) ==
          pow(P_var(Var::q) - P_one(), 4) * upoly(Var::q, {1, 0, 2, 0, 2, 0, 1}));
}

TEST_CASE("torsion weights and dimensions") {
    CHECK(torsion_weight(Group::SL2, 2) == 16);
    CHECK(torsion_weight(Group::SL2, 3) == 64);
    CHECK(torsion_weight(Group::PGL2, 5) == 1);
    CHECK(torsion_weight(Group::GL2, 5) == 1);
    CHECK(moduli_dim(Group::SL2, 2) == 6);
    CHECK(moduli_dim(Group::PGL2, 4) == 18);
    CHECK(moduli_dim(Group::GL2, 2) == 10);
}

TEST_CASE("intersection Euler characteristics") {
    CHECK(euler_char(Group::SL2, 2) == 36);
    CHECK(euler_char(Group::SL2, 3) == 528);
    CHECK(euler_char(Group::PGL2, 2) == 6);
    CHECK(euler_char(Group::PGL2, 3) == 24);
    CHECK_THROWS_AS(euler_char(Group::GL2, 2), UnsupportedGroupError);
}

TEST_CASE("intersection Poincare polynomials at genus 2") {
    CHECK(ip(Group::SL2, 2) == upoly(Var::t, {1, 0, 1, 0, 17, 0, 17}));
    CHECK(ip(Group::PGL2, 2) == upoly(Var::t, {1, 0, 1, 0, 2, 0, 2}));
    CHECK(ip(Group::GL2, 2) ==
          pow(P_var(Var::t) + P_one(), 4) * upoly(Var::t, {1, 0, 1, 0, 2, 0, 2}));
}

TEST_CASE("ordinary Poincare polynomial") {
    CHECK(p_ordinary(2) == upoly(Var::t, {1, 0, 1, 0, 1, 0, 17}));
    // the genus 3 difference from the intersection Poincare polynomial
    LaurentPoly diff3 = ip(Group::SL2, 3) - p_ordinary(3);
    LaurentPoly expected3 = P_mono(Var::t, 3, Rational(6)) + P_mono(Var::t, 4) +
                            P_mono(Var::t, 5, Rational(6)) + P_mono(Var::t, 6) +
                            P_mono(Var::t, 7, Rational(6)) +
                            P_mono(Var::t, 8, Rational(79)) + P_mono(Var::t, 10);
    CHECK(diff3 == expected3);
}

TEST_CASE("purity relation between the two sides") {
    for (int g = 2; g <= 4; ++g) {
        for (Group group : {Group::SL2, Group::PGL2, Group::GL2}) {
            LaurentPoly dol = ie_dol(group, g);
            int dim = moduli_dim(group, g);
            LaurentPoly neg_recip = LaurentPoly::monomial(-1, Var::t, -1);
            LaurentPoly lhs =
                substitute(dol, {{Var::u, neg_recip}, {Var::v, neg_recip}}) *
                P_mono(Var::t, 2 * dim);
            CHECK(lhs == ip(group, g));
            // equivalent involutive form
            CHECK(purity_transform(ip(group, g), dim) == diagonal(dol));
        }
    }
    // genus 2 diagonal pinned by hand
    CHECK(diagonal(ie_dol(Group::SL2, 2)) ==
          P_mono(Var::t, 6, Rational(17)) + P_mono(Var::t, 8, Rational(17)) +
              P_mono(Var::t, 10) + P_mono(Var::t, 12));
}

TEST_CASE("desingularization E-polynomials") {
    CHECK(e_t(Side::Betti, 2) == upoly(Var::q, {1, 17, 49, 54, 49, 17, 1}));
    for (int g = 3; g <= 4; ++g) {
        CHECK_NOTHROW(e_t(Side::Betti, g));    // closed form == stratified sum
        CHECK_NOTHROW(e_t(Side::Dolbeault, g));
    }
    // the Dolbeault value restricts to the smooth-locus polynomial plus
    // exceptional contributions; its diagonal has even exponents only
    LaurentPoly d = diagonal(e_t(Side::Dolbeault, 2));
    CHECK_NOTHROW(collapse_square(d, Var::t, Var::q));
}

TEST_CASE("variant parts under the torsion action") {
    VariantPolys v2 = variant_polys(2);
    CHECK(v2.ie_betti == P_mono(Var::q, 2, Rational(15)) + P_mono(Var::q, 4, Rational(15)));
    CHECK(v2.ie_dol == Rational(15) * (uv_mono(3) + uv_mono(4)));
    CHECK(v2.ip == P_mono(Var::t, 4, Rational(15)) + P_mono(Var::t, 6, Rational(15)));
    CHECK_NOTHROW(variant_polys(3));
    CHECK_NOTHROW(variant_polys(4));
}

TEST_CASE("low-order expansion of the intersection Poincare polynomial") {
    TruncatedSeries lead2 = ip_leading_series(2, 3);
    TruncatedSeries expect2(Var::t, 3);
    expect2.set_coeff(0, 1);
    expect2.set_coeff(2, 1);
    expect2.set_coeff(3, 4);
    CHECK(lead2 == expect2);

    for (int g = 2; g <= 4; ++g) {
        int order = 4 * g - 5;
        TruncatedSeries from_ip =
            TruncatedSeries::from_poly(ip(Group::SL2, g), Var::t, order);
        TruncatedSeries lead = ip_leading_series(g, order);
        TruncatedSeries corr(Var::t, order);
        corr.set_coeff(order, Rational(-2 * g));
        CHECK(from_ip == lead + corr);
    }
}

TEST_CASE("low-order defect of the ordinary Poincare polynomial") {
    CHECK(ip_minus_p_low_order(5) ==
          P_mono(Var::t, 3, Rational(10)) + P_mono(Var::t, 4) +
              P_mono(Var::t, 5, Rational(10)) - P_mono(Var::t, 6, Rational(65)));
    for (int g : {6, 7}) {
        LaurentPoly diff = ip(Group::SL2, g) - p_ordinary(g);
        CHECK(truncate_total_degree(diff, 6) == ip_minus_p_low_order(g));
    }
}

TEST_CASE("invariant dispatch") {
    InvariantResult euler = compute_invariant(InvariantKind::Euler, Group::SL2, {}, 2);
    CHECK(euler.poly == P_const(36));
    CHECK(euler.torsion == 16);
    CHECK_FALSE(euler.side.has_value());

    InvariantResult ie_d =
        compute_invariant(InvariantKind::IE, Group::SL2, Side::Dolbeault, 2);
    CHECK(ie_d.poly == ie_dol(Group::SL2, 2));
    CHECK(ie_d.side == Side::Dolbeault);

    InvariantResult ip_r = compute_invariant(InvariantKind::IP, Group::GL2, {}, 2);
    CHECK(ip_r.poly == ip(Group::GL2, 2));
    CHECK(ip_r.torsion == 1);

    CHECK_THROWS_AS(compute_invariant(InvariantKind::IE, Group::SL2, {}, 2),
                    UnsupportedKindError);
    CHECK_THROWS_AS(compute_invariant(InvariantKind::P, Group::PGL2, {}, 2),
                    UnsupportedGroupError);
    CHECK_THROWS_AS(compute_invariant(InvariantKind::ET, Group::GL2, Side::Betti, 2),
                    UnsupportedGroupError);
    CHECK_THROWS_AS(compute_invariant(InvariantKind::IPVar, Group::PGL2, {}, 2),
                    UnsupportedGroupError);
}

TEST_CASE("kind names") {
    CHECK(kind_name(InvariantKind::IEVar) == std::string("ie-var"));
    CHECK(kind_from_name("e-t") == InvariantKind::ET);
    CHECK(kind_from_name("ip") == InvariantKind::IP);
    CHECK_FALSE(kind_from_name("nope").has_value());
}
