#include <doctest.h>

#include "charvar/format.hpp"

using namespace charvar;

namespace {

InvariantResult sample_ie_betti() {
    return compute_invariant(InvariantKind::IE, Group::SL2, Side::Betti, 2);
}

} // namespace

TEST_CASE("name parsing") {
    CHECK(group_from_name("pgl2") == Group::PGL2);
    CHECK_FALSE(group_from_name("so3").has_value());
    CHECK(side_from_name("dolbeault") == Side::Dolbeault);
    CHECK_FALSE(side_from_name("derham").has_value());
    CHECK(format_from_name("latex") == OutputFormat::Latex);
    CHECK_FALSE(format_from_name("xml").has_value());
    CHECK(format_name(OutputFormat::Csv) == std::string("csv"));
}

TEST_CASE("text rendering of results") {
    CHECK(to_text(sample_ie_betti()) == "1 + 17*q^2 + 17*q^4 + q^6");
    InvariantResult euler = compute_invariant(InvariantKind::Euler, Group::PGL2, {}, 2);
    CHECK(to_text(euler) == "6");
}

TEST_CASE("json round trip") {
    InvariantResult r = sample_ie_betti();
    InvariantResult back = from_json(to_json(r));
    CHECK(back == r);

    // side-free invariant serializes side as null and restores to empty
    InvariantResult ip_r = compute_invariant(InvariantKind::IP, Group::GL2, {}, 2);
    CHECK(from_json(to_json(ip_r)) == ip_r);

    // bivariate polynomial with two exponent columns
    InvariantResult dol =
        compute_invariant(InvariantKind::IE, Group::PGL2, Side::Dolbeault, 2);
    CHECK(from_json(to_json(dol)) == dol);

    // constant and zero polynomials keep empty variable lists
    InvariantResult euler = compute_invariant(InvariantKind::Euler, Group::SL2, {}, 2);
    CHECK(from_json(to_json(euler)) == euler);
    InvariantResult zero = euler;
    zero.poly = LaurentPoly();
    CHECK(from_json(to_json(zero)) == zero);
}

TEST_CASE("json output is deterministic and sorted") {
    InvariantResult r = sample_ie_betti();
    std::string a = to_json(r);
    CHECK(a == to_json(r));
    CHECK(a.find("\"invariant\": \"ie\"") != std::string::npos);
    CHECK(a.find("\"side\": \"betti\"") != std::string::npos);
    // exponents appear in ascending order
    CHECK(a.find("\"num\": \"1\"") < a.find("\"num\": \"17\""));
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS(from_json("not json"), Error);
    CHECK_THROWS_AS(from_json("{}"), Error);
    CHECK_THROWS_AS(
        from_json(R"({"invariant":"ie","group":"sl2","side":"betti","genus":2,
                      "variables":["q"],"terms":[{"exp":[1,2],"num":"1","den":"1"}]})"),
        Error);
    CHECK_THROWS_AS(
        from_json(R"({"invariant":"ie","group":"sl2","side":"betti","genus":2,
                      "variables":["q"],"terms":[{"exp":[1],"num":"1","den":"0"}]})"),
        Error);
    CHECK_THROWS_AS(
        from_json(R"({"invariant":"nope","group":"sl2","side":null,"genus":2,
                      "variables":[],"terms":[]})"),
        Error);
}

TEST_CASE("csv rendering") {
    CHECK(to_csv(sample_ie_betti()) == "q,num,den\n0,1,1\n2,17,1\n4,17,1\n6,1,1\n");
    InvariantResult euler = compute_invariant(InvariantKind::Euler, Group::SL2, {}, 2);
    CHECK(to_csv(euler) == "num,den\n36,1\n");
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(sample_ie_betti().poly) == "1 + 17 q^{2} + 17 q^{4} + q^{6}");
    LaurentPoly signs = P_one() - P_mono(Var::q, 2, Rational(4));
    CHECK(to_latex(signs) == "1 - 4 q^{2}");
    LaurentPoly frac = P_const(Rational(1) / 2) * P_var(Var::t);
    CHECK(to_latex(frac) == "\\frac{1}{2} t");
    LaurentPoly mono = LaurentPoly::monomial(1, Exp{2, 1, 0, 0});
    CHECK(to_latex(mono) == "u^{2}v");
    CHECK(to_latex(LaurentPoly()) == "0");
}

TEST_CASE("render dispatch") {
    InvariantResult r = sample_ie_betti();
    CHECK(render(r, OutputFormat::Text) == to_text(r));
    CHECK(render(r, OutputFormat::Json) == to_json(r));
    CHECK(render(r, OutputFormat::Csv) == to_csv(r));
    CHECK(render(r, OutputFormat::Latex) == to_latex(r));
}
