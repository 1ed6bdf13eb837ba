#include "charvar/format.hpp"

#include "charvar/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace charvar {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string coeff_latex(const Rational& c) {
    Integer num = numerator(c);
    Integer den = denominator(c);
    if (den == 1) return num.str();
    return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

} // namespace

const char* format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Latex: return "latex";
    }
    return "?";
}

std::optional<OutputFormat> format_from_name(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    return std::nullopt;
}

std::optional<Group> group_from_name(std::string_view name) {
    if (name == "sl2") return Group::SL2;
    if (name == "pgl2") return Group::PGL2;
    if (name == "gl2") return Group::GL2;
    return std::nullopt;
}

std::optional<Side> side_from_name(std::string_view name) {
    if (name == "betti") return Side::Betti;
    if (name == "dolbeault") return Side::Dolbeault;
    return std::nullopt;
}

std::string to_text(const InvariantResult& r) { return to_string(r.poly); }

std::string to_json(const InvariantResult& r) {
    ordered_json j;
    j["invariant"] = kind_name(r.kind);
    j["group"] = group_name(r.group);
    if (r.side)
        j["side"] = side_name(*r.side);
    else
        j["side"] = nullptr;
    j["genus"] = r.genus;

    std::vector<Var> vars = r.poly.variables();
    ordered_json names = ordered_json::array();
    for (Var x : vars) names.push_back(var_name(x));
    j["variables"] = names;

    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : r.poly.terms()) {
        ordered_json term;
        ordered_json exps = ordered_json::array();
        for (Var x : vars) exps.push_back(exp_of(e, x));
        term["exp"] = exps;
        term["num"] = numerator(c).str();
        term["den"] = denominator(c).str();
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j.dump(2);
}

InvariantResult from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw Error(std::string("from_json: ") + e.what());
    }
    try {
        auto kind = kind_from_name(j.at("invariant").get<std::string>());
        auto group = group_from_name(j.at("group").get<std::string>());
        if (!kind || !group) throw Error("from_json: unknown invariant or group");

        InvariantResult r;
        r.kind = *kind;
        r.group = *group;
        if (!j.at("side").is_null()) {
            auto side = side_from_name(j.at("side").get<std::string>());
            if (!side) throw Error("from_json: unknown side");
            r.side = *side;
        }
        r.genus = j.at("genus").get<int>();
        r.torsion = torsion_weight(r.group, r.genus);

        std::vector<Var> vars;
        for (const auto& name : j.at("variables")) {
            auto x = var_from_name(name.get<std::string>());
            if (!x) throw Error("from_json: unknown variable");
            vars.push_back(*x);
        }
        for (const auto& term : j.at("terms")) {
            const auto& exps = term.at("exp");
            if (exps.size() != vars.size())
                throw Error("from_json: exponent arity mismatch");
            Exp e{0, 0, 0, 0};
            for (size_t i = 0; i < vars.size(); ++i)
                e[static_cast<int>(vars[i])] = exps[i].get<int>();
            Integer num(term.at("num").get<std::string>());
            Integer den(term.at("den").get<std::string>());
            if (den == 0) throw Error("from_json: zero denominator");
            r.poly.add_term(e, Rational(num) / den);
        }
        return r;
    } catch (const ordered_json::exception& e) {
        throw Error(std::string("from_json: ") + e.what());
    }
}

std::string to_csv(const InvariantResult& r) {
    std::vector<Var> vars = r.poly.variables();
    std::ostringstream os;
    for (Var x : vars) os << var_name(x) << ",";
    os << "num,den\n";
    for (const auto& [e, c] : r.poly.terms()) {
        for (Var x : vars) os << exp_of(e, x) << ",";
        os << numerator(c).str() << "," << denominator(c).str() << "\n";
    }
    return os.str();
}

std::string to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c;
        if (c < 0) {
            os << (first ? "-" : " - ");
            mag = -c;
        } else if (!first) {
            os << " + ";
        }
        first = false;

        std::string vars;
        for (Var x : {Var::u, Var::v, Var::t, Var::q}) {
            int k = exp_of(e, x);
            if (k == 0) continue;
            vars += var_name(x);
            if (k != 1) vars += "^{" + std::to_string(k) + "}";
        }
        if (vars.empty()) {
            os << coeff_latex(mag);
        } else {
            if (mag != 1) os << coeff_latex(mag) << " ";
            os << vars;
        }
    }
    return os.str();
}

std::string to_latex(const InvariantResult& r) { return to_latex(r.poly); }

std::string render(const InvariantResult& r, OutputFormat f) {
    switch (f) {
    case OutputFormat::Text: return to_text(r);
    case OutputFormat::Json: return to_json(r);
    case OutputFormat::Csv: return to_csv(r);
    case OutputFormat::Latex: return to_latex(r);
    }
    throw Error("render: unknown format");
}

bool operator==(const InvariantResult& a, const InvariantResult& b) {
    return a.kind == b.kind && a.group == b.group && a.side == b.side &&
           a.genus == b.genus && a.torsion == b.torsion && a.poly == b.poly;
}

} // namespace charvar
