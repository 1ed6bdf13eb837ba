#include "charvar/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace charvar {

namespace {

const Exp kZeroExp{0, 0, 0, 0};

bool uses_q(const LaurentPoly& p) { return p.uses(Var::q); }
bool uses_uv(const LaurentPoly& p) { return p.uses(Var::u) || p.uses(Var::v); }

void check_alias(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
    if ((uses_q(a) && uses_uv(b)) || (uses_uv(a) && uses_q(b))) {
        throw MixedAliasError(std::string("operation '") + op +
                              "' would mix q with u or v in one polynomial");
    }
}

} // namespace

const char* var_name(Var x) {
    switch (x) {
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::t: return "t";
    case Var::q: return "q";
    }
    return "?";
}

std::optional<Var> var_from_name(std::string_view name) {
    if (name == "u") return Var::u;
    if (name == "v") return Var::v;
    if (name == "t") return Var::t;
    if (name == "q") return Var::q;
    return std::nullopt;
}

LaurentPoly LaurentPoly::constant(Rational c) {
    LaurentPoly p;
    p.add_term(kZeroExp, c);
    return p;
}

LaurentPoly LaurentPoly::variable(Var x) { return monomial(1, x, 1); }

LaurentPoly LaurentPoly::monomial(Rational c, Var x, int e) {
    Exp exp = kZeroExp;
    exp[static_cast<int>(x)] = e;
    return monomial(std::move(c), exp);
}

LaurentPoly LaurentPoly::monomial(Rational c, const Exp& e) {
    if (e[static_cast<int>(Var::q)] != 0 &&
        (e[static_cast<int>(Var::u)] != 0 || e[static_cast<int>(Var::v)] != 0)) {
        throw MixedAliasError("monomial mixes q with u or v");
    }
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == kZeroExp;
}

bool LaurentPoly::uses(Var x) const {
    const int i = static_cast<int>(x);
    for (const auto& [e, c] : terms_)
        if (e[i] != 0) return true;
    return false;
}

bool LaurentPoly::uses_any(std::initializer_list<Var> xs) const {
    for (Var x : xs)
        if (uses(x)) return true;
    return false;
}

Rational LaurentPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::coeff(Var x, int d) const {
    for (Var y : kAllVars) {
        if (y != x && uses(y)) {
            throw Error(std::string("coefficient lookup in ") + var_name(x) +
                        " on a polynomial that also uses " + var_name(y));
        }
    }
    Exp e = kZeroExp;
    e[static_cast<int>(x)] = d;
    return coeff(e);
}

int LaurentPoly::degree(Var x) const {
    const int i = static_cast<int>(x);
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] > d) d = e[i];
        first = false;
    }
    return terms_.empty() ? 0 : d;
}

int LaurentPoly::low_degree(Var x) const {
    const int i = static_cast<int>(x);
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] < d) d = e[i];
        first = false;
    }
    return terms_.empty() ? 0 : d;
}

int LaurentPoly::total_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int s = e[0] + e[1] + e[2] + e[3];
        if (first || s > d) d = s;
        first = false;
    }
    return d;
}

std::vector<Var> LaurentPoly::variables() const {
    std::vector<Var> out;
    for (Var x : kAllVars)
        if (uses(x)) out.push_back(x);
    return out;
}

Rational LaurentPoly::evaluate(const std::map<Var, Rational>& point) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (Var x : kAllVars) {
            int k = e[static_cast<int>(x)];
            if (k == 0) continue;
            auto it = point.find(x);
            if (it == point.end())
                throw Error(std::string("evaluate: no value for ") + var_name(x));
            const Rational& val = it->second;
            if (val == 0 && k < 0) throw Error("evaluate: zero raised to negative power");
            Rational p = 1;
            for (int i = 0; i < std::abs(k); ++i) p *= val;
            term *= (k > 0) ? p : Rational(1) / p;
        }
        acc += term;
    }
    return acc;
}

void LaurentPoly::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_alias(*this, o, "+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_alias(*this, o, "-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_alias(a, b, "*");
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out = a;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

LaurentPoly one_minus(Var x, int e) { return P_one() - P_mono(x, e); }
LaurentPoly one_plus(Var x, int e) { return P_one() + P_mono(x, e); }

LaurentPoly pow(const LaurentPoly& p, long n) {
    if (n < 0) {
        if (p.terms().size() != 1)
            throw Error("pow: negative exponent requires a single-term polynomial");
        const auto& [e, c] = *p.terms().begin();
        Exp inv{-e[0], -e[1], -e[2], -e[3]};
        return pow(LaurentPoly::monomial(Rational(1) / c, inv), -n);
    }
    LaurentPoly acc = P_one();
    LaurentPoly base = p;
    unsigned long k = static_cast<unsigned long>(n);
    while (k > 0) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return acc;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw Error("exact_div: division by zero polynomial");
    if (num.is_zero()) return {};
    check_alias(num, den, "/");

    // Clear negative exponents: divide honest polynomials, then restore the
    // monomial shift at the end.
    Exp shift{0, 0, 0, 0};
    Exp num_shift{0, 0, 0, 0};
    Exp den_shift{0, 0, 0, 0};
    for (Var x : kAllVars) {
        int i = static_cast<int>(x);
        num_shift[i] = -num.low_degree(x);
        den_shift[i] = -den.low_degree(x);
        shift[i] = den_shift[i] - num_shift[i];
    }
    LaurentPoly rem = num * LaurentPoly::monomial(1, num_shift);
    LaurentPoly d = den * LaurentPoly::monomial(1, den_shift);
    LaurentPoly quot;

    const auto& dlt = *d.terms().rbegin(); // lex-leading term of the divisor
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().rbegin();
        Exp qe{rlt.first[0] - dlt.first[0], rlt.first[1] - dlt.first[1],
               rlt.first[2] - dlt.first[2], rlt.first[3] - dlt.first[3]};
        if (qe[0] < 0 || qe[1] < 0 || qe[2] < 0 || qe[3] < 0) {
            throw NonExactDivisionError(
                "exact_div: remainder " + to_string(rem) + " not divisible by " + to_string(d),
                rem * pow(LaurentPoly::monomial(1, num_shift), -1));
        }
        LaurentPoly qterm = LaurentPoly::monomial(rlt.second / dlt.second, qe);
        quot += qterm;
        rem -= qterm * d;
    }
    return quot * LaurentPoly::monomial(1, shift);
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<Var, LaurentPoly>& rules) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(c);
        for (Var x : kAllVars) {
            int k = e[static_cast<int>(x)];
            if (k == 0) continue;
            auto it = rules.find(x);
            if (it == rules.end()) {
                term *= LaurentPoly::monomial(1, x, k);
            } else {
                term *= pow(it->second, k);
            }
        }
        out += term;
    }
    return out;
}

LaurentPoly collapse_square(const LaurentPoly& p, Var from, Var to) {
    LaurentPoly out;
    const int fi = static_cast<int>(from);
    const int ti = static_cast<int>(to);
    for (const auto& [e, c] : p.terms()) {
        if (e[fi] % 2 != 0) {
            throw OddExponentError(std::string("collapse_square: term with odd exponent of ") +
                                   var_name(from) + " in " + to_string(p));
        }
        Exp ne = e;
        ne[fi] = 0;
        ne[ti] += e[fi] / 2;
        out += LaurentPoly::monomial(c, ne);
    }
    return out;
}

bool is_palindromic(const LaurentPoly& p, int center) {
    return is_palindromic_doubled(p, 2 * center);
}

bool is_palindromic_doubled(const LaurentPoly& p, int two_center) {
    if (p.is_zero()) return true;
    auto vars = p.variables();
    if (vars.size() > 1) throw Error("palindromy check requires a one-variable polynomial");
    Var x = vars.empty() ? Var::q : vars[0];
    const int lo = p.low_degree(x);
    const int hi = p.degree(x);
    for (int d = lo; d <= hi; ++d) {
        int mirrored = two_center - d;
        Exp e{0, 0, 0, 0};
        e[static_cast<int>(x)] = d;
        Exp m{0, 0, 0, 0};
        m[static_cast<int>(x)] = mirrored;
        if (p.coeff(e) != p.coeff(m)) return false;
    }
    return true;
}

LaurentPoly truncate_total_degree(const LaurentPoly& p, int bound) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] + e[2] + e[3] <= bound) out.add_term(e, c);
    }
    return out;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        Rational mag = negative ? Rational(-c) : c;

        std::string vars;
        for (Var x : kAllVars) {
            int k = e[static_cast<int>(x)];
            if (k == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(x);
            if (k != 1) vars += "^" + std::to_string(k);
        }
        if (vars.empty()) {
            os << to_string(mag);
        } else if (mag == 1) {
            os << vars;
        } else {
            os << to_string(mag) << "*" << vars;
        }
    }
    return os.str();
}

} // namespace charvar
