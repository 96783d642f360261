#include "toren/io.hpp"

#include <cctype>
#include <fstream>

namespace toren {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw Error(std::string("missing field '") + name + "'");
    return j.at(name);
}

unsigned uint_field(const nlohmann::json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() <= 0)
        throw Error(std::string("field '") + name + "' must be a positive integer");
    return v.get<unsigned>();
}

}  // namespace

Json cycnum_to_json(const CycNum& value) {
    Json j;
    j["conductor"] = value.conductor();
    Json coeffs = Json::array();
    for (const Rational& c : value.coeffs()) coeffs.push_back(rational_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

CycNum cycnum_from_json(const nlohmann::json& j) {
    unsigned conductor = uint_field(j, "conductor");
    const auto& coeffs = field(j, "coeffs");
    if (!coeffs.is_array())
        throw Error("field 'coeffs' must be an array of rational strings");
    if (coeffs.size() != euler_phi(conductor))
        throw Error("field 'coeffs' must have exactly phi(conductor) = " +
                    std::to_string(euler_phi(conductor)) + " entries");
    CycNum acc = CycNum::from_rational(0, conductor);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_string()) throw Error("field 'coeffs' entries must be strings");
        Rational c = rational_from_string(coeffs[i].get<std::string>());
        acc += CycNum::from_rational(c, conductor) *
               CycNum::root_of_unity(conductor, static_cast<long>(i));
    }
    return acc;
}

std::string cycnum_to_string(const CycNum& value) {
    if (value.is_zero()) return "0";
    std::string out;
    const auto& coeffs = value.coeffs();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool unit = mag == 1;
        if (i == 0) {
            out += rational_to_string(mag);
        } else {
            if (!unit) out += rational_to_string(mag) + "*";
            out += "z";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// group files
// ---------------------------------------------------------------------------

namespace {

Json matrix_to_json(const CycMatrix& m, unsigned conductor) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            Json entry = Json::array();
            CycNum e = embed_into(m.at(i, j), conductor);
            for (const Rational& c : e.coeffs()) entry.push_back(rational_to_string(c));
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CycMatrix matrix_from_json(const nlohmann::json& j, std::size_t n, unsigned conductor) {
    if (!j.is_array() || j.size() != n)
        throw Error("field 'generators' entries must be " + std::to_string(n) + " rows");
    const unsigned degree = euler_phi(conductor);
    CycMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw Error("field 'generators' rows must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) {
            const auto& entry = j[i][k];
            if (!entry.is_array() || entry.size() != degree)
                throw Error("field 'generators' entries must be coefficient arrays of length " +
                            std::to_string(degree));
            CycNum acc = CycNum::from_rational(0, conductor);
            for (std::size_t c = 0; c < entry.size(); ++c) {
                if (!entry[c].is_string())
                    throw Error("field 'generators' coefficients must be rational strings");
                acc += CycNum::from_rational(rational_from_string(entry[c].get<std::string>()),
                                             conductor) *
                       CycNum::root_of_unity(conductor, static_cast<long>(c));
            }
            m.at(i, k) = std::move(acc);
        }
    }
    return m;
}

}  // namespace

Json group_to_json(const FiniteMatGroup& group) {
    Json j;
    j["n"] = group.dim();
    j["conductor"] = group.conductor();
    Json gens = Json::array();
    for (const CycMatrix& g : group.generators())
        gens.push_back(matrix_to_json(g, group.conductor()));
    j["generators"] = std::move(gens);
    return j;
}

FiniteMatGroup group_from_json(const nlohmann::json& j, std::size_t cap) {
    unsigned n = uint_field(j, "n");
    unsigned conductor = uint_field(j, "conductor");
    const auto& gens = field(j, "generators");
    if (!gens.is_array() || gens.empty())
        throw Error("field 'generators' must be a non-empty array");
    std::vector<CycMatrix> parsed;
    for (const auto& g : gens) parsed.push_back(matrix_from_json(g, n, conductor));
    return closure(parsed, cap);
}

FiniteMatGroup load_group_file(const std::string& path, std::size_t cap) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("group file '" + path + "': " + e.what());
    }
    return group_from_json(j, cap);
}

// ---------------------------------------------------------------------------
// polynomial strings
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;
    unsigned conductor;
    std::size_t nv;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error("polynomial parse error at position " + std::to_string(pos) + ": " + what +
                    " in \"" + text + "\"");
    }

    std::string parse_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return text.substr(start, pos - start);
    }

    unsigned long parse_uint() {
        std::string digits = parse_digits();
        if (digits.size() > 9) fail("number literal too large");
        return std::stoul(digits);
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected an identifier");
        return text.substr(start, pos - start);
    }

    Poly parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = parse_digits();
            if (eat('/')) {
                std::string den = parse_digits();
                digits += "/" + den;
            }
            Rational q = rational_from_string(digits);
            return Poly::constant(nv, CycNum::from_rational(q, conductor));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            unsigned long exp = 1;
            if (eat('^')) exp = parse_uint();
            if (exp > 64) fail("exponent too large");
            if (name == "z") {
                CycNum val = CycNum::root_of_unity(conductor).pow(static_cast<long>(exp));
                return Poly::constant(nv, val);
            }
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) fail("unknown variable '" + name + "'");
            return Poly::variable(nv, static_cast<std::size_t>(it - vars.begin()),
                                  static_cast<unsigned>(exp));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Poly parse_sum() {
        Poly acc = Poly::zero(nv);
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        while (true) {
            Poly t = parse_term();
            acc = negative ? acc - t : acc + t;
            skip_ws();
            if (eat('-'))
                negative = true;
            else if (eat('+'))
                negative = false;
            else
                break;
        }
        return acc;
    }
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (m.exps[i] >= 2) out += "^" + std::to_string(m.exps[i]);
    }
    return out;
}

}  // namespace

Poly poly_from_string(const std::string& text, const std::vector<std::string>& vars,
                      unsigned conductor) {
    if (std::find(vars.begin(), vars.end(), "z") != vars.end())
        throw Error("'z' is reserved for the root of unity and cannot name a variable");
    Parser p{text, 0, vars, conductor, vars.size()};
    Poly result = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars,
                           const MonomialOrder& order) {
    if (vars.size() != p.num_vars()) throw Error("variable name list has the wrong length");
    if (p.is_zero()) return "0";
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [&order](const Term& a, const Term& b) { return order.less(b.mono, a.mono); });
    std::string out;
    for (const Term& t : terms) {
        bool rational = t.coeff.is_rational();
        Rational q = rational ? t.coeff.rational_value() : Rational(0);
        bool negative = rational && q < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = monomial_to_string(t.mono, vars);
        std::string coeff;
        if (rational) {
            Rational mag = negative ? Rational(-q) : q;
            if (mag != 1 || mono.empty()) coeff = rational_to_string(mag);
        } else {
            coeff = "(" + cycnum_to_string(t.coeff) + ")";
        }
        if (!coeff.empty() && !mono.empty())
            out += coeff + "*" + mono;
        else
            out += coeff.empty() ? mono : coeff;
    }
    return out;
}

// ---------------------------------------------------------------------------
// ideal files
// ---------------------------------------------------------------------------

std::string order_to_string(const MonomialOrder& order) {
    switch (order.kind) {
        case OrderKind::graded_lex: return "grlex";
        case OrderKind::graded_reverse_lex: return "grevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::elimination:
            return "elim-" + std::to_string(order.block);
    }
    throw Error("unknown monomial order");
}

MonomialOrder order_from_string(const std::string& name) {
    if (name == "grlex") return MonomialOrder::grlex();
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw Error("unknown monomial order '" + name + "' (use grlex, grevlex, or lex)");
}

IdealFile ideal_from_json(const nlohmann::json& j) {
    IdealFile out;
    const auto& vars = field(j, "vars");
    if (!vars.is_array() || vars.empty())
        throw Error("field 'vars' must be a non-empty array of variable names");
    for (const auto& v : vars) {
        if (!v.is_string()) throw Error("field 'vars' entries must be strings");
        out.vars.push_back(v.get<std::string>());
    }
    out.conductor = uint_field(j, "conductor");
    MonomialOrder order = MonomialOrder::grlex();
    if (j.contains("order")) {
        if (!j.at("order").is_string()) throw Error("field 'order' must be a string");
        order = order_from_string(j.at("order").get<std::string>());
    }
    const auto& gens = field(j, "generators");
    if (!gens.is_array()) throw Error("field 'generators' must be an array");
    std::vector<Poly> polys;
    for (const auto& g : gens) {
        if (!g.is_string()) throw Error("field 'generators' entries must be strings");
        polys.push_back(poly_from_string(g.get<std::string>(), out.vars, out.conductor));
    }
    out.ideal = Ideal(out.vars.size(), std::move(polys), order);
    return out;
}

Json ideal_to_json(const Ideal& ideal, const std::vector<std::string>& vars, unsigned conductor) {
    Json j;
    j["vars"] = vars;
    j["conductor"] = conductor;
    j["order"] = order_to_string(ideal.order());
    Json gens = Json::array();
    for (const Poly& g : ideal.generators())
        gens.push_back(poly_to_string(g, vars, ideal.order()));
    j["generators"] = std::move(gens);
    return j;
}

IdealFile load_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ideal file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("ideal file '" + path + "': " + e.what());
    }
    return ideal_from_json(j);
}

}  // namespace toren
