#include "divlie/json_io.hpp"

namespace divlie {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ValueError("rational must be an integer or a 'p/q' string");
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ValueError(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

}  // namespace

Json poly_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exps"] = m.exps();
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    return Json{{"n", p.n()}, {"terms", std::move(terms)}};
}

Polynomial poly_from_json(const Json& j) {
    int n = int_field(j, "n");
    Polynomial p(n);
    if (!j.contains("terms") || !j.at("terms").is_array()) throw ValueError("polynomial needs a 'terms' array");
    for (const auto& t : j.at("terms")) {
        auto exps = t.at("exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != n) throw ValueError("term exponent length differs from n");
        p.add_term(Monomial(std::move(exps)), rational_from_json(t.at("coeff")));
    }
    return p;
}

Json derivation_to_json(const Derivation& d) {
    Json coeffs = Json::array();
    for (int i = 1; i <= d.n(); ++i) coeffs.push_back(poly_to_json(d.coeff(i)));
    return Json{{"n", d.n()}, {"coeffs", std::move(coeffs)}};
}

Derivation derivation_from_json(const Json& j) {
    int n = int_field(j, "n");
    if (!j.contains("coeffs") || !j.at("coeffs").is_array() || static_cast<int>(j.at("coeffs").size()) != n)
        throw ValueError("derivation needs n coefficient polynomials");
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<size_t>(n));
    for (const auto& c : j.at("coeffs")) coeffs.push_back(poly_from_json(c));
    return Derivation(n, std::move(coeffs));
}

Json automorphism_to_json(const Automorphism& a) {
    Json word = Json::array();
    for (const auto& m : a.word()) {
        if (m.kind() == ElementaryMap::Kind::Affine) {
            Json A = Json::array();
            for (const auto& row : m.matrix()) {
                Json r = Json::array();
                for (const auto& v : row) r.push_back(to_string(v));
                A.push_back(std::move(r));
            }
            Json b = Json::array();
            for (const auto& v : m.offset()) b.push_back(to_string(v));
            word.push_back(Json{{"kind", "affine"}, {"A", std::move(A)}, {"b", std::move(b)}});
        } else {
            word.push_back(Json{{"kind", "tri"}, {"i", m.var()}, {"f", poly_to_json(m.shift())}});
        }
    }
    return Json{{"n", a.n()}, {"word", std::move(word)}};
}

Automorphism automorphism_from_json(const Json& j) {
    int n = int_field(j, "n");
    if (!j.contains("word") || !j.at("word").is_array()) throw ValueError("automorphism needs a 'word' array");
    std::vector<ElementaryMap> word;
    for (const auto& m : j.at("word")) {
        std::string kind = m.at("kind").get<std::string>();
        if (kind == "affine") {
            std::vector<std::vector<Rational>> A;
            for (const auto& row : m.at("A")) {
                std::vector<Rational> r;
                for (const auto& v : row) r.push_back(rational_from_json(v));
                A.push_back(std::move(r));
            }
            if (static_cast<int>(A.size()) != n) throw ValueError("affine matrix must be n x n");
            std::vector<Rational> b;
            for (const auto& v : m.at("b")) b.push_back(rational_from_json(v));
            word.push_back(ElementaryMap::affine(std::move(A), std::move(b)));
        } else if (kind == "tri") {
            word.push_back(ElementaryMap::triangular(n, int_field(m, "i"), poly_from_json(m.at("f"))));
        } else {
            throw ValueError("unknown elementary map kind '" + kind + "'");
        }
    }
    return Automorphism(n, std::move(word));
}

std::vector<Derivation> derivation_list_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ValueError("expected a nonempty JSON array of derivations");
    std::vector<Derivation> out;
    out.reserve(j.size());
    for (const auto& d : j) out.push_back(derivation_from_json(d));
    return out;
}

Json report_to_json(const Report& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json entry{{"check", c.check}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    return checks;
}

std::string report_to_text(const Report& rep) {
    std::string out = "suite " + rep.suite + "\n";
    for (const auto& c : rep.checks) {
        out += std::string(c.pass ? "  pass  " : "  FAIL  ") + c.check;
        if (!c.pass && !c.witness.empty()) out += "  [" + c.witness + "]";
        out += "\n";
    }
    out += rep.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n";
    return out;
}

}  // namespace divlie
