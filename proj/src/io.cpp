#include "symfn/io.hpp"

#include <sstream>

#include "symfn/errors.hpp"

namespace symfn {

std::string rational_text(const Rational& c) {
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_text(const std::string& text) {
    Rational r;
    try {
        r = Rational(text);
    } catch (const std::invalid_argument&) {
        throw InvalidArgument("malformed rational: '" + text + "'");
    }
    if (r.get_den() == 0) throw InvalidArgument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

namespace {

std::string parts_text(const Partition& lam) {
    std::string out = "[";
    for (int i = 0; i < lam.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(lam[static_cast<std::size_t>(i)]);
    }
    return out + "]";
}

// coef_text(|c|) for the magnitude; sign handled by the caller
template <class Map, class CoefText>
std::string join_terms(const Map& terms, char basis, CoefText coef_text) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : terms) {
        const bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        out += coef_text(Rational(abs(c)));
        out += basis;
        out += parts_text(lam);
    }
    return out;
}

Json rational_json(const Rational& c) { return Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}}; }

Json term_json(const Partition& lam, const Rational& c) {
    return Json{{"partition", lam.parts()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

std::pair<Partition, Rational> term_from_json(const Json& t) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("num") || !t.contains("den"))
        throw InvalidArgument("term needs partition, num and den");
    Partition lam = Partition::from_unsorted(t.at("partition").get<std::vector<int>>());
    if (lam.parts() != t.at("partition").get<std::vector<int>>()) throw InvalidArgument("partition must be weakly decreasing");
    Rational c = rational_from_text(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    return {lam, c};
}

int json_degree(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms") || !j.at("terms").is_array())
        throw InvalidArgument("expected {\"degree\", \"basis\", \"terms\"}");
    return j.at("degree").get<int>();
}

}  // namespace

std::string to_text(const SymFunc& f) {
    return join_terms(f.terms(), 'p', [](const Rational& c) { return rational_text(c) + " * "; });
}

std::string to_text(const SchurExpansion& s) {
    std::map<Partition, Rational, DescLex> nonzero;
    for (const auto& [lam, c] : s.coefficients)
        if (sgn(c) != 0) nonzero.emplace(lam, c);
    return join_terms(nonzero, 's', [](const Rational& c) -> std::string {
        if (c == 1) return "";
        return (c.get_den() == 1 ? c.get_num().get_str() : rational_text(c)) + " * ";
    });
}

Json to_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms()) terms.push_back(term_json(lam, c));
    return Json{{"degree", f.degree()}, {"basis", "p"}, {"terms", terms}};
}

Json to_json(const SchurExpansion& s) {
    Json terms = Json::array();
    for (const auto& [lam, c] : s.coefficients)
        if (sgn(c) != 0) terms.push_back(term_json(lam, c));
    return Json{{"degree", s.degree}, {"basis", "schur"}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
    const int degree = json_degree(j);
    if (j.value("basis", "p") != "p") throw InvalidArgument("expected basis \"p\"");
    SymFunc f(degree);
    for (const auto& t : j.at("terms")) {
        auto [lam, c] = term_from_json(t);
        if (degree != SymFunc::kAnyDegree && lam.size() != degree) throw InvalidArgument("term degree does not match");
        f.add_term(lam, c);
    }
    return f;
}

SchurExpansion schur_from_json(const Json& j) {
    SchurExpansion s;
    s.degree = json_degree(j);
    if (j.value("basis", "") != "schur") throw InvalidArgument("expected basis \"schur\"");
    for (const auto& t : j.at("terms")) {
        auto [lam, c] = term_from_json(t);
        if (lam.size() != s.degree) throw InvalidArgument("term degree does not match");
        s.coefficients[lam] += c;
    }
    return s;
}

Basis parse_basis(const std::string& name) {
    if (name == "p") return Basis::p;
    if (name == "schur" || name == "s") return Basis::schur;
    throw InvalidArgument("unknown basis '" + name + "' (expected p or schur)");
}

std::string to_text(const Series& s, Basis basis) {
    std::ostringstream out;
    if (sgn(s.constant()) != 0) out << "degree 0: " << rational_text(s.constant()) << "\n";
    for (int d = 1; d <= s.max_degree(); ++d) {
        if (s[d].is_zero()) continue;
        out << "degree " << d << ": " << (basis == Basis::p ? to_text(s[d]) : to_text(to_schur(s[d]))) << "\n";
    }
    if (out.str().empty()) return "0\n";
    return out.str();
}

Json to_json(const Series& s, Basis basis) {
    Json comps = Json::array();
    for (int d = 1; d <= s.max_degree(); ++d) {
        if (s[d].is_zero()) continue;
        comps.push_back(basis == Basis::p ? to_json(s[d]) : to_json(to_schur(s[d])));
    }
    return Json{{"N", s.max_degree()},
                {"basis", basis == Basis::p ? "p" : "schur"},
                {"constant", rational_json(s.constant())},
                {"components", comps}};
}

namespace {

Json timing(double ms, bool with_timing) { return with_timing ? Json(ms) : Json(nullptr); }

Json witness_list(const std::vector<std::pair<Partition, Rational>>& w) {
    Json out = Json::array();
    for (const auto& [lam, c] : w) out.push_back(term_json(lam, c));
    return out;
}

std::string params_text(const ParamMap& params) {
    std::string out;
    for (const auto& [k, v] : params) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
}

}  // namespace

Json to_json(const VerifyReport& r, bool with_timing) {
    Json mismatch = nullptr;
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        Json diffs = Json::array();
        for (const auto& d : m.differences)
            diffs.push_back(Json{{"partition", d.lambda.parts()}, {"lhs", rational_json(d.lhs)}, {"rhs", rational_json(d.rhs)}});
        mismatch = Json{{"check", m.check}, {"degree", m.degree}};
        if (m.length >= 0) mismatch["length"] = m.length;
        mismatch["differences"] = diffs;
        if (!m.detail.empty()) mismatch["detail"] = m.detail;
    }
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json t = term_json(w.lambda, w.coefficient);
        t["n"] = w.n;
        witnesses.push_back(t);
    }
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return Json{{"id", r.id},
                {"params", params},
                {"N", r.N},
                {"status", r.pass ? "pass" : "fail"},
                {"first_mismatch", mismatch},
                {"witnesses", witnesses},
                {"notes", r.notes},
                {"elapsed_ms", timing(r.elapsed_ms, with_timing)}};
}

std::string to_text(const VerifyReport& r, bool with_timing) {
    std::ostringstream out;
    out << r.id;
    if (!r.params.empty()) out << " [" << params_text(r.params) << "]";
    out << " N=" << r.N << ": " << (r.pass ? "pass" : "FAIL");
    if (with_timing) out << " (" << r.elapsed_ms << " ms)";
    out << "\n";
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        out << "  first mismatch: " << m.check << " at degree " << m.degree;
        if (m.length >= 0) out << ", length " << m.length;
        out << "\n";
        for (const auto& d : m.differences)
            out << "    " << parts_text(d.lambda) << ": " << rational_text(d.lhs) << " vs " << rational_text(d.rhs) << "\n";
        if (!m.detail.empty()) out << "    " << m.detail << "\n";
    }
    for (const auto& w : r.witnesses)
        out << "  witness n=" << w.n << " " << parts_text(w.lambda) << " " << rational_text(w.coefficient) << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    return out.str();
}

Json to_json(const PositivityReport& r, bool with_timing) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(Json{{"n", v.n},
                                {"positive", v.positive},
                                {"witnesses", witness_list(v.witnesses)},
                                {"elapsed_ms", timing(v.elapsed_ms, with_timing)}});
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return Json{{"family", r.family}, {"params", params}, {"all_positive", r.all_positive()}, {"verdicts", verdicts}};
}

std::string to_text(const PositivityReport& r, bool with_timing) {
    std::ostringstream out;
    const std::string head = r.family + (r.params.empty() ? "" : " [" + params_text(r.params) + "]");
    for (const auto& v : r.verdicts) {
        out << head << " n=" << v.n << ": " << (v.positive ? "positive" : "negative");
        if (with_timing) out << " (" << v.elapsed_ms << " ms)";
        out << "\n";
        for (const auto& [lam, c] : v.witnesses) out << "  s" << parts_text(lam) << " " << rational_text(c) << "\n";
    }
    return out.str();
}

Json catalog_json() {
    Json out = Json::array();
    for (const auto& info : identity_catalog()) {
        Json params = Json::array();
        for (const auto& p : info.params)
            params.push_back(Json{{"name", p.name}, {"description", p.description}, {"default", p.default_value}});
        out.push_back(Json{{"id", info.id}, {"params", params}, {"default_N", info.default_N}, {"formula", info.formula}});
    }
    return out;
}

std::string catalog_text() {
    std::ostringstream out;
    for (const auto& info : identity_catalog()) {
        out << info.id << " (N=" << info.default_N << ")";
        for (const auto& p : info.params) out << " " << p.name << "=" << p.default_value;
        out << "\n  " << info.formula << "\n";
    }
    return out.str();
}

ParamMap params_from_json(const std::string& text) {
    if (text.empty()) return {};
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("malformed parameter JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidArgument("parameters must be a JSON object");
    ParamMap out;
    for (const auto& [k, v] : j.items()) {
        if (v.is_string())
            out[k] = v.get<std::string>();
        else if (v.is_number_integer())
            out[k] = std::to_string(v.get<long long>());
        else
            throw InvalidArgument("parameter " + k + " must be a string or integer");
    }
    return out;
}

}  // namespace symfn
