#include "symfn/expr.hpp"

#include <cctype>
#include <optional>

#include "symfn/errors.hpp"
#include "symfn/plethysm.hpp"

namespace symfn {

namespace {

struct Term {
    Rational coef = 1;
    // exactly one of these describes the atom
    std::optional<SymFunc> homogeneous;
    std::string series_name;  // H, E, Hpm, Epm or "{desc}"
    bool constant = false;
};

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    std::vector<Term> terms() {
        std::vector<Term> out;
        skip();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++i_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            Term t = term();
            t.coef *= sign;
            out.push_back(std::move(t));
            skip();
        }
        return out;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidArgument("expression: " + why + " at position " + std::to_string(i_) + " in '" + s_ + "'");
    }
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[i_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    std::string digits() {
        std::size_t start = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return s_.substr(start, i_ - start);
    }

    Rational number() {
        Rational r(digits());
        skip();
        if (peek() == '/') {
            ++i_;
            skip();
            Rational den(digits());
            if (den == 0) fail("zero denominator");
            r /= den;
        }
        return r;
    }

    Term term() {
        Term t;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coef = number();
            skip();
            if (peek() != '*') {
                t.constant = true;
                return t;
            }
            ++i_;
            skip();
        }
        atom(t);
        return t;
    }

    std::vector<int> part_list() {
        expect('[');
        std::vector<int> parts;
        skip();
        if (peek() == ']') {
            ++i_;
            return parts;
        }
        for (;;) {
            skip();
            parts.push_back(std::stoi(digits()));
            skip();
            if (peek() == ']') {
                ++i_;
                return parts;
            }
            expect(',');
        }
    }

    void atom(Term& t) {
        const char c = peek();
        if (c == '{') {
            const std::size_t close = s_.find('}', i_);
            if (close == std::string::npos) fail("unterminated '{'");
            std::string desc = s_.substr(i_ + 1, close - i_ - 1);
            i_ = close + 1;
            Family fam = Family::parse(desc);
            if (peek() == '_') {
                ++i_;
                t.homogeneous = fam.component(std::stoi(digits()));
            } else {
                t.series_name = "{" + desc + "}";
            }
            return;
        }
        for (const char* name : {"Hpm", "Epm", "H", "E"}) {
            const std::string n(name);
            if (s_.compare(i_, n.size(), n) == 0) {
                i_ += n.size();
                t.series_name = n;
                return;
            }
        }
        if (c == 'p' || c == 'h' || c == 'e' || c == 's') {
            ++i_;
            Partition lam = Partition::from_unsorted(part_list());
            if (c == 'p') {
                t.homogeneous = p_of(lam);
            } else if (c == 's') {
                t.homogeneous = s_of(lam);
            } else {
                SymFunc f = SymFunc::one();
                for (int part : lam.parts()) f = f * (c == 'h' ? h_of(part) : e_of(part));
                t.homogeneous = f;
            }
            return;
        }
        fail("expected an atom");
    }
};

Series named_series(const std::string& name, int N) {
    if (name == "H") return H_series(N);
    if (name == "E") return E_series(N);
    if (name == "Hpm") return H_pm_series(N);
    if (name == "Epm") return E_pm_series(N);
    return Family::parse(name.substr(1, name.size() - 2)).series(N);
}

}  // namespace

Series parse_series_expr(const std::string& text, int max_degree) {
    if (max_degree < 0) throw InvalidArgument("max degree must be nonnegative");
    Series out(max_degree);
    for (const auto& t : Parser(text).terms()) {
        if (t.constant) {
            out.set_constant(out.constant() + t.coef);
        } else if (t.homogeneous) {
            const int d = t.homogeneous->degree();
            if (d == 0)
                out.set_constant(out.constant() + t.coef * t.homogeneous->coefficient(Partition()));
            else if (d <= max_degree)
                out.add_to_component(d, t.coef * *t.homogeneous);
        } else {
            out += t.coef * named_series(t.series_name, max_degree);
        }
    }
    return out;
}

SymFunc parse_symfunc_expr(const std::string& text) {
    std::optional<SymFunc> acc;
    for (const auto& t : Parser(text).terms()) {
        if (!t.homogeneous) throw InvalidArgument("expression '" + text + "' is not homogeneous");
        SymFunc f = t.coef * *t.homogeneous;
        if (acc && acc->degree() != f.degree())
            throw InvalidArgument("expression '" + text + "' mixes degrees " + std::to_string(acc->degree()) + " and " +
                                  std::to_string(f.degree()));
        acc = acc ? *acc + f : f;
    }
    return *acc;
}

}  // namespace symfn
