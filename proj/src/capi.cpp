#include "symfn/symfn.h"

#include <cstdlib>
#include <cstring>

#include "symfn/errors.hpp"
#include "symfn/expr.hpp"
#include "symfn/io.hpp"

struct sf_symfunc {
    symfn::SymFunc value;
};

struct sf_series {
    symfn::Series value;
};

namespace {

thread_local std::string last_error;

enum class Format { text, json };

Format parse_format(const char* f) {
    const std::string s = f ? f : "text";
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    throw symfn::InvalidArgument("unknown format '" + s + "' (expected text or json)");
}

std::string str(const char* s, const char* what) {
    if (!s) throw symfn::InvalidArgument(std::string(what) + " is null");
    return s;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class T>
void need(T* p, const char* what) {
    if (!p) throw symfn::InvalidArgument(std::string(what) + " is null");
}

std::string render(const symfn::Json& j) { return j.dump(2) + "\n"; }

template <class Fn>
sf_status guarded(Fn&& fn) {
    last_error.clear();
    try {
        fn();
        return SF_OK;
    } catch (const symfn::UnknownName& e) {
        last_error = e.what();
        return SF_UNKNOWN_NAME;
    } catch (const symfn::BudgetExceeded& e) {
        last_error = e.what();
        return SF_BUDGET_EXCEEDED;
    } catch (const symfn::TruncationError& e) {
        last_error = e.what();
        return SF_TRUNCATION;
    } catch (const symfn::InvalidArgument& e) {
        last_error = e.what();
        return SF_INVALID_ARGUMENT;
    } catch (const nlohmann::json::exception& e) {
        last_error = std::string("malformed JSON: ") + e.what();
        return SF_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SF_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return SF_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* sf_last_error(void) { return last_error.c_str(); }

const char* sf_status_name(sf_status status) {
    switch (status) {
        case SF_OK: return "ok";
        case SF_INVALID_ARGUMENT: return "invalid argument";
        case SF_UNKNOWN_NAME: return "unknown name";
        case SF_BUDGET_EXCEEDED: return "budget exceeded";
        case SF_TRUNCATION: return "truncation";
        case SF_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sf_version(void) { return "0.1.0"; }

void sf_string_free(char* s) { std::free(s); }

sf_status sf_family_component(const char* descriptor, int n, sf_symfunc** out) {
    return guarded([&] {
        need(out, "out");
        if (n < 1) throw symfn::InvalidArgument("degree must be at least 1");
        auto f = symfn::Family::parse(str(descriptor, "descriptor")).component(n);
        *out = new sf_symfunc{std::move(f)};
    });
}

sf_status sf_symfunc_parse(const char* expression, sf_symfunc** out) {
    return guarded([&] {
        need(out, "out");
        *out = new sf_symfunc{symfn::parse_symfunc_expr(str(expression, "expression"))};
    });
}

sf_status sf_symfunc_from_json(const char* json, sf_symfunc** out) {
    return guarded([&] {
        need(out, "out");
        auto j = symfn::Json::parse(str(json, "json"));
        symfn::SymFunc f = j.value("basis", "p") == "schur" ? symfn::from_schur(symfn::schur_from_json(j))
                                                            : symfn::symfunc_from_json(j);
        *out = new sf_symfunc{std::move(f)};
    });
}

void sf_symfunc_free(sf_symfunc* f) { delete f; }

sf_status sf_symfunc_degree(const sf_symfunc* f, int* degree) {
    return guarded([&] {
        need(f, "f");
        need(degree, "degree");
        *degree = f->value.degree();
    });
}

sf_status sf_symfunc_format(const sf_symfunc* f, const char* basis, const char* format, char** out) {
    return guarded([&] {
        need(f, "f");
        need(out, "out");
        const auto b = symfn::parse_basis(str(basis, "basis"));
        const auto fmt = parse_format(format);
        if (b == symfn::Basis::p) {
            *out = dup(fmt == Format::text ? symfn::to_text(f->value) + "\n" : render(symfn::to_json(f->value)));
        } else {
            auto s = symfn::to_schur(f->value);
            *out = dup(fmt == Format::text ? symfn::to_text(s) + "\n" : render(symfn::to_json(s)));
        }
    });
}

sf_status sf_symfunc_schur_positive(const sf_symfunc* f, const char* format, int* positive, char** witnesses) {
    return guarded([&] {
        need(f, "f");
        need(positive, "positive");
        const auto fmt = parse_format(format);
        auto r = symfn::is_schur_positive(f->value);
        *positive = r.positive ? 1 : 0;
        if (!witnesses) return;
        if (fmt == Format::json) {
            symfn::Json arr = symfn::Json::array();
            for (const auto& [lam, c] : r.witnesses)
                arr.push_back({{"partition", lam.parts()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
            *witnesses = dup(render(symfn::Json{{"positive", r.positive}, {"witnesses", arr}}));
        } else {
            std::string text = r.positive ? "positive\n" : "negative\n";
            for (const auto& [lam, c] : r.witnesses) text += "  s" + lam.to_string() + " " + symfn::rational_text(c) + "\n";
            *witnesses = dup(text);
        }
    });
}

sf_status sf_series_parse(const char* expression, int max_degree, sf_series** out) {
    return guarded([&] {
        need(out, "out");
        *out = new sf_series{symfn::parse_series_expr(str(expression, "expression"), max_degree)};
    });
}

sf_status sf_series_pleth(const sf_series* outer, const sf_series* inner, sf_series** out) {
    return guarded([&] {
        need(outer, "outer");
        need(inner, "inner");
        need(out, "out");
        *out = new sf_series{symfn::pleth(outer->value, inner->value)};
    });
}

sf_status sf_series_format(const sf_series* s, const char* basis, const char* format, char** out) {
    return guarded([&] {
        need(s, "s");
        need(out, "out");
        const auto b = symfn::parse_basis(str(basis, "basis"));
        *out = dup(parse_format(format) == Format::text ? symfn::to_text(s->value, b) : render(symfn::to_json(s->value, b)));
    });
}

void sf_series_free(sf_series* s) { delete s; }

sf_status sf_list(const char* format, char** out) {
    return guarded([&] {
        need(out, "out");
        *out = dup(parse_format(format) == Format::text ? symfn::catalog_text() : render(symfn::catalog_json()));
    });
}

sf_status sf_verify(const char* id, const char* params_json, int max_degree, const char* format, int with_timing, int* passed,
                    char** out) {
    return guarded([&] {
        need(passed, "passed");
        need(out, "out");
        const auto fmt = parse_format(format);
        auto params = symfn::params_from_json(params_json ? params_json : "");
        auto r = symfn::verify(str(id, "id"), params, max_degree);
        *passed = r.pass ? 1 : 0;
        *out = dup(fmt == Format::text ? symfn::to_text(r, with_timing) : render(symfn::to_json(r, with_timing)));
    });
}

sf_status sf_verify_all(int jobs, const char* format, int with_timing, int* all_passed, char** out) {
    return guarded([&] {
        need(all_passed, "all_passed");
        need(out, "out");
        const auto fmt = parse_format(format);
        auto reports = symfn::verify_all(jobs);
        bool ok = true;
        std::string text;
        symfn::Json arr = symfn::Json::array();
        for (const auto& r : reports) {
            ok = ok && r.pass;
            if (fmt == Format::text)
                text += symfn::to_text(r, with_timing);
            else
                arr.push_back(symfn::to_json(r, with_timing));
        }
        *all_passed = ok ? 1 : 0;
        *out = dup(fmt == Format::text ? text : render(arr));
    });
}

sf_status sf_scan(const char* family, const char* params_json, int n_min, int n_max, int budget, int jobs, const char* format,
                  int with_timing, int* all_positive, char** out) {
    return guarded([&] {
        need(all_positive, "all_positive");
        need(out, "out");
        const auto fmt = parse_format(format);
        auto params = symfn::params_from_json(params_json ? params_json : "");
        auto r = symfn::scan_positivity(str(family, "family"), params, n_min, n_max, {budget, jobs});
        *all_positive = r.all_positive() ? 1 : 0;
        *out = dup(fmt == Format::text ? symfn::to_text(r, with_timing) : render(symfn::to_json(r, with_timing)));
    });
}

sf_status sf_lift(int q, int n_max, int budget, int jobs, const char* format, int with_timing, int* all_positive, char** out) {
    return guarded([&] {
        need(all_positive, "all_positive");
        need(out, "out");
        const auto fmt = parse_format(format);
        auto r = symfn::lifting_check(q, n_max, {budget, jobs});
        *all_positive = r.all_positive() ? 1 : 0;
        *out = dup(fmt == Format::text ? symfn::to_text(r, with_timing) : render(symfn::to_json(r, with_timing)));
    });
}

}  // extern "C"
