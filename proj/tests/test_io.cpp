#include "doctest.h"

#include "symfn/errors.hpp"
#include "symfn/expr.hpp"
#include "symfn/io.hpp"

using namespace symfn;

TEST_CASE("p-basis text") {
    CHECK(to_text(lie(4)) == "-1/4 * p[2,2] + 1/4 * p[1,1,1,1]");
    CHECK(to_text(SymFunc(3)) == "0");
    CHECK(to_text(p_of({2})) == "1/1 * p[2]");
    CHECK(to_text(SymFunc::p({3}, -2)) == "-2/1 * p[3]");
}

TEST_CASE("Schur text") {
    CHECK(to_text(to_schur(lie(4))) == "s[3,1] + s[2,1,1]");
    CHECK(to_text(to_schur(p_of({2}))) == "s[2] - s[1,1]");
    CHECK(to_text(to_schur(SymFunc::p({1, 1}, ratio(1, 2)))) == "1/2 * s[2] + 1/2 * s[1,1]");
    CHECK(to_text(to_schur(SymFunc::p({1, 1}, 2))) == "2 * s[2] + 2 * s[1,1]");
    CHECK(to_text(to_schur(SymFunc(2))) == "0");
}

TEST_CASE("JSON round trips") {
    for (const SymFunc& f : {lie(6), conj(5), foulkes(6, 2), SymFunc(4), SymFunc::p({3, 1}, ratio(-7, 3))}) {
        Json j = to_json(f);
        CHECK(j["basis"] == "p");
        CHECK(symfunc_from_json(Json::parse(j.dump())) == f);
        auto s = to_schur(f);
        CHECK(from_schur(schur_from_json(Json::parse(to_json(s).dump()))) == f);
    }
    CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"degree":2,"basis":"p","terms":[{"partition":[1,2],"num":"1","den":"1"}]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"degree":2,"basis":"p","terms":[{"partition":[2],"num":"1","den":"0"}]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"degree":3,"basis":"p","terms":[{"partition":[2],"num":"1","den":"1"}]})")),
                    InvalidArgument);
}

TEST_CASE("text and JSON carry the same terms") {
    SymFunc f = conj(6);
    Json j = to_json(f);
    std::string rebuilt;
    for (const auto& t : j["terms"]) {
        Rational c = rational_from_text(t["num"].get<std::string>() + "/" + t["den"].get<std::string>());
        SymFunc one = SymFunc::p(Partition::from_unsorted(t["partition"].get<std::vector<int>>()), c);
        rebuilt += (rebuilt.empty() ? "" : " + ") + to_text(one);
    }
    // the joined text only differs in how minus signs are written
    std::string direct = to_text(f);
    for (std::size_t pos; (pos = rebuilt.find("+ -")) != std::string::npos;) rebuilt.replace(pos, 3, "- ");
    CHECK(rebuilt == direct);
}

TEST_CASE("report JSON has the documented keys") {
    Json j = to_json(verify("solomon"));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"id", "params", "N", "status", "first_mismatch", "witnesses", "notes", "elapsed_ms"});
    CHECK(j["status"] == "pass");
    CHECK(j["first_mismatch"].is_null());
    CHECK(j["elapsed_ms"].is_null());
    CHECK(to_json(verify("solomon"), true)["elapsed_ms"].is_number());

    VerifyOptions opt;
    opt.corrupt = Corruption{3, false};
    Json bad = to_json(verify("solomon", {}, 6, opt));
    CHECK(bad["status"] == "fail");
    CHECK(bad["first_mismatch"]["degree"] == 3);
}

TEST_CASE("series expressions") {
    Series s = parse_series_expr("p[1] - p[2]", 4);
    CHECK(s[1] == p_of({1}));
    CHECK(s[2] == -p_of({2}));
    CHECK(s.constant() == 0);
    CHECK(parse_series_expr("H - 1", 5) == [] {
        Series h = H_series(5);
        h.set_constant(0);
        return h;
    }());
    CHECK(parse_series_expr("{lie}", 6) == family_series(PsiSpec::mu(), 6));
    CHECK(parse_series_expr("2 + 1/2 * h[2]", 3).constant() == 2);
    CHECK(parse_series_expr("2 + 1/2 * h[2]", 3)[2] == scale(ratio(1, 2), h_of(2)));
    CHECK(parse_series_expr("Hpm", 4) == H_pm_series(4));
    CHECK_THROWS_AS(parse_series_expr("p[1] p[2]", 3), InvalidArgument);
    CHECK_THROWS_AS(parse_series_expr("", 3), InvalidArgument);
    CHECK_THROWS_AS(parse_series_expr("{nope}", 3), UnknownName);
    CHECK_THROWS_AS(parse_series_expr("1/0", 3), InvalidArgument);
}

TEST_CASE("homogeneous expressions") {
    CHECK(parse_symfunc_expr("{lie}_4") == lie(4));
    CHECK(parse_symfunc_expr("h[2,1]") == h_of(2) * h_of(1));
    CHECK(parse_symfunc_expr("e[2] - s[1,1]").is_zero());
    CHECK(parse_symfunc_expr("p[4] + p[2,2]") == p_of({4}) + p_of({2, 2}));
    CHECK_THROWS_AS(parse_symfunc_expr("p[2] + p[3]"), InvalidArgument);
    CHECK_THROWS_AS(parse_symfunc_expr("H"), InvalidArgument);
}

TEST_CASE("catalog listing") {
    Json c = catalog_json();
    CHECK(c.size() == identity_catalog().size());
    bool lifting = false;
    for (const auto& e : c)
        if (e["id"] == "lifting") {
            lifting = true;
            std::vector<std::string> names;
            for (const auto& p : e["params"]) names.push_back(p["name"]);
            CHECK(names == std::vector<std::string>{"q", "n_max"});
        }
    CHECK(lifting);
}
