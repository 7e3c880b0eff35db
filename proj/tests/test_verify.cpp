#include "doctest.h"

#include <set>

#include "symfn/errors.hpp"
#include "symfn/verify.hpp"

using namespace symfn;

TEST_CASE("catalog is sorted and large enough") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() >= 30);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        ids.insert(cat[i].id);
        if (i > 0) CHECK(cat[i - 1].id < cat[i].id);
        CHECK_FALSE(cat[i].formula.empty());
    }
    CHECK(ids.size() == cat.size());
    CHECK(ids.count("solomon"));
    CHECK(ids.count("lifting"));
    CHECK_THROWS_AS(identity_info("no-such-identity"), UnknownName);
}

TEST_CASE("every identity passes at its defaults") {
    for (const auto& r : verify_all(1)) {
        INFO(r.id << " " << (r.first_mismatch ? r.first_mismatch->check : std::string()));
        CHECK(r.pass);
    }
}

TEST_CASE("solomon with explicit N") {
    auto r = verify("solomon", {}, 12);
    CHECK(r.pass);
    CHECK(r.N == 12);
}

TEST_CASE("parameterized identities over several sets") {
    for (const char* S : {"", "2", "3", "2,3", "3,5"}) {
        for (const char* id : {"symLS", "altsymLS", "extLS", "altextLS", "lieS-foulkes"}) {
            INFO(id << " S=" << S);
            CHECK(verify(id, {{"S", S}}).pass);
        }
    }
    for (const char* k : {"2", "3", "4", "5"}) {
        for (const char* id : {"onek", "onek-ext", "lek", "divk", "mod1k", "powk-recurrence"}) {
            INFO(id << " k=" << k);
            CHECK(verify(id, {{"k", k}}).pass);
        }
    }
    for (const char* psi : {"mu", "phi", "primeset:3", "setT:1,2", "foulkes:2"})
        for (const char* id : {"meta-sym", "meta-ext", "meta-altsym", "meta-altext", "meta-equiv"}) {
            INFO(id << " psi=" << psi);
            CHECK(verify(id, {{"psi", psi}}, 6).pass);
        }
}

TEST_CASE("corruption is caught at exactly the corrupted degree") {
    for (const char* id : {"thrall", "solomon", "extLS", "meta-sym", "lie-inv"}) {
        for (int d = 1; d <= 6; ++d) {
            for (bool right : {false, true}) {
                VerifyOptions opt;
                opt.corrupt = Corruption{d, right};
                auto r = verify(id, {}, 6, opt);
                INFO(id << " d=" << d << " right=" << right);
                REQUIRE_FALSE(r.pass);
                REQUIRE(r.first_mismatch);
                CHECK(r.first_mismatch->degree == d);
                CHECK_FALSE(r.first_mismatch->differences.empty());
            }
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(verify("solomon", {{"S", "2"}}), InvalidArgument);
    CHECK_THROWS_AS(verify("symLS", {{"S", "4"}}), InvalidArgument);
    CHECK_THROWS_AS(verify("lieq-decomp", {{"q", "6"}}), InvalidArgument);
    CHECK_THROWS_AS(verify("onek", {{"k", "x"}}), InvalidArgument);
    CHECK_THROWS_AS(verify("nope"), UnknownName);
    auto r = verify("symLS");
    CHECK(r.params.at("S") == "2");
}

TEST_CASE("lifting exceptions") {
    auto r = verify("lifting", {{"q", "3"}, {"n_max", "18"}});
    CHECK(r.pass);
    auto rep = lifting_check(3, 18);
    CHECK(rep.negatives() == std::vector<int>{3, 6, 9, 10, 18});
    auto r5 = lifting_check(5, 12);
    CHECK(r5.negatives() == std::vector<int>{5, 6, 10});
    CHECK_THROWS_AS(lifting_check(4, 10), InvalidArgument);
    CHECK_THROWS_AS(lifting_check(3, 25), BudgetExceeded);
}

TEST_CASE("hook content of Conj_n") {
    for (int n = 2; n <= 12; ++n) {
        auto r = hook_content_check(n);
        INFO("n=" << n);
        CHECK(r.pass);
        CHECK(r.actual_absent.size() == r.expected_absent.size());
    }
    CHECK_THROWS_AS(hook_content_check(21), BudgetExceeded);
}

TEST_CASE("positivity scans") {
    CHECK(scan_positivity("powk", {{"k", "2"}}, 1, 10).all_positive());
    CHECK(scan_positivity("stanley", {{"k", "3"}}, 1, 10).all_positive());
    CHECK(scan_positivity("spos2", {{"S", "3"}}, 1, 10).all_positive());
    CHECK(scan_positivity("coprime", {{"q", "3"}}, 1, 10).all_positive());
    CHECK(scan_positivity("lie", {}, 1, 8).all_positive());
    auto r = scan_positivity("powk", {{"k", "4"}}, 4, 4);
    REQUIRE(r.verdicts.size() == 1);
    CHECK_FALSE(r.verdicts[0].positive);
    CHECK_THROWS_AS(scan_positivity("powk", {{"k", "2"}}, 1, 25), BudgetExceeded);
    CHECK_THROWS_AS(scan_positivity("powk", {}, 1, 5), InvalidArgument);
    CHECK_THROWS_AS(scan_positivity("bogus", {}, 1, 5), UnknownName);
}

TEST_CASE("parallel scans agree with serial scans") {
    auto a = scan_positivity("lek", {{"k", "3"}}, 1, 10, {20, 1});
    auto b = scan_positivity("lek", {{"k", "3"}}, 1, 10, {20, 3});
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].n == b.verdicts[i].n);
        CHECK(a.verdicts[i].positive == b.verdicts[i].positive);
        CHECK(a.verdicts[i].witnesses == b.verdicts[i].witnesses);
    }
}
