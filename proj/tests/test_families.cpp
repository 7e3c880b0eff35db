#include "doctest.h"

#include "symfn/errors.hpp"
#include "symfn/families.hpp"

using namespace symfn;

namespace {

SymFunc ones(int n) { return p_of(Partition(std::vector<int>(n, 1))); }

const std::vector<PrimeSet>& prime_sets() {
    static const std::vector<PrimeSet> sets{PrimeSet(), PrimeSet({2}), PrimeSet({3}), PrimeSet({2, 3})};
    return sets;
}

std::vector<IntSet> t_sets() {
    return {IntSet::explicit_set({1}), IntSet::all(),         IntSet::explicit_set({1, 3}), IntSet::at_most(4),
            IntSet::divisors_of(6),   IntSet::one_mod(2),     IntSet::one_mod(3),           IntSet::powers_of(3)};
}

// Ramanujan sum c_d(r) = Σ_{e | gcd(d,r)} μ(d/e) e.
std::int64_t ramanujan(std::int64_t d, std::int64_t r) {
    std::int64_t total = 0;
    for (auto e : divisors(d))
        if (r % e == 0) total += moebius(d / e) * e;
    return total;
}

}  // namespace

TEST_CASE("integer sets") {
    CHECK(IntSet::at_most(4).contains(4));
    CHECK_FALSE(IntSet::at_most(4).contains(5));
    CHECK(IntSet::divisors_of(12).contains(6));
    CHECK_FALSE(IntSet::divisors_of(12).contains(5));
    CHECK(IntSet::one_mod(4).contains(1));
    CHECK(IntSet::one_mod(4).contains(9));
    CHECK_FALSE(IntSet::one_mod(4).contains(3));
    CHECK(IntSet::powers_of(3).contains(1));
    CHECK(IntSet::powers_of(3).contains(27));
    CHECK_FALSE(IntSet::powers_of(3).contains(6));
    CHECK(IntSet::prime_support(PrimeSet({2})).contains(8));
    CHECK(IntSet::prime_support_bar(PrimeSet({2})).contains(15));
    CHECK_FALSE(IntSet::explicit_set({3, 5}).contains(1));

    for (const char* text : {"1,5", "all", "odd", "le(5)", "div(12)", "mod1(4)", "pow(3)", "P(2,3)", "Pbar(2)"})
        CHECK(IntSet::parse(text).to_string() == text);
    CHECK_THROWS_AS(IntSet::parse("foo(3)"), InvalidArgument);
    CHECK_THROWS_AS(IntSet::parse("1,x"), InvalidArgument);
    CHECK_THROWS_AS(IntSet::parse("le(0)"), InvalidArgument);
}

TEST_CASE("psi values") {
    for (std::int64_t d = 1; d <= 60; ++d) {
        CHECK(PsiSpec::mu()(d) == moebius(d));
        CHECK(PsiSpec::phi()(d) == totient(d));
        for (std::int64_t r = 1; r <= 12; ++r) CHECK(PsiSpec::foulkes(r)(d) == ramanujan(d, r));
        // ψ^T for T = all reduces to φ
        CHECK(PsiSpec::set_t(IntSet::all())(d) == totient(d));
        CHECK(PsiSpec::set_t(IntSet::explicit_set({1}))(d) == moebius(d));
        CHECK(PsiSpec::prime_set(PrimeSet())(d) == moebius(d));
        CHECK(PsiSpec::prime_set_bar(PrimeSet())(d) == totient(d));
    }
}

TEST_CASE("family constructors") {
    CHECK(f_from_psi(2, PsiSpec::mu()) == SymFunc::p({1, 1}, ratio(1, 2)) - SymFunc::p({2}, ratio(1, 2)));
    CHECK(f_from_psi(4, PsiSpec::phi()) == SymFunc::p({1, 1, 1, 1}, ratio(1, 4)) + SymFunc::p({2, 2}, ratio(1, 4)) +
                                               SymFunc::p({4}, ratio(1, 2)));
    CHECK(f_from_psi(1, PsiSpec::foulkes(1)) == p_of({1}));
    CHECK(lie_S(2, PrimeSet({2})) == h_of(2));

    SymFunc f42 = SymFunc::p({1, 1, 1, 1}, ratio(1, 4)) + SymFunc::p({2, 2}, ratio(1, 4)) - SymFunc::p({4}, ratio(1, 2));
    CHECK(foulkes(4, 2) == f42);
    CHECK(to_schur(foulkes(4, 2)) == SchurExpansion{4, {{{3, 1}, 1}, {{2, 2}, 1}, {{1, 1, 1, 1}, 1}}});
    CHECK_THROWS_AS(foulkes(4, 5), InvalidArgument);
    CHECK_THROWS_AS(foulkes(4, 0), InvalidArgument);

    for (int n = 1; n <= 10; ++n) CHECK(f_T(n, IntSet::all()) == conj(n));

    // dimension: coefficient of p_{1^n} times n! is (n-1)! ψ(1)
    for (int n = 1; n <= 10; ++n) CHECK(foulkes(n, 1).coefficient(Partition(std::vector<int>(n, 1))) == ratio(1, n));
}

TEST_CASE("Lie^S interpolates between Lie and Conj") {
    for (int n = 1; n <= 20; ++n) {
        CHECK(lie(n) == lie_S(n, PrimeSet()));
        CHECK(conj(n) == lie_S_bar(n, PrimeSet()));
    }
    for (const auto& S : prime_sets()) {
        for (int n = 1; n <= 30; ++n) {
            if (in_P_bar(S, n)) CHECK(lie_S(n, S) == lie(n));
            if (in_P(S, n)) CHECK(lie_S(n, S) == conj(n));
            CHECK(lie_S(n, S) == foulkes(n, static_cast<int>(factor_S(n, S).q_part)));
        }
    }
}

TEST_CASE("f-tilde at one and minus one") {
    std::vector<PsiSpec> specs{PsiSpec::mu(), PsiSpec::phi()};
    for (const auto& S : prime_sets()) {
        specs.push_back(PsiSpec::prime_set(S));
        specs.push_back(PsiSpec::prime_set_bar(S));
    }
    for (const auto& T : t_sets()) specs.push_back(PsiSpec::set_t(T));
    for (int r = 1; r <= 6; ++r) specs.push_back(PsiSpec::foulkes(r));

    for (const auto& psi : specs) {
        for (int m = 0; 2 * m + 1 <= 60; ++m)
            CHECK(f_tilde_eval(2 * m + 1, psi, -1) == -f_tilde_eval(2 * m + 1, psi, 1));
        for (int m = 1; 2 * m <= 60; ++m)
            CHECK(f_tilde_eval(2 * m, psi, -1) == f_tilde_eval(m, psi, 1) - f_tilde_eval(2 * m, psi, 1));
        for (int n = 1; n <= 12; ++n) {
            VPoly t = f_tilde(n, psi);
            CHECK(poly_eval(t, 1) == f_tilde_eval(n, psi, 1));
            CHECK(poly_eval(t, -1) == f_tilde_eval(n, psi, -1));
        }
    }

    for (const auto& S : prime_sets()) {
        bool two = in_P(S, 2);
        for (int n = 1; n <= 60; ++n) {
            PsiSpec psi = PsiSpec::prime_set(S);
            CHECK(f_tilde_eval(n, psi, 1) == (in_P(S, n) ? 1 : 0));
            Rational expected = 0;
            if (!two) {
                if (in_P(S, n)) expected = -1;
                else if (n % 2 == 0 && in_P(S, n / 2)) expected = 1;
            } else if (n % 2 == 1 && in_P(S, n)) {
                expected = -1;
            }
            CHECK(f_tilde_eval(n, psi, -1) == expected);
        }
    }

    for (const auto& T : t_sets())
        for (int n = 1; n <= 60; ++n) CHECK(f_tilde_eval(n, PsiSpec::set_t(T), 1) == (T.contains(n) ? 1 : 0));

    for (int n = 1; n <= 60; ++n)
        for (auto r : divisors(n))
            if (gcd(r, n / r) == 1)
                CHECK(f_tilde_eval(n, PsiSpec::foulkes(static_cast<int>(r)), 1) == (r == n ? 1 : 0));
}

TEST_CASE("G^T and the decomposed F^T") {
    for (int n = 1; n <= 10; ++n) CHECK(g_T(n, IntSet::explicit_set({1})) == lie_S(n, PrimeSet({2})));
    CHECK(g_T(1, IntSet::explicit_set({1, 3})) == p_of({1}));
    CHECK(g_T(2, IntSet::explicit_set({1})) == h_of(2));

    CHECK(f_T_decomposed(2, IntSet::explicit_set({1, 2})) == h_of(2));
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 10; ++n)
            if (n % k) CHECK(f_T_decomposed(n, IntSet::explicit_set({1, k})) == lie(n));

    for (int k : {2, 3, 4, 6})
        for (int n = 1; n <= 8; ++n) {
            int r = k % n == 0 ? n : k % n;
            CHECK(f_T_decomposed(n, IntSet::divisors_of(k)) == foulkes(n, r));
        }

    for (const auto& T : t_sets())
        for (int n = 1; n <= 10; ++n) CHECK(f_T_decomposed(n, T) == f_T(n, T));
}

TEST_CASE("Foulkes characters count tableaux by major index") {
    for (int n = 1; n <= 8; ++n) {
        for (int r = 1; r <= n; ++r) {
            auto s = to_schur(foulkes(n, r), true);
            for (const auto& lam : partitions_of(n)) {
                auto dist = syt_maj_distribution(lam);
                auto it = dist.find(r % n);
                Rational expected = it == dist.end() ? 0 : Rational(it->second);
                CHECK(s.coefficient(lam) == expected);
            }
        }
    }
    for (int n = 1; n <= 9; ++n)
        for (int r = 1; r <= n; ++r) CHECK(is_schur_positive(foulkes(n, r)).positive);
}

TEST_CASE("regular representation decompositions") {
    for (int n = 1; n <= 10; ++n) {
        SymFunc total(n);
        for (int k = 1; k <= n; ++k) total += foulkes(n, k);
        CHECK(total == ones(n));

        SymFunc virt(n);
        for (auto d : divisors(n)) virt += scale(Rational(d), pleth_p(static_cast<int>(n / d), lie(static_cast<int>(d))));
        CHECK(virt == ones(n));
    }
}

TEST_CASE("family descriptors") {
    CHECK(Family::parse("lie").component(5) == lie(5));
    CHECK(Family::parse("conj").component(6) == conj(6));
    CHECK(Family::parse("foulkes:2").component(4) == foulkes(4, 2));
    CHECK(Family::parse("lieS:2,3").component(12) == lie_S(12, PrimeSet({2, 3})));
    CHECK(Family::parse("lieS:").component(6) == lie(6));
    CHECK(Family::parse("lieSbar:2").component(6) == lie_S_bar(6, PrimeSet({2})));
    CHECK(Family::parse("fT:1,5").component(5) == f_T(5, IntSet::explicit_set({1, 5})));
    CHECK(Family::parse("fT:div(12)").component(6) == f_T(6, IntSet::divisors_of(12)));
    CHECK(Family::parse("fT:mod1(4)").component(5) == f_T(5, IntSet::one_mod(4)));
    CHECK(Family::parse("fT:pow(3)").component(9) == f_T(9, IntSet::powers_of(3)));
    CHECK(Family::parse("fT:le(5)").component(6) == f_T(6, IntSet::at_most(5)));
    CHECK(Family::parse("gT:1").component(4) == g_T(4, IntSet::explicit_set({1})));
    CHECK(Family::parse("gT:1").psi() == nullptr);
    CHECK(Family::parse("lie").psi() != nullptr);
    CHECK_THROWS_AS(Family::parse("nope"), UnknownName);
    CHECK_THROWS_AS(Family::parse("foulkes"), InvalidArgument);
    CHECK_THROWS_AS(Family::parse("lieS:4"), InvalidArgument);
    CHECK_THROWS_AS(Family::parse("fT:weird(2)"), InvalidArgument);

    Series s = Family::parse("lie").series(6);
    CHECK(s == family_series(PsiSpec::mu(), 6));
    CHECK(s[3] == lie(3));
}

TEST_CASE("psi descriptors round trip") {
    for (const char* text : {"mu", "phi", "primeset:2", "primeset:2,3", "primesetbar:3", "setT:1,3", "setT:le(4)", "foulkes:4"})
        CHECK(PsiSpec::parse(text).to_string() == text);
    CHECK(PsiSpec::parse("primeset:").to_string() == "primeset:");
    CHECK_THROWS_AS(PsiSpec::parse("zeta"), UnknownName);
    CHECK_THROWS_AS(PsiSpec::parse("primeset:4"), InvalidArgument);
    // a complemented set flips the two ψ variants
    for (std::int64_t d = 1; d <= 40; ++d)
        CHECK(PsiSpec::prime_set(PrimeSet({2}, true))(d) == PsiSpec::prime_set_bar(PrimeSet({2}))(d));
}
