#include "doctest.h"

#include <random>

#include "symfn/errors.hpp"
#include "symfn/plethysm.hpp"

using namespace symfn;

namespace {

// (1/n) Σ_{d|n} c(d) p_d^{n/d}, written out here so the tests do not lean on
// the family constructors.
template <class Fn>
SymFunc necklace(int n, Fn c) {
    SymFunc f(n);
    for (auto d : divisors(n)) f.add_term(Partition(std::vector<int>(n / d, static_cast<int>(d))), ratio(c(d), n));
    return f;
}

Series lie_series(int N) {
    Series s(N);
    for (int n = 1; n <= N; ++n) s.set_component(n, necklace(n, [](std::int64_t d) { return moebius(d); }));
    return s;
}

Series conj_series(int N) {
    Series s(N);
    for (int n = 1; n <= N; ++n) s.set_component(n, necklace(n, [](std::int64_t d) { return totient(d); }));
    return s;
}

// Lie^(2)_n = Σ_{2^r | n} Lie_{n/2^r}[p_{2^r}]
Series lie2_series(int N) {
    Series s(N);
    for (int n = 1; n <= N; ++n) {
        SymFunc f(n);
        for (int q = 1; n % q == 0; q *= 2) f += pleth_p(q, necklace(n / q, [](std::int64_t d) { return moebius(d); }));
        s.set_component(n, f);
    }
    return s;
}

Series one_plus(Series s, const Rational& c = 1) {
    s.set_constant(c);
    return s;
}

Series random_series(int N, std::mt19937& rng, bool constant_free = true) {
    std::uniform_int_distribution<int> coin(0, 3), num(-3, 3);
    Series s(N, constant_free ? 0 : 1);
    for (int n = 1; n <= N; ++n) {
        SymFunc f(n);
        for (const auto& mu : partitions_of(n))
            if (coin(rng) == 0) f.add_term(mu, num(rng));
        s.set_component(n, f);
    }
    return s;
}

Series p1(int N) { return Series::homogeneous(N, p_of({1})); }

}  // namespace

TEST_CASE("series basics") {
    Series a = Series::homogeneous(4, h_of(2));
    CHECK(a.valuation() == 2);
    CHECK(a[2] == h_of(2));
    CHECK(a[3].is_zero());
    CHECK_THROWS_AS(a[5], TruncationError);
    CHECK(Series(4).valuation() == 5);
    Series b = H_series(6);
    CHECK(b * reciprocal(b) == Series(6, 1));
    CHECK(reciprocal(H_series(8)) == E_pm_series(8));
    CHECK(Series::homogeneous(3, h_of(5)).is_zero());
}

TEST_CASE("pleth_p on series truncates") {
    Series g = Series::homogeneous(6, p_of({3}) + p_of({2, 1}));
    Series r = pleth_p(2, g);
    CHECK(r[6] == p_of({6}) + p_of({4, 2}));
    CHECK(pleth_p(3, g).is_zero());
    CHECK(pleth_p(1, g) == g);
}

TEST_CASE("plethysm examples") {
    CHECK(pleth(h_of(2), p1(4))[2] == h_of(2));
    Series lie = lie_series(6);
    CHECK(pleth(p_of({2}), lie)[4] == SymFunc::p({2, 2}, ratio(1, 2)) - SymFunc::p({4}, ratio(1, 2)));
    CHECK(pleth(e_of(2), Series::homogeneous(6, p_of({2})))[4] ==
          SymFunc::p({2, 2}, ratio(1, 2)) - SymFunc::p({4}, ratio(1, 2)));
    CHECK_THROWS_AS(pleth(h_of(2), Series(4, 1)), InvalidArgument);
}

TEST_CASE("pleth_h and pleth_e agree with monomial plethysm") {
    for (int m = 1; m <= 4; ++m) {
        for (const SymFunc& q : {h_of(2), e_of(2), p_of({2, 1}), SymFunc::p({3}, 2) - p_of({1, 1, 1})}) {
            int N = m * q.degree();
            Series qs = Series::homogeneous(N, q);
            CHECK(pleth_h(m, q) == pleth(h_of(m), qs)[N]);
            CHECK(pleth_e(m, q) == pleth(e_of(m), qs)[N]);
        }
    }
}

TEST_CASE("plethysm is associative on samples") {
    std::mt19937 rng(11);
    const int N = 8;
    for (int trial = 0; trial < 3; ++trial) {
        Series G = random_series(N, rng);
        Series K = random_series(N, rng);
        for (const SymFunc& f : {h_of(2), e_of(2), p_of({3})}) {
            Series lhs = pleth(pleth(f, G), K);
            Series rhs = pleth(f, pleth(G, K));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("H and E-pm are reciprocal") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 3; ++trial) {
        Series F = random_series(10, rng);
        CHECK(H_of(F) * E_pm_of(F) == Series(10, 1));
        CHECK(E_of(F) * H_pm_of(F) == Series(10, 1));
    }
}

TEST_CASE("H_of and E_of match monomial plethysm") {
    std::mt19937 rng(5);
    Series F = random_series(7, rng);
    Series viaH = pleth(H_series(7), F);
    CHECK(viaH == H_of(F));
    CHECK(pleth(E_series(7), F) == E_of(F));
}

TEST_CASE("Lie series examples") {
    const int N = 10;
    Series lie = lie_series(N);
    Series expected = product_series({{1, -1, -1}}, N);
    CHECK(H_of(lie) == expected);
    for (int n = 1; n <= N; ++n) CHECK(H_of(lie)[n] == p_of(Partition(std::vector<int>(n, 1))));

    Series lie2 = lie2_series(N);
    CHECK(E_of(lie2) == expected);
    CHECK(H_pm_of(lie2) == product_series({{1, -1, 1}}, N));
    CHECK(E_of(alt_omega(lie2)) == product_series({{1, 1, 1}}, N));
    CHECK(H_of(alt_omega(lie)) == product_series({{1, 1, 1}}, N));
    CHECK(alt_omega(lie)[2] == -h_of(2));
}

TEST_CASE("higher modules") {
    Series lie = lie_series(6);
    CHECK(H_lambda(lie, {1, 1}) == h_of(2));
    CHECK(H_lambda(lie, {2}) == e_of(2));
    SymFunc total(3);
    for (const auto& lam : partitions_of(3)) total += H_lambda(lie, lam);
    CHECK(total == p_of({1, 1, 1}));
    CHECK_THROWS_AS(H_lambda(lie, {7}), TruncationError);
}

TEST_CASE("h_r slices decompose into higher modules") {
    const int N = 8;
    for (const Series& Q : {lie_series(N), conj_series(N)}) {
        auto hp = h_powers(Q);
        auto ep = e_powers(Q);
        for (int r = 1; r <= 4; ++r) {
            for (int n = r; n <= N; ++n) {
                SymFunc hs(n), es(n);
                for (const auto& lam : partitions_of(n)) {
                    if (lam.length() != r) continue;
                    hs += H_lambda(Q, lam);
                    es += E_lambda(Q, lam);
                }
                INFO("r=" << r << " n=" << n);
                CHECK(hp[r][n] == hs);
                CHECK(ep[r][n] == es);
            }
        }
    }
}

TEST_CASE("product_series") {
    const int N = 8;
    Series ones = product_series({{1, -1, -1}}, N);
    for (int n = 1; n <= N; ++n) CHECK(ones[n] == p_of(Partition(std::vector<int>(n, 1))));
    CHECK(ones.constant() == 1);

    auto odd = [](int m) { return m % 2 == 1; };
    Series odd_parts = product_series(odd, -1, -1, N);
    CHECK(odd_parts[4] == p_of({3, 1}) + p_of({1, 1, 1, 1}));
    Series distinct_odd = product_series(odd, 1, 1, N);
    CHECK(distinct_odd[4] == p_of({3, 1}));

    CHECK_THROWS_AS(product_series({{1, -1, -1}, {1, 1, 1}}, N), InvalidArgument);

    // agrees with multiplying out factors as series
    Series direct(N, 1);
    for (int m = 1; m <= N; ++m) {
        if (!odd(m)) continue;
        Series factor(N, 1);
        factor.set_component(m, -p_of({m}));
        direct = direct * reciprocal(factor);
    }
    CHECK(direct == odd_parts);

    Series sq = product_series({{2, 1, -2}, {3, -1, 2}}, N);
    Series f2(N, 1), f3(N, 1);
    f2.set_component(2, p_of({2}));
    f3.set_component(3, -p_of({3}));
    CHECK(sq == reciprocal(f2 * f2) * f3 * f3);
}

TEST_CASE("graded products reduce to plain products at v = 1") {
    const int N = 6;
    std::vector<GradedFactor> factors{{1, -1, {0, -1}}, {2, 1, {1, 0, 1}}, {3, -1, {ratio(1, 2)}}};
    auto graded = graded_product_series(factors, N);
    Series total(N);
    for (const auto& s : graded) total += s;
    // exponents at v=1: -1, 2, 1/2; check the integral ones directly
    std::vector<GradedFactor> integral{{1, -1, {0, -1}}, {2, 1, {1, 0, 1}}};
    auto g2 = graded_product_series(integral, N);
    Series t2(N);
    for (const auto& s : g2) t2 += s;
    CHECK(t2 == product_series({{1, -1, -1}, {2, 1, 2}}, N));
    CHECK(total.constant() == 1);
}

TEST_CASE("plethystic inverses") {
    const int N = 10;
    Series pq = p1(N);
    pq.set_component(2, -p_of({2}));
    CHECK(pleth_inverse(pq) == power_chain(2, 1, N));

    Series pq3 = p1(N);
    pq3.set_component(3, p_of({3}));
    Series inv3 = pleth_inverse(pq3);
    CHECK(inv3 == power_chain(3, -1, N));
    CHECK(pleth(pq3, inv3) == p1(N));
    CHECK(pleth(inv3, pq3) == p1(N));
    CHECK(pleth_inverse(inv3) == pq3);

    Series Hm1 = H_series(N);
    Hm1.set_constant(0);
    CHECK(pleth_inverse(Hm1) == alt_omega(lie_series(N)));
    Series Em1 = E_series(N);
    Em1.set_constant(0);
    CHECK(pleth_inverse(Em1) == alt_omega(lie2_series(N)));

    CHECK_THROWS_AS(pleth_inverse(Series::homogeneous(N, h_of(2))), InvalidArgument);
    CHECK_THROWS_AS(pleth_inverse(one_plus(p1(N))), InvalidArgument);
}

TEST_CASE("omega transport for odd homogeneous inner arguments") {
    const int N = 9;
    for (const SymFunc& g : {h_of(3), s_of({2, 1}), p_of({1})}) {
        Series gs = Series::homogeneous(N, g);
        Series ogs = Series::homogeneous(N, omega(g));
        for (const SymFunc& f : {h_of(2), e_of(3), p_of({2, 1})}) CHECK(omega(pleth(f, gs)) == pleth(omega(f), ogs));
    }
}

TEST_CASE("poly helpers") {
    VPoly a{1, 2}, b{0, 1, -1};
    CHECK(poly_mul(a, b) == VPoly{0, 1, 1, -2});
    CHECK(poly_add(a, b) == VPoly{1, 3, -1});
    CHECK(poly_reflect(b) == VPoly{0, -1, -1});
    CHECK(poly_eval(b, 2) == -2);
    CHECK(poly_trim({1, 0, 0}) == VPoly{1});
}

TEST_CASE("derivative in p1") {
    CHECK(derivative_p1(p_of({2, 1, 1})) == SymFunc::p({2, 1}, 2));
    CHECK(derivative_p1(h_of(3)) == h_of(2));
    CHECK(derivative_p1(p_of({2})).is_zero());
}
