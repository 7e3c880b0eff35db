#include "doctest.h"

#include "symfn/errors.hpp"
#include "symfn/partition.hpp"

using namespace symfn;

TEST_CASE("partitions of 4 in descending lexicographic order") {
    auto parts = partitions_of(4);
    std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(parts == expected);
}

TEST_CASE("partition of zero is the empty partition") {
    auto parts = partitions_of(0);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].empty());
    CHECK(parts[0].size() == 0);
    CHECK(parts[0].to_string() == "[]");
}

TEST_CASE("odd-part partitions of 6") {
    auto parts = partitions_of(6, [](int x) { return x % 2 == 1; });
    std::vector<Partition> expected{{5, 1}, {3, 3}, {3, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    CHECK(parts == expected);
}

TEST_CASE("partition counts match Euler's sequence") {
    const std::uint64_t known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partition_count(n) == known[n]);
    for (int n = 0; n <= 30; ++n) CHECK(partitions_of(n).size() == partition_count(n));
    CHECK(partition_count(30) == 5604);
}

TEST_CASE("partition invariants") {
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : partitions_of(n)) {
            int total = 0;
            for (auto [part, mult] : p.multiplicities()) total += part * mult;
            CHECK(total == n);
            CHECK(p.size() == n);
            for (int j = 0; j + 1 < p.length(); ++j) CHECK(p[j] >= p[j + 1]);
            CHECK(p.conjugate().conjugate() == p);
            CHECK(partitions_cached(n)[partition_index(p)] == p);
        }
    }
}

TEST_CASE("partition text form round trips and rejects garbage") {
    CHECK(Partition::parse("[3,1,1]") == Partition{3, 1, 1});
    CHECK(Partition::parse(" [ 2 , 2 ] ") == Partition{2, 2});
    CHECK(Partition::parse("[]").empty());
    CHECK_THROWS_AS(Partition::parse("[1,2]"), InvalidArgument);
    CHECK_THROWS_AS(Partition::parse("3,1"), InvalidArgument);
    CHECK_THROWS_AS(Partition::parse("[3,x]"), InvalidArgument);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
}

TEST_CASE("z_of") {
    CHECK(z_of(Partition{2, 1}) == 2);
    CHECK(z_of(Partition{1, 1, 1}) == 6);
    CHECK(z_of(Partition()) == 1);
    CHECK(z_of(Partition{2, 2, 1}) == 8);
}

TEST_CASE("arithmetic functions") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(totient(12) == 4);
    CHECK(totient(1) == 1);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(moebius(0), InvalidArgument);
    CHECK_THROWS_AS(totient(0), InvalidArgument);
    CHECK_THROWS_AS(divisors(0), InvalidArgument);

    for (std::int64_t n = 1; n <= 200; ++n) {
        std::int64_t phi_sum = 0, mu_sum = 0;
        for (auto d : divisors(n)) {
            phi_sum += totient(d);
            mu_sum += moebius(d);
        }
        CHECK(phi_sum == n);
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("factor_S examples") {
    auto f = factor_S(12, PrimeSet({2}));
    CHECK(f.q_part == 4);
    CHECK(f.l_part == 3);
    f = factor_S(12, PrimeSet());
    CHECK(f.q_part == 1);
    CHECK(f.l_part == 12);
    f = factor_S(18, PrimeSet({2, 3}));
    CHECK(f.q_part == 18);
    CHECK(f.l_part == 1);
}

TEST_CASE("P(S) membership") {
    CHECK(in_P(PrimeSet({2}), 8));
    CHECK_FALSE(in_P(PrimeSet({2}), 12));
    CHECK(in_P_bar(PrimeSet({2}), 9));
    CHECK(in_P(PrimeSet(), 1));
    CHECK(in_P(PrimeSet({5}), 1));
}

TEST_CASE("factor_S splits n into coprime P(S) and P(S-bar) parts") {
    const std::vector<std::int64_t> pool{2, 3, 5, 7};
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::int64_t> primes;
        for (unsigned b = 0; b < 4; ++b)
            if (mask & (1u << b)) primes.push_back(pool[b]);
        PrimeSet S(primes);
        for (std::int64_t n = 1; n <= 500; ++n) {
            auto [q, l] = factor_S(n, S);
            CHECK(q * l == n);
            CHECK(gcd(q, l) == 1);
            CHECK(in_P(S, q));
            CHECK(in_P_bar(S, l));
            if (in_P(S, n) && in_P_bar(S, n)) CHECK(n == 1);
        }
    }
}

TEST_CASE("prime sets reject composites and duplicates") {
    CHECK_THROWS_AS(PrimeSet({4}), InvalidArgument);
    CHECK_THROWS_AS(PrimeSet({2, 2}), InvalidArgument);
    CHECK_THROWS_AS(PrimeSet({1}), InvalidArgument);
    CHECK(PrimeSet({5, 2}).primes() == std::vector<std::int64_t>{2, 5});
}

TEST_CASE("complemented prime sets swap the factorization") {
    PrimeSet odd_primes({2}, true);
    auto [q, l] = factor_S(24, odd_primes);
    CHECK(q == 3);
    CHECK(l == 8);
    CHECK(in_P(odd_primes, 15));
    CHECK_FALSE(in_P(odd_primes, 6));
    CHECK(in_P_bar(odd_primes, 8));
    CHECK(PrimeSet({2}).flipped().to_string() == "{2}bar");
}
