#ifndef SYMFN_PARTITION_HPP
#define SYMFN_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symfn {

// An integer partition: weakly decreasing positive parts. The empty
// partition is the unique partition of zero.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Sorts the parts first; use when the input order is arbitrary.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    // m_i: number of parts equal to i.
    int multiplicity(int i) const noexcept;
    // (part value, multiplicity) pairs, largest part first.
    std::vector<std::pair<int, int>> multiplicities() const;

    // Number of even parts; parity of |λ| - ℓ(λ).
    int even_parts() const noexcept;
    Partition conjugate() const;

    // Multiset union of parts.
    Partition operator+(const Partition& other) const;
    // Every part multiplied by k.
    Partition scaled(int k) const;

    std::string to_string() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    // Plain lexicographic comparison of the part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Descending lexicographic order: [4] before [3,1] before [2,2].
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

using PartFilter = std::function<bool(int)>;

// Partitions of n in descending lexicographic order, optionally restricted
// to parts satisfying the filter.
std::vector<Partition> partitions_of(int n, const PartFilter& filter = {});

// Partitions with distinct parts.
std::vector<Partition> distinct_partitions_of(int n, const PartFilter& filter = {});

// Cached unrestricted list for degree n; the reference stays valid for the
// lifetime of the process.
const std::vector<Partition>& partitions_cached(int n);

// Position of λ inside partitions_cached(|λ|).
std::size_t partition_index(const Partition& lambda);

std::uint64_t partition_count(int n);

// z_λ = Π i^{m_i} m_i!
std::uint64_t z_of(const Partition& lambda);

// ----- arithmetic on positive integers -----

int moebius(std::int64_t n);
std::int64_t totient(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

// A finite set of primes, read either as S or as its complement S̄.
class PrimeSet {
public:
    PrimeSet() = default;
    explicit PrimeSet(std::vector<std::int64_t> primes, bool complement = false);

    const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
    bool complement() const noexcept { return complement_; }
    bool contains(std::int64_t q) const;
    bool empty() const noexcept { return primes_.empty(); }

    // The same primes, with the complement flag toggled.
    PrimeSet flipped() const { return PrimeSet(primes_, !complement_); }
    std::string to_string() const;

private:
    std::vector<std::int64_t> primes_;
    bool complement_ = false;
};

struct SFactor {
    std::int64_t q_part;  // Q_n, the part of n supported on the primes of S
    std::int64_t l_part;  // ℓ_n = n / Q_n
};

// n = Q_n ℓ_n. For a complemented set the roles swap: Q_n collects the
// primes not listed.
SFactor factor_S(std::int64_t n, const PrimeSet& S);

// n ∈ P(S): every prime factor of n lies in S.
bool in_P(const PrimeSet& S, std::int64_t n);
// n ∈ P(S̄): no prime factor of n lies in S.
bool in_P_bar(const PrimeSet& S, std::int64_t n);

}  // namespace symfn

template <>
struct std::hash<symfn::Partition> {
    std::size_t operator()(const symfn::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

#endif  // SYMFN_PARTITION_HPP
