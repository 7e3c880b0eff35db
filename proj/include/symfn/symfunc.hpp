#ifndef SYMFN_SYMFUNC_HPP
#define SYMFN_SYMFUNC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "symfn/partition.hpp"

namespace symfn {

using Rational = mpq_class;

// num/den in lowest terms.
inline Rational ratio(long num, unsigned long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/* A homogeneous symmetric function written in the power-sum basis,
 * f = Σ_λ c_λ p_λ, with exact rational coefficients. Zero coefficients are
 * never stored. A default-constructed SymFunc is the zero function of
 * unspecified degree and is absorbing for addition.
 */
class SymFunc {
public:
    using Terms = std::map<Partition, Rational, DescLex>;

    static constexpr int kAnyDegree = -1;

    SymFunc() = default;
    explicit SymFunc(int degree) : degree_(degree) {}
    SymFunc(int degree, Terms terms);

    static SymFunc zero(int degree = kAnyDegree) { return SymFunc(degree); }
    static SymFunc one() { return p(Partition()); }
    static SymFunc p(const Partition& lambda, const Rational& c = 1);

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const Partition& lambda) const;
    // Adds c to the coefficient of p_λ; λ must have the right size.
    void add_term(const Partition& lambda, const Rational& c);

    SymFunc& operator+=(const SymFunc& g);
    SymFunc& operator-=(const SymFunc& g);
    SymFunc& operator*=(const Rational& c);

    friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
    friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }
    friend SymFunc operator-(SymFunc f) { return f *= Rational(-1); }
    friend SymFunc operator*(SymFunc f, const Rational& c) { return f *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc f) { return f *= c; }
    friend SymFunc operator*(const SymFunc& f, const SymFunc& g);

    // Exact equality of coefficients. Zero functions compare equal whatever
    // degree they carry.
    friend bool operator==(const SymFunc& f, const SymFunc& g) { return f.terms_ == g.terms_; }

private:
    int degree_ = kAnyDegree;
    Terms terms_;
};

SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc scale(const Rational& c, const SymFunc& f);
SymFunc mul(const SymFunc& f, const SymFunc& g);

SymFunc p_of(const Partition& lambda);
SymFunc h_of(int n);
SymFunc e_of(int n);
SymFunc s_of(const Partition& lambda);

// p_μ ↦ (-1)^{|μ|-ℓ(μ)} p_μ.
SymFunc omega(const SymFunc& f);

// p_n[f]: every p_m becomes p_{mn}.
SymFunc pleth_p(int n, const SymFunc& f);

// ----- characters of the symmetric group -----

// χ^λ(μ) by the Murnaghan–Nakayama rule. Tables are built per degree on
// first use and shared afterwards.
std::int64_t character(const Partition& lambda, const Partition& mu);

// Full table for degree n, indexed [λ][μ] in partitions_cached(n) order.
class CharacterTable {
public:
    explicit CharacterTable(int n, std::vector<std::int64_t> values);
    int degree() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    std::int64_t operator()(std::size_t lambda, std::size_t mu) const { return values_[lambda * dim_ + mu]; }

private:
    int n_;
    std::size_t dim_;
    std::vector<std::int64_t> values_;
};

const CharacterTable& character_table(int n);

// ----- Schur basis -----

struct SchurExpansion {
    int degree = 0;
    std::map<Partition, Rational, DescLex> coefficients;

    Rational coefficient(const Partition& lambda) const;
    bool is_integral() const;
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

// Schur coefficients of f: the coefficient of s_λ is Σ_μ c_μ χ^λ(μ).
// With require_integral set, a non-integer coefficient raises InvalidArgument.
SchurExpansion to_schur(const SymFunc& f, bool require_integral = false);

// Inverse of to_schur.
SymFunc from_schur(const SchurExpansion& s);

struct PositivityResult {
    bool positive = true;
    std::vector<std::pair<Partition, Rational>> witnesses;  // every negative coefficient
};

PositivityResult is_schur_positive(const SymFunc& f);
PositivityResult is_schur_positive(const SchurExpansion& s);

// ----- standard Young tableaux -----

inline constexpr int kDefaultTableauBound = 10;

// Number of SYT of shape λ with major index ≡ r (mod |λ|), for every residue
// r that occurs. Shapes larger than bound are rejected.
std::map<int, std::uint64_t> syt_maj_distribution(const Partition& lambda, int bound = kDefaultTableauBound);

// Number of SYT of shape λ by the hook length formula.
std::uint64_t syt_count(const Partition& lambda);

}  // namespace symfn

#endif  // SYMFN_SYMFUNC_HPP
