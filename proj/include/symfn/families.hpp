#ifndef SYMFN_FAMILIES_HPP
#define SYMFN_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symfn/plethysm.hpp"

namespace symfn {

/* A set of positive integers given symbolically, so membership is exact at
 * any n without materializing the set.
 */
class IntSet {
public:
    enum class Kind { Explicit, All, AtMost, DivisorsOf, OneModK, PowersOf, PrimeSupport, PrimeSupportBar, Odd };

    static IntSet explicit_set(std::vector<std::int64_t> members);
    static IntSet all();
    static IntSet at_most(std::int64_t k);       // {n : n ≤ k}
    static IntSet divisors_of(std::int64_t k);   // {n : n | k}
    static IntSet one_mod(std::int64_t k);       // {n : n ≡ 1 mod k}
    static IntSet powers_of(std::int64_t k);     // {1, k, k^2, ...}
    static IntSet prime_support(PrimeSet S);     // P(S)
    static IntSet prime_support_bar(PrimeSet S); // P(S̄)
    static IntSet odd();

    // Parses "1,5", "all", "odd", "le(5)", "div(12)", "mod1(4)", "pow(3)".
    static IntSet parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool contains(std::int64_t n) const;
    std::string to_string() const;

private:
    Kind kind_ = Kind::Explicit;
    std::int64_t k_ = 0;
    std::vector<std::int64_t> members_;
    PrimeSet primes_;
};

/* The function d ↦ ψ(d) that generates f_n = (1/n) Σ_{d|n} ψ(d) p_d^{n/d}.
 * Every family in this library is one of these tags.
 */
class PsiSpec {
public:
    enum class Kind { Mu, Phi, PrimeSet, PrimeSetBar, SetT, Foulkes, Custom };

    static PsiSpec mu();
    static PsiSpec phi();
    static PsiSpec prime_set(PrimeSet S);      // φ(Q_d) μ(ℓ_d)
    static PsiSpec prime_set_bar(PrimeSet S);  // φ(ℓ_d) μ(Q_d)
    static PsiSpec set_t(IntSet T);            // Σ_{m|d, m∈T} m μ(d/m)
    static PsiSpec foulkes(std::int64_t r);    // Ramanujan sum φ(d) μ(d/(d,r)) / φ(d/(d,r))
    static PsiSpec custom(std::map<std::int64_t, std::int64_t> table);
    // "mu", "phi", "primeset:2,3", "primesetbar:2", "setT:<set>", "foulkes:r".
    static PsiSpec parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    std::int64_t operator()(std::int64_t d) const;
    std::string to_string() const;

private:
    Kind kind_ = Kind::Mu;
    PrimeSet primes_;
    std::shared_ptr<const IntSet> set_;
    std::int64_t r_ = 0;
    std::map<std::int64_t, std::int64_t> table_;
};

SymFunc f_from_psi(int n, const PsiSpec& psi);
// f_1 + ... + f_N
Series family_series(const PsiSpec& psi, int max_degree);

SymFunc lie(int n);
SymFunc conj(int n);
// ℓ_n^(r), 1 ≤ r ≤ n.
SymFunc foulkes(int n, int r);
SymFunc lie_S(int n, const PrimeSet& S);
SymFunc lie_S_bar(int n, const PrimeSet& S);
SymFunc f_T(int n, const IntSet& T);

// f̃_n(t) = (1/n) Σ_{d|n} ψ(d) t^{n/d} as a polynomial in t.
VPoly f_tilde(int n, const PsiSpec& psi);
// f̃_n(±1).
Rational f_tilde_eval(int n, const PsiSpec& psi, int t);

// Σ over m ∈ T, k ≥ 0 with m·2^k | n of Lie_{n/(m 2^k)}[p_{m 2^k}].
SymFunc g_T(int n, const IntSet& T);
// Σ_{m ∈ T, m | n} Lie_{n/m}[p_m].
SymFunc f_T_decomposed(int n, const IntSet& T);

// Series assembled from a per-degree constructor.
template <class Fn>
Series series_of(int max_degree, Fn&& component) {
    Series s(max_degree);
    for (int n = 1; n <= max_degree; ++n) s.set_component(n, component(n));
    return s;
}

/* Family descriptors: "lie", "conj", "foulkes:r", "lieS:2,3", "lieSbar:2",
 * "fT:<set>" and "gT:<set>". A descriptor resolves to a
 * per-degree constructor.
 */
class Family {
public:
    static Family parse(const std::string& descriptor);

    const std::string& descriptor() const noexcept { return descriptor_; }
    SymFunc component(int n) const;
    Series series(int max_degree) const;
    // The generating ψ, when the family is ψ-generated (everything but gT).
    const PsiSpec* psi() const noexcept { return has_psi_ ? &psi_ : nullptr; }

private:
    std::string descriptor_;
    bool has_psi_ = false;
    PsiSpec psi_;
    std::shared_ptr<const IntSet> g_set_;
};

PrimeSet parse_prime_list(const std::string& text);

}  // namespace symfn

#endif  // SYMFN_FAMILIES_HPP
