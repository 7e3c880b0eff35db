#ifndef SYMFN_PLETHYSM_HPP
#define SYMFN_PLETHYSM_HPP

#include <functional>
#include <map>
#include <vector>

#include "symfn/series.hpp"

namespace symfn {

// p_n[g]: degree d of g moves to degree d·n; anything above N is dropped.
Series pleth_p(int n, const Series& g);

// f[g] for a homogeneous f. g must have zero constant term.
Series pleth(const SymFunc& f, const Series& g);
// F[g] = F_0 + Σ_d F_d[g]. g must have zero constant term.
Series pleth(const Series& f, const Series& g);

// h_m[q] and e_m[q] for a homogeneous q.
SymFunc pleth_h(int m, const SymFunc& q);
SymFunc pleth_e(int m, const SymFunc& q);

/* Symmetric and exterior powers of a constant-free series F. The graded
 * forms return the list [h_0[F], h_1[F], ..., h_N[F]] (resp. e_r[F]): the
 * coefficient of v^r in H(v)[F] = Σ_λ v^{ℓ(λ)} H_λ[F].
 */
std::vector<Series> h_powers(const Series& F);
std::vector<Series> e_powers(const Series& F);

Series H_of(const Series& F);      // Σ_r h_r[F]
Series E_of(const Series& F);      // Σ_r e_r[F]
Series H_pm_of(const Series& F);   // Σ_r (-1)^r h_r[F]
Series E_pm_of(const Series& F);   // Σ_r (-1)^r e_r[F]

// H_λ[Q] = Π_i h_{m_i}[q_i] and E_λ[Q] = Π_i e_{m_i}[q_i].
SymFunc H_lambda(const Series& Q, const Partition& lambda);
SymFunc E_lambda(const Series& Q, const Partition& lambda);

// The series H, E, H^±, E^± themselves (H = Σ h_i, ...), truncated at N.
Series H_series(int max_degree);
Series E_series(int max_degree);
Series H_pm_series(int max_degree);
Series E_pm_series(int max_degree);

struct ProductFactor {
    int part;      // m in (1 + sign·p_m)^exponent
    int sign;      // +1 or -1
    int exponent;  // nonzero
};

/* Π (1 + sign·p_m)^exponent expanded combinatorially: the coefficient of
 * p_λ is a product over the distinct parts of λ of a binomial coefficient.
 * Factor parts must be distinct.
 */
Series product_series(const std::vector<ProductFactor>& factors, int max_degree);

// Π_{m ≤ N, keep(m)} (1 + sign·p_m)^exponent.
Series product_series(const std::function<bool(int)>& keep, int sign, int exponent, int max_degree);

// Polynomial in one variable v with rational coefficients, low degree first.
using VPoly = std::vector<Rational>;

VPoly poly_trim(VPoly a);
VPoly poly_add(const VPoly& a, const VPoly& b);
VPoly poly_mul(const VPoly& a, const VPoly& b);
// a(-v)
VPoly poly_reflect(const VPoly& a);
Rational poly_eval(const VPoly& a, const Rational& v);

struct GradedFactor {
    int part;        // m
    int sign;        // +1 or -1: the factor is (1 + sign·p_m)^{exponent(v)}
    VPoly exponent;  // polynomial in v
};

/* Π (1 + sign·p_m)^{e_m(v)} for polynomial exponents, expanded through the
 * generalized binomial series. Result[r] collects the coefficient of v^r;
 * each entry is a Series truncated at N (constant included for r = 0).
 */
std::vector<Series> graded_product_series(const std::vector<GradedFactor>& factors, int max_degree);

/* The compositional inverse G with F[G] = p_1 through degree N. F must be
 * constant-free with degree-1 component exactly p_1.
 */
Series pleth_inverse(const Series& F);

// Σ_{k: q^k ≤ N} sign^k p_{q^k}.
Series power_chain(int q, int sign, int max_degree);

// d/dp_1 applied to each term.
SymFunc derivative_p1(const SymFunc& f);

}  // namespace symfn

#endif  // SYMFN_PLETHYSM_HPP
