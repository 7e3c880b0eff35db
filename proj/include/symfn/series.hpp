#ifndef SYMFN_SERIES_HPP
#define SYMFN_SERIES_HPP

#include <vector>

#include "symfn/symfunc.hpp"

namespace symfn {

/* A formal series c + f_1 + f_2 + ... + f_N of symmetric functions, f_d
 * homogeneous of degree d, truncated at degree N. Every operation silently
 * drops whatever would land above N; degrees above N are never consulted.
 */
class Series {
public:
    Series() = default;
    explicit Series(int max_degree, Rational constant = 0);

    static Series from_components(int max_degree, const std::vector<SymFunc>& components, Rational constant = 0);
    // The single homogeneous function f (zero if deg f > N).
    static Series homogeneous(int max_degree, const SymFunc& f);

    int max_degree() const noexcept { return max_degree_; }
    const Rational& constant() const noexcept { return constant_; }
    void set_constant(const Rational& c) { constant_ = c; }

    // Degree d component, 1 <= d <= N. Degree 0 gives the constant as a
    // degree-zero function.
    SymFunc component(int d) const;
    const SymFunc& operator[](int d) const;
    void set_component(int d, SymFunc f);
    void add_to_component(int d, const SymFunc& f);

    bool constant_free() const { return sgn(constant_) == 0; }
    bool is_zero() const;
    // Lowest degree with a nonzero component, counting the constant as
    // degree 0; max_degree()+1 for the zero series.
    int valuation() const;

    // Same content, new truncation (extra degrees are zero).
    Series truncated(int max_degree) const;

    Series& operator+=(const Series& g);
    Series& operator-=(const Series& g);
    Series& operator*=(const Rational& c);

    friend Series operator+(Series f, const Series& g) { return f += g; }
    friend Series operator-(Series f, const Series& g) { return f -= g; }
    friend Series operator-(Series f) { return f *= Rational(-1); }
    friend Series operator*(Series f, const Rational& c) { return f *= c; }
    friend Series operator*(const Rational& c, Series f) { return f *= c; }
    // Truncated Cauchy product; the result keeps the smaller truncation.
    friend Series operator*(const Series& f, const Series& g);

    // Exact equality up to the common truncation.
    friend bool operator==(const Series& f, const Series& g);

private:
    int max_degree_ = 0;
    Rational constant_ = 0;
    std::vector<SymFunc> components_;  // index d holds degree d; index 0 unused
};

// Multiplicative inverse of a series with nonzero constant term.
Series reciprocal(const Series& f);

// ω applied degree by degree.
Series omega(const Series& f);

// Degree i component becomes (-1)^{i-1} ω(f_i).
Series alt_omega(const Series& f);

// Degree d component multiplied by (-1)^d.
Series alternate_by_degree(const Series& f);

}  // namespace symfn

#endif  // SYMFN_SERIES_HPP
