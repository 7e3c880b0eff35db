#include "symfn/plethysm.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "symfn/errors.hpp"

namespace symfn {

Series pleth_p(int n, const Series& g) {
    if (n < 1) throw InvalidArgument("p_n plethysm requires n >= 1");
    const int N = g.max_degree();
    Series out(N, g.constant());
    for (int d = 1; d * n <= N; ++d) out.set_component(d * n, pleth_p(n, g[d]));
    return out;
}

namespace {

// Monomials p_λ[g], memoized on the tail of λ so that partitions sharing
// their smaller parts share the work.
class MonomialCache {
public:
    explicit MonomialCache(const Series& g) : g_(g), N_(g.max_degree()), valuation_(g.valuation()) {
        if (!g.constant_free()) throw InvalidArgument("plethysm requires an inner series with zero constant term");
    }

    int max_degree() const { return N_; }

    // Lowest degree p_λ[g] can reach.
    bool vanishes(const Partition& lambda) const {
        return static_cast<long>(lambda.size()) * valuation_ > N_;
    }

    const Series& power(int k) {
        auto it = powers_.find(k);
        if (it == powers_.end()) it = powers_.emplace(k, pleth_p(k, g_)).first;
        return it->second;
    }

    const Series& monomial(const Partition& lambda) {
        auto it = monomials_.find(lambda);
        if (it != monomials_.end()) return it->second;
        Series value;
        if (lambda.empty()) {
            value = Series(N_, 1);
        } else if (vanishes(lambda)) {
            value = Series(N_);
        } else {
            Partition tail(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
            const Series& rest = monomial(tail);
            value = power(lambda[0]) * rest;
        }
        return monomials_.emplace(lambda, std::move(value)).first->second;
    }

    void accumulate(const SymFunc& f, Series& out) {
        for (auto& [lambda, c] : f.terms()) {
            if (vanishes(lambda)) continue;
            out += c * monomial(lambda);
        }
    }

private:
    const Series& g_;
    int N_;
    int valuation_;
    std::map<int, Series> powers_;
    std::map<Partition, Series, DescLex> monomials_;
};

}  // namespace

Series pleth(const SymFunc& f, const Series& g) {
    MonomialCache cache(g);
    Series out(g.max_degree());
    cache.accumulate(f, out);
    return out;
}

Series pleth(const Series& f, const Series& g) {
    const int N = std::min(f.max_degree(), g.max_degree());
    const Series inner = g.truncated(N);
    MonomialCache cache(inner);
    Series out(N, f.constant());
    for (int d = 1; d <= N; ++d) cache.accumulate(f[d], out);
    return out;
}

namespace {

SymFunc newton_power(int m, const SymFunc& q, bool exterior) {
    if (m < 0) throw InvalidArgument("power index must be nonnegative");
    if (q.is_zero()) return m == 0 ? SymFunc::one() : SymFunc();
    std::vector<SymFunc> powers{SymFunc::one()};
    std::vector<SymFunc> pk(static_cast<std::size_t>(m) + 1);
    for (int k = 1; k <= m; ++k) pk[static_cast<std::size_t>(k)] = pleth_p(k, q);
    for (int r = 1; r <= m; ++r) {
        SymFunc acc(r * q.degree());
        for (int k = 1; k <= r; ++k) {
            SymFunc term = pk[static_cast<std::size_t>(k)] * powers[static_cast<std::size_t>(r - k)];
            if (exterior && k % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        acc *= ratio(1, static_cast<unsigned long>(r));
        powers.push_back(std::move(acc));
    }
    return powers.back();
}

/* r·h_r[F] = Σ_{k=1..r} p_k[F] h_{r-k}[F] and
 * r·e_r[F] = Σ_{k=1..r} (-1)^{k-1} p_k[F] e_{r-k}[F].
 */
std::vector<Series> newton_series(const Series& F, bool exterior) {
    if (!F.constant_free()) throw InvalidArgument("symmetric/exterior powers require a constant-free series");
    const int N = F.max_degree();
    std::vector<Series> pk(static_cast<std::size_t>(N) + 1);
    for (int k = 1; k <= N; ++k) pk[static_cast<std::size_t>(k)] = pleth_p(k, F);
    std::vector<Series> powers{Series(N, 1)};
    for (int r = 1; r <= N; ++r) {
        Series acc(N);
        for (int k = 1; k <= r; ++k) {
            Series term = pk[static_cast<std::size_t>(k)] * powers[static_cast<std::size_t>(r - k)];
            if (exterior && k % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        acc *= ratio(1, static_cast<unsigned long>(r));
        powers.push_back(std::move(acc));
    }
    return powers;
}

Series sum_of(const std::vector<Series>& parts, bool alternate) {
    Series out(parts.front().max_degree());
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (alternate && r % 2)
            out -= parts[r];
        else
            out += parts[r];
    }
    return out;
}

}  // namespace

SymFunc pleth_h(int m, const SymFunc& q) { return newton_power(m, q, false); }
SymFunc pleth_e(int m, const SymFunc& q) { return newton_power(m, q, true); }

std::vector<Series> h_powers(const Series& F) { return newton_series(F, false); }
std::vector<Series> e_powers(const Series& F) { return newton_series(F, true); }

Series H_of(const Series& F) { return sum_of(h_powers(F), false); }
Series E_of(const Series& F) { return sum_of(e_powers(F), false); }
Series H_pm_of(const Series& F) { return sum_of(h_powers(F), true); }
Series E_pm_of(const Series& F) { return sum_of(e_powers(F), true); }

namespace {

SymFunc higher_module(const Series& Q, const Partition& lambda, bool exterior) {
    if (!lambda.empty() && lambda[0] > Q.max_degree())
        throw TruncationError("series truncated at " + std::to_string(Q.max_degree()) + " cannot evaluate " +
                              lambda.to_string());
    SymFunc out = SymFunc::one();
    for (auto [part, mult] : lambda.multiplicities())
        out = out * (exterior ? pleth_e(mult, Q[part]) : pleth_h(mult, Q[part]));
    if (out.is_zero()) return SymFunc(lambda.size());
    return out;
}

Series basis_series(int N, SymFunc (*element)(int), bool alternate) {
    Series s(N, 1);
    for (int d = 1; d <= N; ++d) {
        SymFunc f = element(d);
        if (alternate && d % 2) f *= Rational(-1);
        s.set_component(d, std::move(f));
    }
    return s;
}

}  // namespace

SymFunc H_lambda(const Series& Q, const Partition& lambda) { return higher_module(Q, lambda, false); }
SymFunc E_lambda(const Series& Q, const Partition& lambda) { return higher_module(Q, lambda, true); }

Series H_series(int N) { return basis_series(N, h_of, false); }
Series E_series(int N) { return basis_series(N, e_of, false); }
Series H_pm_series(int N) { return basis_series(N, h_of, true); }
Series E_pm_series(int N) { return basis_series(N, e_of, true); }

// ----- product side -----

namespace {

// Generalized binomial coefficient C(e, j) for an integer exponent e.
Rational binomial(int e, int j) {
    Rational c = 1;
    for (int i = 0; i < j; ++i) {
        c *= e - i;
        c /= i + 1;
    }
    return c;
}

}  // namespace

Series product_series(const std::vector<ProductFactor>& factors, int max_degree) {
    std::map<int, ProductFactor> by_part;
    for (const auto& f : factors) {
        if (f.part < 1) throw InvalidArgument("product factor parts must be positive");
        if (f.sign != 1 && f.sign != -1) throw InvalidArgument("product factor sign must be +1 or -1");
        if (f.exponent == 0) throw InvalidArgument("product factor exponent must be nonzero");
        if (!by_part.emplace(f.part, f).second)
            throw InvalidArgument("duplicate product factor p_" + std::to_string(f.part));
    }
    Series out(max_degree, 1);
    auto allowed = [&](int m) { return by_part.count(m) != 0; };
    for (int d = 1; d <= max_degree; ++d) {
        SymFunc comp(d);
        for (const auto& lambda : partitions_of(d, allowed)) {
            Rational c = 1;
            for (auto [part, mult] : lambda.multiplicities()) {
                const auto& f = by_part.at(part);
                c *= binomial(f.exponent, mult);
                if (f.sign < 0 && mult % 2) c = -c;
                if (sgn(c) == 0) break;
            }
            comp.add_term(lambda, c);
        }
        out.set_component(d, std::move(comp));
    }
    return out;
}

Series product_series(const std::function<bool(int)>& keep, int sign, int exponent, int max_degree) {
    std::vector<ProductFactor> factors;
    for (int m = 1; m <= max_degree; ++m)
        if (keep(m)) factors.push_back({m, sign, exponent});
    return product_series(factors, max_degree);
}

VPoly poly_trim(VPoly a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    return a;
}

VPoly poly_add(const VPoly& a, const VPoly& b) {
    VPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return poly_trim(std::move(out));
}

VPoly poly_mul(const VPoly& a, const VPoly& b) {
    if (a.empty() || b.empty()) return {};
    VPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(out));
}

VPoly poly_reflect(const VPoly& a) {
    VPoly out = a;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return out;
}

Rational poly_eval(const VPoly& a, const Rational& v) {
    Rational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * v + *it;
    return acc;
}

namespace {

VPoly poly_binomial(const VPoly& e, int j) {
    VPoly out{Rational(1)};
    for (int i = 0; i < j; ++i) {
        VPoly factor = poly_add(e, VPoly{Rational(-i)});
        out = poly_mul(out, factor);
        for (auto& c : out) c /= i + 1;
    }
    return out;
}

}  // namespace

std::vector<Series> graded_product_series(const std::vector<GradedFactor>& factors, int max_degree) {
    std::map<int, const GradedFactor*> by_part;
    for (const auto& f : factors) {
        if (f.part < 1) throw InvalidArgument("product factor parts must be positive");
        if (!by_part.emplace(f.part, &f).second)
            throw InvalidArgument("duplicate product factor p_" + std::to_string(f.part));
    }
    std::vector<Series> out(static_cast<std::size_t>(max_degree) + 1, Series(max_degree));
    out[0].set_constant(1);
    auto allowed = [&](int m) { return by_part.count(m) != 0; };
    // binomial polynomials reused across partitions
    std::map<std::pair<int, int>, VPoly> memo;
    for (int d = 1; d <= max_degree; ++d) {
        for (const auto& lambda : partitions_of(d, allowed)) {
            VPoly c{Rational(1)};
            for (auto [part, mult] : lambda.multiplicities()) {
                auto key = std::make_pair(part, mult);
                auto it = memo.find(key);
                if (it == memo.end()) {
                    const auto& f = *by_part.at(part);
                    VPoly b = poly_binomial(f.exponent, mult);
                    if (f.sign < 0 && mult % 2)
                        for (auto& x : b) x = -x;
                    it = memo.emplace(key, std::move(b)).first;
                }
                c = poly_mul(c, it->second);
                if (c.empty()) break;
            }
            for (std::size_t r = 0; r < c.size(); ++r) {
                if (sgn(c[r]) == 0) continue;
                if (r > static_cast<std::size_t>(max_degree))
                    throw InvalidArgument("graded product exceeds length grading bound");
                out[r].add_to_component(d, SymFunc::p(lambda, c[r]));
            }
        }
    }
    return out;
}

Series pleth_inverse(const Series& F) {
    const int N = F.max_degree();
    if (!F.constant_free()) throw InvalidArgument("plethystic inverse requires a constant-free series");
    if (N >= 1 && !(F[1] == SymFunc::p(Partition{1})))
        throw InvalidArgument("plethystic inverse requires degree-1 component exactly p_1");
    Series G(N);
    if (N >= 1) G.set_component(1, SymFunc::p(Partition{1}));
    // F[G] = p_1 + G_n + (terms from G_1..G_{n-1}) at degree n.
    for (int n = 2; n <= N; ++n) {
        Series partial = pleth(F.truncated(n), G.truncated(n));
        G.set_component(n, -partial[n]);
    }
    return G;
}

Series power_chain(int q, int sign, int max_degree) {
    if (q < 2) throw InvalidArgument("power chain base must be at least 2");
    Series out(max_degree);
    long power = 1;
    int s = 1;
    while (power <= max_degree) {
        out.add_to_component(static_cast<int>(power), SymFunc::p(Partition{static_cast<int>(power)}, s));
        power *= q;
        s *= sign;
    }
    return out;
}

SymFunc derivative_p1(const SymFunc& f) {
    SymFunc out(f.degree() > 0 ? f.degree() - 1 : SymFunc::kAnyDegree);
    for (auto& [lambda, c] : f.terms()) {
        const int ones = lambda.multiplicity(1);
        if (ones == 0) continue;
        std::vector<int> parts(lambda.parts().begin(), lambda.parts().end() - 1);
        out.add_term(Partition(std::move(parts)), c * ones);
    }
    return out;
}

}  // namespace symfn
