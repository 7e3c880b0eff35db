#include "symfn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "symfn/errors.hpp"

namespace symfn {

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    jobs = std::clamp(jobs, 1, count);
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// ----- parameters -----

std::int64_t int_param(const ParamMap& p, const std::string& name) {
    const auto& text = p.at(name);
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw InvalidArgument("");
        return v;
    } catch (const std::exception&) {
        throw InvalidArgument("parameter " + name + " must be an integer, got '" + text + "'");
    }
}

std::int64_t int_param_at_least(const ParamMap& p, const std::string& name, std::int64_t lo) {
    auto v = int_param(p, name);
    if (v < lo) throw InvalidArgument("parameter " + name + " must be at least " + std::to_string(lo));
    return v;
}

std::int64_t prime_param(const ParamMap& p, const std::string& name) {
    auto v = int_param(p, name);
    if (v < 2 || !is_prime(v)) throw InvalidArgument("parameter " + name + " must be a prime");
    return v;
}

int sign_param(const ParamMap& p, const std::string& name) {
    const auto& t = p.at(name);
    if (t == "+" || t == "+1" || t == "1") return 1;
    if (t == "-" || t == "-1") return -1;
    throw InvalidArgument("parameter " + name + " must be + or -");
}

// ----- series helpers -----

Series lie_series(int N) { return family_series(PsiSpec::mu(), N); }
Series conj_series(int N) { return family_series(PsiSpec::phi(), N); }
Series lie_S_series(const PrimeSet& S, int N) { return family_series(PsiSpec::prime_set(S), N); }

Series p1_series(int N) { return Series::homogeneous(N, p_of({1})); }

// Σ_{n ≤ N, keep(n)} c(n) p_n
Series power_sum_series(int N, const std::function<bool(int)>& keep, const std::function<Rational(int)>& c) {
    Series s(N);
    for (int n = 1; n <= N; ++n)
        if (keep(n)) s.add_to_component(n, SymFunc::p(Partition{n}, c(n)));
    return s;
}

Series one_minus_pq(int q, int sign, int N) {
    Series s = p1_series(N);
    if (q <= N) s.add_to_component(q, SymFunc::p(Partition{q}, sign));
    return s;
}

Series without_constant(Series s) {
    s.set_constant(0);
    return s;
}

// Σ_{n ≥ 1} (-1)^{n-1} e_n (or h_n)
Series alternating_basis(int N, bool elementary) {
    Series s(N);
    for (int n = 1; n <= N; ++n) {
        SymFunc f = elementary ? e_of(n) : h_of(n);
        if (n % 2 == 0) f *= Rational(-1);
        s.set_component(n, std::move(f));
    }
    return s;
}

// Σ_{m | n, keep(m)} Lie_{n/m}[p_m]
SymFunc lie_plethysm_sum(int n, const std::function<bool(int)>& keep) {
    SymFunc f(n);
    for (auto m : divisors(n))
        if (keep(static_cast<int>(m))) f += pleth_p(static_cast<int>(m), lie(n / static_cast<int>(m)));
    return f;
}

Series restrict_degrees(const Series& s, const std::function<bool(int)>& keep) {
    Series out(s.max_degree(), s.constant());
    for (int n = 1; n <= s.max_degree(); ++n)
        if (keep(n)) out.set_component(n, s[n]);
    return out;
}

int foulkes_index(int n, std::int64_t k) {
    const auto r = k % n;
    return r == 0 ? n : static_cast<int>(r);
}

// ----- checks -----

struct Check {
    std::string label;
    std::vector<Series> lhs, rhs;  // one entry, or one per length when graded
    bool graded = false;
};

Check plain(std::string label, Series lhs, Series rhs) {
    return Check{std::move(label), {std::move(lhs)}, {std::move(rhs)}, false};
}

Check graded(std::string label, std::vector<Series> lhs, std::vector<Series> rhs) {
    return Check{std::move(label), std::move(lhs), std::move(rhs), true};
}

SymFunc slice(const std::vector<Series>& side, std::size_t r, int d) {
    if (r >= side.size() || d > side[r].max_degree()) return SymFunc(d);
    return side[r].component(d);
}

std::optional<Mismatch> compare(const Check& c, int N) {
    const std::size_t lengths = std::max(c.lhs.size(), c.rhs.size());
    for (int d = 0; d <= N; ++d) {
        for (std::size_t r = 0; r < lengths; ++r) {
            SymFunc a = slice(c.lhs, r, d), b = slice(c.rhs, r, d);
            if (a == b) continue;
            Mismatch m;
            m.check = c.label;
            m.degree = d;
            m.length = c.graded ? static_cast<int>(r) : -1;
            std::map<Partition, bool, DescLex> keys;
            for (const auto& [k, v] : a.terms()) keys[k] = true;
            for (const auto& [k, v] : b.terms()) keys[k] = true;
            for (const auto& [k, unused] : keys) {
                Rational x = a.coefficient(k), y = b.coefficient(k);
                if (x != y) m.differences.push_back({k, x, y});
            }
            return m;
        }
    }
    return std::nullopt;
}

void corrupt(Check& c, const Corruption& how) {
    auto& side = how.right_side ? c.rhs : c.lhs;
    if (side.empty()) return;
    const std::size_t r = c.graded && how.degree >= 1 && side.size() > 1 ? 1 : 0;
    Series& s = side[r];
    if (how.degree > s.max_degree()) return;
    if (how.degree == 0) {
        s.set_constant(s.constant() + 1);
        return;
    }
    SymFunc f = s[how.degree];
    f.add_term(ones(how.degree), 1);
    s.set_component(how.degree, std::move(f));
}

struct Outcome {
    std::vector<Check> checks;
    std::optional<Mismatch> direct;  // for checks that are not series comparisons
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
};

using Builder = std::function<Outcome(const ParamMap&, int)>;

struct Entry {
    IdentityInfo info;
    Builder build;
};

Outcome checks(std::vector<Check> cs) {
    Outcome o;
    o.checks = std::move(cs);
    return o;
}

// ----- individual identities -----

Outcome symLS(const ParamMap& p, int N) {
    PrimeSet S = parse_prime_list(p.at("S"));
    Series rhs = product_series([&](int n) { return in_P(S, n); }, -1, -1, N);
    return checks({plain("H[L^S]", H_of(lie_S_series(S, N)), rhs)});
}

Outcome altsymLS(const ParamMap& p, int N) {
    PrimeSet S = parse_prime_list(p.at("S"));
    Series rhs = product_series([&](int n) { return in_P(S, n); }, 1, 1, N);
    return checks({plain("H[alt omega(L^S)]", H_of(alt_omega(lie_S_series(S, N))), rhs)});
}

Outcome extLS(const ParamMap& p, int N) {
    PrimeSet S = parse_prime_list(p.at("S"));
    Series E = E_of(lie_S_series(S, N));
    std::vector<Check> cs;
    if (!S.contains(2)) {
        std::vector<ProductFactor> f, g;
        for (int n = 1; n <= N; ++n) {
            if (in_P(S, n)) {
                f.push_back({n, -1, -1});
                g.push_back({n, -1, -1});
            } else if (n % 2 == 0 && in_P(S, n / 2)) {
                f.push_back({n, -1, 1});
                g.push_back({n, 1, 1});
            }
        }
        cs.push_back(plain("E[L^S], 2 not in S", E, product_series(f, N)));
        cs.push_back(plain("omega(E[L^S]), 2 not in S", omega(E), product_series(g, N)));
    } else {
        Series rhs = product_series([&](int n) { return n % 2 == 1 && in_P(S, n); }, -1, -1, N);
        cs.push_back(plain("E[L^S], 2 in S", E, rhs));
    }
    return checks(std::move(cs));
}

Outcome altextLS(const ParamMap& p, int N) {
    PrimeSet S = parse_prime_list(p.at("S"));
    Series lhs = E_of(alt_omega(lie_S_series(S, N)));
    if (!S.contains(2)) {
        std::vector<ProductFactor> f;
        for (int n = 1; n <= N; ++n) {
            if (in_P(S, n))
                f.push_back({n, 1, 1});
            else if (n % 2 == 0 && in_P(S, n / 2))
                f.push_back({n, 1, -1});
        }
        return checks({plain("E[alt omega(L^S)], 2 not in S", lhs, product_series(f, N))});
    }
    Series rhs = product_series([&](int n) { return n % 2 == 1 && in_P(S, n); }, 1, 1, N);
    return checks({plain("E[alt omega(L^S)], 2 in S", lhs, rhs)});
}

Outcome extLieConj(const ParamMap&, int N) {
    Series lie = lie_series(N), conj = conj_series(N);
    auto odd = [](int n) { return n % 2 == 1; };
    std::vector<Check> cs;
    cs.push_back(plain("omega(E[Lie])", omega(E_of(lie)), product_series({{1, -1, -1}, {2, 1, 1}}, N)));
    cs.push_back(plain("E[Conj]", E_of(conj), product_series(odd, -1, -1, N)));

    Series third = product_series({{1, 1, 1}, {2, -1, -1}}, N);
    auto hp = h_powers(lie);
    Series signed_sum(N, 1);
    for (int n = 1; n <= N; ++n) {
        SymFunc acc(n);
        for (int r = 1; r <= n; ++r) acc += ((n - r) % 2 ? Rational(-1) : Rational(1)) * hp[static_cast<std::size_t>(r)][n];
        signed_sum.set_component(n, acc);
    }
    cs.push_back(plain("sum (-1)^(|l|-len) H_l[Lie]", signed_sum, third));
    cs.push_back(plain("omega(E[alt omega(Lie)])", omega(E_of(alt_omega(lie))), third));
    cs.push_back(plain("E[alt omega(Conj)]", E_of(alt_omega(conj)), product_series(odd, 1, 1, N)));
    return checks(std::move(cs));
}

Outcome dualityA(const ParamMap&, int N) {
    Series rhs = product_series({{1, -1, -1}}, N);
    Series lie2 = lie_S_series(PrimeSet({2}), N);
    return checks({plain("H[Lie]", H_of(lie_series(N)), rhs), plain("E[Lie^(2)]", E_of(lie2), rhs),
                   plain("Lie = Lie^(2) - Lie^(2)[p_2]", lie_series(N), lie2 - pleth_p(2, lie2))});
}

Outcome dualityB(const ParamMap&, int N) {
    Series rhs = product_series([](int n) { return n % 2 == 1; }, -1, -1, N);
    Series conj = conj_series(N);
    Series odd_lie = lie_S_series(PrimeSet({2}, true), N);
    return checks({plain("H[Lie^(2bar)]", H_of(odd_lie), rhs), plain("E[Conj]", E_of(conj), rhs),
                   plain("Lie^(2bar) = Conj - Conj[p_2]", odd_lie, conj - pleth_p(2, conj))});
}

Outcome fT_sym(const ParamMap& p, int N) {
    IntSet T = IntSet::parse(p.at("T"));
    Series F = family_series(PsiSpec::set_t(T), N);
    return checks({plain("H[F^T]", H_of(F), product_series([&](int n) { return T.contains(n); }, -1, -1, N))});
}

Outcome fT_decomp(const ParamMap& p, int N) {
    IntSet T = IntSet::parse(p.at("T"));
    Series F = family_series(PsiSpec::set_t(T), N);
    Series pT = power_sum_series(N, [&](int n) { return T.contains(n); }, [](int) { return Rational(1); });
    Series pieces = series_of(N, [&](int n) { return f_T_decomposed(n, T); });
    return checks({plain("F^T = p^T[Lie]", F, pleth(pT, lie_series(N))), plain("F^T degreewise", F, pieces)});
}

Outcome fT_ext(const ParamMap& p, int N) {
    IntSet T = IntSet::parse(p.at("T"));
    Series G = series_of(N, [&](int n) { return g_T(n, T); });
    Series F = family_series(PsiSpec::set_t(T), N);
    Series E = E_of(G);
    return checks({plain("E[G^T]", E, product_series([&](int n) { return T.contains(n); }, -1, -1, N)),
                   plain("E[G^T] = H[F^T]", E, H_of(F))});
}

Outcome conj_decomp(const ParamMap&, int N) {
    Series all = power_sum_series(N, [](int) { return true; }, [](int) { return Rational(1); });
    return checks({plain("sum p_m[Lie]", pleth(all, lie_series(N)), conj_series(N))});
}

Outcome conj_inverse(const ParamMap&, int N) {
    Series conj = conj_series(N);
    Series alt_e = alternating_basis(N, true);
    Series mu = power_sum_series(N, [](int) { return true; }, [](int n) { return Rational(moebius(n)); });
    Series all = power_sum_series(N, [](int) { return true; }, [](int) { return Rational(1); });
    return checks({plain("Conj^<-1>", pleth_inverse(conj), pleth(alt_e, mu)),
                   plain("sum p_m = Conj[sum (-1)^(r-1) e_r]", pleth(conj, alt_e), all)});
}

Outcome lieq_decomp(const ParamMap& p, int N) {
    const auto q = prime_param(p, "q");
    Series lieq = lie_S_series(PrimeSet({q}), N);
    Series degreewise = series_of(N, [&](int n) {
        SymFunc f(n);
        for (std::int64_t m = 1; n % m == 0; m *= q) f += pleth_p(static_cast<int>(m), lie(n / static_cast<int>(m)));
        return f;
    });
    return checks({plain("Lie^(q)_n degreewise", lieq, degreewise),
                   plain("Lie^(q) = sum Lie[p_(q^r)]", lieq, pleth(power_chain(static_cast<int>(q), 1, N), lie_series(N)))});
}

Outcome lieq_transport(const ParamMap& p, int N) {
    const auto q = static_cast<int>(prime_param(p, "q"));
    Series lieq = lie_S_series(PrimeSet({q}), N);
    return checks({plain("Lie = (p_1 - p_q)[Lie^(q)]", lie_series(N), pleth(one_minus_pq(q, -1, N), lieq)),
                   plain("Lie = Lie^(q) - Lie^(q)[p_q]", lie_series(N), lieq - pleth_p(q, lieq))});
}

Outcome lieq_inverse(const ParamMap& p, int N) {
    const auto q = static_cast<int>(prime_param(p, "q"));
    Series lieq = lie_S_series(PrimeSet({q}), N);
    return checks({plain("(Lie^(q))^<-1>", pleth_inverse(lieq), pleth(alternating_basis(N, true), one_minus_pq(q, -1, N)))});
}

Outcome powk_recurrence(const ParamMap& p, int N) {
    const auto k = static_cast<int>(int_param_at_least(p, "k", 2));
    IntSet T = IntSet::powers_of(k);
    Series F = family_series(PsiSpec::set_t(T), N);
    Series rec = series_of(N, [&](int n) {
        SymFunc f = lie(n);
        if (n % k == 0) f += pleth_p(k, f_T(n / k, T));
        return f;
    });
    return checks({plain("f_n = Lie_n + f_(n/k)[p_k]", F, rec),
                   plain("H[F]", H_of(F), product_series([&](int n) { return T.contains(n); }, -1, -1, N))});
}

Outcome onek(const ParamMap& p, int N) {
    const auto k = static_cast<int>(int_param_at_least(p, "k", 2));
    IntSet T = IntSet::explicit_set({1, k});
    Series F = family_series(PsiSpec::set_t(T), N);
    Series cases = series_of(N, [&](int n) {
        SymFunc f = lie(n);
        if (n % k == 0) f += pleth_p(k, lie(n / k));
        return f;
    });
    std::vector<Check> cs{plain("f_n cases", F, cases)};
    std::vector<ProductFactor> fac{{1, -1, -1}};
    if (k <= N) fac.push_back({k, -1, -1});
    cs.push_back(plain("H[F]", H_of(F), product_series(fac, N)));
    if (is_prime(k)) cs.push_back(plain("f_n = l_n^(k)", F, series_of(N, [&](int n) { return foulkes(n, foulkes_index(n, k)); })));
    return checks(std::move(cs));
}

Outcome onek_ext(const ParamMap& p, int N) {
    const auto k = static_cast<int>(int_param_at_least(p, "k", 2));
    Series F = family_series(PsiSpec::set_t(IntSet::explicit_set({1, k})), N);
    std::vector<ProductFactor> a{{1, -1, -1}}, b{{2, 1, 1}};
    if (k <= N) a.push_back({k, k % 2 == 0 ? 1 : -1, -1});
    if (2 * k <= N) b.push_back({2 * k, 1, 1});
    return checks({plain("omega(E[F^{1,k}])", omega(E_of(F)), product_series(a, N) * product_series(b, N))});
}

Outcome lek(const ParamMap& p, int N) {
    const auto k = static_cast<int>(int_param_at_least(p, "k", 2));
    IntSet T = IntSet::at_most(k);
    Series F = family_series(PsiSpec::set_t(T), N);
    Series decomposed = series_of(N, [&](int n) { return lie_plethysm_sum(n, [&](int m) { return m <= k; }); });
    Series lhs(N), rhs(N);
    for (int n = 1; n <= N; ++n) {
        const auto divs = divisors(n);
        const std::int64_t gpd = divs.size() > 1 ? divs[divs.size() - 2] : 1;
        if (n <= k) {
            lhs.set_component(n, F[n]);
            rhs.set_component(n, conj(n));
        } else if (gpd <= k) {
            // covers primes n > k, where Conj_n - p_n = Lie_n
            lhs.set_component(n, F[n]);
            rhs.set_component(n, conj(n) - p_of(Partition{n}));
            if (is_prime(n) && !(F[n] == lie(n))) rhs.set_component(n, lie(n));
        }
    }
    return checks({plain("f_n = sum_{m<=k} Lie_{n/m}[p_m]", F, decomposed), plain("f_n special cases", lhs, rhs),
                   plain("H[F]", H_of(F), product_series([&](int n) { return n <= k; }, -1, -1, N))});
}

Outcome divk(const ParamMap& p, int N) {
    const auto k = int_param_at_least(p, "k", 2);
    IntSet T = IntSet::divisors_of(k);
    Series F = family_series(PsiSpec::set_t(T), N);
    Series dec = series_of(N, [&](int n) { return lie_plethysm_sum(n, [&](int m) { return k % m == 0; }); });
    Series fk = series_of(N, [&](int n) { return foulkes(n, foulkes_index(n, k)); });
    return checks({plain("f_n = sum_{m|(k,n)} Lie_{n/m}[p_m]", F, dec), plain("f_n = l_n^(k)", F, fk),
                   plain("H[F]", H_of(F), product_series([&](int n) { return k % n == 0; }, -1, -1, N))});
}

Outcome regdecomp(const ParamMap&, int N) {
    Series ones_series = series_of(N, [](int n) { return p_of(ones(n)); });
    Series by_foulkes = series_of(N, [](int n) {
        SymFunc f(n);
        for (int k = 1; k <= n; ++k) f += foulkes(n, k);
        return f;
    });
    Series by_lie = series_of(N, [](int n) {
        SymFunc f(n);
        for (auto d : divisors(n)) f += scale(Rational(d), pleth_p(n / static_cast<int>(d), lie(static_cast<int>(d))));
        return f;
    });
    return checks({plain("sum_k l_n^(k)", by_foulkes, ones_series), plain("sum_d d Lie_d[p_(n/d)]", by_lie, ones_series)});
}

Outcome mod1k(const ParamMap& p, int N) {
    const auto k = int_param_at_least(p, "k", 2);
    IntSet T = IntSet::one_mod(k);
    Series F = family_series(PsiSpec::set_t(T), N);
    Series dec = series_of(N, [&](int n) { return lie_plethysm_sum(n, [&](int m) { return m % k == 1 % k; }); });
    return checks({plain("f_n = sum_{m = 1 mod k} Lie_{n/m}[p_m]", F, dec),
                   plain("H[F]", H_of(F), product_series([&](int n) { return T.contains(n); }, -1, -1, N))});
}

Outcome oddlie(const ParamMap&, int N) {
    Series odd_lie = lie_S_series(PrimeSet({2}, true), N);
    Series p_odd = power_sum_series(N, [](int n) { return n % 2 == 1; }, [](int) { return Rational(1); });
    Series dec = series_of(N, [](int n) { return lie_plethysm_sum(n, [](int m) { return m % 2 == 1; }); });
    return checks({plain("p^odd[Lie]", pleth(p_odd, lie_series(N)), odd_lie), plain("degreewise", dec, odd_lie)});
}

Outcome conj_via_lieq(const ParamMap& p, int N) {
    const auto q = static_cast<int>(int_param_at_least(p, "q", 2));
    Series outer = power_sum_series(N, [&](int n) { return n % q != 0; }, [](int) { return Rational(1); });
    Series conj = conj_series(N);
    std::vector<Check> cs;
    if (is_prime(q)) cs.push_back(plain("Conj = sum_{q!|n} p_n[Lie^(q)]", conj, pleth(outer, lie_S_series(PrimeSet({q}), N))));
    Series chain = pleth(power_chain(q, 1, N), lie_series(N));
    cs.push_back(plain("Conj = sum_{q!|n} p_n[sum Lie[p_(q^k)]]", conj, pleth(outer, chain)));
    return checks(std::move(cs));
}

Outcome inverse_pair(const std::string& label, const Series& f, const Series& g, int N) {
    Series p1 = p1_series(N);
    return checks({plain(label + ": inverse", pleth_inverse(f), g), plain(label + ": f[g]", pleth(f, g), p1),
                   plain(label + ": g[f]", pleth(g, f), p1)});
}

Outcome pq(const ParamMap& p, int N) {
    const auto q = static_cast<int>(int_param_at_least(p, "q", 2));
    return inverse_pair("p_1 - p_q", one_minus_pq(q, -1, N), power_chain(q, 1, N), N);
}

Outcome pq_alt(const ParamMap& p, int N) {
    const auto q = static_cast<int>(int_param_at_least(p, "q", 2));
    return inverse_pair("p_1 + p_q", one_minus_pq(q, 1, N), power_chain(q, -1, N), N);
}

Outcome hquot(const ParamMap& p, int N) {
    const auto q = static_cast<int>(int_param_at_least(p, "q", 2));
    Series H = H_series(N);
    Series Hq = pleth(H, Series::homogeneous(N, p_of(Partition{q})));
    return checks({plain("H[p_1 - p_q] = H / H[p_q]", pleth(H, one_minus_pq(q, -1, N)), H * reciprocal(Hq))});
}

Outcome he(const ParamMap&, int N) {
    return checks({plain("H[p_1 - p_2] = E", pleth(H_series(N), one_minus_pq(2, -1, N)), E_series(N))});
}

Outcome hf_eg(const ParamMap& p, int N) {
    Series F = Family::parse(p.at("family")).series(N);
    Series G = pleth(power_chain(2, 1, N), F);
    return checks({plain("H[F] = E[G]", H_of(F), E_of(G)), plain("E-pm[F] = H-pm[G]", E_pm_of(F), H_pm_of(G)),
                   plain("F = G - G[p_2]", F, G - pleth_p(2, G))});
}

Outcome psibar(const ParamMap& p, int N) {
    PsiSpec psi = PsiSpec::parse(p.at("psi"));
    const auto q = static_cast<int>(int_param_at_least(p, "q", 2));
    const int sign = sign_param(p, "sign");
    std::map<std::int64_t, std::int64_t> table;
    for (int d = 1; d <= N; ++d) table[d] = psi(d) + (d % q == 0 ? sign * q * psi(d / q) : 0);
    Series F = pleth(one_minus_pq(q, sign, N), family_series(psi, N));
    return checks({plain("(p_1 +- p_q)[G] from psi-bar", F, family_series(PsiSpec::custom(table), N))});
}

std::function<Rational(int)> g_function(const std::string& name) {
    if (name == "one") return [](int) { return Rational(1); };
    if (name == "id") return [](int n) { return Rational(n); };
    throw InvalidArgument("parameter g must be 'one' or 'id'");
}

Outcome gmult(const ParamMap& p, int N, bool odd_only) {
    auto g = g_function(p.at("g"));
    auto keep = [odd_only](int n) { return !odd_only || n % 2 == 1; };
    Series a = power_sum_series(N, keep, g);
    Series b = power_sum_series(N, keep, [&](int n) -> Rational { return g(n) * moebius(n); });
    return inverse_pair(odd_only ? "odd g-multiplicative" : "g-multiplicative", a, b, N);
}

Outcome geom_inv(const ParamMap&, int N) {
    Series a(N), b(N);
    for (int n = 1; n <= N; ++n) {
        a.set_component(n, SymFunc::p(ones(n), n % 2 ? 1 : -1));
        b.set_component(n, p_of(ones(n)));
    }
    return inverse_pair("p_1/(1+p_1)", a, b, N);
}

Outcome cadogan_inv(const ParamMap&, int N) {
    return inverse_pair("H - 1", without_constant(H_series(N)), alt_omega(lie_series(N)), N);
}

Outcome lie2_alt_inv(const ParamMap&, int N) {
    return inverse_pair("E - 1", without_constant(E_series(N)), alt_omega(lie_S_series(PrimeSet({2}), N)), N);
}

Outcome lie_inv(const ParamMap&, int N) {
    Series target = alternating_basis(N, true);
    Outcome o = inverse_pair("Lie", lie_series(N), target, N);
    Series H = H_series(N);
    o.checks.push_back(plain("(H-1)/H", without_constant(H) * reciprocal(H), target));
    return o;
}

Outcome lie2_inv(const ParamMap&, int N) {
    Series target = alternating_basis(N, false);
    Series lie2 = lie_S_series(PrimeSet({2}), N);
    Outcome o = inverse_pair("Lie^(2)", lie2, target, N);
    Series E = E_series(N);
    o.checks.push_back(plain("(E-1)/E", without_constant(E) * reciprocal(E), target));
    o.checks.push_back(plain("omega(Lie^<-1>) = (Lie^(2))^<-1>", omega(pleth_inverse(lie_series(N))), pleth_inverse(lie2)));
    return o;
}

void positivity_notes(const Series& s, const std::string& name, std::vector<std::string>& notes,
                      const std::function<int(int)>& sign_at) {
    for (int d = 1; d <= s.max_degree(); ++d) {
        if (s[d].is_zero()) continue;
        auto r = is_schur_positive(Rational(sign_at(d)) * s[d]);
        notes.push_back(name + " degree " + std::to_string(d) + (r.positive ? ": Schur positive" : ": not Schur positive"));
    }
}

Outcome mod1k_beta(const ParamMap& p, int N) {
    const auto k = static_cast<int>(int_param_at_least(p, "k", 1));
    auto keep = [k](int n) { return n % k == 1 % k; };
    Series h_sum(N), e_sum(N);
    for (int n = 1; n <= N; ++n)
        if (keep(n)) {
            h_sum.set_component(n, h_of(n));
            e_sum.set_component(n, e_of(n));
        }
    Series beta = pleth_inverse(h_sum);
    Outcome o = inverse_pair("sum_{n = 1 mod k} h_n", h_sum, beta, N);
    o.checks.push_back(plain("support in degrees 1 mod k", beta, restrict_degrees(beta, keep)));
    if (k % 2 == 0) o.checks.push_back(plain("omega transport", pleth_inverse(e_sum), omega(beta)));
    positivity_notes(beta, "beta", o.notes, [k](int d) { return ((d - 1) / k) % 2 ? -1 : 1; });
    return o;
}

Outcome jordan_eta(const ParamMap&, int N) {
    Series x(N);
    for (int m = 1; 2 * m - 1 <= N; ++m) x.set_component(2 * m - 1, (m % 2 ? Rational(1) : Rational(-1)) * h_of(2 * m - 1));
    Series eta = pleth_inverse(x);
    Outcome o = inverse_pair("sum (-1)^(m-1) d/dp_1 h_(2m)", x, eta, N);
    o.checks.push_back(plain("odd support", eta, restrict_degrees(eta, [](int n) { return n % 2 == 1; })));
    o.checks.push_back(plain("omega transport", pleth_inverse(omega(x)), omega(eta)));
    positivity_notes(eta, "eta", o.notes, [](int) { return 1; });
    return o;
}

// ----- generating functions graded by length -----

std::vector<GradedFactor> meta_factors(const PsiSpec& psi, int N, int sign, bool negate, bool reflect) {
    std::vector<GradedFactor> out;
    for (int m = 1; m <= N; ++m) {
        VPoly e = f_tilde(m, psi);
        if (reflect) e = poly_reflect(e);
        if (negate)
            for (auto& c : e) c = -c;
        out.push_back({m, sign, poly_trim(e)});
    }
    return out;
}

std::vector<Series> signed_by_length(std::vector<Series> v) {
    for (std::size_t r = 1; r < v.size(); r += 2) v[r] *= Rational(-1);
    return v;
}

Outcome meta(const ParamMap& p, int N, const std::string& which) {
    PsiSpec psi = PsiSpec::parse(p.at("psi"));
    Series F = family_series(psi, N);
    std::vector<Check> cs;
    if (which == "sym") {
        cs.push_back(graded("H(v)[F]", h_powers(F), graded_product_series(meta_factors(psi, N, -1, true, false), N)));
    } else if (which == "ext") {
        cs.push_back(graded("E(v)[F]", e_powers(F), graded_product_series(meta_factors(psi, N, -1, false, true), N)));
    } else if (which == "altsym") {
        auto rhs = graded_product_series(meta_factors(psi, N, 1, false, false), N);
        cs.push_back(graded("H(v)[alt omega(F)]", h_powers(alt_omega(F)), rhs));
        auto ep = e_powers(F);
        std::vector<Series> lhs;
        for (std::size_t r = 0; r < ep.size(); ++r) {
            Series s(N, ep[r].constant());
            for (int n = 1; n <= N; ++n)
                s.set_component(n, ((n - static_cast<int>(r)) % 2 ? Rational(-1) : Rational(1)) * omega(ep[r][n]));
            lhs.push_back(std::move(s));
        }
        cs.push_back(graded("sum (-1)^(|l|-len) v^len omega(E_l[F])", lhs, rhs));
    } else if (which == "altext") {
        cs.push_back(graded("E(v)[alt omega(F)]", e_powers(alt_omega(F)),
                            graded_product_series(meta_factors(psi, N, 1, true, true), N)));
    } else {
        cs.push_back(graded("E-pm(v)[F]", signed_by_length(e_powers(F)),
                            graded_product_series(meta_factors(psi, N, -1, false, false), N)));
        cs.push_back(graded("H-pm(v)[F]", signed_by_length(h_powers(F)),
                            graded_product_series(meta_factors(psi, N, -1, true, true), N)));
    }
    return checks(std::move(cs));
}

// ----- checks that are not series identities -----

const std::map<std::int64_t, std::vector<int>>& lifting_exceptions() {
    static const std::map<std::int64_t, std::vector<int>> table{{3, {3, 6, 9, 10, 18, 27}}, {5, {5, 6, 10, 25, 26}}};
    return table;
}

constexpr int kLiftingListedRange = 32;

Outcome lifting(const ParamMap& p, int) {
    const auto q = prime_param(p, "q");
    const auto n_max = static_cast<int>(int_param_at_least(p, "n_max", 2));
    auto it = lifting_exceptions().find(q);
    if (it == lifting_exceptions().end()) throw InvalidArgument("lifting exceptions are recorded only for q = 3 and q = 5");
    if (n_max > kLiftingListedRange) throw InvalidArgument("lifting exceptions are recorded only up to n = 32");
    Outcome o;
    auto report = lifting_check(static_cast<int>(q), n_max, ScanOptions{kLiftingListedRange, 1});
    for (const auto& v : report.verdicts) {
        for (const auto& [lam, c] : v.witnesses) o.witnesses.push_back({v.n, lam, c});
        const bool expected_negative = std::count(it->second.begin(), it->second.end(), v.n) > 0;
        if (!o.direct && expected_negative == v.positive) {
            Mismatch m;
            m.check = "lifting exceptions";
            m.degree = v.n;
            m.detail = std::string("expected ") + (expected_negative ? "negative" : "positive") + ", found " +
                       (v.positive ? "positive" : "negative");
            o.direct = m;
        }
    }
    return o;
}

Outcome conj_hooks(const ParamMap& p, int) {
    const auto n_max = static_cast<int>(int_param_at_least(p, "n_max", 2));
    Outcome o;
    for (int n = 2; n <= n_max && !o.direct; ++n) {
        auto r = hook_content_check(n, std::max(n_max, kDefaultBudget));
        if (r.pass) continue;
        Mismatch m;
        m.check = "Conj_n hook content";
        m.degree = n;
        std::string absent;
        for (const auto& lam : r.actual_absent) absent += lam.to_string() + " ";
        m.detail = "hooks absent: " + absent;
        o.direct = m;
    }
    return o;
}

Outcome foulkes_syt(const ParamMap& p, int) {
    const auto n_max = static_cast<int>(int_param_at_least(p, "n_max", 1));
    if (n_max > kDefaultTableauBound) throw BudgetExceeded("tableau oracle is limited to n <= " + std::to_string(kDefaultTableauBound));
    Outcome o;
    for (int n = 1; n <= n_max && !o.direct; ++n) {
        std::vector<std::map<int, std::uint64_t>> dists;
        for (const auto& lam : partitions_cached(n)) dists.push_back(syt_maj_distribution(lam));
        for (int r = 1; r <= n && !o.direct; ++r) {
            auto s = to_schur(foulkes(n, r));
            Mismatch m;
            const auto& ps = partitions_cached(n);
            for (std::size_t i = 0; i < ps.size(); ++i) {
                auto it = dists[i].find(r % n);
                Rational expected = it == dists[i].end() ? Rational(0) : Rational(it->second);
                if (s.coefficient(ps[i]) != expected) m.differences.push_back({ps[i], s.coefficient(ps[i]), expected});
            }
            if (m.differences.empty()) continue;
            m.check = "Schur coefficients of l_n^(" + std::to_string(r) + ") vs tableau counts";
            m.degree = n;
            o.direct = m;
        }
    }
    return o;
}

Outcome lieS_foulkes(const ParamMap& p, int N) {
    PrimeSet S = parse_prime_list(p.at("S"));
    Series fk = series_of(N, [&](int n) { return foulkes(n, static_cast<int>(factor_S(n, S).q_part)); });
    return checks({plain("Lie^S_n = l_n^(Q_n)", lie_S_series(S, N), fk)});
}

Outcome ftilde_S(const ParamMap& p, int N) {
    PrimeSet S = parse_prime_list(p.at("S"));
    PsiSpec psi = PsiSpec::prime_set(S);
    const bool two = S.contains(2);
    Outcome o;
    for (int n = 1; n <= N && !o.direct; ++n) {
        Rational at_one = in_P(S, n) ? 1 : 0;
        Rational at_minus = 0;
        if (!two) {
            if (in_P(S, n))
                at_minus = -1;
            else if (n % 2 == 0 && in_P(S, n / 2))
                at_minus = 1;
        } else if (n % 2 == 1 && in_P(S, n)) {
            at_minus = -1;
        }
        Rational got_one = f_tilde_eval(n, psi, 1), got_minus = f_tilde_eval(n, psi, -1);
        if (got_one == at_one && got_minus == at_minus) continue;
        Mismatch m;
        m.check = "f-tilde values";
        m.degree = n;
        m.detail = "f(1) = " + got_one.get_str() + " (expected " + at_one.get_str() + "), f(-1) = " + got_minus.get_str() +
                   " (expected " + at_minus.get_str() + ")";
        o.direct = m;
    }
    return o;
}

Outcome ftilde_T(const ParamMap& p, int N) {
    IntSet T = IntSet::parse(p.at("T"));
    PsiSpec psi = PsiSpec::set_t(T);
    Outcome o;
    for (int n = 1; n <= N && !o.direct; ++n) {
        Rational expected = T.contains(n) ? 1 : 0;
        Rational got = f_tilde_eval(n, psi, 1);
        Rational rel = -f_tilde_eval(n, psi, 1);
        if (n % 2 == 0) rel += f_tilde_eval(n / 2, psi, 1);
        if (got == expected && f_tilde_eval(n, psi, -1) == rel) continue;
        Mismatch m;
        m.check = "f-tilde values";
        m.degree = n;
        m.detail = "f(1) = " + got.get_str() + " (expected " + expected.get_str() + ")";
        o.direct = m;
    }
    return o;
}

Outcome oneprime_selfconj(const ParamMap& p, int N) {
    const auto q = prime_param(p, "q");
    if (q == 2) throw InvalidArgument("self-conjugacy is stated for odd q");
    Series s = product_series([&](int n) { return IntSet::powers_of(q).contains(n); }, -1, -1, N);
    return checks({plain("omega-invariance", omega(s), s)});
}

Outcome simple_product(const std::string& label, const std::function<Series(int)>& lhs, const std::function<Series(int)>& rhs,
                       int N) {
    return checks({plain(label, lhs(N), rhs(N))});
}

std::vector<Entry> build_catalog() {
    const ParamSpec S_param{"S", "set of primes, comma separated (empty for none)", "2"};
    const ParamSpec T_param{"T", "integer set: list, all, odd, le(k), div(k), mod1(k), pow(k)", "1,3"};
    const ParamSpec q_prime{"q", "prime", "3"};
    const ParamSpec q_int{"q", "integer >= 2", "3"};
    const ParamSpec k_param{"k", "integer >= 2", "3"};
    const ParamSpec psi_param{"psi", "mu, phi, primeset:S, primesetbar:S, setT:T or foulkes:r", "mu"};
    const ParamSpec g_param{"g", "multiplicative function: one or id", "one"};

    std::vector<Entry> e{
        {{"thrall", {}, 10, "H[Lie] = (1 - p_1)^-1"},
         [](const ParamMap&, int N) {
             return simple_product("H[Lie]", [](int n) { return H_of(lie_series(n)); },
                                   [](int n) { return product_series({{1, -1, -1}}, n); }, N);
         }},
        {{"cadogan", {}, 10, "H[sum (-1)^(n-1) omega(Lie_n)] = 1 + p_1"},
         [](const ParamMap&, int N) {
             return simple_product("H[alt omega(Lie)]", [](int n) { return H_of(alt_omega(lie_series(n))); },
                                   [](int n) { return product_series({{1, 1, 1}}, n); }, N);
         }},
        {{"solomon", {}, 10, "H[Conj] = prod_n (1 - p_n)^-1"},
         [](const ParamMap&, int N) {
             return simple_product("H[Conj]", [](int n) { return H_of(conj_series(n)); },
                                   [](int n) { return product_series([](int) { return true; }, -1, -1, n); }, N);
         }},
        {{"symLS", {S_param}, 10, "H[Lie^S] = prod_{n in P(S)} (1 - p_n)^-1"}, symLS},
        {{"altsymLS", {S_param}, 10, "H[alt omega(Lie^S)] = prod_{n in P(S)} (1 + p_n)"}, altsymLS},
        {{"extLS", {S_param}, 10, "E[Lie^S] by cases on 2 in S, with the omega form when 2 is not in S"}, extLS},
        {{"altextLS", {S_param}, 10, "E[alt omega(Lie^S)] by cases on 2 in S"}, altextLS},
        {{"extLieConj", {}, 10, "omega(E[Lie]), E[Conj], sum (-1)^(|l|-len) H_l[Lie], E[alt omega(Conj)]"}, extLieConj},
        {{"dualityA", {}, 10, "(1 - p_1)^-1 = H[Lie] = E[Lie^(2)]; Lie = Lie^(2) - Lie^(2)[p_2]"}, dualityA},
        {{"dualityB", {}, 10, "prod_{n odd} (1 - p_n)^-1 = H[Lie^(2bar)] = E[Conj]"}, dualityB},
        {{"fT-sym", {T_param}, 12, "H[F^T] = prod_{n in T} (1 - p_n)^-1"}, fT_sym},
        {{"fT-decomp", {T_param}, 12, "F^T = p^T[Lie]"}, fT_decomp},
        {{"fT-ext", {T_param}, 12, "E[G^T] = prod_{n in T} (1 - p_n)^-1 = H[F^T]"}, fT_ext},
        {{"conj-decomp", {}, 10, "sum_m p_m[Lie] = Conj"}, conj_decomp},
        {{"conj-inverse", {}, 10, "Conj^<-1> = (sum (-1)^(r-1) e_r)[sum mu(n) p_n]"}, conj_inverse},
        {{"lieq-decomp", {q_prime}, 10, "Lie^(q) = sum_r Lie[p_(q^r)]"}, lieq_decomp},
        {{"lieq-transport", {q_prime}, 10, "Lie = (p_1 - p_q)[Lie^(q)] = Lie^(q) - Lie^(q)[p_q]"}, lieq_transport},
        {{"lieq-inverse", {q_prime}, 10, "(Lie^(q))^<-1> = (sum (-1)^(r-1) e_r)[p_1 - p_q]"}, lieq_inverse},
        {{"powk-recurrence", {{"k", "integer >= 2", "4"}}, 12, "f_n = Lie_n + f_(n/k)[p_k] for T = powers of k"}, powk_recurrence},
        {{"onek", {k_param}, 10, "f_n^{1,k} = Lie_n + Lie_(n/k)[p_k]; equals l_n^(k) for k prime"}, onek},
        {{"onek-ext", {k_param}, 10, "omega(E[F^{1,k}]) = (1-p_1)^-1 (1-(-1)^(k-1) p_k)^-1 (1+p_2)(1+p_2k)"}, onek_ext},
        {{"lek", {k_param}, 10, "T = {n <= k}: f_n = sum_{m <= k, m | n} Lie_{n/m}[p_m]"}, lek},
        {{"divk", {{"k", "integer >= 2", "6"}}, 10, "T = {n | k}: f_n = l_n^(k)"}, divk},
        {{"regdecomp", {}, 10, "p_1^n = sum_k l_n^(k) = sum_{d|n} d Lie_d[p_(n/d)]"}, regdecomp},
        {{"mod1k", {k_param}, 10, "T = {n = 1 mod k}: f_n = sum Lie_{n/m}[p_m]"}, mod1k},
        {{"oddlie", {}, 10, "sum_{m odd, m|n} Lie_{n/m}[p_m] = Lie_n^(2bar)"}, oddlie},
        {{"conj-via-lieq", {q_int}, 10, "Conj = sum_{q !| n} p_n[Lie^(q)]"}, conj_via_lieq},
        {{"pq", {q_int}, 10, "p_1 - p_q and sum_k p_(q^k) are plethystic inverses"}, pq},
        {{"pq-alt", {q_int}, 10, "p_1 + p_q and sum_k (-1)^k p_(q^k) are plethystic inverses"}, pq_alt},
        {{"Hquot", {q_int}, 10, "H[p_1 - p_q] = H / H[p_q]"}, hquot},
        {{"HE", {}, 10, "H[p_1 - p_2] = E"}, he},
        {{"HF-EG", {{"family", "family descriptor", "lie"}}, 10, "H[F] = E[G] with G = sum_k F[p_(2^k)]"}, hf_eg},
        {{"psibar", {psi_param, q_int, {"sign", "+ or -", "-"}}, 10, "(p_1 +- p_q)[G] is generated by psi(d) +- q psi(d/q)"},
         psibar},
        {{"gmult", {g_param}, 10, "sum g(n) p_n and sum g(n) mu(n) p_n are plethystic inverses"},
         [](const ParamMap& p, int N) { return gmult(p, N, false); }},
        {{"odd-gmult", {g_param}, 10, "the odd-restricted g-multiplicative pair"},
         [](const ParamMap& p, int N) { return gmult(p, N, true); }},
        {{"geom-inv", {}, 10, "p_1/(1+p_1) and p_1/(1-p_1) are plethystic inverses"}, geom_inv},
        {{"cadogan-inv", {}, 10, "sum (-1)^(i-1) omega(Lie_i) and H - 1 are plethystic inverses"}, cadogan_inv},
        {{"lie2-alt-inv", {}, 10, "sum (-1)^(i-1) omega(Lie^(2)_i) and E - 1 are plethystic inverses"}, lie2_alt_inv},
        {{"lie-inv", {}, 10, "Lie and (H-1)/H = sum (-1)^(n-1) e_n are plethystic inverses"}, lie_inv},
        {{"lie2-inv", {}, 10, "Lie^(2) and (E-1)/E = sum (-1)^(n-1) h_n are plethystic inverses"}, lie2_inv},
        {{"mod1k-beta", {{"k", "integer >= 1", "2"}}, 10, "inverse of sum_{n = 1 mod k} h_n; omega transport for even k"},
         mod1k_beta},
        {{"jordan-eta", {}, 10, "inverse of sum (-1)^(m-1) h_(2m-1); omega transport on odd degrees"}, jordan_eta},
        {{"meta-sym", {psi_param}, 8, "H(v)[F] = prod (1 - p_m)^(-f~_m(v))"},
         [](const ParamMap& p, int N) { return meta(p, N, "sym"); }},
        {{"meta-ext", {psi_param}, 8, "E(v)[F] = prod (1 - p_m)^(f~_m(-v))"},
         [](const ParamMap& p, int N) { return meta(p, N, "ext"); }},
        {{"meta-altsym", {psi_param}, 8, "H(v)[alt omega(F)] = prod (1 + p_m)^(f~_m(v))"},
         [](const ParamMap& p, int N) { return meta(p, N, "altsym"); }},
        {{"meta-altext", {psi_param}, 8, "E(v)[alt omega(F)] = prod (1 + p_m)^(-f~_m(-v))"},
         [](const ParamMap& p, int N) { return meta(p, N, "altext"); }},
        {{"meta-equiv", {psi_param}, 8, "E-pm(v)[F] = prod (1 - p_m)^(f~_m(v)); H-pm(v)[F] = prod (1 - p_m)^(-f~_m(-v))"},
         [](const ParamMap& p, int N) { return meta(p, N, "equiv"); }},
        {{"lifting", {{"q", "3 or 5", "3"}, {"n_max", "largest n, at most 32", "18"}}, 18,
          "p_1 Lie^(q)_(n-1) - Lie^(q)_n is Schur positive except at the recorded n"},
         lifting},
        {{"conj-hooks", {{"n_max", "largest n", "12"}}, 12, "Conj_n contains every hook except (n-1,1), (2,1^(n-2)) for odd n, (1^n) for even n"},
         conj_hooks},
        {{"foulkes-syt", {{"n_max", "largest n, at most 10", "8"}}, 8, "<s_l, l_n^(r)> = #SYT of shape l with maj = r mod n"},
         foulkes_syt},
        {{"lieS-foulkes", {S_param}, 20, "Lie^S_n = l_n^(Q_n)"}, lieS_foulkes},
        {{"ftilde-S", {S_param}, 60, "f~^S_n(1) = [n in P(S)] and the f~^S_n(-1) table"}, ftilde_S},
        {{"ftilde-T", {T_param}, 60, "f~^T_n(1) = [n in T]"}, ftilde_T},
        {{"oneprime-selfconj", {{"q", "odd prime", "3"}}, 10, "sum over partitions into powers of q is omega-invariant"},
         oneprime_selfconj},
    };
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
    return e;
}

const std::vector<Entry>& catalog() {
    static const std::vector<Entry> entries = build_catalog();
    return entries;
}

const Entry& find_entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.info.id == id) return e;
    throw UnknownName("unknown identity: " + id);
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : catalog()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const IdentityInfo& identity_info(const std::string& id) { return find_entry(id).info; }

VerifyReport verify(const std::string& id, const ParamMap& params, int N, const VerifyOptions& options) {
    const auto start = Clock::now();
    const Entry& entry = find_entry(id);
    VerifyReport report;
    report.id = id;
    for (const auto& [name, value] : params) {
        bool known = std::any_of(entry.info.params.begin(), entry.info.params.end(),
                                 [&](const ParamSpec& s) { return s.name == name; });
        if (!known) throw InvalidArgument("identity " + id + " has no parameter '" + name + "'");
    }
    for (const auto& spec : entry.info.params) {
        auto it = params.find(spec.name);
        report.params[spec.name] = it == params.end() ? spec.default_value : it->second;
    }
    report.N = N > 0 ? N : entry.info.default_N;

    Outcome o = entry.build(report.params, report.N);
    if (options.corrupt) {
        if (o.checks.empty())
            o.notes.push_back("corruption ignored: identity has no series comparison");
        else
            corrupt(o.checks.front(), *options.corrupt);
    }
    report.first_mismatch = o.direct;
    for (const auto& c : o.checks) {
        if (report.first_mismatch) break;
        report.first_mismatch = compare(c, report.N);
    }
    report.pass = !report.first_mismatch.has_value();
    report.witnesses = std::move(o.witnesses);
    report.notes = std::move(o.notes);
    report.elapsed_ms = ms_since(start);
    return report;
}

std::vector<VerifyReport> verify_all(int jobs) {
    const auto& cat = identity_catalog();
    std::vector<VerifyReport> out(cat.size());
    parallel_for(jobs, static_cast<int>(cat.size()), [&](int i) { out[static_cast<std::size_t>(i)] = verify(cat[static_cast<std::size_t>(i)].id); });
    return out;
}

// ----- positivity -----

bool PositivityReport::all_positive() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const PositivityVerdict& v) { return v.positive; });
}

std::vector<int> PositivityReport::negatives() const {
    std::vector<int> out;
    for (const auto& v : verdicts)
        if (!v.positive) out.push_back(v.n);
    return out;
}

namespace {

// Σ_{λ ⊢ n, every part kept} p_λ
SymFunc restricted_power_sum(int n, const std::function<bool(int)>& keep) {
    SymFunc f(n);
    for (const auto& lam : partitions_of(n, keep)) f.add_term(lam, 1);
    return f;
}

std::string require_param(const ParamMap& p, const std::string& name, const std::string& family) {
    auto it = p.find(name);
    if (it == p.end()) throw InvalidArgument("scan family " + family + " needs parameter " + name);
    return it->second;
}

}  // namespace

std::vector<std::string> scan_family_names() {
    return {"coprime", "divk-sum", "lek", "odd-coprime", "onek", "powk", "product", "product-lek", "product-powk", "spos2", "stanley", "symLS-sum"};
}

SymFunc scan_component(const std::string& family, const ParamMap& params, int n) {
    if (n < 1) throw InvalidArgument("scan degrees start at 1");
    auto k_of = [&] {
        ParamMap p{{"k", require_param(params, "k", family)}};
        return static_cast<int>(int_param_at_least(p, "k", 1));
    };
    auto q_of = [&] {
        ParamMap p{{"q", require_param(params, "q", family)}};
        return prime_param(p, "q");
    };
    auto S_of = [&] { return parse_prime_list(require_param(params, "S", family)); };

    if (family == "powk") return f_T(n, IntSet::powers_of(k_of()));
    if (family == "onek") return f_T(n, IntSet::explicit_set({1, k_of()}));
    if (family == "lek") return f_T(n, IntSet::at_most(k_of()));
    if (family == "product-powk") {
        IntSet T = IntSet::powers_of(k_of());
        return restricted_power_sum(n, [&](int m) { return T.contains(m); });
    }
    if (family == "product-lek") {
        const int k = k_of();
        return restricted_power_sum(n, [k](int m) { return m <= k; });
    }
    if (family == "stanley") {
        const int k = k_of();
        return restricted_power_sum(n, [k](int m) { return m % k == 1 % k; });
    }
    if (family == "divk-sum") {
        const int k = k_of();
        return restricted_power_sum(n, [k](int m) { return k % m == 0; });
    }
    if (family == "product") {
        IntSet T = IntSet::parse(require_param(params, "T", family));
        return restricted_power_sum(n, [&](int m) { return T.contains(m); });
    }
    if (family == "symLS-sum") {
        PrimeSet S = S_of();
        return restricted_power_sum(n, [&](int m) { return in_P(S, m); });
    }
    if (family == "spos2") {
        PrimeSet S = S_of();
        if (S.contains(2)) return restricted_power_sum(n, [&](int m) { return m % 2 == 1 && in_P(S, m); });
        // odd parts in P(S), plus distinct parts 2m with m ∈ P(S)
        SymFunc f(n);
        for (const auto& lam : partitions_of(n, [&](int m) { return in_P(S, m) || (m % 2 == 0 && in_P(S, m / 2)); })) {
            bool distinct_even = true;
            for (auto [part, mult] : lam.multiplicities())
                if (part % 2 == 0 && mult > 1) distinct_even = false;
            if (distinct_even) f.add_term(lam, 1);
        }
        return f;
    }
    if (family == "coprime") {
        const auto q = q_of();
        return restricted_power_sum(n, [q](int m) { return m % q != 0; });
    }
    if (family == "odd-coprime") {
        const auto q = q_of();
        return restricted_power_sum(n, [q](int m) { return m % 2 == 1 && m % q != 0; });
    }
    return Family::parse(family).component(n);
}

PositivityReport scan_positivity(const std::string& family, const ParamMap& params, int n_min, int n_max,
                                 const ScanOptions& options) {
    if (n_min < 1 || n_max < n_min) throw InvalidArgument("scan range must satisfy 1 <= n_min <= n_max");
    if (n_max > options.budget)
        throw BudgetExceeded("n = " + std::to_string(n_max) + " exceeds the compute budget of " + std::to_string(options.budget));
    scan_component(family, params, n_min);  // validate before fanning out
    PositivityReport report;
    report.family = family;
    report.params = params;
    report.verdicts.resize(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(options.jobs, n_max - n_min + 1, [&](int i) {
        const auto start = Clock::now();
        const int n = n_min + i;
        auto r = is_schur_positive(scan_component(family, params, n));
        auto& v = report.verdicts[static_cast<std::size_t>(i)];
        v.n = n;
        v.positive = r.positive;
        v.witnesses = std::move(r.witnesses);
        v.elapsed_ms = ms_since(start);
    });
    return report;
}

SymFunc lifting_difference(int q, int n) {
    if (n < 2) throw InvalidArgument("lifting starts at n = 2");
    PrimeSet S({q});
    return p_of({1}) * lie_S(n - 1, S) - lie_S(n, S);
}

PositivityReport lifting_check(int q, int n_max, const ScanOptions& options) {
    if (q < 2 || !is_prime(q)) throw InvalidArgument("lifting requires a prime q");
    if (n_max < 2) throw InvalidArgument("lifting requires n_max >= 2");
    if (n_max > options.budget)
        throw BudgetExceeded("n = " + std::to_string(n_max) + " exceeds the compute budget of " + std::to_string(options.budget));
    PositivityReport report;
    report.family = "lifting";
    report.params = {{"q", std::to_string(q)}, {"n_max", std::to_string(n_max)}};
    report.verdicts.resize(static_cast<std::size_t>(n_max - 1));
    // largest degrees first so the expensive character tables start early
    parallel_for(options.jobs, n_max - 1, [&](int i) {
        const int n = n_max - i;
        const auto start = Clock::now();
        auto r = is_schur_positive(lifting_difference(q, n));
        auto& v = report.verdicts[static_cast<std::size_t>(n - 2)];
        v.n = n;
        v.positive = r.positive;
        v.witnesses = std::move(r.witnesses);
        v.elapsed_ms = ms_since(start);
    });
    return report;
}

HookReport hook_content_check(int n, int budget) {
    if (n < 2) throw InvalidArgument("hook check requires n >= 2");
    if (n > budget) throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the compute budget of " + std::to_string(budget));
    HookReport report;
    report.n = n;
    auto s = to_schur(conj(n), true);
    auto hook = [n](int r) {
        std::vector<int> parts{n - r};
        parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
        return Partition(parts);
    };
    std::vector<Partition> expected{hook(1)};
    if (n % 2 == 1 && n >= 3 && !(hook(n - 2) == hook(1))) expected.push_back(hook(n - 2));
    if (n % 2 == 0 && !(hook(n - 1) == hook(1))) expected.push_back(hook(n - 1));
    report.expected_absent = expected;
    report.pass = true;
    for (int r = 0; r < n; ++r) {
        Partition h = hook(r);
        Rational c = s.coefficient(h);
        report.hook_coefficients[h] = c;
        const bool should_be_absent = std::find(expected.begin(), expected.end(), h) != expected.end();
        if (sgn(c) == 0) report.actual_absent.push_back(h);
        if (should_be_absent ? sgn(c) != 0 : c < 1) report.pass = false;
    }
    return report;
}

}  // namespace symfn
