#include "symfn/symfunc.hpp"

#include <string>

#include "symfn/errors.hpp"

namespace symfn {

SymFunc::SymFunc(int degree, Terms terms) : degree_(degree) {
    for (auto& [lambda, c] : terms) add_term(lambda, c);
}

SymFunc SymFunc::p(const Partition& lambda, const Rational& c) {
    SymFunc f(lambda.size());
    f.add_term(lambda, c);
    return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
    if (degree_ == kAnyDegree) degree_ = lambda.size();
    if (lambda.size() != degree_)
        throw InvalidArgument("term " + lambda.to_string() + " does not have degree " + std::to_string(degree_));
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& g) {
    if (g.is_zero()) {
        if (degree_ == kAnyDegree) degree_ = g.degree_;
        return *this;
    }
    if (is_zero()) {
        *this = g;
        return *this;
    }
    if (degree_ != g.degree_)
        throw InvalidArgument("cannot add symmetric functions of degrees " + std::to_string(degree_) + " and " +
                              std::to_string(g.degree_));
    for (auto& [lambda, c] : g.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& g) {
    if (g.is_zero()) {
        if (degree_ == kAnyDegree) degree_ = g.degree_;
        return *this;
    }
    if (!is_zero() && degree_ != g.degree_)
        throw InvalidArgument("cannot subtract symmetric functions of degrees " + std::to_string(degree_) + " and " +
                              std::to_string(g.degree_));
    if (is_zero()) degree_ = g.degree_;
    for (auto& [lambda, c] : g.terms_) add_term(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, coeff] : terms_) coeff *= c;
    return *this;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) {
    int degree = (f.degree() == SymFunc::kAnyDegree || g.degree() == SymFunc::kAnyDegree)
                     ? SymFunc::kAnyDegree
                     : f.degree() + g.degree();
    SymFunc out(degree);
    for (auto& [a, ca] : f.terms())
        for (auto& [b, cb] : g.terms()) out.add_term(a + b, ca * cb);
    return out;
}

SymFunc add(const SymFunc& f, const SymFunc& g) { return f + g; }
SymFunc scale(const Rational& c, const SymFunc& f) { return c * f; }
SymFunc mul(const SymFunc& f, const SymFunc& g) { return f * g; }

SymFunc p_of(const Partition& lambda) { return SymFunc::p(lambda); }

namespace {

SymFunc exp_expansion(int n, bool alternating) {
    if (n < 0) throw InvalidArgument("degree must be nonnegative");
    SymFunc f(n);
    for (const auto& lambda : partitions_cached(n)) {
        Rational c(1, 1);
        c /= Rational(static_cast<unsigned long>(z_of(lambda)));
        if (alternating && lambda.even_parts() % 2) c = -c;
        f.add_term(lambda, c);
    }
    return f;
}

}  // namespace

SymFunc h_of(int n) { return exp_expansion(n, false); }
SymFunc e_of(int n) { return exp_expansion(n, true); }

SymFunc s_of(const Partition& lambda) {
    const int n = lambda.size();
    const auto& parts = partitions_cached(n);
    const auto& table = character_table(n);
    const std::size_t row = partition_index(lambda);
    SymFunc f(n);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        auto chi = table(row, j);
        if (chi == 0) continue;
        f.add_term(parts[j], ratio(static_cast<long>(chi), static_cast<unsigned long>(z_of(parts[j]))));
    }
    return f;
}

SymFunc omega(const SymFunc& f) {
    SymFunc out(f.degree());
    for (auto& [lambda, c] : f.terms()) out.add_term(lambda, lambda.even_parts() % 2 ? Rational(-c) : c);
    return out;
}

SymFunc pleth_p(int n, const SymFunc& f) {
    if (n < 1) throw InvalidArgument("p_n plethysm requires n >= 1");
    if (n == 1) return f;
    SymFunc out(f.degree() == SymFunc::kAnyDegree ? SymFunc::kAnyDegree : f.degree() * n);
    for (auto& [lambda, c] : f.terms()) out.add_term(lambda.scaled(n), c);
    return out;
}

// ----- Schur basis -----

Rational SchurExpansion::coefficient(const Partition& lambda) const {
    auto it = coefficients.find(lambda);
    return it == coefficients.end() ? Rational(0) : it->second;
}

bool SchurExpansion::is_integral() const {
    for (auto& [lambda, c] : coefficients)
        if (c.get_den() != 1) return false;
    return true;
}

SchurExpansion to_schur(const SymFunc& f, bool require_integral) {
    SchurExpansion out;
    out.degree = f.degree() == SymFunc::kAnyDegree ? 0 : f.degree();
    if (f.is_zero()) return out;
    const int n = f.degree();
    const auto& parts = partitions_cached(n);
    const auto& table = character_table(n);

    std::vector<std::pair<std::size_t, const Rational*>> cols;
    cols.reserve(f.size());
    for (auto& [mu, c] : f.terms()) cols.emplace_back(partition_index(mu), &c);

    Rational acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        acc = 0;
        for (auto& [j, c] : cols) {
            auto chi = table(i, j);
            if (chi) acc += *c * Rational(static_cast<long>(chi));
        }
        if (sgn(acc) == 0) continue;
        if (require_integral && acc.get_den() != 1)
            throw InvalidArgument("non-integral Schur coefficient at " + parts[i].to_string());
        out.coefficients.emplace(parts[i], acc);
    }
    return out;
}

SymFunc from_schur(const SchurExpansion& s) {
    SymFunc f(s.degree);
    for (auto& [lambda, c] : s.coefficients) f += c * s_of(lambda);
    return f;
}

PositivityResult is_schur_positive(const SchurExpansion& s) {
    PositivityResult r;
    for (auto& [lambda, c] : s.coefficients) {
        if (sgn(c) < 0) {
            r.positive = false;
            r.witnesses.emplace_back(lambda, c);
        }
    }
    return r;
}

PositivityResult is_schur_positive(const SymFunc& f) { return is_schur_positive(to_schur(f)); }

}  // namespace symfn
