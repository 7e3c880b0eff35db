#include "symfn/series.hpp"

#include <algorithm>
#include <string>

#include "symfn/errors.hpp"

namespace symfn {

Series::Series(int max_degree, Rational constant)
    : max_degree_(max_degree), constant_(std::move(constant)),
      components_(static_cast<std::size_t>(std::max(max_degree, 0)) + 1) {
    if (max_degree < 0) throw InvalidArgument("series truncation must be nonnegative");
    for (int d = 1; d <= max_degree; ++d) components_[static_cast<std::size_t>(d)] = SymFunc(d);
}

Series Series::from_components(int max_degree, const std::vector<SymFunc>& components, Rational constant) {
    Series s(max_degree, std::move(constant));
    for (const auto& f : components) {
        if (f.is_zero()) continue;
        if (f.degree() == 0) {
            s.constant_ += f.coefficient(Partition());
            continue;
        }
        if (f.degree() <= max_degree) s.add_to_component(f.degree(), f);
    }
    return s;
}

Series Series::homogeneous(int max_degree, const SymFunc& f) { return from_components(max_degree, {f}); }

SymFunc Series::component(int d) const {
    if (d == 0) {
        SymFunc c(0);
        c.add_term(Partition(), constant_);
        return c;
    }
    return (*this)[d];
}

const SymFunc& Series::operator[](int d) const {
    if (d < 1 || d > max_degree_)
        throw TruncationError("degree " + std::to_string(d) + " outside series truncation " +
                              std::to_string(max_degree_));
    return components_[static_cast<std::size_t>(d)];
}

void Series::set_component(int d, SymFunc f) {
    if (d < 1 || d > max_degree_) return;
    if (!f.is_zero() && f.degree() != d)
        throw InvalidArgument("component of degree " + std::to_string(f.degree()) + " stored at degree " +
                              std::to_string(d));
    if (f.is_zero()) f = SymFunc(d);
    components_[static_cast<std::size_t>(d)] = std::move(f);
}

void Series::add_to_component(int d, const SymFunc& f) {
    if (d < 1 || d > max_degree_ || f.is_zero()) return;
    components_[static_cast<std::size_t>(d)] += f;
}

bool Series::is_zero() const {
    if (sgn(constant_) != 0) return false;
    for (int d = 1; d <= max_degree_; ++d)
        if (!components_[static_cast<std::size_t>(d)].is_zero()) return false;
    return true;
}

int Series::valuation() const {
    if (sgn(constant_) != 0) return 0;
    for (int d = 1; d <= max_degree_; ++d)
        if (!components_[static_cast<std::size_t>(d)].is_zero()) return d;
    return max_degree_ + 1;
}

Series Series::truncated(int max_degree) const {
    Series s(max_degree, constant_);
    for (int d = 1; d <= std::min(max_degree, max_degree_); ++d)
        s.components_[static_cast<std::size_t>(d)] = components_[static_cast<std::size_t>(d)];
    return s;
}

Series& Series::operator+=(const Series& g) {
    if (g.max_degree_ < max_degree_) *this = truncated(g.max_degree_);
    constant_ += g.constant_;
    for (int d = 1; d <= max_degree_; ++d)
        components_[static_cast<std::size_t>(d)] += g.components_[static_cast<std::size_t>(d)];
    return *this;
}

Series& Series::operator-=(const Series& g) {
    if (g.max_degree_ < max_degree_) *this = truncated(g.max_degree_);
    constant_ -= g.constant_;
    for (int d = 1; d <= max_degree_; ++d)
        components_[static_cast<std::size_t>(d)] -= g.components_[static_cast<std::size_t>(d)];
    return *this;
}

Series& Series::operator*=(const Rational& c) {
    constant_ *= c;
    for (int d = 1; d <= max_degree_; ++d) components_[static_cast<std::size_t>(d)] *= c;
    return *this;
}

Series operator*(const Series& f, const Series& g) {
    const int N = std::min(f.max_degree_, g.max_degree_);
    Series out(N, f.constant_ * g.constant_);
    const bool fc = sgn(f.constant_) != 0, gc = sgn(g.constant_) != 0;
    for (int d = 1; d <= N; ++d) {
        SymFunc acc(d);
        if (fc) acc += f.constant_ * g.components_[static_cast<std::size_t>(d)];
        if (gc) acc += g.constant_ * f.components_[static_cast<std::size_t>(d)];
        for (int i = 1; i < d; ++i) {
            const auto& a = f.components_[static_cast<std::size_t>(i)];
            const auto& b = g.components_[static_cast<std::size_t>(d - i)];
            if (a.is_zero() || b.is_zero()) continue;
            acc += a * b;
        }
        out.components_[static_cast<std::size_t>(d)] = std::move(acc);
    }
    return out;
}

bool operator==(const Series& f, const Series& g) {
    if (f.constant_ != g.constant_) return false;
    const int N = std::min(f.max_degree_, g.max_degree_);
    for (int d = 1; d <= N; ++d)
        if (!(f.components_[static_cast<std::size_t>(d)] == g.components_[static_cast<std::size_t>(d)])) return false;
    return true;
}

Series reciprocal(const Series& f) {
    if (sgn(f.constant()) == 0) throw InvalidArgument("series with zero constant term has no reciprocal");
    const int N = f.max_degree();
    const Rational c0 = 1 / f.constant();
    Series g(N, c0);
    // f g = 1 gives g_d = -c0 Σ_{i=1..d} f_i g_{d-i}.
    for (int d = 1; d <= N; ++d) {
        SymFunc acc = f[d] * Rational(c0);
        for (int i = 1; i < d; ++i) {
            if (f[i].is_zero() || g[d - i].is_zero()) continue;
            acc += f[i] * g[d - i];
        }
        g.set_component(d, -c0 * acc);
    }
    return g;
}

Series omega(const Series& f) {
    Series out(f.max_degree(), f.constant());
    for (int d = 1; d <= f.max_degree(); ++d) out.set_component(d, omega(f[d]));
    return out;
}

Series alt_omega(const Series& f) {
    Series out(f.max_degree(), f.constant());
    for (int d = 1; d <= f.max_degree(); ++d) {
        SymFunc w = omega(f[d]);
        if (d % 2 == 0) w *= Rational(-1);
        out.set_component(d, std::move(w));
    }
    return out;
}

Series alternate_by_degree(const Series& f) {
    Series out = f;
    for (int d = 1; d <= f.max_degree(); d += 2) out.set_component(d, -f[d]);
    return out;
}

}  // namespace symfn
