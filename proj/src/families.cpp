#include "symfn/families.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "symfn/errors.hpp"

namespace symfn {

namespace {

std::int64_t parse_int(std::string_view tok, const std::string& context) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw InvalidArgument("malformed integer '" + std::string(tok) + "' in " + context);
    return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& context) {
    std::vector<std::int64_t> out;
    std::string_view rest = text;
    if (rest.empty()) return out;
    while (true) {
        auto comma = rest.find(',');
        out.push_back(parse_int(rest.substr(0, comma), context));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

// "name(k)" → k, or nullopt when text is not of that form.
std::optional<std::int64_t> call_arg(const std::string& text, const std::string& name) {
    if (text.size() < name.size() + 3 || text.compare(0, name.size() + 1, name + "(") != 0 || text.back() != ')')
        return std::nullopt;
    return parse_int(std::string_view(text).substr(name.size() + 1, text.size() - name.size() - 2), text);
}

void require_positive(std::int64_t k, const std::string& what) {
    if (k < 1) throw InvalidArgument(what + " requires a positive parameter");
}

}  // namespace

PrimeSet parse_prime_list(const std::string& text) {
    if (text.empty() || text == "none" || text == "{}") return PrimeSet();
    return PrimeSet(parse_int_list(text, "prime set"));
}

// ----- IntSet -----

IntSet IntSet::explicit_set(std::vector<std::int64_t> members) {
    IntSet s;
    s.kind_ = Kind::Explicit;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto m : members) require_positive(m, "integer set");
    if (members.empty()) throw InvalidArgument("integer set must be nonempty");
    s.members_ = std::move(members);
    return s;
}

IntSet IntSet::all() {
    IntSet s;
    s.kind_ = Kind::All;
    return s;
}

IntSet IntSet::at_most(std::int64_t k) {
    require_positive(k, "le()");
    IntSet s;
    s.kind_ = Kind::AtMost;
    s.k_ = k;
    return s;
}

IntSet IntSet::divisors_of(std::int64_t k) {
    require_positive(k, "div()");
    IntSet s;
    s.kind_ = Kind::DivisorsOf;
    s.k_ = k;
    return s;
}

IntSet IntSet::one_mod(std::int64_t k) {
    require_positive(k, "mod1()");
    IntSet s;
    s.kind_ = Kind::OneModK;
    s.k_ = k;
    return s;
}

IntSet IntSet::powers_of(std::int64_t k) {
    if (k < 2) throw InvalidArgument("pow() requires a base of at least 2");
    IntSet s;
    s.kind_ = Kind::PowersOf;
    s.k_ = k;
    return s;
}

IntSet IntSet::prime_support(PrimeSet S) {
    IntSet s;
    s.kind_ = Kind::PrimeSupport;
    s.primes_ = std::move(S);
    return s;
}

IntSet IntSet::prime_support_bar(PrimeSet S) {
    IntSet s;
    s.kind_ = Kind::PrimeSupportBar;
    s.primes_ = std::move(S);
    return s;
}

IntSet IntSet::odd() {
    IntSet s;
    s.kind_ = Kind::Odd;
    return s;
}

IntSet IntSet::parse(const std::string& text) {
    if (text == "all") return all();
    if (text == "odd") return odd();
    if (auto k = call_arg(text, "le")) return at_most(*k);
    if (auto k = call_arg(text, "div")) return divisors_of(*k);
    if (auto k = call_arg(text, "mod1")) return one_mod(*k);
    if (auto k = call_arg(text, "pow")) return powers_of(*k);
    if (text.rfind("P(", 0) == 0 && text.back() == ')') return prime_support(parse_prime_list(text.substr(2, text.size() - 3)));
    if (text.rfind("Pbar(", 0) == 0 && text.back() == ')')
        return prime_support_bar(parse_prime_list(text.substr(5, text.size() - 6)));
    if (text.find('(') != std::string::npos) throw InvalidArgument("unknown set descriptor: " + text);
    return explicit_set(parse_int_list(text, "set descriptor"));
}

bool IntSet::contains(std::int64_t n) const {
    if (n < 1) return false;
    switch (kind_) {
    case Kind::Explicit: return std::binary_search(members_.begin(), members_.end(), n);
    case Kind::All: return true;
    case Kind::AtMost: return n <= k_;
    case Kind::DivisorsOf: return k_ % n == 0;
    case Kind::OneModK: return k_ == 1 || n % k_ == 1;
    case Kind::PowersOf:
        while (n % k_ == 0) n /= k_;
        return n == 1;
    case Kind::PrimeSupport: return in_P(primes_, n);
    case Kind::PrimeSupportBar: return in_P_bar(primes_, n);
    case Kind::Odd: return n % 2 == 1;
    }
    return false;
}

std::string IntSet::to_string() const {
    switch (kind_) {
    case Kind::Explicit: {
        std::string s;
        for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + std::to_string(members_[i]);
        return s;
    }
    case Kind::All: return "all";
    case Kind::AtMost: return "le(" + std::to_string(k_) + ")";
    case Kind::DivisorsOf: return "div(" + std::to_string(k_) + ")";
    case Kind::OneModK: return "mod1(" + std::to_string(k_) + ")";
    case Kind::PowersOf: return "pow(" + std::to_string(k_) + ")";
    case Kind::PrimeSupport: {
        auto p = primes_.to_string();
        return "P(" + p.substr(1, p.size() - 2) + ")";
    }
    case Kind::PrimeSupportBar: {
        auto p = primes_.to_string();
        return "Pbar(" + p.substr(1, p.size() - 2) + ")";
    }
    case Kind::Odd: return "odd";
    }
    return "?";
}

// ----- PsiSpec -----

PsiSpec PsiSpec::mu() { return PsiSpec(); }

PsiSpec PsiSpec::phi() {
    PsiSpec p;
    p.kind_ = Kind::Phi;
    return p;
}

PsiSpec PsiSpec::prime_set(PrimeSet S) {
    PsiSpec p;
    p.kind_ = Kind::PrimeSet;
    p.primes_ = std::move(S);
    return p;
}

PsiSpec PsiSpec::prime_set_bar(PrimeSet S) {
    PsiSpec p;
    p.kind_ = Kind::PrimeSetBar;
    p.primes_ = std::move(S);
    return p;
}

PsiSpec PsiSpec::set_t(IntSet T) {
    PsiSpec p;
    p.kind_ = Kind::SetT;
    p.set_ = std::make_shared<const IntSet>(std::move(T));
    return p;
}

PsiSpec PsiSpec::foulkes(std::int64_t r) {
    require_positive(r, "foulkes");
    PsiSpec p;
    p.kind_ = Kind::Foulkes;
    p.r_ = r;
    return p;
}

PsiSpec PsiSpec::custom(std::map<std::int64_t, std::int64_t> table) {
    PsiSpec p;
    p.kind_ = Kind::Custom;
    p.table_ = std::move(table);
    return p;
}

std::int64_t PsiSpec::operator()(std::int64_t d) const {
    if (d < 1) throw InvalidArgument("psi is defined on positive integers");
    switch (kind_) {
    case Kind::Mu: return moebius(d);
    case Kind::Phi: return totient(d);
    case Kind::PrimeSet: {
        auto [q, l] = factor_S(d, primes_);
        return totient(q) * moebius(l);
    }
    case Kind::PrimeSetBar: {
        auto [q, l] = factor_S(d, primes_);
        return totient(l) * moebius(q);
    }
    case Kind::SetT: {
        std::int64_t acc = 0;
        for (auto m : divisors(d))
            if (set_->contains(m)) acc += m * moebius(d / m);
        return acc;
    }
    case Kind::Foulkes: {
        const std::int64_t g = gcd(d, r_);
        const std::int64_t rest = d / g;
        const std::int64_t num = totient(d) * moebius(rest);
        const std::int64_t den = totient(rest);
        if (num % den != 0) throw Error("Ramanujan sum is not integral at d=" + std::to_string(d));
        return num / den;
    }
    case Kind::Custom: {
        auto it = table_.find(d);
        if (it == table_.end()) throw InvalidArgument("custom psi has no value at d=" + std::to_string(d));
        return it->second;
    }
    }
    return 0;
}

namespace {

std::string prime_list(const PrimeSet& S) {
    std::string s;
    for (auto q : S.primes()) s += (s.empty() ? "" : ",") + std::to_string(q);
    return s;
}

}  // namespace

std::string PsiSpec::to_string() const {
    switch (kind_) {
    case Kind::Mu: return "mu";
    case Kind::Phi: return "phi";
    case Kind::PrimeSet:
        return (primes_.complement() ? "primesetbar:" : "primeset:") + prime_list(primes_);
    case Kind::PrimeSetBar:
        return (primes_.complement() ? "primeset:" : "primesetbar:") + prime_list(primes_);
    case Kind::SetT: return "setT:" + set_->to_string();
    case Kind::Foulkes: return "foulkes:" + std::to_string(r_);
    case Kind::Custom: return "custom";
    }
    return "?";
}

PsiSpec PsiSpec::parse(const std::string& text) {
    if (text == "mu") return mu();
    if (text == "phi") return phi();
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (colon != std::string::npos) {
        if (head == "primeset") return prime_set(parse_prime_list(arg));
        if (head == "primesetbar") return prime_set_bar(parse_prime_list(arg));
        if (head == "setT") return set_t(IntSet::parse(arg));
        if (head == "foulkes") return foulkes(parse_int(arg, "foulkes psi"));
    }
    throw UnknownName("unknown psi: " + text);
}

// ----- constructors -----

SymFunc f_from_psi(int n, const PsiSpec& psi) {
    if (n < 1) throw InvalidArgument("family degree must be at least 1");
    SymFunc f(n);
    for (auto d : divisors(n)) {
        const auto value = psi(d);
        if (value == 0) continue;
        const int di = static_cast<int>(d);
        f.add_term(Partition(std::vector<int>(static_cast<std::size_t>(n / di), di)),
                   ratio(static_cast<long>(value), static_cast<unsigned long>(n)));
    }
    return f;
}

Series family_series(const PsiSpec& psi, int max_degree) {
    return series_of(max_degree, [&](int n) { return f_from_psi(n, psi); });
}

SymFunc lie(int n) { return f_from_psi(n, PsiSpec::mu()); }
SymFunc conj(int n) { return f_from_psi(n, PsiSpec::phi()); }

SymFunc foulkes(int n, int r) {
    if (r < 1 || r > n) throw InvalidArgument("foulkes(n, r) requires 1 <= r <= n");
    return f_from_psi(n, PsiSpec::foulkes(r));
}

SymFunc lie_S(int n, const PrimeSet& S) { return f_from_psi(n, PsiSpec::prime_set(S)); }
SymFunc lie_S_bar(int n, const PrimeSet& S) { return f_from_psi(n, PsiSpec::prime_set_bar(S)); }
SymFunc f_T(int n, const IntSet& T) { return f_from_psi(n, PsiSpec::set_t(T)); }

VPoly f_tilde(int n, const PsiSpec& psi) {
    if (n < 1) throw InvalidArgument("family degree must be at least 1");
    VPoly out(static_cast<std::size_t>(n) + 1);
    for (auto d : divisors(n)) out[static_cast<std::size_t>(n / d)] += ratio(static_cast<long>(psi(d)), static_cast<unsigned long>(n));
    return poly_trim(std::move(out));
}

Rational f_tilde_eval(int n, const PsiSpec& psi, int t) {
    if (t != 1 && t != -1) throw InvalidArgument("f_tilde_eval takes t = +1 or -1");
    return poly_eval(f_tilde(n, psi), Rational(t));
}

SymFunc f_T_decomposed(int n, const IntSet& T) {
    SymFunc out(n);
    for (auto m : divisors(n))
        if (T.contains(m)) out += pleth_p(static_cast<int>(m), lie(n / static_cast<int>(m)));
    return out;
}

SymFunc g_T(int n, const IntSet& T) {
    SymFunc out(n);
    for (auto d : divisors(n)) {
        // d = m·2^k with m ∈ T, counted once per factorization
        for (std::int64_t two = 1; d % two == 0; two *= 2) {
            if (T.contains(d / two)) out += pleth_p(static_cast<int>(d), lie(n / static_cast<int>(d)));
        }
    }
    return out;
}

// ----- descriptors -----

Family Family::parse(const std::string& descriptor) {
    Family f;
    f.descriptor_ = descriptor;
    auto colon = descriptor.find(':');
    const std::string head = descriptor.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string() : descriptor.substr(colon + 1);
    auto needs_arg = [&]() {
        if (colon == std::string::npos) throw InvalidArgument("family '" + head + "' needs a parameter after ':'");
    };
    f.has_psi_ = true;
    if (head == "lie") {
        f.psi_ = PsiSpec::mu();
    } else if (head == "conj") {
        f.psi_ = PsiSpec::phi();
    } else if (head == "foulkes") {
        needs_arg();
        f.psi_ = PsiSpec::foulkes(parse_int(arg, descriptor));
    } else if (head == "lieS") {
        f.psi_ = PsiSpec::prime_set(parse_prime_list(arg));
    } else if (head == "lieSbar") {
        f.psi_ = PsiSpec::prime_set_bar(parse_prime_list(arg));
    } else if (head == "fT") {
        needs_arg();
        f.psi_ = PsiSpec::set_t(IntSet::parse(arg));
    } else if (head == "gT") {
        needs_arg();
        f.has_psi_ = false;
        f.g_set_ = std::make_shared<const IntSet>(IntSet::parse(arg));
    } else {
        throw UnknownName("unknown family: " + descriptor);
    }
    return f;
}

SymFunc Family::component(int n) const {
    if (has_psi_) return f_from_psi(n, psi_);
    return g_T(n, *g_set_);
}

Series Family::series(int max_degree) const {
    return series_of(max_degree, [&](int n) { return component(n); });
}

}  // namespace symfn
