#include "symfn/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "symfn/errors.hpp"

namespace symfn {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] < 1) throw InvalidArgument("partition parts must be positive");
        if (j > 0 && parts[j] > parts[j - 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int x : parts_) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

int Partition::even_parts() const noexcept {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 0; }));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.reserve(static_cast<std::size_t>(parts_.front()));
    for (int i = 1; i <= parts_.front(); ++i) {
        int c = 0;
        for (int x : parts_) {
            if (x >= i) ++c;
            else break;
        }
        out.push_back(c);
    }
    return Partition(std::move(out));
}

Partition Partition::operator+(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<>());
    Partition p;
    p.parts_ = std::move(out);
    p.size_ = size_ + other.size_;
    return p;
}

Partition Partition::scaled(int k) const {
    if (k < 1) throw InvalidArgument("partition scale factor must be positive");
    Partition p = *this;
    for (int& x : p.parts_) x *= k;
    p.size_ *= k;
    return p;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(parts_[j]);
    }
    s += ']';
    return s;
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw InvalidArgument("partition must be written as [a,b,...]: " + std::string(text));
    text = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
            throw InvalidArgument("bad partition part: " + std::string(tok));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

// ----- enumeration -----

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& current, const PartFilter& filter,
               bool distinct, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (filter && !filter(part)) continue;
        current.push_back(part);
        enumerate(remaining - part, distinct ? part - 1 : part, current, filter, distinct, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, const PartFilter& filter) {
    if (n < 0) throw InvalidArgument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate(n, n, current, filter, false, out);
    return out;
}

std::vector<Partition> distinct_partitions_of(int n, const PartFilter& filter) {
    if (n < 0) throw InvalidArgument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate(n, n, current, filter, true, out);
    return out;
}

const std::vector<Partition>& partitions_cached(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<Partition>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const std::vector<Partition>>(partitions_of(n));
    return *slot;
}

std::size_t partition_index(const Partition& lambda) {
    const auto& all = partitions_cached(lambda.size());
    auto it = std::lower_bound(all.begin(), all.end(), lambda, DescLex{});
    return static_cast<std::size_t>(it - all.begin());
}

std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    // Euler's recurrence over generalized pentagonal numbers.
    std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            std::int64_t sign = (k % 2) ? 1 : -1;
            acc += sign * static_cast<std::int64_t>(p[static_cast<std::size_t>(m - g1)]);
            if (g2 <= m) acc += sign * static_cast<std::int64_t>(p[static_cast<std::size_t>(m - g2)]);
        }
        p[static_cast<std::size_t>(m)] = static_cast<std::uint64_t>(acc);
    }
    return p[static_cast<std::size_t>(n)];
}

std::uint64_t z_of(const Partition& lambda) {
    std::uint64_t z = 1;
    for (auto [part, mult] : lambda.multiplicities()) {
        for (int j = 1; j <= mult; ++j) z *= static_cast<std::uint64_t>(part) * static_cast<std::uint64_t>(j);
    }
    return z;
}

// ----- arithmetic -----

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw InvalidArgument("factorize requires n >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int moebius(std::int64_t n) {
    if (n < 1) throw InvalidArgument("moebius requires n >= 1");
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw InvalidArgument("totient requires n >= 1");
    std::int64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw InvalidArgument("divisors requires n >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

PrimeSet::PrimeSet(std::vector<std::int64_t> primes, bool complement)
    : primes_(std::move(primes)), complement_(complement) {
    std::sort(primes_.begin(), primes_.end());
    if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end())
        throw InvalidArgument("prime set contains duplicates");
    for (auto q : primes_)
        if (!is_prime(q)) throw InvalidArgument("not a prime: " + std::to_string(q));
}

bool PrimeSet::contains(std::int64_t q) const {
    return std::binary_search(primes_.begin(), primes_.end(), q);
}

std::string PrimeSet::to_string() const {
    std::string s = "{";
    for (std::size_t j = 0; j < primes_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(primes_[j]);
    }
    s += '}';
    if (complement_) s += "bar";
    return s;
}

SFactor factor_S(std::int64_t n, const PrimeSet& S) {
    if (n < 1) throw InvalidArgument("factor_S requires n >= 1");
    std::int64_t q_part = 1;
    for (auto q : S.primes()) {
        while (n % q == 0) {
            n /= q;
            q_part *= q;
        }
    }
    if (S.complement()) return {n, q_part};
    return {q_part, n};
}

bool in_P(const PrimeSet& S, std::int64_t n) { return factor_S(n, S).l_part == 1; }

bool in_P_bar(const PrimeSet& S, std::int64_t n) { return factor_S(n, S).q_part == 1; }

}  // namespace symfn
