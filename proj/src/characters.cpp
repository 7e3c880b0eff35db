// Murnaghan–Nakayama character tables, built bottom-up by degree.

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "symfn/errors.hpp"
#include "symfn/symfunc.hpp"

namespace symfn {

CharacterTable::CharacterTable(int n, std::vector<std::int64_t> values)
    : n_(n), dim_(partitions_cached(n).size()), values_(std::move(values)) {
    if (values_.size() != dim_ * dim_) throw InvalidArgument("character table has the wrong shape");
}

namespace {

/* Every rim hook of length r in λ, via beta numbers: with L = ℓ(λ) and
 * β_i = λ_i + L - i, removing a rim hook moves one bead β to β - r onto an
 * empty position; the leg length is the number of beads jumped over.
 */
template <class Fn>
void for_each_rim_hook(const Partition& lambda, int r, Fn&& fn) {
    const int L = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + L - 1 - i;

    auto occupied = [&](int x) {
        for (int b : beta)
            if (b == x) return true;
        return false;
    };

    for (int i = 0; i < L; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - r;
        if (to < 0 || occupied(to)) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > to && b < from) ++jumped;

        std::vector<int> next = beta;
        next[static_cast<std::size_t>(i)] = to;
        std::sort(next.begin(), next.end(), std::greater<>());
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(L));
        for (int k = 0; k < L; ++k) {
            int part = next[static_cast<std::size_t>(k)] - (L - 1 - k);
            if (part > 0) parts.push_back(part);
        }
        fn(Partition(std::move(parts)), (jumped % 2) ? -1 : 1);
    }
}

std::vector<std::int64_t> build_table(int n, const std::vector<std::unique_ptr<const CharacterTable>>& lower) {
    const auto& parts = partitions_cached(n);
    const std::size_t dim = parts.size();
    std::vector<std::int64_t> values(dim * dim, 0);
    if (n == 0) {
        values[0] = 1;
        return values;
    }
    for (std::size_t j = 0; j < dim; ++j) {
        const Partition& mu = parts[j];
        const int first = mu[0];
        const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        const auto& sub = *lower[static_cast<std::size_t>(n - first)];
        const std::size_t rest_index = partition_index(rest);
        for (std::size_t i = 0; i < dim; ++i) {
            std::int64_t chi = 0;
            for_each_rim_hook(parts[i], first, [&](const Partition& smaller, int sign) {
                chi += sign * sub(partition_index(smaller), rest_index);
            });
            values[i * dim + j] = chi;
        }
    }
    return values;
}

struct TableCache {
    std::shared_mutex mutex;
    std::vector<std::unique_ptr<const CharacterTable>> tables;
};

TableCache& cache() {
    static TableCache c;
    return c;
}

}  // namespace

const CharacterTable& character_table(int n) {
    if (n < 0) throw InvalidArgument("character table degree must be nonnegative");
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (static_cast<std::size_t>(n) < c.tables.size()) return *c.tables[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(c.mutex);
    while (c.tables.size() <= static_cast<std::size_t>(n)) {
        const int k = static_cast<int>(c.tables.size());
        c.tables.push_back(std::make_unique<const CharacterTable>(k, build_table(k, c.tables)));
    }
    return *c.tables[static_cast<std::size_t>(n)];
}

std::int64_t character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw InvalidArgument("character: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
    const auto& table = character_table(lambda.size());
    return table(partition_index(lambda), partition_index(mu));
}

}  // namespace symfn
