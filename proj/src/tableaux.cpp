#include <algorithm>
#include <string>

#include "symfn/errors.hpp"
#include "symfn/symfunc.hpp"

namespace symfn {

namespace {

struct MajWalk {
    const Partition& shape;
    int n;
    std::vector<int> filled;  // cells used per row
    std::map<int, std::uint64_t>& counts;

    // Places entry k (1-based) given the row of entry k-1 and the major
    // index accumulated so far.
    void place(int k, int prev_row, int maj) {
        if (k > n) {
            ++counts[maj % n];
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            const auto row = static_cast<std::size_t>(r);
            if (filled[row] >= shape[row]) continue;
            if (r > 0 && filled[row] >= filled[row - 1]) continue;
            ++filled[row];
            // k-1 is a descent when k lands strictly below it.
            place(k + 1, r, maj + ((k > 1 && r > prev_row) ? k - 1 : 0));
            --filled[row];
        }
    }
};

}  // namespace

std::map<int, std::uint64_t> syt_maj_distribution(const Partition& lambda, int bound) {
    if (lambda.size() > bound)
        throw BudgetExceeded("tableau enumeration limited to |shape| <= " + std::to_string(bound));
    std::map<int, std::uint64_t> counts;
    if (lambda.size() == 0) {
        counts[0] = 1;
        return counts;
    }
    MajWalk walk{lambda, lambda.size(), std::vector<int>(static_cast<std::size_t>(lambda.length()), 0), counts};
    walk.place(1, 0, 0);
    return counts;
}

std::uint64_t syt_count(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    // hook length formula: n! / Π hooks
    mpz_class num = 1, den = 1;
    for (int i = 1; i <= lambda.size(); ++i) num *= i;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) {
            int arm = lambda[static_cast<std::size_t>(r)] - c - 1;
            int leg = conj[static_cast<std::size_t>(c)] - r - 1;
            den *= arm + leg + 1;
        }
    mpz_class q = num / den;
    return q.get_ui();
}

}  // namespace symfn
