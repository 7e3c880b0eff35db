#ifndef SYMFN_VERIFY_HPP
#define SYMFN_VERIFY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symfn/families.hpp"

namespace symfn {

using ParamMap = std::map<std::string, std::string>;

struct ParamSpec {
    std::string name;
    std::string description;
    std::string default_value;
};

struct IdentityInfo {
    std::string id;
    std::vector<ParamSpec> params;
    int default_N = 10;
    std::string formula;
};

// Sorted by id.
const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(const std::string& id);

struct CoefficientDiff {
    Partition lambda;
    Rational lhs;
    Rational rhs;
};

struct Mismatch {
    std::string check;
    int degree = 0;
    int length = -1;  // -1 unless the check is graded by length
    std::vector<CoefficientDiff> differences;
    std::string detail;
};

struct Witness {
    int n = 0;
    Partition lambda;
    Rational coefficient;
};

struct VerifyReport {
    std::string id;
    ParamMap params;  // defaults filled in
    int N = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    double elapsed_ms = 0;
};

// Harness self-test: add 1 to one coefficient of the first check's left
// (or right) side at the given degree before comparing.
struct Corruption {
    int degree = 1;
    bool right_side = false;
};

struct VerifyOptions {
    std::optional<Corruption> corrupt;
    int jobs = 1;
};

// N <= 0 selects the catalog default. Unknown ids raise UnknownName, bad
// parameters InvalidArgument.
VerifyReport verify(const std::string& id, const ParamMap& params = {}, int N = 0, const VerifyOptions& options = {});

// Every catalog id at its defaults, run on up to `jobs` threads; results in
// catalog order.
std::vector<VerifyReport> verify_all(int jobs = 1);

// ----- positivity -----

inline constexpr int kDefaultBudget = 20;

struct PositivityVerdict {
    int n = 0;
    bool positive = true;
    std::vector<std::pair<Partition, Rational>> witnesses;
    double elapsed_ms = 0;
};

struct PositivityReport {
    std::string family;
    ParamMap params;
    std::vector<PositivityVerdict> verdicts;  // ascending n

    bool all_positive() const;
    std::vector<int> negatives() const;
};

struct ScanOptions {
    int budget = kDefaultBudget;
    int jobs = 1;
};

/* Named families: powk, product-powk, onek, lek, product-lek, stanley (k);
 * symLS-sum, spos2 (S); coprime, odd-coprime (q); divk-sum (k); product (T).
 * Anything else is read as a family descriptor ("lie", "fT:le(4)", ...).
 */
SymFunc scan_component(const std::string& family, const ParamMap& params, int n);
std::vector<std::string> scan_family_names();

PositivityReport scan_positivity(const std::string& family, const ParamMap& params, int n_min, int n_max,
                                 const ScanOptions& options = {});

// p_1·Lie^(q)_{n-1} - Lie^(q)_n for 2 <= n <= n_max.
SymFunc lifting_difference(int q, int n);
PositivityReport lifting_check(int q, int n_max, const ScanOptions& options = {});

struct HookReport {
    int n = 0;
    bool pass = false;
    std::map<Partition, Rational, DescLex> hook_coefficients;
    std::vector<Partition> expected_absent;
    std::vector<Partition> actual_absent;
};

HookReport hook_content_check(int n, int budget = kDefaultBudget);

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace symfn

#endif  // SYMFN_VERIFY_HPP
