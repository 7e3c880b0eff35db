// symfn command-line front end. Talks to the library only through symfn.h.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symfn/symfn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int code;
};

void check(sf_status status) {
    if (status == SF_OK) return;
    std::cerr << "error (" << sf_status_name(status) << "): " << sf_last_error() << "\n";
    throw Failure{kExitUsage};
}

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { sf_string_free(s); }
};

void emit(const OwnedString& out) {
    std::fwrite(out.s, 1, std::char_traits<char>::length(out.s), stdout);
}

struct Common {
    std::string format = "text";
    bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    cmd->add_flag("--timing", c.timing, "include wall-clock timings (output is then not reproducible)");
}

// Named parameters shared by verify and scan.
struct Params {
    std::map<std::string, std::string> values;
    std::vector<std::string> extra;

    void attach(CLI::App* cmd, const std::vector<std::string>& names) {
        for (const auto& n : names) {
            std::string flag = "--" + n;
            std::string key = n == "n-max" ? "n_max" : n;
            cmd->add_option_function<std::string>(flag, [this, key](const std::string& v) { values[key] = v; },
                                                  "parameter " + key);
        }
        cmd->add_option("--param", extra, "extra parameter as key=value");
    }

    std::string json() const {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [k, v] : values) j[k] = v;
        for (const auto& kv : extra) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) {
                std::cerr << "error (invalid argument): --param expects key=value, got '" << kv << "'\n";
                throw Failure{kExitUsage};
            }
            j[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        return j.dump();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric functions, plethysm and higher Lie module identities"};
    app.require_subcommand(1, 1);

    // expand
    Common expand_c;
    std::string family, basis = "p";
    int n = 0;
    auto* expand = app.add_subcommand("expand", "expand one degree of a family");
    expand->add_option("--family", family, "family descriptor (lie, conj, foulkes:r, lieS:2,3, fT:le(5), ...)")->required();
    expand->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    expand->add_option("--basis", basis, "p or schur")->check(CLI::IsMember({"p", "schur"}))->capture_default_str();
    add_common(expand, expand_c);

    // schur
    Common schur_c;
    std::string expr;
    bool schur_expect = false;
    auto* schur = app.add_subcommand("schur", "Schur expansion and positivity of a homogeneous expression");
    schur->add_option("--expr", expr, "expression such as \"p[4] + p[2,2]\" or \"{conj}_6\"")->required();
    schur->add_flag("--expect-positive", schur_expect, "exit 1 when not Schur positive");
    add_common(schur, schur_c);

    // pleth
    Common pleth_c;
    std::string outer, inner, pleth_basis = "p";
    int pleth_N = 0;
    auto* pleth = app.add_subcommand("pleth", "plethysm outer[inner] of truncated series");
    pleth->add_option("--outer", outer, "outer expression, e.g. H or h[2]")->required();
    pleth->add_option("--inner", inner, "inner expression without constant term, e.g. {lie} or \"p[1] - p[2]\"")->required();
    pleth->add_option("--max-degree", pleth_N, "truncation degree")->required()->check(CLI::NonNegativeNumber);
    pleth->add_option("--basis", pleth_basis, "p or schur")->check(CLI::IsMember({"p", "schur"}))->capture_default_str();
    add_common(pleth, pleth_c);

    // verify
    Common verify_c;
    std::string id;
    bool verify_all = false;
    int verify_N = 0, verify_jobs = 1;
    Params verify_p;
    auto* verify = app.add_subcommand("verify", "check a catalog identity degree by degree");
    auto* id_opt = verify->add_option("--id", id, "identity id (see list)");
    auto* all_opt = verify->add_flag("--all", verify_all, "run every identity at its defaults");
    id_opt->excludes(all_opt);
    verify->add_option("--max-degree", verify_N, "truncation degree (default per identity)")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", verify_jobs, "parallel identities for --all")->check(CLI::PositiveNumber)->capture_default_str();
    verify_p.attach(verify, {"S", "T", "q", "k", "r", "psi", "g", "sign", "family", "n-max"});
    add_common(verify, verify_c);

    // scan
    Common scan_c;
    std::string scan_family;
    int scan_n = 0, scan_min = 0, scan_max = 0, scan_budget = 20, scan_jobs = 1;
    bool scan_expect = false;
    Params scan_p;
    auto* scan = app.add_subcommand("scan", "Schur positivity of a family over a degree range");
    scan->add_option("--family", scan_family, "scan family or family descriptor")->required();
    auto* n_opt = scan->add_option("--n", scan_n, "single degree")->check(CLI::PositiveNumber);
    auto* min_opt = scan->add_option("--n-min", scan_min, "first degree")->check(CLI::PositiveNumber);
    auto* max_opt = scan->add_option("--n-max", scan_max, "last degree")->check(CLI::PositiveNumber);
    n_opt->excludes(min_opt)->excludes(max_opt);
    min_opt->needs(max_opt);
    scan->add_option("--budget", scan_budget, "largest degree allowed")->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_option("--jobs", scan_jobs, "parallel degrees")->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_flag("--expect-positive", scan_expect, "exit 1 on any negative verdict");
    scan_p.attach(scan, {"S", "T", "q", "k"});
    add_common(scan, scan_c);

    // lift
    Common lift_c;
    int lift_q = 3, lift_max = 18, lift_budget = 20, lift_jobs = 1;
    bool lift_expect = false;
    auto* lift = app.add_subcommand("lift", "positivity of p_1 Lie^(q)_(n-1) - Lie^(q)_n");
    lift->add_option("--q", lift_q, "prime")->capture_default_str();
    lift->add_option("--n-max", lift_max, "last degree")->capture_default_str();
    lift->add_option("--budget", lift_budget, "largest degree allowed")->check(CLI::PositiveNumber)->capture_default_str();
    lift->add_option("--jobs", lift_jobs, "parallel degrees")->check(CLI::PositiveNumber)->capture_default_str();
    lift->add_flag("--expect-positive", lift_expect, "exit 1 on any negative verdict");
    add_common(lift, lift_c);

    // list
    Common list_c;
    auto* list = app.add_subcommand("list", "identity catalog");
    add_common(list, list_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (expand->parsed()) {
            sf_symfunc* f = nullptr;
            check(sf_family_component(family.c_str(), n, &f));
            std::unique_ptr<sf_symfunc, decltype(&sf_symfunc_free)> guard(f, sf_symfunc_free);
            OwnedString out;
            check(sf_symfunc_format(f, basis.c_str(), expand_c.format.c_str(), &out.s));
            emit(out);
            return kExitOk;
        }
        if (schur->parsed()) {
            sf_symfunc* f = nullptr;
            check(sf_symfunc_parse(expr.c_str(), &f));
            std::unique_ptr<sf_symfunc, decltype(&sf_symfunc_free)> guard(f, sf_symfunc_free);
            OwnedString out;
            check(sf_symfunc_format(f, "schur", schur_c.format.c_str(), &out.s));
            emit(out);
            if (!schur_expect) return kExitOk;
            int positive = 0;
            check(sf_symfunc_schur_positive(f, schur_c.format.c_str(), &positive, nullptr));
            return positive ? kExitOk : kExitNegative;
        }
        if (pleth->parsed()) {
            sf_series *a = nullptr, *b = nullptr, *c = nullptr;
            check(sf_series_parse(outer.c_str(), pleth_N, &a));
            std::unique_ptr<sf_series, decltype(&sf_series_free)> ga(a, sf_series_free);
            check(sf_series_parse(inner.c_str(), pleth_N, &b));
            std::unique_ptr<sf_series, decltype(&sf_series_free)> gb(b, sf_series_free);
            check(sf_series_pleth(a, b, &c));
            std::unique_ptr<sf_series, decltype(&sf_series_free)> gc(c, sf_series_free);
            OwnedString out;
            check(sf_series_format(c, pleth_basis.c_str(), pleth_c.format.c_str(), &out.s));
            emit(out);
            return kExitOk;
        }
        if (verify->parsed()) {
            OwnedString out;
            int passed = 0;
            if (verify_all) {
                check(sf_verify_all(verify_jobs, verify_c.format.c_str(), verify_c.timing, &passed, &out.s));
            } else {
                if (id.empty()) {
                    std::cerr << "error (invalid argument): verify needs --id or --all\n";
                    return kExitUsage;
                }
                const std::string params = verify_p.json();
                check(sf_verify(id.c_str(), params.c_str(), verify_N, verify_c.format.c_str(), verify_c.timing, &passed,
                                &out.s));
            }
            emit(out);
            return passed ? kExitOk : kExitNegative;
        }
        if (scan->parsed()) {
            if (*n_opt) scan_min = scan_max = scan_n;
            if (!*n_opt && !*max_opt) {
                std::cerr << "error (invalid argument): scan needs --n or --n-max\n";
                return kExitUsage;
            }
            if (!*min_opt && !*n_opt) scan_min = 1;
            const std::string params = scan_p.json();
            OwnedString out;
            int positive = 0;
            check(sf_scan(scan_family.c_str(), params.c_str(), scan_min, scan_max, scan_budget, scan_jobs,
                          scan_c.format.c_str(), scan_c.timing, &positive, &out.s));
            emit(out);
            return scan_expect && !positive ? kExitNegative : kExitOk;
        }
        if (lift->parsed()) {
            OwnedString out;
            int positive = 0;
            check(sf_lift(lift_q, lift_max, lift_budget, lift_jobs, lift_c.format.c_str(), lift_c.timing, &positive, &out.s));
            emit(out);
            return lift_expect && !positive ? kExitNegative : kExitOk;
        }
        if (list->parsed()) {
            OwnedString out;
            check(sf_list(list_c.format.c_str(), &out.s));
            emit(out);
            return kExitOk;
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return kExitUsage;
}
