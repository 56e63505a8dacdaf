// Command line front end. Subcommands: enumerate, count, exists, verify,
// bounds, construct, scan, cross-check. Exit codes: 0 success, 1 usage
// error, 2 verification failure, 3 cross-check mismatch.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pqfrac/oracle.hpp"
#include "pqfrac/scan.hpp"

using namespace pqfrac;

namespace {

struct CommonArgs {
    long p = 2;
    long q = 3;
    long n = 2;
    long alpha = -1;  // -1: default to alpha_cap(p, n)
    std::string format = "tableau";
    bool distinct = false;
    unsigned jobs = 1;
};

Int resolve_alpha(const CommonArgs& a) {
    if (a.alpha >= 1) return Int(a.alpha);
    if (a.alpha != -1) throw std::invalid_argument("--alpha must be at least 1");
    Int cap = alpha_cap(a.p, a.n);
    if (cap < 1)
        throw std::invalid_argument(
            "no width is admissible for these parameters (alpha_cap is 0); "
            "pass --alpha explicitly");
    return cap;
}

Params make_params(const CommonArgs& a) {
    Params P{Int(a.p), Int(a.q), Int(a.n), resolve_alpha(a)};
    P.validate();
    if (!is_prime(P.q))
        std::cerr << "warning: q = " << P.q << " is not prime; proceeding anyway\n";
    return P;
}

bool all_entries_distinct(const SolutionGrid& g) {
    for (const Row& row : g.rows)
        for (const Int& k : row)
            if (k > 1) return false;
    return true;
}

std::vector<SolutionGrid> collect(const CommonArgs& a) {
    Params P = make_params(a);
    std::vector<SolutionGrid> grids = enumerate(P, a.jobs);
    if (a.distinct) {
        std::vector<SolutionGrid> kept;
        for (SolutionGrid& g : grids)
            if (all_entries_distinct(g)) kept.push_back(std::move(g));
        grids = std::move(kept);
    }
    return grids;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_format = true) {
    cmd->add_option("--p", a.p, "first prime")->required();
    cmd->add_option("--q", a.q, "coprime partner (>= 2)")->required();
    cmd->add_option("--n", a.n, "number of unit fractions")->required();
    cmd->add_option("--alpha", a.alpha,
                    "width cap on p-exponents (default: largest power of p "
                    "below the Sylvester bound for n)");
    if (with_format)
        cmd->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember({"tableau", "json", "count"}));
    cmd->add_flag("--distinct", a.distinct, "keep only solutions with all entries <= 1");
    cmd->add_option("--jobs", a.jobs, "worker threads");
}

int run_enumerate(const CommonArgs& a) {
    std::vector<SolutionGrid> grids = collect(a);
    if (a.format == "count") {
        std::cout << grids.size() << "\n";
    } else if (a.format == "json") {
        std::cout << grids_to_json(grids).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < grids.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << tableau(grids[i]);
        }
    }
    return 0;
}

int run_count(const CommonArgs& a) {
    std::cout << collect(a).size() << "\n";
    return 0;
}

int run_exists(const CommonArgs& a) {
    bool found;
    if (a.distinct) {
        found = !collect(a).empty();
    } else {
        found = exists(make_params(a), a.jobs);
    }
    std::cout << (found ? "true" : "false") << "\n";
    return 0;
}

int run_verify(const std::string& seedfile) {
    std::ifstream in(seedfile);
    if (!in) throw std::invalid_argument("cannot open seedfile: " + seedfile);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<SolutionGrid> grids = grids_from_json(j);
    bool all_ok = true;
    for (std::size_t i = 0; i < grids.size(); ++i) {
        VerificationReport rep = verify(grids[i]);
        std::cout << "grid " << i << ": ";
        if (rep.is_valid) {
            std::cout << "ok (" << rep.part_count << " parts)\n";
        } else {
            all_ok = false;
            std::cout << "FAIL";
            for (FailureReason r : rep.failures) std::cout << " " << failure_name(r);
            std::cout << "\n";
        }
    }
    return all_ok ? 0 : 2;
}

int run_bounds(const CommonArgs& a, bool q_given) {
    Int alpha = resolve_alpha(a);
    BoundsReport rep = q_given ? bounds_report(a.p, alpha, a.n, a.q)
                               : bounds_report(a.p, alpha, a.n);
    if (a.format == "json") {
        nlohmann::json j;
        j["q_basic"] = (long)rep.q_basic.get_si();
        j["q_best"] = (long)rep.q_best.get_si();
        nlohmann::json per_k = nlohmann::json::object();
        for (const auto& [k, v] : rep.per_k) per_k[k.get_str()] = (long)v.get_si();
        j["per_k"] = per_k;
        if (rep.has_q) {
            j["q"] = (long)rep.q.get_si();
            j["cns_applicable"] = rep.cns_applicable;
            j["converse_applicable"] = rep.converse_applicable;
            j["alpha2_rule_applicable"] = rep.alpha2_rule_applicable;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "q_basic: " << rep.q_basic << " (exclusive)\n";
    std::cout << "q_best:  " << rep.q_best << " (inclusive)\n";
    for (const auto& [k, v] : rep.per_k) std::cout << "k=" << k << ": " << v << "\n";
    if (rep.has_q) {
        std::cout << "q=" << rep.q << ":";
        std::cout << " iff-threshold " << (rep.cns_applicable ? "applies" : "-");
        std::cout << ", minimum-n " << (rep.converse_applicable ? "applies" : "-");
        std::cout << ", alpha2-rule " << (rep.alpha2_rule_applicable ? "applies" : "-")
                  << "\n";
    }
    return 0;
}

int run_construct(const CommonArgs& a) {
    Int alpha = resolve_alpha(a);
    if (!is_prime(Int(a.q)))
        std::cerr << "warning: q = " << a.q << " is not prime; proceeding anyway\n";
    SolutionGrid g = construct_p2(alpha, a.q, a.n);
    VerificationReport rep = verify(g);
    if (!rep.is_valid) throw std::logic_error("internal: constructed grid failed verification");
    if (a.format == "json") {
        std::cout << grid_to_json(g).dump(2) << "\n";
    } else {
        std::cout << tableau(g);
    }
    return 0;
}

int run_scan(const CommonArgs& a, bool primes_only) {
    Int alpha = resolve_alpha(a);
    ScanReport rep = scan_q(a.p, alpha, a.n, primes_only, a.jobs);
    if (a.format == "json") {
        nlohmann::json j;
        j["p"] = a.p;
        j["alpha"] = (long)alpha.get_si();
        j["n"] = a.n;
        j["q_best"] = (long)rep.q_best.get_si();
        j["primes_only"] = rep.primes_only;
        nlohmann::json entries = nlohmann::json::array();
        for (const ScanEntry& e : rep.entries) {
            nlohmann::json je;
            je["q"] = (long)e.q.get_si();
            je["exists"] = e.exists;
            je["count"] = (long)e.count.get_si();
            je["within_bound"] = e.within_bound;
            je["construction"] = verdict_name(e.construction);
            je["converse"] = verdict_name(e.converse);
            je["cns"] = verdict_name(e.cns);
            entries.push_back(std::move(je));
        }
        j["entries"] = std::move(entries);
        nlohmann::json gaps = nlohmann::json::array();
        for (const Int& q : rep.gaps) gaps.push_back((long)q.get_si());
        j["gaps"] = std::move(gaps);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "p=" << a.p << " alpha=" << alpha << " n=" << a.n
              << " scanning q <= " << rep.q_best
              << (rep.primes_only ? " (primes only)" : "") << "\n";
    for (const ScanEntry& e : rep.entries) {
        std::cout << "q=" << e.q << " count=" << e.count
                  << " exists=" << (e.exists ? "yes" : "no");
        if (e.construction != Verdict::not_applicable)
            std::cout << " construction:" << verdict_name(e.construction);
        if (e.converse != Verdict::not_applicable)
            std::cout << " minimum-n:" << verdict_name(e.converse);
        if (e.cns != Verdict::not_applicable)
            std::cout << " iff:" << verdict_name(e.cns);
        std::cout << "\n";
    }
    std::cout << "gaps:";
    for (const Int& q : rep.gaps) std::cout << " " << q;
    std::cout << "\n";
    return 0;
}

int run_cross_check(const std::vector<long>& ps, const std::vector<long>& qs,
                    long n_max, long alpha_max) {
    CrossCheckRange range;
    for (long p : ps)
        for (long q : qs)
            if (p != q && q >= 2 && gcd(Int(p), Int(q)) == 1 && is_prime(Int(p)))
                range.pq_pairs.push_back({Int(p), Int(q)});
    range.n_max = n_max;
    range.alpha_max = alpha_max;
    CrossCheckResult res = cross_check(range);
    if (res.pass) {
        std::cout << "checked " << res.instances << " instances: all agree\n";
        return 0;
    }
    std::cout << res.counterexample << "\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit fraction decompositions of 1 with denominators p^a q^b"};
    app.require_subcommand(1);

    CommonArgs enum_args, count_args, exists_args, bounds_args, construct_args, scan_args;
    std::string seedfile;
    bool primes_only = false;
    std::vector<long> cc_p{2, 3};
    std::vector<long> cc_q{2, 3, 5, 7, 11};
    long cc_n = 8, cc_alpha = 3;

    CLI::App* c_enum = app.add_subcommand("enumerate", "list every solution");
    add_common(c_enum, enum_args);

    CLI::App* c_count = app.add_subcommand("count", "print the number of solutions");
    add_common(c_count, count_args, /*with_format=*/false);

    CLI::App* c_exists = app.add_subcommand("exists", "print true/false");
    add_common(c_exists, exists_args, /*with_format=*/false);

    CLI::App* c_verify = app.add_subcommand("verify", "check grids from a seedfile");
    c_verify->add_option("--seedfile", seedfile, "JSON grid or array of grids")->required();

    CLI::App* c_bounds = app.add_subcommand("bounds", "report the q bounds");
    c_bounds->add_option("--p", bounds_args.p, "first prime")->required();
    c_bounds->add_option("--n", bounds_args.n, "number of unit fractions")->required();
    c_bounds->add_option("--alpha", bounds_args.alpha, "width cap on p-exponents");
    CLI::Option* bounds_q = c_bounds->add_option("--q", bounds_args.q, "annotate this q");
    c_bounds->add_option("--format", bounds_args.format, "output format")
        ->check(CLI::IsMember({"tableau", "json", "count"}));

    CLI::App* c_construct = app.add_subcommand("construct", "explicit p=2 solution");
    c_construct->add_option("--q", construct_args.q, "odd partner (>= 3)")->required();
    c_construct->add_option("--n", construct_args.n, "number of unit fractions")->required();
    c_construct->add_option("--alpha", construct_args.alpha, "width cap on 2-exponents");
    c_construct->add_option("--format", construct_args.format, "output format")
        ->check(CLI::IsMember({"tableau", "json", "count"}));

    CLI::App* c_scan = app.add_subcommand("scan", "sweep q up to the best bound");
    c_scan->add_option("--p", scan_args.p, "first prime")->required();
    c_scan->add_option("--n", scan_args.n, "number of unit fractions")->required();
    c_scan->add_option("--alpha", scan_args.alpha, "width cap on p-exponents");
    c_scan->add_flag("--primes-only", primes_only, "scan prime q only");
    c_scan->add_option("--jobs", scan_args.jobs, "worker threads");
    c_scan->add_option("--format", scan_args.format, "output format")
        ->check(CLI::IsMember({"tableau", "json", "count"}));

    CLI::App* c_cc = app.add_subcommand("cross-check",
                                        "compare the table search against brute force");
    c_cc->add_option("--p", cc_p, "p values to pair");
    c_cc->add_option("--q", cc_q, "q values to pair");
    c_cc->add_option("--n", cc_n, "largest n");
    c_cc->add_option("--alpha", cc_alpha, "largest width cap");

    int rc = 0;
    c_enum->callback([&] { rc = run_enumerate(enum_args); });
    c_count->callback([&] { rc = run_count(count_args); });
    c_exists->callback([&] { rc = run_exists(exists_args); });
    c_verify->callback([&] { rc = run_verify(seedfile); });
    c_bounds->callback([&] { rc = run_bounds(bounds_args, bounds_q->count() > 0); });
    c_construct->callback([&] { rc = run_construct(construct_args); });
    c_scan->callback([&] { rc = run_scan(scan_args, primes_only); });
    c_cc->callback([&] { rc = run_cross_check(cc_p, cc_q, cc_n, cc_alpha); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
