#pragma once

// Sweeps over candidate q for fixed (p, alpha, n), annotated with the
// closed-form verdicts, plus the enumerator-vs-oracle cross check.

#include <string>

#include "bounds.hpp"
#include "enumerator.hpp"
#include "oracle.hpp"
#include "serialize.hpp"

namespace pqfrac {

enum class Verdict { not_applicable, predicts_absent, predicts_present };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::predicts_absent: return "absent";
        case Verdict::predicts_present: return "present";
        default: return "-";
    }
}

struct ScanEntry {
    Int q;
    bool exists = false;
    Int count = 0;
    bool within_bound = true;       // scan range already enforces this
    Verdict construction = Verdict::not_applicable;  // p=2 threshold construction
    Verdict converse = Verdict::not_applicable;      // n below the forced minimum
    Verdict cns = Verdict::not_applicable;           // p=2 iff regime
};

struct ScanReport {
    Int p, alpha, n;
    Int q_best;
    bool primes_only = false;
    std::vector<ScanEntry> entries;
    std::vector<Int> gaps;  // q absent while smaller and larger scanned q are present
};

namespace detail {

inline void annotate_verdicts(ScanEntry& e, const Int& p, const Int& alpha, const Int& n) {
    if (p == 2 && e.q % 2 == 1 && e.q >= 3) {
        Int thr = construction_threshold(alpha, e.q);
        if (n >= thr) e.construction = Verdict::predicts_present;
        bool prime = is_prime(e.q);
        if (prime && e.q >= ipow(2, alpha) * (2 * alpha + 1) - 2)
            e.cns = (n >= thr) ? Verdict::predicts_present : Verdict::predicts_absent;
    }
    for (Int k = 1; k <= alpha; ++k) {
        if (!converse_applies(p, alpha, k, e.q)) continue;
        if (n < converse_threshold(p, alpha, k, e.q)) {
            e.converse = Verdict::predicts_absent;
            break;
        }
    }
}

}  // namespace detail

inline ScanReport scan_q(const Int& p, const Int& alpha, const Int& n, bool primes_only,
                         unsigned jobs = 1) {
    detail::check_pan(p, alpha, n);
    ScanReport rep;
    rep.p = p;
    rep.alpha = alpha;
    rep.n = n;
    rep.q_best = q_bound_best(p, alpha, n);
    rep.primes_only = primes_only;

    std::vector<Int> candidates;
    for (Int q = 2; q <= rep.q_best; ++q) {
        if (gcd(p, q) != 1) continue;
        if (primes_only && !is_prime(q)) continue;
        candidates.push_back(q);
    }
    rep.entries.resize(candidates.size());

    auto fill = [&](std::size_t idx) {
        ScanEntry& e = rep.entries[idx];
        e.q = candidates[idx];
        Params P{p, e.q, n, alpha};
        e.count = Int(enumerate(P).size());
        e.exists = e.count > 0;
        e.within_bound = e.q <= rep.q_best;
        detail::annotate_verdicts(e, p, alpha, n);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) fill(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < candidates.size();
                 i = next.fetch_add(1))
                fill(i);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        if (rep.entries[i].exists) continue;
        bool before = false, after = false;
        for (std::size_t j = 0; j < i; ++j) before |= rep.entries[j].exists;
        for (std::size_t j = i + 1; j < rep.entries.size(); ++j) after |= rep.entries[j].exists;
        if (before && after) rep.gaps.push_back(rep.entries[i].q);
    }
    return rep;
}

// Differential check of the table search against the brute-force route.
// The hook exists so the harness can swap in a corrupted candidate and
// watch the check fail; by default it is the production enumerate.
struct CrossCheckRange {
    std::vector<std::pair<Int, Int>> pq_pairs;
    Int n_max = 0;
    Int alpha_max = 0;
};

struct CrossCheckResult {
    bool pass = true;
    std::size_t instances = 0;
    std::string counterexample;  // empty when pass
};

inline CrossCheckResult cross_check(
    const CrossCheckRange& range,
    const std::function<std::vector<SolutionGrid>(const Params&)>& candidate =
        [](const Params& P) { return enumerate(P); }) {
    CrossCheckResult res;
    for (const auto& [p, q] : range.pq_pairs) {
        for (Int n = 2; n <= range.n_max; ++n) {
            Int cap = alpha_cap(p, n);
            Int a_hi = range.alpha_max < cap ? range.alpha_max : cap;
            for (Int alpha = 1; alpha <= a_hi; ++alpha) {
                Params P{p, q, n, alpha};
                P.validate();
                ++res.instances;
                std::vector<SolutionGrid> got = candidate(P);
                std::vector<SolutionGrid> want = brute_enumerate(P);
                std::size_t common = got.size() < want.size() ? got.size() : want.size();
                std::size_t bad = common;
                for (std::size_t i = 0; i < common; ++i)
                    if (canonical_key(got[i]) != canonical_key(want[i])) {
                        bad = i;
                        break;
                    }
                if (bad == common && got.size() == want.size()) continue;
                std::ostringstream os;
                os << "mismatch at p=" << p << " q=" << q << " n=" << n
                   << " alpha=" << alpha << ": candidate " << got.size()
                   << " grids, reference " << want.size() << " grids";
                if (bad < got.size() || bad < want.size()) {
                    os << "; first divergence at index " << bad << "\n";
                    if (bad < got.size()) os << "candidate:\n" << tableau(got[bad]);
                    if (bad < want.size()) os << "reference:\n" << tableau(want[bad]);
                }
                res.pass = false;
                res.counterexample = os.str();
                return res;
            }
        }
    }
    return res;
}

}  // namespace pqfrac
