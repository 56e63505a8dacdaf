#pragma once

// Independent brute-force enumeration used to certify the table-based
// enumerator. Structurally unrelated to moves/enumerator: it searches
// multisets of denominators with exact rational arithmetic and only
// shares the grid model for output.
//
// Denominator universe: p^a q^b with 0 <= a <= alpha_p, b >= 0 and
// p^a q^b < S_n. The Sylvester cap is exact: no denominator of an n-term
// decomposition of 1 can reach S_n, so the candidate list is complete.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "model.hpp"

namespace pqfrac {

namespace detail {

struct BruteCandidate {
    Int denom;
    std::size_t a;
    std::size_t b;
};

struct BruteSearch {
    const Params& P;
    std::vector<BruteCandidate> cand;  // sorted by denom ascending
    std::vector<std::size_t> picked;   // indices into cand, nondecreasing
    std::vector<SolutionGrid> out;

    explicit BruteSearch(const Params& P_) : P(P_) {
        Int qb = 1;
        for (std::size_t b = 0; below_sylvester(qb, P.n); ++b, qb *= P.q) {
            Int d = qb;
            for (std::size_t a = 0; a <= to_size(P.alpha_p) && below_sylvester(d, P.n);
                 ++a, d *= P.p) {
                if (d >= 2) cand.push_back({d, a, b});
            }
        }
        std::sort(cand.begin(), cand.end(),
                  [](const BruteCandidate& x, const BruteCandidate& y) { return x.denom < y.denom; });
    }

    void emit() {
        std::size_t max_b = 0;
        bool has_a = false, has_b = false;
        for (std::size_t i : picked) {
            max_b = std::max(max_b, cand[i].b);
            if (cand[i].a >= 1) has_a = true;
            if (cand[i].b >= 1) has_b = true;
        }
        if (!has_a || !has_b) return;  // both primes must appear
        SolutionGrid g;
        g.params = P;
        g.rows.assign(max_b + 1, Row(P.width(), 0));
        for (std::size_t i : picked) g.rows[cand[i].b][cand[i].a] += 1;
        out.push_back(std::move(g));
    }

    // Denominators are chosen nondecreasing, so each multiset appears
    // exactly once. Two standard prunes: the next reciprocal must not
    // exceed what is left, and k copies of it must still be able to
    // reach what is left.
    void rec(std::size_t idx, const Int& k, const Rational& remaining) {
        if (k == 0) {
            if (remaining == 0) emit();
            return;
        }
        if (remaining <= 0) return;
        for (std::size_t i = idx; i < cand.size(); ++i) {
            const Int& d = cand[i].denom;
            // k/d < remaining: even the largest k-term tail falls short,
            // and denominators only grow from here.
            if (Rational(k, 1) < remaining * d) break;
            // 1/d > remaining: this denominator is still too small.
            if (remaining * d < 1) continue;
            picked.push_back(i);
            Rational unit(1, d);
            unit.canonicalize();
            rec(i, k - 1, remaining - unit);
            picked.pop_back();
        }
    }
};

}  // namespace detail

inline std::vector<SolutionGrid> brute_enumerate(const Params& P) {
    P.validate();
    detail::BruteSearch search(P);
    search.rec(0, P.n, Rational(1));
    std::sort(search.out.begin(), search.out.end(),
              [](const SolutionGrid& x, const SolutionGrid& y) {
                  return canonical_key(x) < canonical_key(y);
              });
    return std::move(search.out);
}

inline Int brute_count(const Params& P) { return Int(brute_enumerate(P).size()); }

}  // namespace pqfrac
