#pragma once

// Closed-form bounds on the admissible q for fixed (p, alpha, n), the
// p = 2 threshold construction, and the related existence predicates.

#include <map>

#include "moves.hpp"

namespace pqfrac {

namespace detail {

inline void check_pan(const Int& p, const Int& alpha, const Int& n) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
}

}  // namespace detail

// Every solution forces q strictly below p^alpha * n.
inline Int q_bound_basic(const Int& p, const Int& alpha, const Int& n) {
    detail::check_pan(p, alpha, n);
    return ipow(p, alpha) * n;
}

// The per-k refinement: q <= max(p^a((p-1)(2a-k)+2)-1, p^a(n-1-(p-1)(a-k))-1)
// holds for every k in [1, alpha].
inline Int q_bound_k(const Int& p, const Int& alpha, const Int& n, const Int& k) {
    detail::check_pan(p, alpha, n);
    if (k < 1 || k > alpha) throw std::invalid_argument("k must lie in [1, alpha]");
    Int pa = ipow(p, alpha);
    Int first = pa * ((p - 1) * (2 * alpha - k) + 2) - 1;
    Int second = pa * (n - 1 - (p - 1) * (alpha - k)) - 1;
    return first > second ? first : second;
}

// Best unconditional upper bound on q: the basic bound (exclusive, so
// minus one) against every per-k refinement.
inline Int q_bound_best(const Int& p, const Int& alpha, const Int& n) {
    Int best = q_bound_basic(p, alpha, n) - 1;
    for (Int k = 1; k <= alpha; ++k) {
        Int b = q_bound_k(p, alpha, n, k);
        if (b < best) best = b;
    }
    return best;
}

struct BoundsReport {
    Int q_basic;              // exclusive: solutions need q < q_basic
    Int q_best;               // inclusive: solutions need q <= q_best
    std::map<Int, Int> per_k; // k -> per-k bound, 1 <= k <= alpha
    bool has_q = false;       // the flags below are only set with a q
    Int q = 0;
    bool cns_applicable = false;        // p=2 iff-threshold regime
    bool converse_applicable = false;   // some k passes the size condition
    bool alpha2_rule_applicable = false;  // p=2, alpha=2, q odd prime != 3
};

// Lower bound on n for solutions, given that q is large enough for the
// chosen k (see converse_applies).
inline Int converse_threshold(const Int& p, const Int& alpha, const Int& k, const Int& q) {
    detail::check_pan(p, alpha, 2);
    if (k < 1 || k > alpha) throw std::invalid_argument("k must lie in [1, alpha]");
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    Int pa = ipow(p, alpha);
    Int pk = ipow(p, k);
    Int best = 0;
    bool have = false;
    for (Int s = 1; s < pk; ++s) {
        Int rem = floor_mod(s * q, pa);
        Int val = (s * q - rem) / pa + digit_sum(rem, p);
        if (!have || val < best) {
            best = val;
            have = true;
        }
    }
    return best + (alpha - k) * (p - 1) + 1;
}

inline bool converse_applies(const Int& p, const Int& alpha, const Int& k, const Int& q) {
    detail::check_pan(p, alpha, 2);
    if (k < 1 || k > alpha) throw std::invalid_argument("k must lie in [1, alpha]");
    return q >= ipow(p, alpha) * ((p - 1) * (2 * alpha - k) + 2) - 2;
}

// Threshold of the p = 2 construction: solutions with n parts exist for
// every n at or above it.
inline Int construction_threshold(const Int& alpha2, const Int& q) {
    if (alpha2 < 1) throw std::invalid_argument("alpha2 must be at least 1");
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be odd and at least 3");
    Int pa = ipow(2, alpha2);
    Int rem = q % pa;
    return (q - rem) / pa + digit_sum(rem, 2) + alpha2;
}

// Explicit p = 2 solution with exactly n parts. Base shape: top row
// [(q-<q>)/2^a | binary digits of <q>], bottom row [0,1,...,1]; the
// n - m extra parts come from whole intermediate-row copies (the top
// row with its final 1 cleared) worth D parts each, plus r single
// right moves on the top row, applied leftmost-movable-first.
inline SolutionGrid construct_p2(const Int& alpha2, const Int& q, const Int& n) {
    Int m = construction_threshold(alpha2, q);  // validates alpha2, q
    if (n < m) throw std::invalid_argument("n is below the construction threshold");

    Int pa = ipow(2, alpha2);
    Int rem = q % pa;
    Int col1 = (q - rem) / pa;
    Int D = col1 + digit_sum(rem, 2) - 1;
    Int ell = (n - m) / D;
    Int r = (n - m) % D;

    std::size_t width = to_size(alpha2) + 1;
    Row top(width, 0);
    top[0] = col1;
    DigitVec dv = to_digits(rem, 2, alpha2);
    for (std::size_t i = 0; i < to_size(alpha2); ++i) top[1 + i] = dv.digits[i];
    Row mid = top;
    mid[width - 1] = 0;  // <q> is odd, so the final digit of top is 1
    Row bottom(width, 1);
    bottom[0] = 0;

    for (Int moved = 0; moved < r; ++moved) {
        std::size_t j = 0;
        while (j + 1 < width && top[j] == 0) ++j;
        top = right_move(top, j + 1, 2);
    }

    SolutionGrid g;
    g.params = Params{2, q, n, alpha2};
    g.params.validate();
    g.rows.assign(to_size(ell) + 2, Row());
    g.rows[0] = bottom;
    for (Int b = 1; b <= ell; ++b) g.rows[to_size(b)] = mid;
    g.rows[to_size(ell) + 1] = top;
    return g;
}

// p = 2 existence verdict in the iff regime (large q): solutions with n
// parts exist exactly when n reaches the construction threshold.
inline bool cns_exists_p2(const Int& alpha2, const Int& q, const Int& n) {
    if (alpha2 < 1) throw std::invalid_argument("alpha2 must be at least 1");
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("q must be an odd prime");
    if (q < ipow(2, alpha2) * (2 * alpha2 + 1) - 2)
        throw std::invalid_argument("q is below the applicability bound for this alpha2");
    return n >= construction_threshold(alpha2, q);
}

// p = 2, alpha = 2 regime: q occurs in an n-part solution iff q <= 4n-11.
// Fails for q = 3, which is why 3 is rejected.
inline bool alpha2_exists_p2(const Int& q, const Int& n) {
    if (q == 3) throw std::invalid_argument("q = 3 is outside this rule");
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("q must be an odd prime");
    return q <= 4 * n - 11;
}

// Per-residue sufficiency: every q = c (mod 2^a2) with
// q <= 2^a2 (n - N_1(c) - a2) + c occurs in an n-part solution.
inline Int residue_bound(const Int& alpha2, const Int& c, const Int& n) {
    if (alpha2 < 1) throw std::invalid_argument("alpha2 must be at least 1");
    if (c % 2 == 0 || c < 1 || c >= ipow(2, alpha2))
        throw std::invalid_argument("c must be odd with 1 <= c < 2^alpha2");
    return ipow(2, alpha2) * (n - digit_sum(c, 2) - alpha2) + c;
}

inline BoundsReport bounds_report(const Int& p, const Int& alpha, const Int& n) {
    BoundsReport rep;
    rep.q_basic = q_bound_basic(p, alpha, n);
    rep.q_best = q_bound_best(p, alpha, n);
    for (Int k = 1; k <= alpha; ++k) rep.per_k[k] = q_bound_k(p, alpha, n, k);
    return rep;
}

inline BoundsReport bounds_report(const Int& p, const Int& alpha, const Int& n, const Int& q) {
    BoundsReport rep = bounds_report(p, alpha, n);
    rep.has_q = true;
    rep.q = q;
    bool q_odd_prime = q % 2 == 1 && is_prime(q);
    rep.cns_applicable =
        p == 2 && q_odd_prime && q >= ipow(2, alpha) * (2 * alpha + 1) - 2;
    for (Int k = 1; k <= alpha && !rep.converse_applicable; ++k)
        rep.converse_applicable = converse_applies(p, alpha, k, q);
    rep.alpha2_rule_applicable = p == 2 && alpha == 2 && q_odd_prime && q != 3;
    return rep;
}

}  // namespace pqfrac
