#pragma once

// Instance parameters, the solution-grid data model, exact verification,
// and the canonical form used for dedup and stable ordering.
//
// A solution of sum 1/x_i = 1 with x_i = p^a q^b is stored as the grid
// k[a][b] counting how often 1/(p^a q^b) occurs. Rows are indexed by the
// q-exponent b, bottom row b = 0 first; inside a row, entry j (0-based)
// holds the count for p-exponent a = j.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numtheory.hpp"

namespace pqfrac {

struct Params {
    Int p;
    Int q;
    Int n;
    Int alpha_p;

    Int p_pow_alpha() const { return ipow(p, alpha_p); }
    std::size_t width() const { return to_size(alpha_p) + 1; }

    void validate() const {
        if (!is_prime(p)) throw std::invalid_argument("params: p must be prime");
        if (q < 2) throw std::invalid_argument("params: q must be >= 2");
        if (gcd(p, q) != 1) throw std::invalid_argument("params: p and q must be coprime");
        if (n < 2) throw std::invalid_argument("params: n must be >= 2");
        if (alpha_p < 1) throw std::invalid_argument("params: alpha_p must be >= 1");
    }
};

using Row = std::vector<Int>;

inline std::strong_ordering compare_rows(const Row& a, const Row& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// Weighted row value sum_j k_j * p^(alpha-j) (j = p-exponent). The top
// row of a solution is admissible exactly when q divides this.
inline Int row_value(const Row& row, const Int& p, const Int& alpha) {
    if (row.size() != to_size(alpha) + 1)
        throw std::invalid_argument("row_value: row length must be alpha+1");
    Int acc = 0;
    for (const Int& k : row) acc = acc * p + k;
    return acc;
}

enum class SolutionKind { bottom_row, last_row };

inline const char* kind_name(SolutionKind k) {
    return k == SolutionKind::bottom_row ? "bottom" : "last";
}

struct SolutionGrid {
    Params params;
    std::vector<Row> rows;  // rows[b] is the row with q-exponent b

    bool row_is_zero(std::size_t b) const {
        for (const Int& k : rows[b])
            if (k != 0) return false;
        return true;
    }

    // Bottom-row solution iff the b = 0 row carries mass; otherwise the
    // minimal q-valuation is positive and the grid has a "last row".
    SolutionKind kind() const {
        return !rows.empty() && !row_is_zero(0) ? SolutionKind::bottom_row
                                                : SolutionKind::last_row;
    }

    Int alpha_q() const { return Int(rows.size()) - 1; }

    Int part_count() const {
        Int acc = 0;
        for (const Row& r : rows)
            for (const Int& k : r) acc += k;
        return acc;
    }

    // Reporting convention: 1 for bottom-row solutions, b+2 for last-row
    // ones where b+1 is the minimal q-valuation used.
    Int height() const {
        if (kind() == SolutionKind::bottom_row) return 1;
        std::size_t b = 0;
        while (b < rows.size() && row_is_zero(b)) ++b;
        if (b == rows.size()) return 1;  // all-zero grid, degenerate
        return Int(b) + 1;
    }
};

inline Rational grid_sum(const SolutionGrid& g) {
    Rational acc = 0;
    Int qb = 1;
    for (std::size_t b = 0; b < g.rows.size(); ++b) {
        Int pa = 1;
        for (std::size_t a = 0; a < g.rows[b].size(); ++a) {
            const Int& k = g.rows[b][a];
            if (k != 0) {
                Rational term(k, pa * qb);
                term.canonicalize();
                acc += term;
            }
            pa *= g.params.p;
        }
        qb *= g.params.q;
    }
    return acc;
}

enum class FailureReason {
    bad_dimensions,
    negative_entry,
    top_row_zero,
    wrong_part_count,
    p_absent,
    q_absent,
    sum_not_one,
    denominator_too_large,
};

inline const char* failure_name(FailureReason r) {
    switch (r) {
        case FailureReason::bad_dimensions: return "bad dimensions";
        case FailureReason::negative_entry: return "negative entry";
        case FailureReason::top_row_zero: return "top row zero";
        case FailureReason::wrong_part_count: return "wrong part count";
        case FailureReason::p_absent: return "p absent";
        case FailureReason::q_absent: return "q absent";
        case FailureReason::sum_not_one: return "sum not one";
        case FailureReason::denominator_too_large: return "denominator too large";
    }
    return "unknown";
}

struct VerificationReport {
    bool is_valid = false;
    Rational sum;
    Int part_count;
    bool p_appears = false;
    bool q_appears = false;
    bool max_denominator_ok = true;
    std::vector<FailureReason> failures;
};

// Full check of the solution invariants: consistent dimensions, nonzero
// top row, exactly n parts, both primes used, exact sum 1, and every used
// denominator strictly below S_n (the n-term Sylvester cap).
inline VerificationReport verify(const SolutionGrid& g) {
    VerificationReport rep;
    const Params& P = g.params;
    std::size_t w = P.width();

    bool shape_ok = !g.rows.empty();
    for (const Row& r : g.rows)
        if (r.size() != w) shape_ok = false;
    if (!shape_ok) {
        rep.failures.push_back(FailureReason::bad_dimensions);
        return rep;
    }
    for (const Row& r : g.rows)
        for (const Int& k : r)
            if (k < 0) {
                rep.failures.push_back(FailureReason::negative_entry);
                return rep;
            }

    if (g.row_is_zero(g.rows.size() - 1))
        rep.failures.push_back(FailureReason::top_row_zero);

    rep.part_count = g.part_count();
    if (rep.part_count != P.n) rep.failures.push_back(FailureReason::wrong_part_count);

    Int dmax = 0;
    Int qb = 1;
    for (std::size_t b = 0; b < g.rows.size(); ++b) {
        Int pa = 1;
        for (std::size_t a = 0; a < w; ++a) {
            if (g.rows[b][a] != 0) {
                if (a >= 1) rep.p_appears = true;
                if (b >= 1) rep.q_appears = true;
                if (pa * qb > dmax) dmax = pa * qb;
            }
            pa *= P.p;
        }
        qb *= P.q;
    }
    rep.max_denominator_ok = below_sylvester(dmax, P.n);
    if (!rep.p_appears) rep.failures.push_back(FailureReason::p_absent);
    if (!rep.q_appears) rep.failures.push_back(FailureReason::q_absent);
    if (!rep.max_denominator_ok) rep.failures.push_back(FailureReason::denominator_too_large);

    rep.sum = grid_sum(g);
    if (rep.sum != 1) rep.failures.push_back(FailureReason::sum_not_one);

    rep.is_valid = rep.failures.empty();
    return rep;
}

// Canonical key: the rows after dropping all-zero top rows, compared
// top row first then downward, each row left to right. Grids are equal
// as solutions iff their keys are equal, and the induced total order
// gives stable output.
struct CanonicalKey {
    std::vector<Row> rows_top_first;

    std::strong_ordering operator<=>(const CanonicalKey& other) const {
        std::size_t na = rows_top_first.size(), nb = other.rows_top_first.size();
        for (std::size_t i = 0; i < std::min(na, nb); ++i) {
            auto c = compare_rows(rows_top_first[i], other.rows_top_first[i]);
            if (c != std::strong_ordering::equal) return c;
        }
        return na <=> nb;
    }
    bool operator==(const CanonicalKey& other) const {
        return (*this <=> other) == std::strong_ordering::equal;
    }
    bool operator<(const CanonicalKey& other) const {
        return (*this <=> other) == std::strong_ordering::less;
    }
};

inline SolutionGrid trim_top(SolutionGrid g) {
    while (g.rows.size() > 1 && g.row_is_zero(g.rows.size() - 1)) g.rows.pop_back();
    return g;
}

inline CanonicalKey canonical_key(const SolutionGrid& g) {
    SolutionGrid t = trim_top(g);
    CanonicalKey key;
    key.rows_top_first.assign(t.rows.rbegin(), t.rows.rend());
    return key;
}

}  // namespace pqfrac
