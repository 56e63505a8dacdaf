#pragma once

// Row-level operations: admissibility, push values, right/left moves,
// row reduction to a seed for the next q-valuation down, bottom-row
// completion, and exhaustive expansion by a fixed number of right moves.

#include <set>
#include <stdexcept>
#include <utility>

#include "model.hpp"

namespace pqfrac {

// A push value t splits as t = p^alpha * s_tilde + s; the row seeded one
// q-valuation down is [s_tilde, 0, ..., 0, s].
struct ReductionSeed {
    Int s_tilde;
    Int s;

    bool operator==(const ReductionSeed&) const = default;
};

inline bool is_admissible(const Row& row, const Params& P) {
    return row_value(row, P.p, P.alpha_p) % P.q == 0;
}

inline Int push_value(const Row& row, const Params& P) {
    Int v = row_value(row, P.p, P.alpha_p);
    if (v % P.q != 0) throw std::invalid_argument("push_value: row is not admissible");
    return v / P.q;
}

// Trade one unit in column j (1-based) for p units in column j+1.
// Keeps the row value, grows the entry total by p-1.
inline Row right_move(Row row, std::size_t j, const Int& p) {
    if (j < 1 || j >= row.size()) throw std::invalid_argument("right_move: bad column");
    if (row[j - 1] < 1) throw std::invalid_argument("right_move: empty source box");
    row[j - 1] -= 1;
    row[j] += p;
    return row;
}

inline Row left_move(Row row, std::size_t j, const Int& p) {
    if (j < 1 || j >= row.size()) throw std::invalid_argument("left_move: bad column");
    if (row[j] < p) throw std::invalid_argument("left_move: fewer than p units to regroup");
    row[j] -= p;
    row[j - 1] += 1;
    return row;
}

// All distinct rows reachable by exactly l right moves. Moves cascade
// (a unit created by a move may itself move), so this is a BFS over l
// layers with dedup per layer; different move sequences landing on the
// same row count once. May be empty (nothing can move out of the last
// column).
inline std::set<Row> expand_row(const Row& row, const Int& l, const Int& p) {
    if (l < 0) throw std::invalid_argument("expand_row: negative move count");
    std::set<Row> layer{row};
    for (Int step = 0; step < l; ++step) {
        std::set<Row> next;
        for (const Row& r : layer)
            for (std::size_t j = 1; j < r.size(); ++j)
                if (r[j - 1] >= 1) next.insert(right_move(r, j, p));
        layer = std::move(next);
        if (layer.empty()) break;
    }
    return layer;
}

inline ReductionSeed reduce_row(const Row& row, const Params& P) {
    Int t = push_value(row, P);
    Int pa = P.p_pow_alpha();
    return ReductionSeed{t / pa, t % pa};
}

// The unique bottom row absorbing a pushed-down value s: column 1 is 0
// and the rest are the base-p digits of p^alpha - s, so that the row
// value plus s is exactly p^alpha. Digits above the valuation of s are
// complements, the digit at the valuation is p - (digit of s), trailing
// positions are zero.
inline Row bottom_completion(const Int& s, const Params& P) {
    Int pa = P.p_pow_alpha();
    if (s < 1 || s >= pa)
        throw std::invalid_argument("bottom_completion: needs 1 <= s < p^alpha");
    DigitVec dv = to_digits(pa - s, P.p, P.alpha_p);
    Row row;
    row.reserve(P.width());
    row.push_back(0);
    for (Int& d : dv.digits) row.push_back(std::move(d));
    return row;
}

}  // namespace pqfrac
