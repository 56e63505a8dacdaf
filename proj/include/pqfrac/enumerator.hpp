#pragma once

// The table-based enumeration. Solutions are built top row first: a top
// row is parameterized by (l_1, s_1, st_1) where q*(p^alpha*st_1 + s_1)
// is its value and l_1 right moves re-expand it; every following row is
// parameterized the same way relative to the seed pushed down from the
// level above. Terminal records are either a bottom row (the unique
// digit completion of the pushed value) or a last row (pushed value a
// pure power of q, which zero rows below absorb). Records carry reduced
// rows plus pending right-move counts; expansion, global dedup, a
// discard filter for pure-q grids, and a verify gate produce the final
// ordered list.

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "moves.hpp"

namespace pqfrac {

struct TrailStep {
    Int l;    // right moves still to apply to this row
    Row row;  // reduced row, column 1 free, later columns base-p digits

    bool operator==(const TrailStep&) const = default;
};

struct ReducedSolution {
    std::vector<TrailStep> trail;  // top row first, downward
    SolutionKind kind = SolutionKind::bottom_row;
    Int alpha_q = 0;
    Int height = 0;

    bool operator==(const ReducedSolution&) const = default;
};

namespace detail {

// One root branch of the search: a concrete (l_1, s_1, st_1) choice.
struct RootChoice {
    Int l, s, st;
};

class TableSearch {
  public:
    using Sink = std::function<bool(ReducedSolution&&)>;  // false = stop

    TableSearch(const Params& P, Sink sink)
        : P_(P), pa_(P.p_pow_alpha()), sink_(std::move(sink)) {
        // Curtiss applied to q bounds the number of rows of any solution;
        // passing this depth means the bookkeeping is wrong, not the input.
        Int pw = 1;
        depth_cap_ = 2;
        while (below_sylvester(pw, P.n)) {
            pw *= P_.q;
            ++depth_cap_;
        }
    }

    static std::vector<RootChoice> root_choices(const Params& P) {
        std::vector<RootChoice> roots;
        Int l_max = P.n / (P.p - 1);
        Int st_max = P.n / P.q;
        Int pa = P.p_pow_alpha();
        for (Int l = 0; l <= l_max; ++l)
            for (Int s = 0; s < pa; ++s)
                for (Int st = 0; st <= st_max; ++st)
                    if (s != 0 || st != 0) roots.push_back({l, s, st});
        return roots;
    }

    // Runs one root branch to completion (or until the sink stops us).
    bool run_root(const RootChoice& c) {
        Int r1 = floor_mod(P_.q * c.s, pa_);
        Int d1 = (P_.q * c.s - r1) / pa_;
        Int col1 = P_.q * c.st + d1;
        Int n1 = P_.n - c.l * (P_.p - 1) - col1 - digit_sum(r1, P_.p);
        if (n1 < 0) return true;
        Row row = assemble_row(col1, r1);
        if (n1 == 0) {
            // Single-row record: all variables spent on the top row, the
            // push value p^alpha*st must be absorbed by zero rows below,
            // so st has to be a power of q. l != 0 keeps p present.
            Int b;
            if (c.s == 0 && c.l != 0 && power_of_q(c.st, b)) {
                ReducedSolution red;
                red.trail.push_back({c.l, std::move(row)});
                red.kind = SolutionKind::last_row;
                red.alpha_q = b + 1;
                red.height = b + 2;
                return sink_(std::move(red));
            }
            return true;
        }
        trail_.clear();
        trail_.push_back({c.l, std::move(row)});
        return step(2, n1, c.s, c.st);
    }

  private:
    // Row [col1 | digits of r], width alpha+1.
    Row assemble_row(const Int& col1, const Int& r) const {
        DigitVec dv = to_digits(r, P_.p, P_.alpha_p);
        Row row;
        row.reserve(to_size(P_.alpha_p) + 1);
        row.push_back(col1);
        for (Int& d : dv.digits) row.push_back(std::move(d));
        return row;
    }

    bool power_of_q(const Int& v, Int& b_out) const {
        if (v < 1) return false;
        Int b = 0, rest = v;
        while (rest % P_.q == 0) {
            rest /= P_.q;
            ++b;
        }
        b_out = b;
        return rest == 1;
    }

    bool record(SolutionKind kind, Int l, Row row, const Int& alpha_q, const Int& height) {
        trail_.push_back({std::move(l), std::move(row)});
        ReducedSolution red;
        red.trail = trail_;
        red.kind = kind;
        red.alpha_q = alpha_q;
        red.height = height;
        bool go = sink_(std::move(red));
        trail_.pop_back();
        return go;
    }

    // Level i >= 2. n_prev > 0 variables remain; (s_prev, st_prev) is the
    // seed pushed down from the stored row above.
    bool step(std::size_t i, const Int& n_prev, const Int& s_prev, const Int& st_prev) {
        if (Int(i) > depth_cap_)
            throw std::logic_error("internal: table search exceeded its depth cap");

        // Bounding l by alpha*floor(n_prev/p) looks tempting but is
        // wrong: that range is empty for n_prev < p and drops mandatory
        // l = 0 branches. A row spending c reduced entries plus
        // l*(p-1) expansion entries needs c + l*(p-1) <= n_prev, so
        // l <= n_prev/(p-1) covers everything; beyond it n_i < 0 anyway.
        Int l_max = n_prev / (P_.p - 1);

        // Bottom-row completion: only a pure in-row seed (st_prev = 0)
        // can land in the bottom row, and the completion of s_prev uses
        // a fixed number of entries, so l is pinned by the budget.
        if (st_prev == 0) {
            Int base = (P_.p - 1) * (P_.alpha_p - p_valuation(s_prev, P_.p)) + 1 -
                       digit_sum(s_prev, P_.p);
            for (Int l = 0; l <= l_max; ++l) {
                if (base + l * (P_.p - 1) == n_prev) {
                    if (!record(SolutionKind::bottom_row, l, bottom_completion(s_prev, P_),
                                Int(i) - 1, 1))
                        return false;
                }
            }
        }

        for (Int s = 0; s < pa_; ++s) {
            Int r = floor_mod(P_.q * s - s_prev, pa_);
            Int d = (P_.q * s - s_prev - r) / pa_;  // floored quotient
            Int head = n_prev + st_prev - d;
            if (head < 0) continue;
            Int nr = digit_sum(r, P_.p);
            Int st_cap = head / P_.q;
            for (Int st = 0; st <= st_cap; ++st) {
                if (s == 0 && st == 0) continue;
                Int col1 = P_.q * st - st_prev + d;
                if (col1 < 0) continue;
                Int spent = col1 + nr;
                for (Int l = 0; l <= l_max; ++l) {
                    Int ni = n_prev - l * (P_.p - 1) - spent;
                    if (ni < 0) break;
                    if (ni == 0) {
                        // Last-row check: the push value p^alpha*st must
                        // be a pure power of q within the stated budget.
                        Int side = n_prev + st_prev + (s_prev > 0 ? 1 : 0);
                        Int b;
                        if (side >= P_.q && s == 0 && power_of_q(st, b) &&
                            st <= side / P_.q) {
                            if (!record(SolutionKind::last_row, l, assemble_row(col1, r),
                                        b + Int(i), b + 2))
                                return false;
                        }
                        continue;
                    }
                    trail_.push_back({l, assemble_row(col1, r)});
                    bool go = step(i + 1, ni, s, st);
                    trail_.pop_back();
                    if (!go) return false;
                }
            }
        }
        return true;
    }

    const Params& P_;
    Int pa_;
    Int depth_cap_;
    Sink sink_;
    std::vector<TrailStep> trail_;
};

// Runs every root branch. With jobs == 1 the sink sees records in
// deterministic branch order and may stop the search early. With more
// jobs, `ordered` picks the trade-off: per-branch buckets merged in
// branch order (deterministic, but the search always runs to the end),
// or a locked sink fed as records arrive (arrival order varies, early
// stop aborts the remaining work).
inline void search_reduced(const Params& P, unsigned jobs, bool ordered,
                           const std::function<bool(ReducedSolution&&)>& sink) {
    std::vector<detail::RootChoice> roots = detail::TableSearch::root_choices(P);
    if (jobs <= 1) {
        detail::TableSearch search(P, sink);
        for (const auto& c : roots)
            if (!search.run_root(c)) return;
        return;
    }
    std::vector<std::vector<ReducedSolution>> buckets(ordered ? roots.size() : 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex sink_mutex;
    auto worker = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= roots.size()) return;
            detail::TableSearch search(P, [&](ReducedSolution&& red) {
                if (ordered) {
                    buckets[idx].push_back(std::move(red));
                } else {
                    std::lock_guard<std::mutex> lock(sink_mutex);
                    if (!sink(std::move(red))) stop.store(true, std::memory_order_relaxed);
                }
                return !stop.load(std::memory_order_relaxed);
            });
            search.run_root(roots[idx]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (!ordered) return;
    for (std::size_t idx = 0; idx < buckets.size(); ++idx)
        for (auto& red : buckets[idx])
            if (!sink(std::move(red))) return;
}

}  // namespace detail

inline std::vector<ReducedSolution> enumerate_reduced(const Params& P, unsigned jobs = 1) {
    P.validate();
    std::vector<ReducedSolution> out;
    detail::search_reduced(P, jobs, /*ordered=*/true, [&](ReducedSolution&& red) {
        out.push_back(std::move(red));
        return true;
    });
    return out;
}

// Cartesian product of the per-row expansions, assembled into grids.
// Last-row records get their zero rows below; may be empty when some
// row cannot absorb its pending moves.
inline std::vector<SolutionGrid> expand_reduced(const ReducedSolution& red, const Params& P) {
    std::vector<std::set<Row>> options;
    options.reserve(red.trail.size());
    for (const TrailStep& stepv : red.trail) {
        options.push_back(expand_row(stepv.row, stepv.l, P.p));
        if (options.back().empty()) return {};
    }
    std::size_t total_rows = to_size(red.alpha_q) + 1;
    std::vector<SolutionGrid> out;
    std::vector<const Row*> pick(options.size());
    auto emit = [&] {
        SolutionGrid g;
        g.params = P;
        g.rows.assign(total_rows, Row(P.width(), 0));
        // trail row 0 is the top row (b = alpha_q), deeper rows follow.
        for (std::size_t t = 0; t < pick.size(); ++t)
            g.rows[total_rows - 1 - t] = *pick[t];
        out.push_back(std::move(g));
    };
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
        if (depth == options.size()) {
            emit();
            return;
        }
        for (const Row& r : options[depth]) {
            pick[depth] = &r;
            walk(depth + 1);
        }
    };
    walk(0);
    return out;
}

namespace detail {

inline bool grid_uses_p(const SolutionGrid& g) {
    for (const Row& r : g.rows)
        for (std::size_t a = 1; a < r.size(); ++a)
            if (r[a] != 0) return true;
    return false;
}

}  // namespace detail

// Full enumeration: expand every reduced record, dedup globally on the
// canonical key, discard grids in which p never appears (pure powers of
// q; the search keeps their records to stay aligned with the recursion,
// but they are not solutions of the two-prime equation), and gate every
// survivor through verify before returning them in canonical order.
inline std::vector<SolutionGrid> enumerate(const Params& P, unsigned jobs = 1) {
    P.validate();
    // Records may arrive in any order here: equal canonical keys imply
    // identical grids (expanded top rows are never all zero, so the key
    // is the whole grid), and the map re-sorts.
    std::map<CanonicalKey, SolutionGrid> seen;
    detail::search_reduced(P, jobs, /*ordered=*/false, [&](ReducedSolution&& red) {
        for (SolutionGrid& g : expand_reduced(red, P)) {
            if (!detail::grid_uses_p(g)) continue;
            CanonicalKey key = canonical_key(g);
            if (seen.find(key) != seen.end()) continue;
            VerificationReport rep = verify(g);
            if (!rep.is_valid)
                throw std::logic_error("internal: assembled grid failed verification: " +
                                       std::string(failure_name(rep.failures.front())));
            seen.emplace(std::move(key), std::move(g));
        }
        return true;
    });
    std::vector<SolutionGrid> out;
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
    return out;
}

inline Int count(const Params& P, unsigned jobs = 1) { return Int(enumerate(P, jobs).size()); }

// Short-circuits on the first expanded grid that survives the discard
// filter and verification.
inline bool exists(const Params& P, unsigned jobs = 1) {
    P.validate();
    bool found = false;
    detail::search_reduced(P, jobs, /*ordered=*/false, [&](ReducedSolution&& red) {
        for (SolutionGrid& g : expand_reduced(red, P)) {
            if (!detail::grid_uses_p(g)) continue;
            VerificationReport rep = verify(g);
            if (!rep.is_valid)
                throw std::logic_error("internal: assembled grid failed verification: " +
                                       std::string(failure_name(rep.failures.front())));
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace pqfrac
