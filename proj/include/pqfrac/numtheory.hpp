#pragma once

// Base-p arithmetic primitives: residues, digit vectors, digit sums,
// valuations, digit complements, and the Sylvester sequence.
//
// All integers are GMP mpz_class so nothing here can silently overflow;
// Sylvester numbers are doubly exponential and blow past 64 bits at S_7.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqfrac {

using Int = mpz_class;
using Rational = mpq_class;

// Digits are kept most-significant first, matching the left-to-right
// column layout used by every other module.
struct DigitVec {
    std::vector<Int> digits;
    Int base;

    std::size_t width() const { return digits.size(); }
};

inline std::size_t to_size(const Int& v) {
    if (v < 0 || !v.fits_ulong_p())
        throw std::overflow_error("value does not fit a machine size: " + v.get_str());
    return static_cast<std::size_t>(v.get_ui());
}

inline Int ipow(const Int& base, const Int& exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), to_size(exp));
    return r;
}

// Floored quotient and nonnegative remainder. mpz operator/ truncates
// toward zero, which is wrong for the negative arguments produced by
// q*s_i - s_{i-1}; these two always satisfy a = b*fdiv(a,b) + fmod(a,b)
// with 0 <= fmod < b.
inline Int floor_div(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// <m>_alpha: residue of m mod p^alpha in [0, p^alpha), also for m < 0.
inline Int residue_mod_power(const Int& m, const Int& p, const Int& alpha) {
    if (p < 2) throw std::invalid_argument("residue_mod_power: base must be >= 2");
    if (alpha < 1) throw std::invalid_argument("residue_mod_power: alpha must be >= 1");
    return floor_mod(m, ipow(p, alpha));
}

inline DigitVec to_digits(const Int& m, const Int& p, const Int& width) {
    if (p < 2) throw std::invalid_argument("to_digits: base must be >= 2");
    if (width < 1) throw std::invalid_argument("to_digits: width must be >= 1");
    if (m < 0) throw std::invalid_argument("to_digits: negative value");
    if (m >= ipow(p, width))
        throw std::overflow_error("to_digits: value " + m.get_str() + " needs more than " +
                                  width.get_str() + " base-" + p.get_str() + " digits");
    std::size_t w = to_size(width);
    std::vector<Int> out(w);
    Int rest = m;
    for (std::size_t i = w; i-- > 0;) {
        out[i] = rest % p;
        rest /= p;
    }
    return DigitVec{std::move(out), p};
}

inline Int from_digits(const DigitVec& dv) {
    Int acc = 0;
    for (const Int& d : dv.digits) {
        if (d < 0 || d >= dv.base) throw std::invalid_argument("from_digits: digit out of range");
        acc = acc * dv.base + d;
    }
    return acc;
}

// N(m) in base p; N_1 is the p=2 case.
inline Int digit_sum(const Int& m, const Int& p) {
    if (p < 2) throw std::invalid_argument("digit_sum: base must be >= 2");
    if (m < 0) throw std::invalid_argument("digit_sum: negative value");
    Int acc = 0, rest = m;
    while (rest > 0) {
        acc += rest % p;
        rest /= p;
    }
    return acc;
}

inline Int p_valuation(const Int& m, const Int& p) {
    if (m == 0) throw std::invalid_argument("p_valuation: undefined for 0");
    if (p < 2) throw std::invalid_argument("p_valuation: base must be >= 2");
    Int v = 0, rest = abs(m);
    while (rest % p == 0) {
        rest /= p;
        ++v;
    }
    return v;
}

// Digit complement of s: complement every digit above the valuation to
// p-1, replace the digit at the valuation by p minus itself, keep the
// trailing zeros. Equivalently p^(L+1) - s with L the leading digit index.
inline Int not_op(const Int& s, const Int& p) {
    if (s < 1) throw std::invalid_argument("not_op: needs s >= 1");
    Int power = p;
    while (power <= s) power *= p;
    return power - s;
}

// Extension of not_op to a fixed width alpha: zeros above the leading
// digit complement to p-1 as well, giving exactly p^alpha - s.
inline Int not_op_extended(const Int& s, const Int& p, const Int& alpha) {
    Int cap = ipow(p, alpha);
    if (s < 1 || s >= cap) throw std::invalid_argument("not_op_extended: needs 1 <= s < p^alpha");
    return cap - s;
}

// S_1 = 2, S_{i+1} = S_i^2 - S_i + 1 (same as 1 + prod of all earlier terms).
inline Int sylvester(const Int& i) {
    if (i < 1) throw std::invalid_argument("sylvester: index must be >= 1");
    Int s = 2;
    for (Int k = 1; k < i; ++k) s = s * s - s + 1;
    return s;
}

// Decides d < S_i without forming S_i. The sequence is strictly
// increasing, so the recurrence can stop as soon as it passes d; S_i
// itself has ~2^i digits and must never be materialized for large i.
inline bool below_sylvester(const Int& d, const Int& i) {
    if (i < 1) throw std::invalid_argument("below_sylvester: index must be >= 1");
    Int s = 2;
    for (Int k = 1; k < i && s <= d; ++k) s = s * s - s + 1;
    return d < s;
}

// Largest alpha with p^alpha < S_n. Every denominator of an n-term
// decomposition of 1 is below S_n, so no wider table can occur.
inline Int alpha_cap(const Int& p, const Int& n) {
    if (p < 2) throw std::invalid_argument("alpha_cap: base must be >= 2");
    if (n < 1) throw std::invalid_argument("alpha_cap: n must be >= 1");
    Int cap = sylvester(n);
    Int alpha = 0, power = p;
    while (power < cap) {
        power *= p;
        ++alpha;
    }
    return alpha;
}

// Deterministic trial division; fine for desk-scale inputs.
inline bool is_prime(const Int& m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0) return false;
    for (Int d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

}  // namespace pqfrac
