// Exact rational scalar type (GMP mpq) plus the small helpers the pipeline
// needs: parsing "p/q" strings, floor/mod-1, integrality tests, lcm of
// denominators.  All arithmetic is exact; mpq_class keeps values canonical.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "vvmf/errors.hpp"

namespace vvmf {

using Int = mpz_class;
using Rat = mpq_class;

// num/den constructor with canonicalization (mpq_class does not reduce on
// its own when built from two integers).
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parse "p", "-p", or "p/q".  Throws UsageError on malformed input.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational literal '" + s + "'");
    }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rat& r) {
    return is_integer(r) && sgn(r) >= 0;
}

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// r mod 1, in [0, 1).
inline Rat rat_mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

inline Int lcm_denominators(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& r : v) {
        Int g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
        l = g;
    }
    return l;
}

// binomial(n, 2) as a rational, used by the extremality weight count.
inline Rat choose2(long n) { return rat(n * (n - 1), 2); }

}  // namespace vvmf
