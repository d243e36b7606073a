#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace operadkit {

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. No floating point appears anywhere in the algebraic kernels.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Renders "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rat& v) {
    Rat c(v);
    c.canonicalize();
    return c.get_str();
}

/// Parses "p" or "p/q"; throws std::invalid_argument on garbage.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace operadkit
