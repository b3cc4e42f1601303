#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>

namespace aztec {

using Int = mpz_class;
using Rat = mpq_class;

// 2^e as an exact rational; e may be negative.
inline Rat pow2_rat(long e) {
    Rat r = 1;
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

inline Int pow2_int(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Exact division; aborts if the divisor does not divide the dividend.
inline Int div_exact(const Int& a, const Int& b) {
    assert(b != 0);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    assert(r == 0 && "division in a closed-form product must be exact");
    return q;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

}  // namespace aztec
