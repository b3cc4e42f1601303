#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aztec/bigint.hpp"

namespace aztec {

// Prime factorization with a bounded effort budget. If the budget runs out the
// remaining part is reported as an explicit composite cofactor.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;  // ascending primes
    Int cofactor = 1;                               // 1, or an unfactored composite
    int sign = 1;                                   // -1 for negative inputs

    Int value() const {
        Int v = cofactor;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) v *= p;
        return sign < 0 ? Int(-v) : v;
    }
};

namespace detail {

inline bool mr_probable_prime(const Int& n) {
    // GMP's test: 2 = definitely prime, 1 = probable, 0 = composite.
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

// Pollard rho (Brent variant). Returns a nontrivial factor or 0 on budget end.
inline Int pollard_rho(const Int& n, unsigned long seed, long budget) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (budget > 0) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        long r = 1;
        const long m = 128;
        while (d == 1 && budget > 0) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
                budget -= lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Int diff = (x > ys) ? x - ys : ys - x;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                if (--budget <= 0) break;
            }
        }
        if (d > 1 && d < n) return d;
    }
    return 0;
}

}  // namespace detail

inline Factorization factorize(Int n, long rho_budget = 4'000'000) {
    Factorization f;
    if (n < 0) { f.sign = -1; n = -n; }
    if (n == 0) { f.cofactor = 0; return f; }
    std::map<Int, unsigned> acc;
    for (uint64_t p = 2; p < 100'000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * Int(p) > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    Int leftover = 1;
    unsigned long seed = 0x5eed;
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (detail::mr_probable_prime(v)) {
            ++acc[v];
            continue;
        }
        Int d = detail::pollard_rho(v, seed++, rho_budget);
        if (d == 0) {
            leftover *= v;
            continue;
        }
        stack.push_back(d);
        stack.push_back(v / d);
    }
    f.factors.assign(acc.begin(), acc.end());
    f.cofactor = leftover;
    return f;
}

// Render as "2^118 * 3^4 * 11" with ascending primes; "1" for units.
inline std::string format_factorization(const Factorization& f) {
    std::string out = f.sign < 0 ? "-" : "";
    bool first = true;
    for (const auto& [p, e] : f.factors) {
        if (!first) out += " * ";
        out += p.get_str(10);
        if (e > 1) out += "^" + std::to_string(e);
        first = false;
    }
    if (f.cofactor != 1) {
        if (!first) out += " * ";
        out += f.cofactor.get_str(10);
        first = false;
    }
    if (first) out += "1";
    return out;
}

}  // namespace aztec
