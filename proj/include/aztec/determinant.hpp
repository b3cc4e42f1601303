#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aztec/bigint.hpp"

namespace aztec {

// Dense integer matrix in row-major order, entries small (graph matrices are 0/±1).
struct IntMatrix {
    int n = 0;
    std::vector<int> a;

    explicit IntMatrix(int n_ = 0) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
    int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

namespace detail {

inline bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (v % p == 0) return v == p;
    }
    // Deterministic Miller-Rabin for 64-bit range.
    auto mulmod = [](uint64_t x, uint64_t y, uint64_t m) -> uint64_t {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
    };
    auto powmod = [&](uint64_t b, uint64_t e, uint64_t m) {
        uint64_t r = 1;
        b %= m;
        while (e) {
            if (e & 1) r = mulmod(r, b, m);
            b = mulmod(b, b, m);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (w % v == 0) continue;
        uint64_t x = powmod(w, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, v);
            if (x == v - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Fixed pool of 31-bit primes, generated on first use.
inline const std::vector<uint32_t>& prime_pool(size_t need) {
    static std::vector<uint32_t> pool;
    static uint32_t cursor = 0x7fffffffu;  // scan downward from 2^31 - 1
    while (pool.size() < need) {
        while (!is_prime_u64(cursor)) cursor -= 2;
        pool.push_back(cursor);
        cursor -= 2;
    }
    return pool;
}

// Determinant modulo p by Gaussian elimination.
inline uint64_t det_mod_p(const IntMatrix& m, uint64_t p) {
    const int n = m.n;
    std::vector<uint64_t> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long v = m.at(i, j) % static_cast<long long>(p);
            if (v < 0) v += static_cast<long long>(p);
            w[static_cast<size_t>(i) * n + j] = static_cast<uint64_t>(v);
        }
    auto mulmod = [p](uint64_t x, uint64_t y) -> uint64_t {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
    };
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    uint64_t det = 1;
    bool neg = false;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (w[static_cast<size_t>(r) * n + c] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = c; j < n; ++j)
                std::swap(w[static_cast<size_t>(piv) * n + j], w[static_cast<size_t>(c) * n + j]);
            neg = !neg;
        }
        uint64_t d = w[static_cast<size_t>(c) * n + c];
        det = mulmod(det, d);
        uint64_t inv = powmod(d, p - 2);
        for (int r = c + 1; r < n; ++r) {
            uint64_t f = w[static_cast<size_t>(r) * n + c];
            if (!f) continue;
            f = mulmod(f, inv);
            for (int j = c; j < n; ++j) {
                uint64_t sub = mulmod(f, w[static_cast<size_t>(c) * n + j]);
                uint64_t& cell = w[static_cast<size_t>(r) * n + j];
                cell = (cell >= sub) ? cell - sub : cell + p - sub;
            }
        }
    }
    if (neg) det = (det == 0) ? 0 : p - det;
    return det;
}

}  // namespace detail

// Exact determinant by CRT over 31-bit primes; prime count chosen from the
// Hadamard bound so the reconstructed residue determines the signed value.
inline Int exact_determinant(const IntMatrix& m) {
    const int n = m.n;
    if (n == 0) return 1;
    double log2_bound = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = m.at(i, j);
            s += v * v;
        }
        if (s == 0.0) return 0;
        log2_bound += 0.5 * std::log2(s);
    }
    size_t need = static_cast<size_t>(log2_bound / 30.9) + 2;
    const auto& primes = detail::prime_pool(need);

    Int x = 0;   // running CRT value, canonical in [0, mod)
    Int mod = 1;
    for (size_t i = 0; i < need; ++i) {
        uint64_t p = primes[i];
        uint64_t r = detail::det_mod_p(m, p);
        // x_new = x + mod * t, with t = (r - x) / mod  (mod p)
        Int mod_p = mod % p;
        Int x_p = x % p;
        uint64_t mod_inv;
        {
            uint64_t mp = mpz_get_ui(mod_p.get_mpz_t()) % p;
            // p is prime and mod < product of other primes, so mp != 0
            uint64_t e = p - 2, b = mp, acc = 1;
            while (e) {
                if (e & 1) acc = static_cast<uint64_t>((static_cast<unsigned __int128>(acc) * b) % p);
                b = static_cast<uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
                e >>= 1;
            }
            mod_inv = acc;
        }
        uint64_t xr = mpz_get_ui(x_p.get_mpz_t()) % p;
        uint64_t diff = (r >= xr) ? r - xr : r + p - xr;
        uint64_t t = static_cast<uint64_t>((static_cast<unsigned __int128>(diff) * mod_inv) % p);
        x += mod * t;
        mod *= p;
    }
    if (x * 2 > mod) x -= mod;  // symmetric lift gives the sign
    return x;
}

// Fraction-free Bareiss elimination; exact but cubic in bignum size, used as a
// cross-check oracle on small matrices.
inline Int determinant_bareiss(const IntMatrix& m) {
    const int n = m.n;
    if (n == 0) return 1;
    std::vector<Int> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * n + j] = m.at(i, j);
    Int prev = 1;
    bool neg = false;
    for (int c = 0; c < n - 1; ++c) {
        if (w[static_cast<size_t>(c) * n + c] == 0) {
            int piv = -1;
            for (int r = c + 1; r < n; ++r)
                if (w[static_cast<size_t>(r) * n + c] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j)
                std::swap(w[static_cast<size_t>(piv) * n + j], w[static_cast<size_t>(c) * n + j]);
            neg = !neg;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j) {
                Int num = w[static_cast<size_t>(r) * n + j] * w[static_cast<size_t>(c) * n + c] -
                          w[static_cast<size_t>(r) * n + c] * w[static_cast<size_t>(c) * n + j];
                w[static_cast<size_t>(r) * n + j] = div_exact(num, prev);
            }
            w[static_cast<size_t>(r) * n + c] = 0;
        }
        prev = w[static_cast<size_t>(c) * n + c];
    }
    Int det = w[static_cast<size_t>(n - 1) * n + (n - 1)];
    return neg ? Int(-det) : det;
}

}  // namespace aztec
