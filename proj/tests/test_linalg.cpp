#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aztec/determinant.hpp"
#include "aztec/factor.hpp"

using namespace aztec;

namespace {

Int ipow(long base, unsigned e) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), e);
    return v;
}

}  // namespace

TEST_CASE("exact determinant on hand matrices") {
    IntMatrix a(1);
    a.at(0, 0) = 7;
    CHECK(exact_determinant(a) == 7);

    IntMatrix b(2);
    b.at(0, 0) = 2;
    b.at(0, 1) = 1;
    b.at(1, 0) = 1;
    b.at(1, 1) = 2;
    CHECK(exact_determinant(b) == 3);

    IntMatrix c(3);
    for (int j = 0; j < 3; ++j) {
        c.at(0, j) = j + 1;
        c.at(1, j) = j + 1;
        c.at(2, j) = j - 1;
    }
    CHECK(exact_determinant(c) == 0);

    IntMatrix d(3);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    d.at(2, 2) = -4;
    d.at(0, 1) = 9;
    d.at(0, 2) = -5;
    d.at(1, 2) = 8;
    CHECK(exact_determinant(d) == -24);

    CHECK(exact_determinant(IntMatrix(0)) == 1);
}

TEST_CASE("modular and fraction-free determinants agree") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            IntMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i, j) = static_cast<int>(rng() % 19) - 9;
            CHECK(exact_determinant(m) == determinant_bareiss(m));
        }
    }
}

TEST_CASE("determinants beyond one machine word") {
    // Diagonal of 64 twos: determinant 2^64 forces the multi-prime path.
    IntMatrix m(64);
    for (int i = 0; i < 64; ++i) m.at(i, i) = 2;
    CHECK(exact_determinant(m) == ipow(2, 64));
}

TEST_CASE("factorization formats") {
    CHECK(format_factorization(factorize(248832)) == "2^10 * 3^5");
    CHECK(format_factorization(factorize(1)) == "1");
    CHECK(format_factorization(factorize(-12)) == "-2^2 * 3");
    CHECK(format_factorization(factorize(1000003)) == "1000003");

    Int semi = Int(1000003) * 1000033;
    Factorization f = factorize(semi);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 1000003);
    CHECK(f.factors[1].first == 1000033);
    CHECK(f.cofactor == 1);

    Int golden = ipow(2, 118) * ipow(3, 4) * 11;
    CHECK(format_factorization(factorize(golden)) == "2^118 * 3^4 * 11");
}

TEST_CASE("factorization recombines to the input") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        Int v = Int(static_cast<unsigned long>(rng() % 1000000 + 2));
        Factorization f = factorize(v);
        Int back = f.cofactor;
        for (const auto& [p, e] : f.factors)
            for (unsigned i = 0; i < e; ++i) back *= p;
        CHECK(back == v);
    }
}
