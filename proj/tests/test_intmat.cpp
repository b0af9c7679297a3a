#include <random>

#include "doctest.h"
#include "tamellc/intmat.hpp"

using namespace tamellc;

TEST_CASE("smith normal form of a small matrix") {
    IntMat a(2, 2);
    a(0, 0) = 2; a(0, 1) = 4;
    a(1, 0) = 6; a(1, 1) = 8;
    SmithForm s = smith_normal_form(a);
    CHECK(s.d[0] == 2);
    CHECK(s.d[1] == 4);
    IntMat d = s.u * a * s.v;
    CHECK(d(0, 1) == 0);
    CHECK(d(1, 0) == 0);
    CHECK(s.v * s.v_inv == IntMat::identity(2));
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int it = 0; it < 40; ++it) {
        std::size_t m = 2 + it % 4, n = 2 + (it / 4) % 4;
        IntMat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = c(rng);
        SmithForm s = smith_normal_form(a);
        IntMat d = s.u * a * s.v;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(d(i, j) == (i == j ? s.d[i] : BigInt(0)));
        for (std::size_t i = 0; i + 1 < s.d.size(); ++i)
            if (s.d[i + 1] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
        CHECK(s.v * s.v_inv == IntMat::identity(n));
        IntMat k = left_kernel(a);
        IntMat z = k * a;
        for (std::size_t i = 0; i < z.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(z(i, j) == 0);
    }
}

TEST_CASE("solve_left") {
    IntMat w(2, 2);
    w(0, 0) = 3; w(1, 1) = 5;
    auto x = solve_left(w, {BigInt(6), BigInt(10)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 2);
    CHECK_FALSE(solve_left(w, {BigInt(1), BigInt(0)}));
}

TEST_CASE("lexmin coset representative matches brute force") {
    std::mt19937 rng(5);
    std::vector<BigInt> mod = {4, 6, 3};
    for (int it = 0; it < 30; ++it) {
        std::vector<std::vector<BigInt>> gens;
        for (int g = 0; g < 2; ++g)
            gens.push_back({BigInt(rng() % 4), BigInt(rng() % 6), BigInt(rng() % 3)});
        std::vector<BigInt> b = {BigInt(rng() % 4), BigInt(rng() % 6), BigInt(rng() % 3)};
        // brute force: enumerate b + x g1 + y g2 reduced, over x, y in [0, 12)
        std::vector<long> best;
        for (int x = 0; x < 12; ++x)
            for (int y = 0; y < 12; ++y) {
                std::vector<long> v(3);
                for (int j = 0; j < 3; ++j) {
                    BigInt t = b[j] + x * gens[0][j] + y * gens[1][j];
                    BigInt rr = ((t % mod[j]) + mod[j]) % mod[j];
                    v[j] = rr.get_si();
                }
                if (best.empty() || v < best) best = v;
            }
        auto r = lexmin_in_coset(b, gens, mod);
        for (int j = 0; j < 3; ++j) CHECK(r[j] == best[j]);
    }
}
