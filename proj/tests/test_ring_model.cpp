#include "doctest.h"
#include "tamellc/errors.hpp"
#include "tamellc/ring_model.hpp"
#include "tamellc/unit_group.hpp"

using namespace tamellc;

namespace {

const std::array<int64_t, 6> kTuples[] = {
    {3, 1, 2, 1, 0, 4}, {3, 1, 1, 2, 0, 2}, {5, 1, 4, 1, 0, 2}, {5, 1, 4, 1, 1, 3}, {3, 1, 2, 1, 1, 4},
    {7, 1, 1, 2, 0, 4}, {5, 1, 2, 2, 1, 4}, {3, 1, 1, 4, 0, 3}, {7, 1, 2, 2, 1, 4}, {5, 1, 1, 3, 0, 3},
    {3, 2, 2, 1, 0, 2}, {3, 2, 4, 1, 1, 2},
};

TameParams tp(const std::array<int64_t, 6>& k) { return validate_params(k[0], k[1], k[2], k[3], k[4], k[5]); }

}  // namespace

TEST_CASE("Galois ring basics") {
    GaloisRing R(3, 2, 2);
    CHECK(R.modulus() == 9);
    CHECK(R.residue_size() == 9);
    CHECK(fp_poly_irreducible(R.h(), 3));
    // unit group of GR(9, 2) has order 8 * 9; count units by residue index
    int64_t units = 0;
    for (int64_t a = 0; a < 9; ++a)
        for (int64_t b = 0; b < 9; ++b) units += R.is_unit(Vec{a, b});
    CHECK(units == 72);
    Vec x{4, 7};
    CHECK(R.mul(x, R.inv(x)) == R.one());
    // Frobenius is a ring automorphism of order d fixing Z/p^r
    auto F = R.frobenius_cols();
    Vec y{2, 5};
    CHECK(R.apply(F, R.mul(x, y)) == R.mul(R.apply(F, x), R.apply(F, y)));
    CHECK(R.apply(F, R.apply(F, x)) == x);
    CHECK(R.apply(F, R.scalar(5)) == R.scalar(5));
}

TEST_CASE("model relations and beta") {
    for (const auto& k : kTuples) {
        auto P = tp(k);
        CAPTURE(P.str());
        Model M = build_model(P);
        CHECK(model_consistent(M));
        Vec beta = find_beta(M);
        CHECK(is_generator(M, beta));
        auto tn = trace_norm(M, beta);
        CHECK(tn.in_base);
        CHECK(tn.T == M.zero());
        if (P.a == 1) CHECK(charpoly_check(M, beta));
    }
}

TEST_CASE("Galois action is a ring automorphism") {
    auto P = tp({5, 1, 2, 2, 1, 4});
    Model M = build_model(P);
    Vec x = M.add(M.teich_elt(3), M.pi_pow(1)), y = M.add(M.one(), M.scale(M.pi_pow(2), 4));
    for (const auto& g : gal_elements(P)) {
        CHECK(M.act(g, M.mul(x, y)) == M.mul(M.act(g, x), M.act(g, y)));
        CHECK(M.act(g, M.add(x, y)) == M.add(M.act(g, x), M.act(g, y)));
        for (const auto& h : gal_elements(P)) CHECK(M.act(gal_mul(g, h, P), x) == M.act(g, M.act(h, x)));
    }
}

TEST_CASE("symplectic form and centralizer") {
    auto P = tp({3, 1, 2, 1, 0, 4});
    Model M = build_model(P);
    auto s = symplectic_check(M, find_beta(M));
    CHECK(s.ok());
    CHECK(s.quotient_dim == 2);  // n^2 - n
    auto P3 = tp({5, 1, 1, 3, 0, 3});
    Model M3 = build_model(P3);
    CHECK(symplectic_check(M3, find_beta(M3)).quotient_dim == 6);
    for (int64_t p : {3, 5}) {
        Model Mc = build_model(validate_params(p, 1, 1, 2, 0, 2));
        CHECK(centralizer_bruteforce(Mc, find_beta(Mc), 2));
        // a scalar is not regular
        CHECK_FALSE(centralizer_bruteforce(Mc, Mc.scale(Mc.one(), 2), 2));
    }
    Model M9 = build_model(tp({3, 2, 2, 1, 0, 2}));
    CHECK_THROWS_AS(regular_matrix(M9, M9.one()), TooLarge);
}

TEST_CASE("unit group orders and discrete log") {
    for (const auto& k : kTuples) {
        auto P = tp(k);
        CAPTURE(P.str());
        Model M = build_model(P);
        for (int64_t N : {int64_t(1), int64_t(2), P.e * P.r}) {
            UnitGroup G(M, N);
            // |(R / pi^N)^x| = (q^f - 1) q^{f(N - 1)}
            BigInt want = (ipow_big(P.q, P.f) - 1) * ipow_big(P.q, P.f * (N - 1));
            CHECK(G.order() == want);
        }
    }
    auto P = tp({3, 1, 2, 1, 0, 4});
    Model M = build_model(P);
    UnitGroup G(M, 4);
    int64_t units = 0;
    for_each_element(M, 4, [&](const Vec& x) {
        if (!M.is_unit(x)) return;
        ++units;
        CHECK(M.truncate(G.element(G.coords(x)), 4) == M.truncate(x, 4));
    });
    CHECK(units == 54);
}
