#include <numeric>
#include <set>

#include "doctest.h"
#include "tamellc/errors.hpp"
#include "tamellc/tame_galois.hpp"

using namespace tamellc;

namespace {

std::vector<TameParams> small_params() {
    std::vector<TameParams> out;
    for (int64_t q : {3, 5, 7, 9})
        for (int64_t n = 2; n <= 8; ++n)
            for (int64_t e = 1; e <= n; ++e) {
                if (n % e) continue;
                for (int64_t m = 0; m < e; ++m) {
                    try {
                        out.push_back(params_from_q(q, e, n / e, m, 2));
                    } catch (const InvalidParams&) {
                    }
                }
            }
    return out;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate_params(3, 1, 3, 1, 0, 4), InvalidParams);  // p | n
    CHECK_THROWS_AS(validate_params(3, 1, 2, 1, 2, 4), InvalidParams);  // m out of range
    CHECK_THROWS_AS(validate_params(3, 1, 4, 1, 0, 4), InvalidParams);  // e does not divide q - 1
    CHECK_THROWS_AS(validate_params(5, 1, 2, 1, 0, 1), InvalidParams);  // r < 2
    CHECK_THROWS_AS(validate_params(2, 1, 1, 3, 0, 2), InvalidParams);  // p = 2
    CHECK_THROWS_AS(params_from_q(6, 1, 2, 0, 2), InvalidParams);
    auto P = params_from_q(9, 2, 2, 0, 5);
    CHECK(P.p == 3);
    CHECK(P.a == 2);
    CHECK(P.n == 4);
    CHECK(P.l == 3);
    CHECK(P.lp == 2);
    CHECK(P.supercuspidal_ok);
    CHECK_FALSE(params_from_q(5, 4, 1, 0, 5).supercuspidal_ok);
}

TEST_CASE("group law satisfies the defining relations") {
    for (const auto& P : small_params()) {
        CAPTURE(P.str());
        GalElt one{}, d{1 % P.e, 0};
        GalElt r = gal_mul(one, GalElt{0, 1}, P);  // rho reduced: rho = delta^m when f = 1
        auto els = gal_elements(P);
        REQUIRE(els.size() == static_cast<std::size_t>(P.n));
        CHECK(gal_pow(d, P.e, P) == one);
        CHECK(gal_pow(r, P.f, P) == gal_pow(d, P.m, P));
        CHECK(gal_mul(gal_inv(r, P), gal_mul(d, r, P), P) == gal_pow(d, P.q, P));
        for (std::size_t k = 0; k < els.size(); ++k) {
            CHECK(gal_index(els[k], P) == k);
            CHECK(gal_mul(els[k], gal_inv(els[k], P), P) == one);
        }
        if (P.n <= 8)
            for (const auto& a : els)
                for (const auto& b : els)
                    for (const auto& c : els)
                        CHECK(gal_mul(gal_mul(a, b, P), c, P) == gal_mul(a, gal_mul(b, c, P), P));
    }
}

TEST_CASE("order-two set: enumeration against the case table") {
    for (const auto& P : small_params()) {
        CAPTURE(P.str());
        auto info = order_two_set(P);
        std::set<GalElt> brute;
        for (const auto& g : gal_elements(P))
            if (gal_mul(g, g, P) == GalElt{}) brute.insert(g);
        CHECK(std::set<GalElt>(info.H.begin(), info.H.end()) == brute);
        if (info.table_hypothesis_holds && info.in_center) CHECK(info.matches);
        for (std::size_t k = 0; k < info.H.size(); ++k)
            CHECK(info.ramified[k] == (info.H[k] != GalElt{} && info.H[k].j == 0));
    }
    // q = 5, e = 3, f = 2: Gamma is S_3 and its involutions are not central
    auto P = params_from_q(5, 3, 2, 0, 2);
    auto info = order_two_set(P);
    CHECK(info.H.size() == 4);
    CHECK_FALSE(info.in_center);
    CHECK(order_two_set(params_from_q(3, 2, 1, 0, 4)).in_center);
    CHECK(order_two_set(params_from_q(5, 4, 2, 0, 2)).in_center);
}

TEST_CASE("abelianization and norm index") {
    CHECK(abelianization_order(params_from_q(3, 2, 1, 0, 4)) == 2);
    CHECK(abelianization_order(params_from_q(3, 1, 2, 0, 2)) == 2);
    CHECK(abelianization_order(params_from_q(5, 4, 2, 0, 2)) == 8);
    for (const auto& P : small_params()) {
        CAPTURE(P.str());
        // independent count of Gamma^ab: n / |[Gamma, Gamma]| with the commutator
        // subgroup closed by brute force
        auto els = gal_elements(P);
        std::set<GalElt> comm{GalElt{}};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<GalElt> cur(comm.begin(), comm.end());
            for (const auto& a : els)
                for (const auto& b : els) {
                    GalElt c = gal_mul(gal_mul(a, b, P), gal_inv(gal_mul(b, a, P), P), P);
                    for (const auto& x : cur)
                        if (comm.insert(gal_mul(x, c, P)).second) grew = true;
                }
        }
        int64_t ab = P.n / static_cast<int64_t>(comm.size());
        CHECK(abelianization_order(P) == ab);
        CHECK(count_gamma_characters(P) == ab);
        CHECK(norm_index(P) == std::gcd(P.e, P.q - 1));
        CHECK(norm_index_closed(P) == norm_index(P));
    }
}

TEST_CASE("filtration data") {
    auto P = params_from_q(3, 2, 1, 0, 4);
    auto d0 = filtration_data(P, BigInt(0));
    CHECK(d0.size == Rational(2) * qpow(3, 8) * Rational(2, 3));
    CHECK(d0.fixdim == 0);
    // breaks at k = e(r-1) = 6
    CHECK(filtration_data(P, BigInt(1)).fixdim == 1);
    CHECK(filtration_data(P, ipow_big(3, 6) - 1).fixdim == 3);
    CHECK(filtration_data(P, ipow_big(3, 5)).fixdim == 3);
    CHECK(filtration_data(P, ipow_big(3, 5) - 1).fixdim == 1);
    CHECK_THROWS_AS(filtration_data(P, ipow_big(3, 8)), OutOfRange);
}
