#include "doctest.h"
#include "tamellc/errors.hpp"
#include "tamellc/local_factors.hpp"

using namespace tamellc;

namespace {

// A model of the base field itself (e = f = 1), for characters of F^x.
TameParams base_field(int64_t p, int64_t r) {
    TameParams P;
    P.p = p, P.a = 1, P.q = p, P.e = 1, P.f = 1, P.m = 0, P.r = r, P.n = 1;
    P.l = (r + 1) / 2, P.lp = r / 2;
    return P;
}

using QMat = std::vector<std::vector<Rational>>;

// Cofactor expansion of det(x I - A) at integer x, for an interpolation oracle.
Rational det(QMat A) {
    std::size_t n = A.size();
    if (n == 0) return 1;
    Rational s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        QMat minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(A[i][j]);
            minor.push_back(row);
        }
        s += (c % 2 ? -1 : 1) * A[0][c] * det(minor);
    }
    return s;
}

}  // namespace

TEST_CASE("charpoly against cofactor expansion") {
    QMat A{{Rational(2), Rational(1, 2), Rational(-1)}, {Rational(0), Rational(3), Rational(4)}, {Rational(1), Rational(1), Rational(5, 3)}};
    QPoly cp = charpoly(A);
    for (int x = -3; x <= 3; ++x) {
        QMat B = A;
        for (std::size_t i = 0; i < 3; ++i) {
            for (auto& v : B[i]) v = -v;
            B[i][i] += x;
        }
        CHECK(cp.eval(Rational(x)) == det(B));
    }
    QPoly d = det_one_minus_uA(A);
    CHECK(d.coeff(0) == 1);
    CHECK(d.coeff(1) == -(A[0][0] + A[1][1] + A[2][2]));
    CHECK(d.coeff(3) == -det(A));
}

TEST_CASE("abelian factors over the base field") {
    auto P = base_field(3, 3);
    Model M = build_model(P);
    UnitGroup G(M, 3);
    MultChar one = MultChar::trivial(G);
    auto t = eps_abelian(one);
    CHECK(t.a == 0);
    CHECK(t.w == Cyclotomic(1));
    CHECK(t.L() == RatFunc(QPoly(Rational(1)), QPoly(std::vector<Rational>{1, -1})));
    for (int64_t p : {3, 5, 7}) {
        auto Pp = base_field(p, 2);
        Model Mp = build_model(Pp);
        UnitGroup Gp(Mp, 2);
        MultChar leg = residue_legendre(Gp);
        auto q = eps_abelian(leg);
        CHECK(q.a == 1);
        CHECK(q.L() == RatFunc(QPoly(Rational(1)), QPoly(Rational(1))));
        CHECK(cyc_conj_norm(q.w) == Cyclotomic(1));
        // w^2 = eta(-1) = (-1)^{(p-1)/2}
        CHECK(q.w * q.w == Cyclotomic(((p - 1) / 2) % 2 ? -1 : 1));
        // |.|^s twist: a unchanged, epsilon scaled by q^{-s a}
        CHECK(q.eps_twisted(1).to_cyclotomic() * Cyclotomic(p) == q.eps().to_cyclotomic());
    }
    auto u = eps_unramified(Cyclotomic(-1), 5);
    CHECK(u.a == 0);
    CHECK(u.w == Cyclotomic(1));
    CHECK(u.L() == RatFunc(QPoly(Rational(1)), QPoly(std::vector<Rational>{1, 1})));
}

TEST_CASE("direct sums are additive") {
    auto a = eps_unramified(Cyclotomic(1), 3), b = eps_unramified(Cyclotomic(-1), 3);
    auto s = direct_sum(a, b);
    CHECK(s.a == a.a + b.a);
    CHECK(s.w == a.w * b.w);
    CHECK(s.L() == RatFunc(QPoly(Rational(1)), QPoly(std::vector<Rational>{1, 0, -1})));
    CHECK_THROWS_AS(direct_sum(a, eps_unramified(Cyclotomic(1), 5)), InvalidParams);
}

TEST_CASE("lambda factors") {
    for (auto k : {std::array<int64_t, 3>{3, 2, 1}, {5, 2, 1}, {5, 4, 1}, {7, 2, 1}, {7, 3, 1}, {7, 6, 1}, {3, 2, 2}, {3, 4, 2}}) {
        auto P = validate_params(k[0], 1, k[1], k[2], 0, 2);
        CAPTURE(P.str());
        Model M = build_model(P);
        Cyclotomic c = lambda_closed(M), b = lambda_bruteforce(M);
        CHECK(cyc_conj_norm(c) == Cyclotomic(1));
        CHECK(c == (b * lambda_unramified(P).pow(P.e)).shrink());
        CHECK(lambda_unramified(P) == Cyclotomic(1));
        if (P.e % 2 == 1) CHECK(c == Cyclotomic(1));
    }
    // e = 2, q = 3: lambda = +-G_quad(F_3), so lambda^2 = -1
    Model M = build_model(validate_params(3, 1, 2, 1, 0, 2));
    Cyclotomic l = lambda_closed(M);
    CHECK(l * l == Cyclotomic(-1));
}

TEST_CASE("induced factors") {
    // Ind of the trivial character of the unramified quadratic extension
    auto P = validate_params(3, 1, 1, 2, 0, 2);
    Model M = build_model(P);
    UnitGroup A(M, 2);
    auto t = induced_factor(MultChar::trivial(A), lambda_unramified(P));
    CHECK(t.a == 0);
    CHECK(t.L() == RatFunc(QPoly(Rational(1)), QPoly(std::vector<Rational>{1, 0, -1})));
    // discriminant part for e = 2: a = f(e - 1)
    auto P2 = validate_params(3, 1, 2, 1, 0, 2);
    Model M2 = build_model(P2);
    UnitGroup A2(M2, 4);
    CHECK(induced_factor(MultChar::trivial(A2), lambda_closed(M2)).a == 1);
}

TEST_CASE("principal parameter") {
    auto d2 = principal_triple(2, 3);
    CHECK(d2.gamma0 == Rational(9, 4));
    CHECK(d2.triple.a == 2);
    auto d3 = principal_triple(3, 3);
    CHECK(d3.gamma0 == Rational(243, 13));
    for (int64_t n = 2; n <= 5; ++n)
        for (int64_t q : {3, 5, 7}) {
            auto d = principal_triple(n, q);
            CHECK(d.triple.a == n * (n - 1));
            CHECK(d.triple.w == Cyclotomic(1));
            std::vector<Rational> want;
            for (int64_t k = 1; k < n; ++k) want.push_back(qpow(q, -k));
            CHECK(d.frob_eigenvalues == want);
            CHECK(d.gamma0 == qpow(q, n * (n - 1) / 2) * (1 - qpow(q, -1)) / (1 - qpow(q, -n)));
        }
    CHECK_THROWS_AS(principal_triple(1, 3), InvalidParams);
}

TEST_CASE("Sym_n pairing") {
    for (int64_t n = 0; n <= 6; ++n) {
        auto r = sym_pairing_check(n, sl2_test_set());
        CHECK(r.invariant);
        CHECK(r.parity);
    }
    std::array<Cyclotomic, 4> not_sl2{Cyclotomic(2), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)};
    CHECK_THROWS_AS(sym_pairing_check(2, {not_sl2}), InvalidParams);
}

TEST_CASE("Weil-Deligne assembly") {
    // trivial SL_2 part reduces to the Weil factors
    auto P = base_field(5, 2);
    Model M = build_model(P);
    UnitGroup G(M, 2);
    auto leg = eps_abelian(residue_legendre(G));
    auto w = wd_factors(WDDescriptor::weil_only(leg));
    CHECK(w.a == leg.a);
    CHECK(w.w == leg.w);
    // principal: a = n(n - 1)
    for (int64_t n = 2; n <= 5; ++n) CHECK(wd_factors(WDDescriptor::principal_sym(n, 3)).a == n * (n - 1));
    // sums add a and multiply w
    auto D = WDDescriptor::weil_only(leg) + WDDescriptor::weil_only(eps_unramified(Cyclotomic(-1), 5));
    auto s = wd_factors(D);
    CHECK(s.a == leg.a);
    CHECK(s.w == leg.w);
    // Sym_1 twisted by an unramified character: L shifts by q^{-1/2}
    WDDescriptor one;
    one.q = 4;
    one.pieces.push_back({1, eps_unramified(Cyclotomic(1), 4)});
    auto f = wd_factors(one);
    CHECK(f.a == 1);
    CHECK(f.L() == RatFunc(QPoly(Rational(1)), QPoly(std::vector<Rational>{Rational(1), Rational(-1, 2)})));
    CHECK(f.w == Cyclotomic(-1));
}
