#include "doctest.h"
#include "tamellc/conjectures.hpp"
#include "tamellc/errors.hpp"

using namespace tamellc;

TEST_CASE("SL_n orders") {
    // SL_2(F_3) by enumeration
    int64_t count = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) count += ((a * d - b * c) % 3 + 3) % 3 == 1;
    CHECK(sl_order(2, 3) == count);
    CHECK(sl_order(2, 5) == 120);
    CHECK(sl_order(3, 3) == 5616);
}

TEST_CASE("dim delta") {
    auto P = params_from_q(3, 2, 1, 0, 4);
    CHECK(dim_delta(P, DimMethod::Closed) == 36);
    CHECK(dim_delta(P, DimMethod::Index) == 36);
    auto P2 = params_from_q(3, 1, 2, 0, 2);
    CHECK(dim_delta(P2, DimMethod::Closed) == 6);
    CHECK(dim_delta(P2, DimMethod::OrbitBruteforce) == 6);
    auto P3 = params_from_q(5, 1, 2, 0, 2);
    CHECK(dim_delta(P3, DimMethod::Index) == 20);
    CHECK(dim_delta(P3, DimMethod::OrbitBruteforce) == 20);
    CHECK(Rational(sl_order(2, 5)) / 6 == 20);
    CHECK_THROWS_AS(dim_delta(params_from_q(5, 1, 3, 0, 2), DimMethod::OrbitBruteforce), TooLarge);
    for (const auto& Q : sweep_tuples(SweepRanges{{3, 5, 7, 9}, 6, 2, 5, false})) {
        Rational d = dim_delta(Q, DimMethod::Closed);
        CHECK(d == dim_delta(Q, DimMethod::Index));
        CHECK(d.get_den() == 1);
        CHECK(d > 0);
    }
}

TEST_CASE("formal degree") {
    const std::pair<std::array<int64_t, 5>, int64_t> spots[] = {
        {{3, 2, 1, 0, 4}, 18}, {{3, 1, 2, 0, 2}, 3}, {{5, 1, 2, 0, 2}, 5}};
    for (const auto& [k, v] : spots) {
        auto P = params_from_q(k[0], k[1], k[2], k[3], k[4]);
        CHECK(formal_degree_EP(P) == v);
        CHECK(formal_degree_closed(P) == v);
        auto c = verify_formal_degree(P);
        CHECK(c.lhs == v);
        CHECK(c.rhs == v);
        CHECK(c.ok());
    }
    auto c = verify_formal_degree(params_from_q(3, 2, 1, 0, 4));
    CHECK(c.abs_gamma == 81);
    CHECK(c.centralizer == 2);
    CHECK(c.gamma0_principal == Rational(9, 4));
}

TEST_CASE("theta at the central element") {
    CHECK(theta_at_eps(params_from_q(5, 1, 3, 0, 3), nullptr) == Cyclotomic(1));
    CHECK_THROWS_AS(theta_at_eps(params_from_q(3, 1, 2, 0, 2), nullptr), RingModelRequired);
    auto P = params_from_q(3, 1, 2, 0, 2);
    for (int64_t tw : {0, 1, 2}) {
        ThetaSetup S(P, tw);
        Cyclotomic t = theta_at_eps(P, &S.theta);
        CHECK((t == Cyclotomic(1) || t == Cyclotomic(-1)));
    }
    // the tame twist by omega -> zeta_8 flips theta(-1)
    ThetaSetup S0(P, 0), S1(P, 1);
    CHECK(theta_at_eps(P, &S0.theta) == -theta_at_eps(P, &S1.theta));
}

TEST_CASE("root number identity") {
    auto n_odd = verify_root_number(params_from_q(5, 1, 3, 0, 3));
    CHECK(n_odd.ok());
    CHECK(n_odd.closed == Cyclotomic(1));
    CHECK(n_odd.theta_eps == Cyclotomic(1));
    for (int64_t tw : {0, 1}) {
        auto c = verify_root_number(params_from_q(3, 2, 1, 0, 4), tw);
        CHECK(c.ok());
        CHECK(c.c_eps == Cyclotomic(-1));
        auto d = verify_root_number(params_from_q(3, 1, 2, 0, 3), tw);
        CHECK(d.ok());
        CHECK(d.c_eps == Cyclotomic(1));
    }
    CHECK_THROWS_AS(verify_root_number(params_from_q(3, 1, 2, 0, 2)), InvalidParams);
    CHECK_THROWS_AS(verify_root_number(params_from_q(5, 2, 1, 0, 3)), InvalidParams);
    CHECK_THROWS_AS(verify_root_number(params_from_q(7, 1, 6, 0, 3)), RingModelRequired);
}

TEST_CASE("sweeps") {
    auto S = sweep_report(SweepRanges{{3}, 2, 2, 4, true}, 2);
    CHECK(S.reports.size() == 9);  // 3 tuples with n = 2, r in 2..4
    CHECK(S.fd_pass == 9);
    CHECK(S.fd_fail == 0);
    CHECK(S.rn_fail == 0);
    CHECK(sweep_report(SweepRanges{{}, 4, 2, 4, true}).reports.empty());
    CHECK(sweep_report(SweepRanges{{3}, 4, 5, 4, true}).reports.empty());
    std::vector<std::string> excl;
    auto tuples = sweep_tuples(SweepRanges{{3}, 3, 2, 2, false}, &excl);
    CHECK(tuples.size() == 3);  // (2,1,0), (2,1,1), (1,2,0)
    CHECK(excl.size() == 4);    // (1,3,0) and (3,1,m) for m < 3: p divides n
    for (const auto& x : excl) CHECK(x.find("InvalidParams") != std::string::npos);
    // ordering does not depend on the number of workers
    auto A = sweep_report(SweepRanges{{3, 5}, 4, 2, 3, false}, 1);
    auto B = sweep_report(SweepRanges{{3, 5}, 4, 2, 3, false}, 4);
    REQUIRE(A.reports.size() == B.reports.size());
    for (std::size_t i = 0; i < A.reports.size(); ++i) CHECK(A.reports[i].params.str() == B.reports[i].params.str());
}
