#pragma once

// The formal degree identity and the root number identity for the tame
// supercuspidals, with the counting formulas behind the formal degree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamellc/characters.hpp"
#include "tamellc/exactnum.hpp"
#include "tamellc/tame_galois.hpp"

namespace tamellc {

enum class DimMethod { Closed, Index, OrbitBruteforce };

// |SL_n(F_q)|
BigInt sl_order(int64_t n, int64_t q);
Rational dim_delta(const TameParams& P, DimMethod method);
// dim_delta over the Euler-Poincare normalization.
Rational formal_degree_EP(const TameParams& P);
// q^{(r-1)n(n-1)/2} (1 - q^{-n}) / [(O_F^x : N) (1 - q^{-f})]
Rational formal_degree_closed(const TameParams& P);

struct FormalDegreeCheck {
    Rational lhs;             // counting route
    Rational rhs;             // |gamma(phi)| / (|A_phi| |gamma(phi_0)|)
    Rational abs_gamma, gamma0_principal;
    int64_t centralizer = 0;
    bool ok() const { return lhs == rhs; }
};

FormalDegreeCheck verify_formal_degree(const TameParams& P);

// Tuples on which the model-based root number path runs at desk scale.
bool ring_model_supported(const TameParams& P);

// Everything the root number check needs from the ring model.
struct ThetaSetup {
    Model model;
    UnitGroup A;
    Vec beta;
    ThetaData theta;
    ChiData c;
    MultChar tt;
    // tame_twist k multiplies the extension X by teichmuller_character(A, k),
    // which leaves chi_beta on 1 + p^l R unchanged.
    explicit ThetaSetup(const TameParams& P, int64_t tame_twist = 0);
    ThetaSetup(const ThetaSetup&) = delete;
    ThetaSetup& operator=(const ThetaSetup&) = delete;
};

// theta((-1)^{n-1}); 1 for n odd, otherwise read from the model.
Cyclotomic theta_at_eps(const TameParams& P, const ThetaData* T);

struct RootNumberCheck {
    Cyclotomic closed, assembled, theta_eps, c_eps, vartheta_eps, lambda;
    bool c_consistent = false;  // c(eps) theta(eps) = theta~(eps)
    bool ok() const { return c_consistent && closed == assembled && closed == theta_eps; }
};

RootNumberCheck verify_root_number(const TameParams& P, int64_t tame_twist = 0);
RootNumberCheck verify_root_number(const ThetaSetup& S);

struct SweepRanges {
    std::vector<int64_t> qs;
    int64_t max_n = 4;
    int64_t r_lo = 2, r_hi = 4;
    bool root_number = true;
};

struct ConjectureReport {
    TameParams params;
    Rational dim_closed, dim_index;
    std::optional<Rational> dim_orbit;
    std::optional<FormalDegreeCheck> fd;
    std::optional<RootNumberCheck> rn;
    std::string rn_skip;              // why the root number check did not run
    std::vector<std::string> errors;  // kind: message
    double timing_ms = 0;
    bool dims_ok() const;
    bool ok() const;
};

ConjectureReport conjecture_report(const TameParams& P, bool root_number = true);

struct SweepResult {
    std::vector<ConjectureReport> reports;
    std::vector<std::string> excluded;  // "(q,e,f,m,r): reason"
    int64_t fd_pass = 0, fd_fail = 0, rn_pass = 0, rn_fail = 0, rn_skipped = 0;
};

// All (e, f, m) with n = ef <= max_n over the ranges, in (q, e, f, m, r) order.
std::vector<TameParams> sweep_tuples(const SweepRanges& R, std::vector<std::string>* excluded = nullptr);
SweepResult sweep_report(const SweepRanges& R, unsigned threads = 0);

std::vector<std::string> paper_typo_notes();

}  // namespace tamellc
