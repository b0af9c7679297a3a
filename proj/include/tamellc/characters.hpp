#pragma once

// Additive and multiplicative characters on the ring model: psi_K, chi_beta,
// the character theta of the norm-one units, its extension theta~, Galois
// twists, conductors and Gauss sums.
//
// Multiplicative characters live on A = (R / pi^{er})^x and take values in
// mu_M with M the exponent of A.  psi is normalized with n(psi) = 0 on F,
// F unramified over Q_p, so psi_K = psi o T_{K/F} has n(psi_K) = d(K) = e - 1.

#include <cstdint>
#include <vector>

#include "tamellc/exactnum.hpp"
#include "tamellc/unit_group.hpp"

namespace tamellc {

// zeta_order^exp
struct Root {
    int64_t order = 1;
    int64_t exp = 0;
    Cyclotomic value() const { return Cyclotomic::zeta(order, exp); }
};

class MultChar {
public:
    const UnitGroup* G = nullptr;
    int64_t modulus = 1;      // = G->exponent()
    std::vector<int64_t> a;   // chi(gens[k]) = zeta_modulus^{a[k]}
    int64_t pi_exp = 0;       // chi(pi) = zeta_modulus^{pi_exp}

    static MultChar trivial(const UnitGroup& G);
    int64_t log_coords(const std::vector<int64_t>& y) const;
    int64_t log(const Vec& u) const;  // u a unit
    Cyclotomic value(const Vec& u) const;
    Cyclotomic at_pi() const { return Cyclotomic::zeta(modulus, pi_exp); }
    bool trivial_on_units() const;
    MultChar inverse() const;
    MultChar operator*(const MultChar& o) const;
    bool operator==(const MultChar& o) const { return a == o.a && pi_exp == o.pi_exp; }
};

// psi_K(pi^{-v} y) for 0 <= v <= er.
Root psi_K(const Model& M, int64_t v, const Vec& y);
// psi(p^{-l'} T(y beta)) for x = 1 + p^l y; throws NotInSubgroup otherwise.
Root chi_beta(const Model& M, const Vec& beta, const Vec& x);

struct ThetaData {
    MultChar X;  // extension of chi_beta from 1 + p^l R to A (lex-least exponents)
    std::vector<std::vector<int64_t>> ubar;  // generators of U = ker N, in coordinates
    BigInt a_order, norm_image, ubar_order;
    BigInt s_order, ubar_s_order;            // |1 + p^l R|, |U cap (1 + p^l R)|
    BigInt theta_count;                      // |U| / |U cap (1 + p^l R)|
};

ThetaData extend_theta(const UnitGroup& A, const Vec& beta);
// theta(u) for u in U (checked).
Cyclotomic theta_value(const ThetaData& T, const Vec& u);
// Index (O_F^x : N(A)) read from the norm image, by the SNF route.
BigInt norm_index_model(const UnitGroup& A);
// Same, by closing the norms of the generators inside (O_F/p^r)^x.
int64_t norm_index_bruteforce(const Model& M);

struct ChiData {
    Cyclotomic closed;        // c((-1)^{n-1}) from the case table
    Cyclotomic brute = 1;     // product of (-1, K/K_gamma) by residue norm scans
    bool has_brute = false;
    int64_t ramified_count = 0;  // ramified order-two gamma != 1
};

ChiData chi_data_c(const TameParams& P, const Model* M);
// Quadratic residue character of the residue field, as a character of A.
MultChar residue_legendre(const UnitGroup& A);
// omega -> zeta_Q^k on the Teichmuller factor, trivial on one-units.
MultChar teichmuller_character(const UnitGroup& A, int64_t k);
// theta~ = X * legendre^{ramified_count}, theta~(pi) = 1.
MultChar theta_tilde(const ThetaData& T, const ChiData& c);
// chi_gamma(x) = chi(x) chi(gamma x)^{-1}
MultChar twist(const MultChar& chi, const GalElt& g);

int64_t conductor_bruteforce(const MultChar& chi);
// e(r-1) inside the inertia group, e(r-1)+1 outside, 0 for gamma = 1.
int64_t conductor_predicted(const TameParams& P, const GalElt& g);

enum class GaussMethod { Auto, Literal, Reduced };

// q_K^{-k/2} sum_{t in (O/pi^k)^x} chi(t)^{-1} psi_K(pi^{-v} s t), k = level of chi.
HalfPowerScalar gauss_sum(const MultChar& chi, int64_t k, int64_t v, const Vec& s,
                          GaussMethod method = GaussMethod::Auto);
// Tate root number chi(pi)^{d+k} G(chi, pi^{-(d+k)}) with d = e - 1, k = conductor.
Cyclotomic root_number(const MultChar& chi, GaussMethod method = GaussMethod::Auto);

// p^{-d/2} sum_{t in F_{p^d}^x} (t / F) zeta_p^{sign Tr(t)}
HalfPowerScalar quadratic_gauss_sum(int64_t p, int64_t d, int sign = 1);

bool regularity_check(const MultChar& chi);

}  // namespace tamellc
