#pragma once

// L-, epsilon- and gamma-factors of abelian characters and Weil-Deligne data,
// lambda-factors of tame extensions, and the symmetric-power pairing.
//
// Everything is normalized with n(psi) = 0 on F and dx giving O_F volume 1,
// so epsilon = w q^{a/2}.  L is a rational function of u = q^{-s}.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tamellc/characters.hpp"
#include "tamellc/exactnum.hpp"

namespace tamellc {

struct LocalFactorTriple {
    CPoly L_den = CPoly(Cyclotomic(1));  // L = 1 / L_den(u)
    int64_t a = 0;
    Cyclotomic w = 1;
    int64_t q = 1;

    RatFunc L() const { return RatFunc(QPoly(Rational(1)), to_qpoly(L_den)); }
    HalfPowerScalar eps() const { return HalfPowerScalar(w, a, q); }
    // epsilon of the twist by |.|^s: multiplied by q^{-s a}
    HalfPowerScalar eps_twisted(int64_t s) const { return HalfPowerScalar(w, a - 2 * s * a, q); }
    int64_t dim_inertia_fixed() const { return L_den.degree(); }
    std::string str() const;
};

LocalFactorTriple direct_sum(const LocalFactorTriple& x, const LocalFactorTriple& y);

// Factors of a character of K^x relative to psi_K; L in u_K = q_K^{-s}.
LocalFactorTriple eps_abelian(const MultChar& chi);
// Unramified character with chi(varpi) = z over a field with n(psi) = 0.
LocalFactorTriple eps_unramified(const Cyclotomic& z, int64_t q);

// lambda(K/F, psi) for the model's K.  Closed: the case formula in terms of
// the quadratic Gauss sum of K_0 and the Teichmuller class of c.  Bruteforce:
// product of the root numbers of the e characters of K_0^x trivial on norms.
Cyclotomic lambda_closed(const Model& M);
Cyclotomic lambda_bruteforce(const Model& M);  // lambda(K/K_0)
// lambda(K_0/F) as the product of root numbers of unramified characters.
Cyclotomic lambda_unramified(const TameParams& P);

// Ind_K^F chi for a character of K^x: a = f(e-1) + f a(chi), w = w(chi) lambda.
LocalFactorTriple induced_factor(const MultChar& chi, const Cyclotomic& lambda);

struct PrincipalData {
    LocalFactorTriple triple;
    std::vector<Rational> frob_eigenvalues;  // on ker ad N_0, from the matrix
    Rational gamma0;                         // |gamma(phi_0, Ad, 0)|
};

PrincipalData principal_triple(int64_t n, int64_t q);

// Invariant pairing on Sym_n: <e_i, e_{n-i}> = (-1)^i i! (n-i)!, e_i = x^{n-i} y^i.
struct SymPairingResult {
    bool invariant = false;
    bool parity = false;  // <u, v> = (-1)^n <v, u>
};
SymPairingResult sym_pairing_check(int64_t n, const std::vector<std::array<Cyclotomic, 4>>& gs);
std::vector<std::array<Cyclotomic, 4>> sl2_test_set();

// One isotypic piece V_k (x) Sym_k of a Weil-Deligne representation.
struct WDPiece {
    int64_t sym = 0;
    LocalFactorTriple weil;
};
struct WDDescriptor {
    std::vector<WDPiece> pieces;
    int64_t q = 1;
    static WDDescriptor principal_sym(int64_t n, int64_t q);
    static WDDescriptor weil_only(const LocalFactorTriple& t);
    WDDescriptor operator+(const WDDescriptor& o) const;
};
LocalFactorTriple wd_factors(const WDDescriptor& D);

// Charpoly det(x - A) over Q, low degree first (Faddeev-LeVerrier).
QPoly charpoly(const std::vector<std::vector<Rational>>& A);
// det(1 - u A)
QPoly det_one_minus_uA(const std::vector<std::vector<Rational>>& A);

}  // namespace tamellc
