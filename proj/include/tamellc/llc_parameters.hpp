#pragma once

// Data of the parameter phi = Ind_K^F theta~ and of Ad o phi: the monomial
// matrices of phi_1, the decomposition of Ad o phi into induced pieces, and
// its L-factor, conductor, gamma at 0 and root number by independent routes.

#include <cstdint>
#include <string>
#include <vector>

#include "tamellc/characters.hpp"
#include "tamellc/exactnum.hpp"
#include "tamellc/local_factors.hpp"
#include "tamellc/tame_galois.hpp"

namespace tamellc {

// A cocycle value alpha(sigma, tau), kept symbolic.
struct CocycleSymbol {
    GalElt sigma, tau;
    bool trivial() const { return sigma == GalElt{} || tau == GalElt{}; }
};

struct MonomialEntry {
    std::size_t col = 0;
    Cyclotomic value;             // theta~ part
    std::vector<CocycleSymbol> cocycles;
};

// Row i holds the single nonzero entry of phi_1(sigma, x) in the basis
// v_gamma, gamma in gal_elements order.
struct MonomialMatrix {
    std::vector<MonomialEntry> rows;
    bool is_monomial() const;
};

// phi_1(sigma x) for x a unit of the model: x v_tau = theta~(x^tau) v_tau and
// sigma v_tau = alpha(sigma, tau) v_{sigma tau}.
MonomialMatrix phi1_matrix(const MultChar& tt, const GalElt& sigma, const Vec& x);
// Trace of phi_1(sigma x); throws if a nontrivial cocycle survives on the diagonal.
Cyclotomic phi1_trace(const MultChar& tt, const GalElt& sigma, const Vec& x);
// Character of Ad o phi at x in K^x from the decomposition:
// (n - 1) + sum_{gamma != 1} sum_sigma theta~_gamma(x^sigma)
Cyclotomic adjoint_character(const MultChar& tt, const Vec& x);

struct AdjointDecomposition {
    int64_t n = 0;
    int64_t regular_dim = 0;  // Ind_K^F 1 minus 1
    std::vector<GalElt> induced;  // gamma != 1, each contributing Ind theta~_gamma
    std::vector<std::pair<GalElt, GalElt>> pairs;  // S paired with S^{-1}
    std::vector<GalElt> order_two;                  // gamma^2 = 1, gamma != 1
    int64_t dim() const { return regular_dim + n * static_cast<int64_t>(induced.size()); }
    bool partition_ok(const TameParams& P) const;
};

AdjointDecomposition adjoint_decompose(const TameParams& P);

enum class LMethod { Closed, Decomposition, Matrix };
enum class ConductorMethod { Filtration, Additivity };
enum class RootMethod { Closed, Assembled };

// With twists (theta~_gamma for gamma != 1, in adjoint_decompose order), the
// decomposition route reads unramifiedness off the characters; otherwise
// it uses the predicted conductors.
RatFunc adjoint_L(const TameParams& P, LMethod method, const std::vector<MultChar>* twists = nullptr);
// The (f-1) x (f-1) matrix of Frobenius on the inertia invariants.
std::vector<std::vector<Rational>> frobenius_matrix(int64_t f);

int64_t adjoint_conductor(const TameParams& P, ConductorMethod method);

struct Gamma0 {
    int64_t a = 0;
    Rational L_ratio;    // L(1) / L(0)
    Rational abs_gamma;  // q^{a/2} L(1) / L(0)
};

Gamma0 adjoint_gamma0(const TameParams& P);
// f (1 - q^{-1}) / (1 - q^{-f})
Rational L_ratio_closed(const TameParams& P);

// theta~ at (-1)^{n-1} times (-1)^{(q-1)f/2} when e is even.
Cyclotomic adjoint_root_number_closed(const TameParams& P, const Cyclotomic& vartheta_at_eps);
// lambda(K/F)^n prod_{gamma != 1} w(theta~_gamma).
Cyclotomic adjoint_root_number_assembled(const MultChar& tt, const Cyclotomic& lambda,
                                         GaussMethod method = GaussMethod::Auto);
// lambda(K/F) through the tower: lambda(K/K_0) lambda(K_0/F)^e, brute force where possible.
Cyclotomic lambda_tower(const Model& M);

int64_t centralizer_order(const TameParams& P);
// Count of characters of Gamma, i.e. of W_{K/F} trivial on K^x.
int64_t centralizer_order_bruteforce(const TameParams& P);

}  // namespace tamellc
