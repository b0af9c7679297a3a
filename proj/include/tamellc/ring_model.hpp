#pragma once

// Finite model R = GR(p^r, af)[pi] / (pi^e - c p) of O_K / p_K^{er}.
//
// Elements are flat vectors of length e*d (d = af): entry i*d + b is the
// coefficient of X^b pi^i in Z/p^r.  delta(pi) = zeta pi, rho(pi) = t pi, and
// rho acts on GR as the inverse of the q-Frobenius.  c, zeta, t are
// Teichmuller elements, stored by exponent relative to a fixed generator omega.

#include <cstdint>
#include <string>
#include <vector>

#include "tamellc/galois_ring.hpp"
#include "tamellc/tame_galois.hpp"

namespace tamellc {

class Model {
public:
    TameParams P;
    GaloisRing gr;
    int64_t d = 0;        // af
    int64_t Q = 0;        // p^d - 1
    int64_t levels = 0;   // er
    int64_t c_exp = 0, zeta_exp = 0, t_exp = 0;
    int64_t omega_residue = 0;  // residue index of the chosen generator

    // omega^k for k < Q and the inverse table on residues (-1 at 0).
    std::vector<Vec> teich;
    std::vector<int64_t> teich_log;
    std::vector<std::vector<Vec>> rho_pow_cols;  // rho^j on GR, j < f

    std::size_t size() const { return static_cast<std::size_t>(P.e * d); }
    Vec zero() const { return Vec(size(), 0); }
    Vec one() const;
    Vec from_gr(const Vec& x, int64_t slot = 0) const;
    Vec gr_part(const Vec& x, int64_t slot) const;
    Vec pi_pow(int64_t k) const;  // pi^k, k >= 0
    Vec teich_elt(int64_t k) const { return from_gr(teich[mod64(k, Q)]); }

    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec neg(const Vec& x) const;
    Vec scale(const Vec& x, int64_t c) const;
    Vec mul(const Vec& x, const Vec& y) const;
    Vec pow(const Vec& x, int64_t k) const;
    bool is_unit(const Vec& x) const;
    Vec inv(const Vec& x) const;
    // Smallest k with x not in pi^{k+1}; levels for x = 0.
    int64_t valuation(const Vec& x) const;
    // Representative of x mod pi^N with reduced coefficients.
    Vec truncate(const Vec& x, int64_t N) const;
    // Teichmuller exponent of the residue of a unit.
    int64_t residue_log(const Vec& x) const;

    Vec act(const GalElt& g, const Vec& x) const;
    int64_t unit_exponent(const GalElt& g) const;  // g(pi) = omega^k pi

    // Absolute trace to Z/p^r.
    int64_t abs_trace(const Vec& x) const;
    std::string str(const Vec& x) const;

    Vec cp_;  // c p in GR
};

// The deterministic search for (c, zeta, t); throws NoConsistentModel.
Model build_model(const TameParams& P);
// Verifies the defining relations as ring automorphisms on the generators.
bool model_consistent(const Model& M);

struct TraceNorm {
    Vec T;  // sum of conjugates (lies in the base)
    Vec N;  // product of conjugates
    bool in_base = false;
};

TraceNorm trace_norm(const Model& M, const Vec& x);
// Whether x is an element of O_F / p^r: pi-free and rho-fixed.
bool in_base(const Model& M, const Vec& x);

// Calls fn on every element of R / pi^N (reduced representatives).
template <class Fn>
void for_each_element(const Model& M, int64_t N, Fn&& fn);

// O_F[beta] = O_K test: {theta^j beta^k} spans R / p over F_p.
bool is_generator(const Model& M, const Vec& beta);
Vec find_beta(const Model& M);

// Regular representation of x over Z/p^r in the basis X^b pi^i (needs a = 1).
std::vector<std::vector<int64_t>> regular_matrix(const Model& M, const Vec& x);
bool centralizer_bruteforce(const Model& M, const Vec& beta, int64_t level);
struct SymplecticResult {
    bool alternating = false;
    bool nondegenerate = false;
    int64_t quotient_dim = 0;
    bool ok() const { return alternating && nondegenerate; }
};
SymplecticResult symplectic_check(const Model& M, const Vec& beta);
// char poly of the regular matrix mod p equals g^e, g irreducible of degree f,
// and equals the minimal polynomial.
bool charpoly_check(const Model& M, const Vec& beta);

// Rank of a matrix over F_p (rows are modified copies).
int64_t fp_rank(std::vector<std::vector<int64_t>> rows, int64_t p);

template <class Fn>
void for_each_element(const Model& M, int64_t N, Fn&& fn) {
    const int64_t e = M.P.e, d = M.d, p = M.P.p;
    // slot i carries precision p^{ceil((N - i)/e)}
    std::vector<int64_t> mods(M.size(), 1);
    for (int64_t i = 0; i < e; ++i) {
        int64_t prec = i < N ? (N - i + e - 1) / e : 0;
        for (int64_t b = 0; b < d; ++b) mods[i * d + b] = ipow64(p, prec);
    }
    Vec x(M.size(), 0);
    for (;;) {
        fn(static_cast<const Vec&>(x));
        std::size_t k = 0;
        while (k < x.size()) {
            if (++x[k] < mods[k]) break;
            x[k++] = 0;
        }
        if (k == x.size()) break;
    }
}

}  // namespace tamellc
