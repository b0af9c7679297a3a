#pragma once

// The tame Galois group Gal(K/F) = <delta, rho> with delta^e = 1,
// rho^{-1} delta rho = delta^q and rho^f = delta^m, plus the ramification
// filtration data of the adjoint parameter.

#include <cstdint>
#include <string>
#include <vector>

#include "tamellc/exactnum.hpp"

namespace tamellc {

struct TameParams {
    int64_t p = 0, a = 0, q = 0, e = 0, f = 0, m = 0, r = 0;
    int64_t n = 0, l = 0, lp = 0;  // n = ef, l = ceil(r/2), lp = floor(r/2)
    bool supercuspidal_ok = false;  // lp >= 2(e-1)

    std::string str() const;
};

TameParams validate_params(int64_t p, int64_t a, int64_t e, int64_t f, int64_t m, int64_t r);
// Same, with p and a recovered from the prime power q.
TameParams params_from_q(int64_t q, int64_t e, int64_t f, int64_t m, int64_t r);

// delta^i rho^j
struct GalElt {
    int64_t i = 0, j = 0;
    bool operator==(const GalElt& o) const { return i == o.i && j == o.j; }
    bool operator!=(const GalElt& o) const { return !(*this == o); }
    bool operator<(const GalElt& o) const { return i != o.i ? i < o.i : j < o.j; }
};

std::string gal_str(const GalElt& g);

// q^{-1} mod e, represented in (0, e]
int64_t conj_exponent(const TameParams& P);
GalElt gal_mul(const GalElt& g1, const GalElt& g2, const TameParams& P);
GalElt gal_inv(const GalElt& g, const TameParams& P);
GalElt gal_pow(const GalElt& g, int64_t k, const TameParams& P);
int64_t gal_order(const GalElt& g, const TameParams& P);
// All n elements, ordered by (j, i).
std::vector<GalElt> gal_elements(const TameParams& P);
std::size_t gal_index(const GalElt& g, const TameParams& P);
inline bool gal_in_inertia(const GalElt& g) { return g.j == 0; }

struct OrderTwoInfo {
    std::vector<GalElt> H;          // {g : g^2 = 1}, by enumeration
    std::vector<GalElt> predicted;  // the case table for H
    bool matches = false;
    // The case table for f, e, m even presupposes 2a = -m (mod e) with
    // e | q^{f/2} - 1; false when those elements do not all square to 1.
    bool table_hypothesis_holds = true;
    std::vector<bool> ramified;  // parallel to H: K/K_gamma ramified iff gamma in <delta>
    bool in_center = false;
};

OrderTwoInfo order_two_set(const TameParams& P);

std::vector<GalElt> commutator_subgroup(const TameParams& P);
int64_t abelianization_order(const TameParams& P);
// Number of homomorphisms Gamma -> C^x, counted from the defining relations.
int64_t count_gamma_characters(const TameParams& P);

// (O_F^x : N(O_K^x)) as |Gamma^ab| / f.
int64_t norm_index(const TameParams& P);
int64_t norm_index_closed(const TameParams& P);  // gcd(e, q-1)

struct FiltrationData {
    Rational size;   // |V_t|
    int64_t fixdim;  // dim of the V_t-fixed part of the adjoint space
};

FiltrationData filtration_data(const TameParams& P, const BigInt& t);

}  // namespace tamellc
