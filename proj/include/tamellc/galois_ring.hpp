#pragma once

// GR(p^r, d) = (Z/p^r)[X]/(h) with h the lift of the lexicographically least
// monic irreducible polynomial of degree d over F_p.

#include <cstdint>
#include <vector>

#include "tamellc/exactnum.hpp"

namespace tamellc {

using Vec = std::vector<int64_t>;

// Polynomials over F_p, low degree first; used to pick the defining polynomial.
bool fp_poly_irreducible(const Vec& h, int64_t p);
// Monic, degree d; order: compare (c_{d-1}, ..., c_0) lexicographically.
Vec least_irreducible(int64_t p, int64_t d);

class GaloisRing {
public:
    GaloisRing() = default;
    GaloisRing(int64_t p, int64_t r, int64_t d);

    int64_t p() const { return p_; }
    int64_t r() const { return r_; }
    int64_t d() const { return d_; }
    int64_t modulus() const { return pr_; }  // p^r
    const Vec& h() const { return h_; }
    int64_t residue_size() const { return qd_; }  // p^d

    Vec zero() const { return Vec(d_, 0); }
    Vec one() const;
    Vec scalar(int64_t c) const;
    Vec x_pow(int64_t b) const;  // X^b reduced

    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec neg(const Vec& x) const;
    Vec scale(const Vec& x, int64_t c) const;
    Vec mul(const Vec& x, const Vec& y) const;
    Vec pow(const Vec& x, int64_t e) const;  // e >= 0
    bool is_unit(const Vec& x) const;
    Vec inv(const Vec& x) const;  // throws on non-units

    // Absolute trace to Z/p^r.
    int64_t trace(const Vec& x) const;
    // Residue digits as the integer sum_b (x_b mod p) p^b.
    int64_t residue_index(const Vec& x) const;
    Vec from_residue_index(int64_t idx) const;
    // x mod p^k (coefficients reduced, still stored in [0, p^r)).
    Vec reduce(const Vec& x, int64_t k) const;
    // Applies the Z/p^r-linear map given by columns: out = sum_b x_b col_b.
    Vec apply(const std::vector<Vec>& cols, const Vec& x) const;

    // Matrix (as images of X^b) of the Frobenius automorphism lifting x -> x^p.
    std::vector<Vec> frobenius_cols() const;

private:
    int64_t p_ = 0, r_ = 0, d_ = 0, pr_ = 1, qd_ = 1;
    Vec h_;
    Vec trace_basis_;  // Tr(X^b)
    std::vector<Vec> high_;  // X^{d+k} reduced, k < d - 1
};

}  // namespace tamellc
