#pragma once

// Exact arithmetic: rationals, elements of Q(zeta_M), formal half powers of q
// and rational functions in u = q^{-s}.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tamellc/errors.hpp"

namespace tamellc {

using Rational = mpq_class;
using BigInt = mpz_class;

// ---- small integer helpers -------------------------------------------------

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
int64_t mod64(int64_t a, int64_t m);  // result in [0, m)
int64_t powmod64(int64_t b, int64_t e, int64_t m);
int64_t inv_mod64(int64_t a, int64_t m);  // throws if not invertible
// Throws TooLarge on overflow.
int64_t ipow64(int64_t b, int64_t e);
BigInt ipow_big(int64_t b, int64_t e);
Rational qpow(int64_t q, int64_t e);  // q^e for any integer e
bool is_prime64(int64_t n);
// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<int64_t, int>> factorize64(int64_t n);
std::string rational_str(const Rational& r);

// ---- Cyclotomic ------------------------------------------------------------

// Element sum_k c_k zeta_M^k of Q(zeta_M), always stored in canonical form.
//
// Basis convention: write k through CRT as its components k_p mod p^a for
// each p^a || M.  The exponent is a basis element when every component has a
// leading base-p digit (floor(k_p / p^{a-1})) different from p-1 (for odd p)
// and equal to 0 (for p = 2).  Forbidden exponents are rewritten with the
// relation sum_{i<p} zeta^{k + i M/p} = 0.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(const Rational& r);
    // Canonicalizes the supplied raw coefficients.
    Cyclotomic(int64_t order, const std::map<int64_t, Rational>& raw);

    static Cyclotomic zeta(int64_t order, int64_t k);
    // Fast path for sums of roots of unity with integer multiplicities.
    static Cyclotomic from_counts(int64_t order,
                                  const std::unordered_map<int64_t, int64_t>& counts);

    int64_t order() const { return order_; }
    const std::map<int64_t, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational to_rational() const;  // throws if not rational

    Cyclotomic embed(int64_t multiple_order) const;
    // Smallest order dividing order() in which the value still lives.
    Cyclotomic shrink() const;
    Cyclotomic conj() const;
    Cyclotomic pow(int64_t e) const;  // e >= 0, or e < 0 for roots of unity only

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Text form "[M] c*z^k + ..."; rationals print as plain rationals.
    std::string str() const;
    // Numeric value at zeta_M = exp(2 pi i / M); debugging only.
    std::pair<double, double> to_complex() const;

private:
    int64_t order_ = 1;
    std::map<int64_t, Rational> terms_;

    void canonicalize();
};

Cyclotomic cyc_canonicalize(const Cyclotomic& x);
Cyclotomic cyc_conj_norm(const Cyclotomic& x);
// Positive square root of the odd prime p, via the quadratic Gauss sum.
Cyclotomic sqrt_prime(int64_t p);

// ---- HalfPowerScalar -------------------------------------------------------

// coef * q^{half_exp / 2}; q^{1/2} stays formal until to_cyclotomic().
struct HalfPowerScalar {
    Cyclotomic coef = Cyclotomic(1);
    int64_t half_exp = 0;
    int64_t q = 1;

    HalfPowerScalar() = default;
    HalfPowerScalar(Cyclotomic c, int64_t h, int64_t q_) : coef(std::move(c)), half_exp(h), q(q_) {}

    HalfPowerScalar operator*(const HalfPowerScalar& o) const;
    HalfPowerScalar inverse_unit() const;  // only for values of modulus one
    HalfPowerScalar pow(int64_t e) const;
    // |x|^2 as a Cyclotomic (rational whenever coef*conj(coef) is).
    Cyclotomic abs2() const;
    Cyclotomic to_cyclotomic() const;
    std::string str() const;
};

// ---- polynomials and rational functions ------------------------------------

template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(const T& constant) : c_{constant} { trim(); }

    static Poly monomial(const T& coef, std::size_t deg) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = coef;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T lead() const { return c_.empty() ? T(0) : c_.back(); }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r = c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

private:
    std::vector<T> c_;
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
};

using QPoly = Poly<Rational>;
using CPoly = Poly<Cyclotomic>;

// Division with remainder over Q.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly poly_gcd(const QPoly& a, const QPoly& b);  // monic, or zero
std::string poly_str(const QPoly& p, const std::string& var = "u");
// Converts a polynomial whose coefficients are all rational.
QPoly to_qpoly(const CPoly& p);

class RatFunc {
public:
    RatFunc() : num_(Rational(0)), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(QPoly num, QPoly den);

    // 1 / (1 - a u^k)
    static RatFunc geometric(const Rational& a, int k);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator+(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Substitutes u -> c*u.
    RatFunc scale_variable(const Rational& c) const;
    std::string str() const;  // "num/den"

private:
    QPoly num_, den_;
    void normalize();
};

Rational ratfunc_eval(const RatFunc& f, const Rational& u0);

}  // namespace tamellc
