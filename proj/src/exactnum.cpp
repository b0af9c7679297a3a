#include "tamellc/exactnum.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tamellc {

// ---- integers ----------------------------------------------------------------

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    __int128 l = static_cast<__int128>(a / gcd64(a, b)) * b;
    if (l < 0) l = -l;
    if (l > INT64_MAX) throw TooLarge("lcm overflows int64");
    return static_cast<int64_t>(l);
}

int64_t mod64(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t powmod64(int64_t b, int64_t e, int64_t m) {
    if (m == 1) return 0;
    __int128 r = 1, x = mod64(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<int64_t>(r);
}

int64_t inv_mod64(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = mod64(a, m);
    while (a1 != 0) {
        int64_t q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw Error("NotInvertible", std::to_string(a) + " mod " + std::to_string(m));
    return mod64(x, m);
}

int64_t ipow64(int64_t b, int64_t e) {
    __int128 r = 1;
    for (int64_t i = 0; i < e; ++i) {
        r *= b;
        if (r > INT64_MAX || r < INT64_MIN) throw TooLarge("integer power overflows int64");
    }
    return static_cast<int64_t>(r);
}

BigInt ipow_big(int64_t b, int64_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(b)).get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational qpow(int64_t q, int64_t e) {
    if (e >= 0) return Rational(ipow_big(q, e));
    return Rational(BigInt(1), ipow_big(q, -e));
}

bool is_prime64(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<int64_t, int>> factorize64(int64_t n) {
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int k = 0;
        while (n % d == 0) n /= d, ++k;
        out.emplace_back(d, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

// ---- Cyclotomic ----------------------------------------------------------------

namespace {

struct PrimeSlot {
    int64_t p, pa, pa1, step;
};

// Factorizations are requested for the same handful of orders over and over.
const std::vector<PrimeSlot>& slots_for(int64_t M) {
    static std::mutex mu;
    static std::map<int64_t, std::vector<PrimeSlot>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    std::vector<PrimeSlot> s;
    for (auto [p, a] : factorize64(M)) {
        int64_t pa = ipow64(p, a);
        s.push_back({p, pa, pa / p, M / p});
    }
    return cache.emplace(M, std::move(s)).first->second;
}

inline bool forbidden(const PrimeSlot& s, int64_t k) {
    int64_t top = (k % s.pa) / s.pa1;
    return s.p == 2 ? top == 1 : top == s.p - 1;
}

template <class Map, class Coef>
void reduce_terms(int64_t M, Map& terms) {
    for (const PrimeSlot& s : slots_for(M)) {
        Map out;
        for (auto& [k, c] : terms) {
            if (c == Coef(0)) continue;
            if (!forbidden(s, k)) {
                out[k] += c;
                continue;
            }
            for (int64_t i = 1; i < s.p; ++i) out[(k + i * s.step) % M] -= c;
        }
        terms.swap(out);
    }
    for (auto it = terms.begin(); it != terms.end();)
        it = (it->second == Coef(0)) ? terms.erase(it) : std::next(it);
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) {
    if (r != 0) terms_[0] = r;
}

Cyclotomic::Cyclotomic(int64_t order, const std::map<int64_t, Rational>& raw) : order_(order) {
    if (order < 1) throw Error("InvalidCyclotomic", "order must be positive");
    for (auto& [k, c] : raw) terms_[mod64(k, order)] += c;
    canonicalize();
}

Cyclotomic Cyclotomic::zeta(int64_t order, int64_t k) {
    return Cyclotomic(order, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::from_counts(int64_t order,
                                   const std::unordered_map<int64_t, int64_t>& counts) {
    std::unordered_map<int64_t, int64_t> t;
    for (auto& [k, c] : counts)
        if (c) t[mod64(k, order)] += c;
    reduce_terms<std::unordered_map<int64_t, int64_t>, int64_t>(order, t);
    Cyclotomic x;
    x.order_ = order;
    for (auto& [k, c] : t) x.terms_[k] = Rational(static_cast<long>(c));
    return x;
}

void Cyclotomic::canonicalize() {
    reduce_terms<std::map<int64_t, Rational>, Rational>(order_, terms_);
}

bool Cyclotomic::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw Error("NotRational", str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Cyclotomic Cyclotomic::embed(int64_t L) const {
    if (L == order_) return *this;
    if (L % order_) throw Error("InvalidCyclotomic", "embedding order must be a multiple");
    int64_t s = L / order_;
    std::map<int64_t, Rational> raw;
    for (auto& [k, c] : terms_) raw[k * s] = c;
    return Cyclotomic(L, raw);
}

Cyclotomic Cyclotomic::shrink() const {
    if (is_rational()) return Cyclotomic(to_rational());
    Cyclotomic x = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [p, a] : factorize64(x.order_)) {
            bool all = true;
            for (auto& [k, c] : x.terms_)
                if (k % p) { all = false; break; }
            if (!all) continue;
            std::map<int64_t, Rational> raw;
            for (auto& [k, c] : x.terms_) raw[k / p] = c;
            x = Cyclotomic(x.order_ / p, raw);
            changed = true;
            break;
        }
    }
    return x;
}

Cyclotomic Cyclotomic::conj() const {
    std::map<int64_t, Rational> raw;
    for (auto& [k, c] : terms_) raw[mod64(-k, order_)] = c;
    return Cyclotomic(order_, raw);
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
    if (e < 0) {
        if (cyc_conj_norm(*this) != Cyclotomic(1))
            throw Error("NotInvertible", "negative powers need modulus one");
        return conj().pow(-e);
    }
    Cyclotomic r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& [k, c] : x.terms_) c = -c;
    return x;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    int64_t L = lcm64(order_, o.order_);
    Cyclotomic a = embed(L), b = o.embed(L);
    for (auto& [k, c] : b.terms_) a.terms_[k] += c;
    for (auto it = a.terms_.begin(); it != a.terms_.end();)
        it = (it->second == 0) ? a.terms_.erase(it) : std::next(it);
    return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (is_zero() || o.is_zero()) return *this = Cyclotomic();
    if (o.is_rational()) {
        Rational r = o.to_rational();
        for (auto& [k, c] : terms_) c *= r;
        return *this;
    }
    if (is_rational()) {
        Rational r = to_rational();
        *this = o;
        for (auto& [k, c] : terms_) c *= r;
        return *this;
    }
    int64_t L = lcm64(order_, o.order_);
    int64_t s1 = L / order_, s2 = L / o.order_;
    std::map<int64_t, Rational> raw;
    for (auto& [k1, c1] : terms_)
        for (auto& [k2, c2] : o.terms_) raw[(k1 * s1 + k2 * s2) % L] += c1 * c2;
    return *this = Cyclotomic(L, raw);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    int64_t L = lcm64(a.order_, b.order_);
    return a.embed(L).terms_ == b.embed(L).terms_;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return rational_str(to_rational());
    std::ostringstream os;
    os << "[" << order_ << "]";
    bool first = true;
    for (auto& [k, c] : terms_) {
        os << (first ? " " : " + ") << c.get_str() << "*z^" << k;
        first = false;
    }
    return os.str();
}

std::pair<double, double> Cyclotomic::to_complex() const {
    double re = 0, im = 0;
    for (auto& [k, c] : terms_) {
        double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(order_);
        re += c.get_d() * std::cos(ang);
        im += c.get_d() * std::sin(ang);
    }
    return {re, im};
}

Cyclotomic cyc_canonicalize(const Cyclotomic& x) { return Cyclotomic(x.order(), x.terms()); }

Cyclotomic cyc_conj_norm(const Cyclotomic& x) { return x * x.conj(); }

Cyclotomic sqrt_prime(int64_t p) {
    if (p == 2 || !is_prime64(p)) throw Error("InvalidArgument", "sqrt_prime needs an odd prime");
    std::map<int64_t, Rational> raw;
    for (int64_t x = 1; x < p; ++x) raw[x] = powmod64(x, (p - 1) / 2, p) == 1 ? 1 : -1;
    Cyclotomic g(p, raw);  // g = sqrt(p) or i*sqrt(p)
    if (p % 4 == 1) return g;
    return -(Cyclotomic::zeta(4, 1) * g);
}

// ---- HalfPowerScalar -----------------------------------------------------------

HalfPowerScalar HalfPowerScalar::operator*(const HalfPowerScalar& o) const {
    int64_t qq = q;
    if (q != o.q) {
        if (q == 1 || half_exp == 0) qq = o.q;
        else if (!(o.q == 1 || o.half_exp == 0))
            throw Error("InvalidArgument", "half powers of different bases");
    }
    return {coef * o.coef, half_exp + o.half_exp, qq};
}

HalfPowerScalar HalfPowerScalar::inverse_unit() const { return {coef.conj(), half_exp, q}; }

HalfPowerScalar HalfPowerScalar::pow(int64_t e) const {
    if (e < 0) return inverse_unit().pow(-e);
    HalfPowerScalar r(Cyclotomic(1), 0, q);
    for (int64_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

Cyclotomic HalfPowerScalar::abs2() const { return cyc_conj_norm(coef) * Cyclotomic(qpow(q, half_exp)); }

Cyclotomic HalfPowerScalar::to_cyclotomic() const {
    if (half_exp % 2 == 0) return coef * Cyclotomic(qpow(q, half_exp / 2));
    auto f = factorize64(q);
    if (f.size() != 1) throw Error("InvalidArgument", "q must be a prime power");
    int64_t p = f[0].first, a = f[0].second;
    // q^{h/2} = p^{a h / 2}
    int64_t ah = a * half_exp;
    if (ah % 2 == 0) return coef * Cyclotomic(qpow(p, ah / 2));
    return coef * Cyclotomic(qpow(p, (ah - 1) / 2)) * sqrt_prime(p);
}

std::string HalfPowerScalar::str() const {
    std::ostringstream os;
    os << "(" << coef.str() << ")";
    if (half_exp) os << "*" << q << "^(" << half_exp << "/2)";
    return os.str();
}

// ---- polynomials -----------------------------------------------------------------

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {QPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational c = r[i] / b.lead();
        q[i - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeff(j);
    }
    return {QPoly(q), QPoly(r)};
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    Rational l = x.lead();
    std::vector<Rational> c = x.coeffs();
    for (auto& v : c) v /= l;
    return QPoly(c);
}

std::string poly_str(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) { os << a.get_str(); continue; }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

QPoly to_qpoly(const CPoly& p) {
    std::vector<Rational> c;
    for (auto& x : p.coeffs()) c.push_back(x.to_rational());
    return QPoly(c);
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("DivisionByZero", "zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    Rational l = den_.lead();
    std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
    for (auto& v : n) v /= l;
    for (auto& v : d) v /= l;
    num_ = QPoly(n);
    den_ = QPoly(d);
}

RatFunc RatFunc::geometric(const Rational& a, int k) {
    return RatFunc(QPoly(Rational(1)), QPoly(Rational(1)) - QPoly::monomial(a, k));
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) throw Error("DivisionByZero", "rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::scale_variable(const Rational& c) const {
    auto sc = [&](const QPoly& p) {
        std::vector<Rational> v = p.coeffs();
        Rational f = 1;
        for (auto& x : v) { x *= f; f *= c; }
        return QPoly(v);
    };
    return RatFunc(sc(num_), sc(den_));
}

std::string RatFunc::str() const {
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

Rational ratfunc_eval(const RatFunc& f, const Rational& u0) {
    Rational d = f.den().eval(u0);
    if (d == 0) throw PoleAtPoint("denominator vanishes at u = " + u0.get_str());
    Rational n = f.num().eval(u0);
    return n / d;
}

}  // namespace tamellc
