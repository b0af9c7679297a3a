#include "tamellc/tame_galois.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tamellc {

std::string TameParams::str() const {
    std::ostringstream os;
    os << "(p=" << p << ",a=" << a << ",e=" << e << ",f=" << f << ",m=" << m << ",r=" << r << ")";
    return os.str();
}

TameParams validate_params(int64_t p, int64_t a, int64_t e, int64_t f, int64_t m, int64_t r) {
    auto bad = [](const std::string& why) { throw InvalidParams(why); };
    if (p < 3 || !is_prime64(p)) bad("p must be an odd prime");
    if (a < 1) bad("a must be positive");
    if (e < 1 || f < 1) bad("e and f must be positive");
    if (m < 0 || m >= e) bad("m must lie in [0, e)");
    if (r < 2) bad("r must be at least 2");
    TameParams P;
    P.p = p, P.a = a, P.e = e, P.f = f, P.m = m, P.r = r;
    P.q = ipow64(p, a);
    P.n = e * f;
    if (P.n < 2) bad("n = ef must exceed 1");
    if (P.n % p == 0) bad("p divides n");
    int64_t qf = ipow64(P.q, f);
    if ((qf - 1) % e != 0) bad("e does not divide q^f - 1");
    if ((m * (P.q - 1)) % e != 0) bad("m(q-1) is not divisible by e");
    P.l = (r + 1) / 2;
    P.lp = r / 2;
    P.supercuspidal_ok = P.lp >= 2 * (e - 1);
    return P;
}

TameParams params_from_q(int64_t q, int64_t e, int64_t f, int64_t m, int64_t r) {
    auto fac = factorize64(q);
    if (fac.size() != 1) throw InvalidParams("q must be a prime power");
    return validate_params(fac[0].first, fac[0].second, e, f, m, r);
}

std::string gal_str(const GalElt& g) {
    std::ostringstream os;
    os << "d^" << g.i << "r^" << g.j;
    return os.str();
}

int64_t conj_exponent(const TameParams& P) {
    if (P.e == 1) return 1;
    int64_t l = inv_mod64(mod64(P.q, P.e), P.e);
    return l == 0 ? P.e : l;
}

GalElt gal_mul(const GalElt& g1, const GalElt& g2, const TameParams& P) {
    int64_t l = conj_exponent(P);
    int64_t carry = (g1.j + g2.j >= P.f) ? 1 : 0;
    int64_t i = g1.i + powmod64(l, g1.j, P.e) * g2.i + P.m * carry;
    return {mod64(i, P.e), (g1.j + g2.j) % P.f};
}

GalElt gal_pow(const GalElt& g, int64_t k, const TameParams& P) {
    GalElt r{0, 0};
    for (int64_t t = 0; t < k; ++t) r = gal_mul(r, g, P);
    return r;
}

int64_t gal_order(const GalElt& g, const TameParams& P) {
    GalElt x = g;
    int64_t k = 1;
    while (x != GalElt{0, 0}) x = gal_mul(x, g, P), ++k;
    return k;
}

GalElt gal_inv(const GalElt& g, const TameParams& P) {
    return gal_pow(g, gal_order(g, P) - 1, P);
}

std::vector<GalElt> gal_elements(const TameParams& P) {
    std::vector<GalElt> out;
    for (int64_t j = 0; j < P.f; ++j)
        for (int64_t i = 0; i < P.e; ++i) out.push_back({i, j});
    return out;
}

std::size_t gal_index(const GalElt& g, const TameParams& P) {
    return static_cast<std::size_t>(g.j * P.e + g.i);
}

OrderTwoInfo order_two_set(const TameParams& P) {
    OrderTwoInfo info;
    auto elts = gal_elements(P);
    for (auto& g : elts)
        if (gal_mul(g, g, P) == GalElt{0, 0}) info.H.push_back(g);
    std::sort(info.H.begin(), info.H.end());

    bool in_center = true;
    for (auto& h : info.H)
        for (auto& g : elts)
            if (gal_mul(g, h, P) != gal_mul(h, g, P)) in_center = false;
    info.in_center = in_center;
    for (auto& h : info.H) info.ramified.push_back(h != GalElt{0, 0} && h.j == 0);

    // the case table, with rho^{f/2} delta^a written in normal form
    const int64_t e = P.e, f = P.f, m = P.m;
    std::set<GalElt> pred{{0, 0}};
    auto rho_delta = [&](int64_t a) {
        return gal_mul(GalElt{0, f / 2}, GalElt{mod64(a, e), 0}, P);
    };
    if (P.n % 2 == 0) {
        if (f % 2 == 1 || (e % 2 == 0 && m % 2 == 1)) {
            pred.insert({e / 2, 0});
        } else if (e % 2 == 1 && m % 2 == 0) {
            pred.insert(rho_delta(-m / 2));
        } else if (e % 2 == 1 && m % 2 == 1) {
            pred.insert(rho_delta((e - m) / 2));
        } else {
            pred.insert({e / 2, 0});
            pred.insert(rho_delta(-m / 2));
            pred.insert(rho_delta((e - m) / 2));
        }
    }
    info.predicted.assign(pred.begin(), pred.end());
    for (auto& g : info.predicted)
        if (gal_mul(g, g, P) != GalElt{0, 0}) info.table_hypothesis_holds = false;
    info.matches = info.predicted == info.H;
    return info;
}

std::vector<GalElt> commutator_subgroup(const TameParams& P) {
    auto elts = gal_elements(P);
    std::set<GalElt> sub{{0, 0}};
    for (auto& x : elts)
        for (auto& y : elts) {
            GalElt c = gal_mul(gal_mul(x, y, P), gal_mul(gal_inv(x, P), gal_inv(y, P), P), P);
            sub.insert(c);
        }
    // close under multiplication
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GalElt> cur(sub.begin(), sub.end());
        for (auto& x : cur)
            for (auto& y : cur)
                if (sub.insert(gal_mul(x, y, P)).second) grew = true;
    }
    return {sub.begin(), sub.end()};
}

int64_t abelianization_order(const TameParams& P) {
    return P.n / static_cast<int64_t>(commutator_subgroup(P).size());
}

int64_t count_gamma_characters(const TameParams& P) {
    // chi(delta) = z^x, chi(rho) = z^y with z a primitive n-th root of unity
    // (every character of Gamma has order dividing n).
    const int64_t n = P.n;
    int64_t count = 0;
    for (int64_t x = 0; x < n; ++x) {
        if ((P.e * x) % n != 0) continue;
        if (((P.q - 1) % n * x) % n != 0) continue;
        for (int64_t y = 0; y < n; ++y)
            if (mod64(P.f * y - P.m * x, n) == 0) ++count;
    }
    return count;
}

int64_t norm_index(const TameParams& P) { return abelianization_order(P) / P.f; }

int64_t norm_index_closed(const TameParams& P) { return gcd64(P.e, P.q - 1); }

FiltrationData filtration_data(const TameParams& P, const BigInt& t) {
    const int64_t e = P.e, f = P.f, n = P.n, r = P.r;
    BigInt qf = ipow_big(P.q, f);
    BigInt top = ipow_big(P.q, f * e * r) - 1;
    if (t < 0 || t > top) throw OutOfRange("t exceeds q^{fer} - 1");
    FiltrationData d;
    if (t == 0) {
        d.size = Rational(e) * Rational(ipow_big(P.q, n * r)) * (1 - qpow(P.q, -f));
        d.fixdim = f - 1;
        return d;
    }
    // smallest k with t <= q^{fk} - 1
    int64_t k = 1;
    BigInt qk = qf;
    while (t > qk - 1) qk *= qf, ++k;
    d.size = qpow(P.q, n * r - f * k);
    int64_t br = e * (r - 1);
    if (k <= br - 1) d.fixdim = n - 1;
    else if (k == br) d.fixdim = f * e * e - 1;
    else d.fixdim = n * n - 1;
    return d;
}

}  // namespace tamellc
