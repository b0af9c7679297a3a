#include "tamellc/galois_ring.hpp"

#include <algorithm>

namespace tamellc {

namespace {

Vec fp_trim(Vec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Vec fp_mod(Vec a, const Vec& m, int64_t p) {
    a = fp_trim(std::move(a));
    int64_t inv_lead = inv_mod64(m.back(), p);
    while (a.size() >= m.size()) {
        int64_t c = a.back() * inv_lead % p;
        std::size_t sh = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[sh + i] = mod64(a[sh + i] - c * m[i], p);
        a = fp_trim(std::move(a));
    }
    return a;
}

Vec fp_mulmod(const Vec& a, const Vec& b, const Vec& m, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_mod(std::move(r), m, p);
}

Vec fp_gcd(Vec a, Vec b, int64_t p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        Vec r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool fp_poly_irreducible(const Vec& h, int64_t p) {
    Vec m = fp_trim(h);
    int64_t d = static_cast<int64_t>(m.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    // gcd(X^{p^i} - X, h) = 1 for i <= d/2
    Vec x{0, 1};
    Vec xp = fp_mod(x, m, p);
    for (int64_t i = 1; i <= d / 2; ++i) {
        Vec acc{1};
        Vec base = xp;
        for (int64_t e = p; e; e >>= 1) {
            if (e & 1) acc = fp_mulmod(acc, base, m, p);
            base = fp_mulmod(base, base, m, p);
        }
        xp = acc;
        Vec diff = xp;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = mod64(diff[1] - 1, p);
        if (fp_gcd(m, diff, p).size() > 1) return false;
    }
    return true;
}

Vec least_irreducible(int64_t p, int64_t d) {
    int64_t total = ipow64(p, d);
    for (int64_t code = 0; code < total; ++code) {
        // code's base-p digits, most significant first, are c_{d-1}, ..., c_0
        Vec h(d + 1, 0);
        h[d] = 1;
        int64_t x = code;
        for (int64_t k = 0; k < d; ++k) {
            h[k] = x % p;
            x /= p;
        }
        if (fp_poly_irreducible(h, p)) return h;
    }
    throw Error("Internal", "no irreducible polynomial found");
}

GaloisRing::GaloisRing(int64_t p, int64_t r, int64_t d) : p_(p), r_(r), d_(d) {
    pr_ = ipow64(p, r);
    qd_ = ipow64(p, d);
    h_ = least_irreducible(p, d);
    // X^{d+k} for k in [0, d-1)
    Vec cur(d_, 0);  // X^d = -sum h_i X^i
    for (int64_t i = 0; i < d_; ++i) cur[i] = mod64(-h_[i], pr_);
    for (int64_t k = 0; k + 1 < d_; ++k) {
        high_.push_back(cur);
        Vec nxt(d_, 0);
        for (int64_t i = 0; i + 1 < d_; ++i) nxt[i + 1] = cur[i];
        int64_t top = cur[d_ - 1];
        for (int64_t i = 0; i < d_; ++i) nxt[i] = mod64(nxt[i] - top * h_[i], pr_);
        cur = nxt;
    }
    // Tr(X^b): trace of multiplication by X^b on the basis
    trace_basis_.assign(d_, 0);
    for (int64_t b = 0; b < d_; ++b) {
        Vec xb = x_pow(b);
        int64_t t = 0;
        for (int64_t k = 0; k < d_; ++k) t += mul(xb, x_pow(k))[k];
        trace_basis_[b] = mod64(t, pr_);
    }
}

Vec GaloisRing::one() const { return scalar(1); }

Vec GaloisRing::scalar(int64_t c) const {
    Vec v(d_, 0);
    v[0] = mod64(c, pr_);
    return v;
}

Vec GaloisRing::x_pow(int64_t b) const {
    Vec x(d_, 0);
    if (d_ == 1) {
        x[0] = mod64(-h_[0], pr_);
        return pow(x, b);
    }
    x[1] = 1;
    return pow(x, b);
}

Vec GaloisRing::add(const Vec& x, const Vec& y) const {
    Vec r(d_);
    for (int64_t i = 0; i < d_; ++i) {
        r[i] = x[i] + y[i];
        if (r[i] >= pr_) r[i] -= pr_;
    }
    return r;
}

Vec GaloisRing::sub(const Vec& x, const Vec& y) const {
    Vec r(d_);
    for (int64_t i = 0; i < d_; ++i) {
        r[i] = x[i] - y[i];
        if (r[i] < 0) r[i] += pr_;
    }
    return r;
}

Vec GaloisRing::neg(const Vec& x) const { return sub(zero(), x); }

Vec GaloisRing::scale(const Vec& x, int64_t c) const {
    c = mod64(c, pr_);
    Vec r(d_);
    for (int64_t i = 0; i < d_; ++i) r[i] = x[i] * c % pr_;
    return r;
}

Vec GaloisRing::mul(const Vec& x, const Vec& y) const {
    if (d_ == 1) return {x[0] * y[0] % pr_};
    std::vector<int64_t> t(2 * d_ - 1, 0);
    for (int64_t i = 0; i < d_; ++i) {
        if (!x[i]) continue;
        for (int64_t j = 0; j < d_; ++j) t[i + j] = (t[i + j] + x[i] * y[j]) % pr_;
    }
    Vec r(t.begin(), t.begin() + d_);
    for (int64_t k = 0; k + 1 < d_; ++k) {
        int64_t c = t[d_ + k];
        if (!c) continue;
        for (int64_t i = 0; i < d_; ++i) r[i] = (r[i] + c * high_[k][i]) % pr_;
    }
    return r;
}

Vec GaloisRing::pow(const Vec& x, int64_t e) const {
    Vec acc = one(), base = x;
    for (; e; e >>= 1) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

bool GaloisRing::is_unit(const Vec& x) const {
    for (auto c : x)
        if (c % p_) return true;
    return false;
}

Vec GaloisRing::inv(const Vec& x) const {
    if (!is_unit(x)) throw Error("Internal", "inverse of a non-unit in GR");
    // Residue inverse by Fermat in F_{p^d}, then Newton y <- y(2 - xy).
    Vec y = pow(x, qd_ - 2);
    for (int64_t prec = 1; prec < r_; prec *= 2) y = mul(y, sub(scalar(2), mul(x, y)));
    return y;
}

int64_t GaloisRing::trace(const Vec& x) const {
    int64_t t = 0;
    for (int64_t b = 0; b < d_; ++b) t = (t + x[b] * trace_basis_[b]) % pr_;
    return t;
}

int64_t GaloisRing::residue_index(const Vec& x) const {
    int64_t idx = 0;
    for (int64_t b = d_; b-- > 0;) idx = idx * p_ + x[b] % p_;
    return idx;
}

Vec GaloisRing::from_residue_index(int64_t idx) const {
    Vec v(d_, 0);
    for (int64_t b = 0; b < d_; ++b) {
        v[b] = idx % p_;
        idx /= p_;
    }
    return v;
}

Vec GaloisRing::reduce(const Vec& x, int64_t k) const {
    if (k >= r_) return x;
    int64_t m = ipow64(p_, k);
    Vec r(d_);
    for (int64_t i = 0; i < d_; ++i) r[i] = x[i] % m;
    return r;
}

Vec GaloisRing::apply(const std::vector<Vec>& cols, const Vec& x) const {
    Vec r = zero();
    for (int64_t b = 0; b < d_; ++b)
        if (x[b])
            for (int64_t i = 0; i < d_; ++i) r[i] = (r[i] + x[b] * cols[b][i]) % pr_;
    return r;
}

std::vector<Vec> GaloisRing::frobenius_cols() const {
    // sigma(X) is the root of h congruent to X^p; Newton from X^p.
    Vec X = x_pow(1);
    Vec y = pow(X, p_);
    auto eval_h = [&](const Vec& z, bool deriv) {
        Vec acc = zero();
        for (int64_t k = d_; k >= 0; --k) {
            if (deriv && k == 0) break;
            int64_t c = deriv ? h_[k] * k : h_[k];
            acc = add(mul(acc, z), scalar(c));
        }
        return acc;
    };
    for (int64_t it = 0; it < r_ + 1; ++it) y = sub(y, mul(eval_h(y, false), inv(eval_h(y, true))));
    std::vector<Vec> cols;
    for (int64_t b = 0; b < d_; ++b) cols.push_back(pow(y, b));
    return cols;
}

}  // namespace tamellc
