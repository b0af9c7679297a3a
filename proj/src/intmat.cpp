#include "tamellc/intmat.hpp"

#include <utility>

namespace tamellc {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<BigInt> IntMat::row(std::size_t i) const {
    return std::vector<BigInt>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat r(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const BigInt& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt pos_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

struct Smith {
    IntMat a, u, v, vi;
    std::size_t m, n;

    void row_addmul(std::size_t dst, std::size_t src, const BigInt& q) {  // row dst -= q row src
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) a(dst, j) -= q * a(src, j);
        for (std::size_t j = 0; j < m; ++j) u(dst, j) -= q * u(src, j);
    }
    void row_swap(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(u(i, j), u(k, j));
    }
    void col_addmul(std::size_t dst, std::size_t src, const BigInt& q) {  // col dst -= q col src
        if (q == 0) return;
        for (std::size_t i = 0; i < m; ++i) a(i, dst) -= q * a(i, src);
        for (std::size_t i = 0; i < n; ++i) v(i, dst) -= q * v(i, src);
        for (std::size_t j = 0; j < n; ++j) vi(src, j) += q * vi(dst, j);
    }
    void col_swap(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, k));
        for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, k));
        for (std::size_t j = 0; j < n; ++j) std::swap(vi(i, j), vi(k, j));
    }
    void col_negate(std::size_t c) {
        for (std::size_t r = 0; r < m; ++r) a(r, c) = -a(r, c);
        for (std::size_t r = 0; r < n; ++r) v(r, c) = -v(r, c);
        for (std::size_t j = 0; j < n; ++j) vi(c, j) = -vi(c, j);
    }

    bool pick_pivot(std::size_t t) {
        std::size_t bi = m, bj = n;
        BigInt best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                BigInt x = abs(a(i, j));
                if (bi == m || x < best) best = x, bi = i, bj = j;
            }
        if (bi == m) return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    void run() {
        std::size_t lim = std::min(m, n);
        for (std::size_t t = 0; t < lim; ++t) {
            if (!pick_pivot(t)) break;
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a(i, t) == 0) continue;
                    row_addmul(i, t, floor_div(a(i, t), a(t, t)));
                    if (a(i, t) != 0) dirty = true;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a(t, j) == 0) continue;
                    col_addmul(j, t, floor_div(a(t, j), a(t, t)));
                    if (a(t, j) != 0) dirty = true;
                }
                if (dirty) {
                    pick_pivot(t);
                    continue;
                }
                bool fixed = false;
                for (std::size_t i = t + 1; i < m && !fixed; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            row_addmul(t, i, BigInt(-1));
                            fixed = true;
                            break;
                        }
                if (!fixed) break;
            }
            if (a(t, t) < 0) col_negate(t);
        }
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
    Smith s{a, IntMat::identity(a.rows()), IntMat::identity(a.cols()),
            IntMat::identity(a.cols()), a.rows(), a.cols()};
    s.run();
    SmithForm out;
    out.u = std::move(s.u);
    out.v = std::move(s.v);
    out.v_inv = std::move(s.vi);
    std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < lim; ++i) {
        out.d.push_back(s.a(i, i));
        if (s.a(i, i) != 0) out.rank = i + 1;
    }
    return out;
}

std::optional<std::vector<BigInt>> solve_left(const IntMat& w, const std::vector<BigInt>& v) {
    SmithForm s = smith_normal_form(w);
    std::size_t m = w.rows(), n = w.cols();
    // x U^{-1} D = v V
    std::vector<BigInt> vv(n, BigInt(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) vv[j] += v[k] * s.v(k, j);
    std::vector<BigInt> z(m, BigInt(0));
    for (std::size_t j = 0; j < n; ++j) {
        BigInt dj = j < s.d.size() ? s.d[j] : BigInt(0);
        if (dj == 0) {
            if (vv[j] != 0) return std::nullopt;
            continue;
        }
        if (vv[j] % dj != 0) return std::nullopt;
        z[j] = vv[j] / dj;
    }
    std::vector<BigInt> x(m, BigInt(0));
    for (std::size_t i = 0; i < m; ++i)
        if (z[i] != 0)
            for (std::size_t j = 0; j < m; ++j) x[j] += z[i] * s.u(i, j);
    return x;
}

IntMat left_kernel(const IntMat& w) {
    SmithForm s = smith_normal_form(w);
    std::size_t m = w.rows();
    IntMat k(m - s.rank, m);
    for (std::size_t i = s.rank; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) k(i - s.rank, j) = s.u(i, j);
    return k;
}

std::vector<BigInt> lexmin_in_coset(const std::vector<BigInt>& b,
                                    const std::vector<std::vector<BigInt>>& gens,
                                    const std::vector<BigInt>& moduli) {
    std::size_t k = moduli.size();
    auto reduce = [&](std::vector<BigInt>& row, std::size_t from) {
        for (std::size_t j = from; j < k; ++j) row[j] = pos_mod(row[j], moduli[j]);
    };
    std::vector<std::vector<BigInt>> pool;
    for (auto g : gens) {
        reduce(g, 0);
        pool.push_back(std::move(g));
    }
    // Echelon form of the lattice; d_c e_c keeps every pivot a divisor of d_c.
    std::vector<std::vector<BigInt>> piv(k);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<BigInt> p(k, BigInt(0));
        p[c] = moduli[c];
        std::vector<std::vector<BigInt>> rest;
        for (auto& r : pool) {
            if (r[c] == 0) {
                rest.push_back(std::move(r));
                continue;
            }
            // Euclid on (p[c], r[c]) via unimodular row operations.
            while (r[c] != 0) {
                BigInt q = floor_div(p[c], r[c]);
                for (std::size_t j = c; j < k; ++j) p[j] -= q * r[j];
                std::swap(p, r);
            }
            reduce(r, c + 1);
            rest.push_back(std::move(r));
        }
        if (p[c] < 0)
            for (std::size_t j = c; j < k; ++j) p[j] = -p[j];
        reduce(p, c + 1);
        piv[c] = std::move(p);
        pool = std::move(rest);
    }
    std::vector<BigInt> x = b;
    reduce(x, 0);
    for (std::size_t c = 0; c < k; ++c) {
        BigInt q = floor_div(x[c], piv[c][c]);
        for (std::size_t j = c; j < k; ++j) x[j] -= q * piv[c][j];
        reduce(x, c + 1);
    }
    return x;
}

}  // namespace tamellc
