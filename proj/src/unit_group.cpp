#include "tamellc/unit_group.hpp"

namespace tamellc {

UnitGroup::UnitGroup(const Model& M, int64_t N) : M_(&M), N_(N) {
    if (N < 1 || N > M.levels) throw OutOfRange("unit group level must lie in [1, er]");
    const int64_t d = M.d, p = M.P.p, qk = M.gr.residue_size();

    Vec cinv = M.gr.inv(M.teich[M.c_exp]);
    cinv_pow_.push_back(M.gr.one());
    for (int64_t s = 1; s <= M.P.r; ++s) cinv_pow_.push_back(M.gr.mul(cinv_pow_.back(), cinv));

    elim_.assign(N, {});
    for (int64_t i = 1; i < N; ++i) {
        std::vector<Vec> ginv;
        for (int64_t b = 0; b < d; ++b) ginv.push_back(M.inv(one_unit_gen(i, b)));
        auto& tab = elim_[i];
        tab.assign(qk, M.one());
        for (int64_t idx = 1; idx < qk; ++idx) {
            int64_t b = 0, pb = 1;
            while ((idx / pb) % p == 0) pb *= p, ++b;
            tab[idx] = M.truncate(M.mul(tab[idx - pb], ginv[b]), N);
        }
    }

    orders_.push_back(M.Q);
    gens_.push_back(M.truncate(M.teich_elt(1), N));

    const std::size_t K = static_cast<std::size_t>((N - 1) * d);
    if (K > 0) {
        IntMat rel(K, K);
        for (int64_t i = 1; i < N; ++i)
            for (int64_t b = 0; b < d; ++b) {
                std::size_t row = (i - 1) * d + b;
                auto w = word(M.pow(one_unit_gen(i, b), p));
                for (std::size_t k = 0; k < K; ++k) rel(row, k) = -w[k];
                rel(row, row) += p;
            }
        SmithForm s = smith_normal_form(rel);
        BigInt maxd = 1;
        for (std::size_t k = 0; k < K; ++k)
            if (s.d[k] > 1) {
                u1_cols_.push_back(k);
                if (s.d[k] > maxd) maxd = s.d[k];
            }
        int64_t u1_exp = maxd.get_si();
        vred_.assign(K, std::vector<int64_t>(u1_cols_.size(), 0));
        for (std::size_t c = 0; c < u1_cols_.size(); ++c) {
            std::size_t k = u1_cols_[c];
            BigInt dk = s.d[k];
            orders_.push_back(dk.get_si());
            for (std::size_t w = 0; w < K; ++w) {
                BigInt v;
                mpz_fdiv_r(v.get_mpz_t(), s.v(w, k).get_mpz_t(), dk.get_mpz_t());
                vred_[w][c] = v.get_si();
            }
            // generator = prod g_{ib}^{Vinv[k][ib]}
            Vec g = M.one();
            for (std::size_t w = 0; w < K; ++w) {
                BigInt ex;
                mpz_fdiv_r(ex.get_mpz_t(), s.v_inv(k, w).get_mpz_t(), maxd.get_mpz_t());
                if (ex == 0) continue;
                int64_t i = static_cast<int64_t>(w / d) + 1, b = static_cast<int64_t>(w % d);
                g = M.truncate(M.mul(g, M.pow(one_unit_gen(i, b), ex.get_si())), N);
            }
            gens_.push_back(g);
        }
        exponent_ = lcm64(M.Q, u1_exp);
    } else {
        exponent_ = M.Q;
    }
}

BigInt UnitGroup::order() const {
    BigInt o = 1;
    for (auto d : orders_) o *= d;
    return o;
}

Vec UnitGroup::one_unit_gen(int64_t i, int64_t b) const {
    const Model& M = *M_;
    Vec x = M.mul(M.pi_pow(i), M.from_gr(M.gr.x_pow(b)));
    return M.truncate(M.add(M.one(), x), N_);
}

std::vector<int64_t> UnitGroup::word(Vec u) const {
    const Model& M = *M_;
    const int64_t e = M.P.e, d = M.d, p = M.P.p;
    std::vector<int64_t> w(static_cast<std::size_t>((N_ - 1) * d), 0);
    u = M.truncate(u, N_);
    for (int64_t i = 1; i < N_; ++i) {
        int64_t j = i % e, s = i / e;
        int64_t ps = ipow64(p, s);
        Vec y = M.gr_part(u, j);
        for (auto& v : y) v = (v / ps) % p;
        // u - 1 = pi^j p^s y + ... = pi^i c^{-s} y + ...
        Vec lead = M.gr.reduce(M.gr.mul(y, cinv_pow_[s]), 1);
        int64_t idx = M.gr.residue_index(lead);
        for (int64_t b = 0; b < d; ++b) w[(i - 1) * d + b] = lead[b];
        if (idx) u = M.truncate(M.mul(u, elim_[i][idx]), N_);
    }
    if (M.truncate(u, N_) != M.truncate(M.one(), N_))
        throw Error("Internal", "one-unit elimination did not terminate at 1");
    return w;
}

std::vector<int64_t> UnitGroup::coords(const Vec& u) const {
    const Model& M = *M_;
    if (!M.is_unit(u)) throw NotInSubgroup("not a unit");
    int64_t k = M.residue_log(u);
    std::vector<int64_t> y(orders_.size(), 0);
    y[0] = k;
    if (u1_cols_.empty()) return y;
    Vec u1 = M.mul(u, M.teich_elt(-k));
    auto w = word(u1);
    for (std::size_t ib = 0; ib < w.size(); ++ib) {
        if (!w[ib]) continue;
        for (std::size_t c = 0; c < u1_cols_.size(); ++c)
            y[c + 1] = (y[c + 1] + w[ib] * vred_[ib][c]) % orders_[c + 1];
    }
    return y;
}

Vec UnitGroup::element(const std::vector<int64_t>& y) const {
    const Model& M = *M_;
    Vec x = M.one();
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        int64_t ex = mod64(y[k], orders_[k]);
        if (ex) x = M.truncate(M.mul(x, M.pow(gens_[k], ex)), N_);
    }
    return M.truncate(x, N_);
}

BigInt subgroup_order(const std::vector<std::vector<int64_t>>& rows,
                      const std::vector<int64_t>& orders) {
    std::size_t k = orders.size();
    IntMat a(rows.size() + k, k);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = rows[i][j];
    BigInt total = 1;
    for (std::size_t j = 0; j < k; ++j) {
        a(rows.size() + j, j) = orders[j];
        total *= orders[j];
    }
    SmithForm s = smith_normal_form(a);
    BigInt det = 1;
    for (const auto& v : s.d) det *= v;
    return total / det;
}

std::vector<std::vector<int64_t>> hom_kernel(const std::vector<std::vector<int64_t>>& images,
                                             const std::vector<int64_t>& src,
                                             const std::vector<int64_t>& tgt) {
    std::size_t ks = src.size(), kt = tgt.size();
    // x W + z D_tgt = 0, with x taken mod src
    IntMat a(ks + kt, kt);
    for (std::size_t i = 0; i < ks; ++i)
        for (std::size_t j = 0; j < kt; ++j) a(i, j) = images[i][j];
    for (std::size_t j = 0; j < kt; ++j) a(ks + j, j) = tgt[j];
    IntMat ker = left_kernel(a);
    std::vector<std::vector<int64_t>> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<int64_t> row(ks);
        bool nonzero = false;
        for (std::size_t i = 0; i < ks; ++i) {
            BigInt v;
            BigInt m = src[i];
            mpz_fdiv_r(v.get_mpz_t(), ker(r, i).get_mpz_t(), m.get_mpz_t());
            row[i] = v.get_si();
            nonzero |= row[i] != 0;
        }
        if (nonzero) out.push_back(row);
    }
    return out;
}

}  // namespace tamellc
