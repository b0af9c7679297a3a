#include "tamellc/ring_model.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace tamellc {

// ---- ring arithmetic ----------------------------------------------------------

Vec Model::one() const { return from_gr(gr.one()); }

Vec Model::from_gr(const Vec& x, int64_t slot) const {
    Vec v = zero();
    std::copy(x.begin(), x.end(), v.begin() + slot * d);
    return v;
}

Vec Model::gr_part(const Vec& x, int64_t slot) const {
    return Vec(x.begin() + slot * d, x.begin() + (slot + 1) * d);
}

Vec Model::pi_pow(int64_t k) const {
    // pi^k = pi^{k mod e} (c p)^{k div e}
    Vec g = gr.pow(cp_, k / P.e);
    return from_gr(g, k % P.e);
}

Vec Model::add(const Vec& x, const Vec& y) const {
    Vec r(x.size());
    int64_t m = gr.modulus();
    for (std::size_t i = 0; i < x.size(); ++i) {
        r[i] = x[i] + y[i];
        if (r[i] >= m) r[i] -= m;
    }
    return r;
}

Vec Model::sub(const Vec& x, const Vec& y) const {
    Vec r(x.size());
    int64_t m = gr.modulus();
    for (std::size_t i = 0; i < x.size(); ++i) {
        r[i] = x[i] - y[i];
        if (r[i] < 0) r[i] += m;
    }
    return r;
}

Vec Model::neg(const Vec& x) const { return sub(zero(), x); }

Vec Model::scale(const Vec& x, int64_t c) const {
    int64_t m = gr.modulus();
    c = mod64(c, m);
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * c % m;
    return r;
}

Vec Model::mul(const Vec& x, const Vec& y) const {
    const int64_t e = P.e;
    if (e == 1) return gr.mul(x, y);
    std::vector<Vec> acc(2 * e - 1, gr.zero());
    std::vector<Vec> xs(e), ys(e);
    std::vector<bool> xz(e), yz(e);
    for (int64_t i = 0; i < e; ++i) {
        xs[i] = gr_part(x, i);
        ys[i] = gr_part(y, i);
        xz[i] = std::all_of(xs[i].begin(), xs[i].end(), [](int64_t v) { return v == 0; });
        yz[i] = std::all_of(ys[i].begin(), ys[i].end(), [](int64_t v) { return v == 0; });
    }
    for (int64_t i = 0; i < e; ++i) {
        if (xz[i]) continue;
        for (int64_t j = 0; j < e; ++j)
            if (!yz[j]) acc[i + j] = gr.add(acc[i + j], gr.mul(xs[i], ys[j]));
    }
    Vec r = zero();
    for (int64_t k = 0; k < e; ++k) {
        Vec s = acc[k];
        if (k + e < 2 * e - 1) s = gr.add(s, gr.mul(cp_, acc[k + e]));
        std::copy(s.begin(), s.end(), r.begin() + k * d);
    }
    return r;
}

Vec Model::pow(const Vec& x, int64_t k) const {
    Vec acc = one(), base = x;
    for (; k; k >>= 1) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

bool Model::is_unit(const Vec& x) const {
    for (int64_t b = 0; b < d; ++b)
        if (x[b] % P.p) return true;
    return false;
}

int64_t Model::residue_log(const Vec& x) const {
    int64_t k = teich_log[gr.residue_index(gr_part(x, 0))];
    if (k < 0) throw NotInSubgroup("residue of a non-unit");
    return k;
}

Vec Model::inv(const Vec& x) const {
    if (!is_unit(x)) throw NotInSubgroup("inverse of a non-unit");
    Vec y = teich_elt(-residue_log(x));
    Vec two = scale(one(), 2);
    for (int64_t prec = 1; prec < levels; prec *= 2) y = mul(y, sub(two, mul(x, y)));
    return y;
}

int64_t Model::valuation(const Vec& x) const {
    int64_t best = levels;
    for (int64_t i = 0; i < P.e; ++i)
        for (int64_t b = 0; b < d; ++b) {
            int64_t v = x[i * d + b];
            if (!v) continue;
            int64_t s = 0;
            while (v % P.p == 0) v /= P.p, ++s;
            best = std::min(best, i + P.e * s);
        }
    return best;
}

Vec Model::truncate(const Vec& x, int64_t N) const {
    Vec r = x;
    for (int64_t i = 0; i < P.e; ++i) {
        int64_t prec = i < N ? (N - i + P.e - 1) / P.e : 0;
        int64_t m = prec >= P.r ? gr.modulus() : ipow64(P.p, prec);
        for (int64_t b = 0; b < d; ++b) r[i * d + b] %= m;
    }
    return r;
}

int64_t Model::unit_exponent(const GalElt& g) const {
    // rho^j(pi) = t rho(t) ... rho^{j-1}(t) pi, rho acting on Teichmullers by x -> x^{q^{f-1}}
    int64_t qi = powmod64(P.q, P.f - 1, Q);
    int64_t s = 0, w = 1;
    for (int64_t k = 0; k < g.j; ++k) {
        s = (s + w) % Q;
        w = w * qi % Q;
    }
    return mod64(t_exp * s + g.i * zeta_exp, Q);
}

Vec Model::act(const GalElt& g, const Vec& x) const {
    const Vec& u = teich[unit_exponent(g)];
    const auto& cols = rho_pow_cols[g.j];
    Vec r = zero();
    Vec upow = gr.one();
    for (int64_t i = 0; i < P.e; ++i) {
        Vec xi = gr_part(x, i);
        Vec yi = gr.mul(gr.apply(cols, xi), upow);
        std::copy(yi.begin(), yi.end(), r.begin() + i * d);
        upow = gr.mul(upow, u);
    }
    return r;
}

int64_t Model::abs_trace(const Vec& x) const {
    return mod64(P.e * gr.trace(gr_part(x, 0)), gr.modulus());
}

std::string Model::str(const Vec& x) const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << "]";
    return os.str();
}

// ---- model construction -------------------------------------------------------

namespace {

std::string cache_path(const TameParams& P) {
    const char* dir = std::getenv("TAME_LLC_CACHE");
    if (!dir || !*dir) return {};
    std::ostringstream os;
    os << dir << "/model_p" << P.p << "_a" << P.a << "_e" << P.e << "_f" << P.f << "_m" << P.m
       << "_r" << P.r << ".txt";
    return os.str();
}

void fill_tables(Model& M) {
    const TameParams& P = M.P;
    GaloisRing F(P.p, 1, M.d);
    auto primes = factorize64(M.Q);
    int64_t gen = -1;
    for (int64_t idx = 1; idx < F.residue_size() && gen < 0; ++idx) {
        Vec g = F.from_residue_index(idx);
        bool prim = true;
        for (auto [l, ex] : primes) {
            (void)ex;
            if (F.pow(g, M.Q / l) == F.one()) {
                prim = false;
                break;
            }
        }
        if (prim) gen = idx;
    }
    if (M.omega_residue == 0) M.omega_residue = gen;
    Vec w = M.gr.from_residue_index(M.omega_residue);
    for (int64_t k = 0; k < M.d * (P.r - 1); ++k) w = M.gr.pow(w, P.p);
    M.teich.assign(M.Q, Vec());
    M.teich_log.assign(M.gr.residue_size(), -1);
    Vec cur = M.gr.one();
    for (int64_t k = 0; k < M.Q; ++k) {
        M.teich[k] = cur;
        M.teich_log[M.gr.residue_index(cur)] = k;
        cur = M.gr.mul(cur, w);
    }
    // rho = sigma_p^{d - a}
    auto sigma = M.gr.frobenius_cols();
    std::vector<Vec> rho;
    for (int64_t b = 0; b < M.d; ++b) {
        Vec v = M.gr.x_pow(b);
        for (int64_t k = 0; k < M.d - P.a; ++k) v = M.gr.apply(sigma, v);
        rho.push_back(v);
    }
    M.rho_pow_cols.clear();
    std::vector<Vec> cur_cols;
    for (int64_t b = 0; b < M.d; ++b) cur_cols.push_back(M.gr.x_pow(b));
    for (int64_t j = 0; j < P.f; ++j) {
        M.rho_pow_cols.push_back(cur_cols);
        for (auto& c : cur_cols) c = M.gr.apply(rho, c);
    }
}

bool search_exponents(Model& M) {
    const TameParams& P = M.P;
    const int64_t Q = M.Q, e = P.e;
    int64_t qi = powmod64(P.q, P.f - 1, Q);
    int64_t fold = Q / (P.q - 1);
    for (int64_t gc = 0; gc < Q; ++gc)
        for (int64_t k = 0; k < e; ++k) {
            if (gcd64(k, e) != 1 && e > 1) continue;
            if (e == 1 && k > 0) break;
            int64_t z = Q / e * k % Q;
            for (int64_t tau = 0; tau < Q; ++tau) {
                if (mod64(e * tau - gc * (qi - 1), Q) != 0) continue;
                if (mod64(tau * fold - z * P.m, Q) != 0) continue;
                M.c_exp = gc;
                M.zeta_exp = z;
                M.t_exp = tau;
                return true;
            }
        }
    return false;
}

}  // namespace

Model build_model(const TameParams& P) {
    Model M;
    M.P = P;
    M.d = P.a * P.f;
    M.gr = GaloisRing(P.p, P.r, M.d);
    M.Q = M.gr.residue_size() - 1;
    M.levels = P.e * P.r;

    std::string path = cache_path(P);
    bool cached = false;
    if (!path.empty()) {
        std::ifstream in(path);
        if (in >> M.omega_residue >> M.c_exp >> M.zeta_exp >> M.t_exp) cached = true;
    }
    if (!cached) M.omega_residue = 0;
    fill_tables(M);
    if (!cached && !search_exponents(M))
        throw NoConsistentModel("no Teichmuller (c, zeta, t) for " + P.str());
    M.cp_ = M.gr.scale(M.teich[M.c_exp], P.p);
    if (!model_consistent(M)) {
        if (cached) throw NoConsistentModel("stale model cache " + path);
        throw NoConsistentModel("model relations fail for " + P.str());
    }
    if (!path.empty() && !cached) {
        std::error_code ec;
        std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
        std::ofstream out(path);
        out << M.omega_residue << " " << M.c_exp << " " << M.zeta_exp << " " << M.t_exp << "\n";
    }
    return M;
}

bool model_consistent(const Model& M) {
    const TameParams& P = M.P;
    // zeta of exact order e
    int64_t ord = M.Q / gcd64(M.Q, M.zeta_exp);
    if (ord != P.e) return false;
    std::vector<Vec> gens{M.pi_pow(1), M.from_gr(M.gr.x_pow(1))};
    auto els = gal_elements(P);
    for (const auto& g : els) {
        // a ring endomorphism: g(pi)^e = g(c p), g(X) a root of h
        Vec gpi = M.act(g, gens[0]);
        if (M.pow(gpi, P.e) != M.act(g, M.pi_pow(P.e))) return false;
        Vec gx = M.act(g, gens[1]);
        Vec hv = M.zero();
        for (int64_t k = M.d; k >= 0; --k) hv = M.add(M.mul(hv, gx), M.scale(M.one(), M.gr.h()[k]));
        if (hv != M.zero()) return false;
        for (const auto& g2 : els)
            for (const auto& x : gens)
                if (M.act(g, M.act(g2, x)) != M.act(gal_mul(g, g2, P), x)) return false;
    }
    // rho is the inverse q-Frobenius on Teichmullers
    if (M.Q > 1) {
        int64_t qi = powmod64(P.q, P.f - 1, M.Q);
        Vec w = M.teich[1];
        if (M.gr.apply(M.rho_pow_cols[P.f > 1 ? 1 : 0], w) != M.teich[P.f > 1 ? qi : 1]) return false;
    }
    return true;
}

TraceNorm trace_norm(const Model& M, const Vec& x) {
    TraceNorm out{M.zero(), M.one(), false};
    for (const auto& g : gal_elements(M.P)) {
        Vec y = M.act(g, x);
        out.T = M.add(out.T, y);
        out.N = M.mul(out.N, y);
    }
    out.in_base = in_base(M, out.T) && in_base(M, out.N);
    return out;
}

bool in_base(const Model& M, const Vec& x) {
    for (std::size_t k = M.d; k < x.size(); ++k)
        if (x[k]) return false;
    if (M.P.f == 1) return true;
    Vec x0 = M.gr_part(x, 0);
    return M.gr.apply(M.rho_pow_cols[1], x0) == x0;
}

// ---- linear algebra over F_p ----------------------------------------------------

int64_t fp_rank(std::vector<std::vector<int64_t>> rows, int64_t p) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int64_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int64_t>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && mod64(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        int64_t inv = inv_mod64(mod64(rows[rank][c], p), p);
        for (auto& v : rows[rank]) v = mod64(v, p) * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int64_t>(i) == rank) continue;
            int64_t f = mod64(rows[i][c], p);
            if (!f) continue;
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = mod64(rows[i][k] - f * rows[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

namespace {

// Solves sum_i x_i cols[i] = b over F_p; assumes a solution exists.
std::vector<int64_t> fp_solve(const std::vector<std::vector<int64_t>>& cols,
                              const std::vector<int64_t>& b, int64_t p) {
    std::size_t k = cols.size(), m = b.size();
    std::vector<std::vector<int64_t>> a(m, std::vector<int64_t>(k + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < k; ++i) a[r][i] = mod64(cols[i][r], p);
        a[r][k] = mod64(b[r], p);
    }
    std::vector<int64_t> where(k, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < m; ++c) {
        std::size_t piv = row;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        int64_t inv = inv_mod64(a[row][c], p);
        for (auto& v : a[row]) v = v * inv % p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || !a[r][c]) continue;
            int64_t f = a[r][c];
            for (std::size_t j = 0; j <= k; ++j) a[r][j] = mod64(a[r][j] - f * a[row][j], p);
        }
        where[c] = static_cast<int64_t>(row++);
    }
    std::vector<int64_t> x(k, 0);
    for (std::size_t c = 0; c < k; ++c)
        if (where[c] >= 0) x[c] = a[where[c]][k];
    return x;
}

using Mat = std::vector<std::vector<int64_t>>;

Mat mat_mul(const Mat& a, const Mat& b, int64_t m) {
    std::size_t n = a.size();
    Mat r(n, std::vector<int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) r[i][j] = (r[i][j] + a[i][k] * b[k][j]) % m;
    return r;
}

Mat mat_identity(std::size_t n) {
    Mat r(n, std::vector<int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

Mat mat_reduce(Mat a, int64_t m) {
    for (auto& row : a)
        for (auto& v : row) v = mod64(v, m);
    return a;
}

std::vector<int64_t> flatten(const Mat& a) {
    std::vector<int64_t> v;
    for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
    return v;
}

void require_prime_base(const Model& M, const char* what) {
    if (M.P.a != 1) throw TooLarge(std::string(what) + " is implemented for q = p only");
}

}  // namespace

// ---- beta --------------------------------------------------------------------------

bool is_generator(const Model& M, const Vec& beta) {
    const TameParams& P = M.P;
    Vec theta = M.teich_elt(M.Q / (P.q - 1));
    std::vector<std::vector<int64_t>> rows;
    Vec tj = M.one();
    for (int64_t j = 0; j < P.a; ++j) {
        Vec bk = tj;
        for (int64_t k = 0; k < P.n; ++k) {
            rows.push_back(bk);
            bk = M.mul(bk, beta);
        }
        tj = M.mul(tj, theta);
    }
    return fp_rank(rows, P.p) == P.a * P.n;
}

Vec find_beta(const Model& M) {
    const TameParams& P = M.P;
    std::vector<int64_t> a0_cands;
    if (P.f == 1) a0_cands.push_back(-1);  // a0 = 0
    for (int64_t k = 0; k < M.Q; ++k) {
        bool gen = true;
        for (int64_t j = 1; j < P.f && gen; ++j)
            if (mod64(k * (ipow64(P.q, j) - 1), M.Q) == 0) gen = false;
        if (gen && P.f > 1) a0_cands.push_back(k);
    }
    std::vector<int64_t> a1_cands;
    if (P.e == 1) a1_cands.push_back(-1);
    else
        for (int64_t k = 0; k < M.Q; ++k) a1_cands.push_back(k);
    int64_t ninv = inv_mod64(mod64(P.n, M.gr.modulus()), M.gr.modulus());
    for (int64_t k1 : a1_cands)
        for (int64_t k0 : a0_cands) {
            Vec beta = k0 < 0 ? M.zero() : M.teich_elt(k0);
            if (k1 >= 0) beta = M.add(beta, M.mul(M.teich_elt(k1), M.pi_pow(1)));
            Vec T = trace_norm(M, beta).T;
            beta = M.sub(beta, M.scale(T, ninv));
            if (is_generator(M, beta)) return beta;
        }
    throw NoGenerator("no generator found for " + P.str());
}

std::vector<std::vector<int64_t>> regular_matrix(const Model& M, const Vec& x) {
    require_prime_base(M, "regular_matrix");
    std::size_t n = M.size();
    Mat a(n, std::vector<int64_t>(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
        Vec ek = M.zero();
        ek[k] = 1;
        Vec col = M.mul(x, ek);
        for (std::size_t i = 0; i < n; ++i) a[i][k] = col[i];
    }
    return a;
}

bool centralizer_bruteforce(const Model& M, const Vec& beta, int64_t level) {
    require_prime_base(M, "centralizer_bruteforce");
    const int64_t n = M.P.n;
    if (level < 1 || level > M.P.r) throw OutOfRange("level must lie in [1, r]");
    const int64_t mod = ipow64(M.P.p, level);
    BigInt total = ipow_big(mod, n * n);
    if (total > 10000000) throw TooLarge("commutant enumeration exceeds 10^7 matrices");
    Mat B = mat_reduce(regular_matrix(M, beta), mod);

    auto encode = [&](const Mat& a) {
        int64_t code = 0;
        for (const auto& row : a)
            for (auto v : row) code = code * mod + v;
        return code;
    };
    // span of 1, B, ..., B^{n-1}
    std::vector<Mat> powers{mat_identity(n)};
    for (int64_t k = 1; k < n; ++k) powers.push_back(mat_mul(powers.back(), B, mod));
    std::unordered_set<int64_t> span;
    std::vector<int64_t> coef(n, 0);
    for (;;) {
        Mat s(n, std::vector<int64_t>(n, 0));
        for (int64_t k = 0; k < n; ++k)
            for (int64_t i = 0; i < n; ++i)
                for (int64_t j = 0; j < n; ++j) s[i][j] = (s[i][j] + coef[k] * powers[k][i][j]) % mod;
        span.insert(encode(s));
        int64_t k = 0;
        while (k < n && ++coef[k] == mod) coef[k++] = 0;
        if (k == n) break;
    }
    int64_t count = 0;
    Mat X(n, std::vector<int64_t>(n, 0));
    int64_t cells = n * n;
    for (;;) {
        bool commutes = true;
        for (int64_t i = 0; i < n && commutes; ++i)
            for (int64_t j = 0; j < n; ++j) {
                int64_t s = 0;
                for (int64_t k = 0; k < n; ++k) s += X[i][k] * B[k][j] - B[i][k] * X[k][j];
                if (mod64(s, mod)) {
                    commutes = false;
                    break;
                }
            }
        if (commutes) {
            if (!span.count(encode(X))) return false;
            ++count;
        }
        int64_t c = 0;
        while (c < cells) {
            int64_t& v = X[c / n][c % n];
            if (++v < mod) break;
            v = 0;
            ++c;
        }
        if (c == cells) break;
    }
    return count == static_cast<int64_t>(span.size());
}

SymplecticResult symplectic_check(const Model& M, const Vec& beta) {
    require_prime_base(M, "symplectic_check");
    const int64_t n = M.P.n, p = M.P.p;
    if (n > 6) throw TooLarge("symplectic_check is limited to n <= 6");
    Mat B = mat_reduce(regular_matrix(M, beta), p);
    auto tr_bracket_b = [&](const Mat& X, const Mat& Y) {
        Mat c = mat_mul(X, Y, p), d = mat_mul(Y, X, p);
        int64_t t = 0;
        for (int64_t i = 0; i < n; ++i)
            for (int64_t k = 0; k < n; ++k) t += (c[i][k] - d[i][k]) * B[k][i];
        return mod64(t, p);
    };
    std::vector<Mat> basis;
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) continue;
            Mat x(n, std::vector<int64_t>(n, 0));
            x[i][j] = 1;
            if (i == j) x[n - 1][n - 1] = p - 1;
            basis.push_back(x);
        }
    std::size_t dim = basis.size();
    Mat G(dim, std::vector<int64_t>(dim));
    SymplecticResult out;
    out.alternating = true;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) G[a][b] = tr_bracket_b(basis[a], basis[b]);
    for (std::size_t a = 0; a < dim; ++a) {
        if (G[a][a]) out.alternating = false;
        for (std::size_t b = 0; b < dim; ++b)
            if (mod64(G[a][b] + G[b][a], p)) out.alternating = false;
    }
    // trace-zero part of F_p[beta]
    int64_t ninv = inv_mod64(n % p, p);
    std::vector<Mat> cent;
    Mat pw = mat_identity(n);
    for (int64_t k = 1; k < n; ++k) {
        pw = mat_mul(pw, B, p);
        int64_t t = 0;
        for (int64_t i = 0; i < n; ++i) t += pw[i][i];
        Mat y = pw;
        for (int64_t i = 0; i < n; ++i) y[i][i] = mod64(y[i][i] - t * ninv, p);
        cent.push_back(y);
    }
    std::vector<std::vector<int64_t>> cflat;
    bool in_radical = true;
    for (const auto& y : cent) {
        cflat.push_back(flatten(y));
        for (const auto& x : basis)
            if (tr_bracket_b(y, x)) in_radical = false;
    }
    int64_t cdim = fp_rank(cflat, p);
    int64_t rank = fp_rank(G, p);
    out.quotient_dim = static_cast<int64_t>(dim) - cdim;
    out.nondegenerate = in_radical && cdim == n - 1 && rank == out.quotient_dim;
    return out;
}

bool charpoly_check(const Model& M, const Vec& beta) {
    require_prime_base(M, "charpoly_check");
    const int64_t n = M.P.n, p = M.P.p;
    Mat B = mat_reduce(regular_matrix(M, beta), p);
    std::vector<std::vector<int64_t>> krylov{flatten(mat_identity(n))};
    Mat pw = mat_identity(n);
    int64_t deg = 0;
    std::vector<int64_t> minpoly;
    for (int64_t k = 1; k <= n; ++k) {
        pw = mat_mul(pw, B, p);
        auto v = flatten(pw);
        auto rows = krylov;
        rows.push_back(v);
        if (fp_rank(rows, p) < k + 1) {
            auto x = fp_solve(krylov, v, p);
            deg = k;
            for (auto c : x) minpoly.push_back(mod64(-c, p));
            minpoly.push_back(1);
            break;
        }
        krylov.push_back(v);
    }
    if (deg != n) return false;
    // minpoly = g^e with g monic irreducible of degree f
    const int64_t f = M.P.f, e = M.P.e;
    int64_t total = ipow64(p, f);
    for (int64_t code = 0; code < total; ++code) {
        Vec g(f + 1, 0);
        g[f] = 1;
        int64_t c = code;
        for (int64_t k = 0; k < f; ++k) g[k] = c % p, c /= p;
        if (!fp_poly_irreducible(g, p)) continue;
        Vec acc{1};
        for (int64_t k = 0; k < e; ++k) {
            Vec nxt(acc.size() + f, 0);
            for (std::size_t i = 0; i < acc.size(); ++i)
                for (int64_t j = 0; j <= f; ++j) nxt[i + j] = (nxt[i + j] + acc[i] * g[j]) % p;
            acc = nxt;
        }
        if (acc == minpoly) return true;
    }
    return false;
}

}  // namespace tamellc
