#include "tamellc/local_factors.hpp"

#include <sstream>

namespace tamellc {

std::string LocalFactorTriple::str() const {
    std::ostringstream os;
    os << "L=";
    bool rational = true;
    for (const auto& c : L_den.coeffs()) rational &= c.is_rational();
    if (rational) os << L().str();
    else {
        os << "1/(";
        for (std::size_t i = 0; i < L_den.coeffs().size(); ++i)
            os << (i ? " + " : "") << "(" << L_den.coeffs()[i].str() << ")u^" << i;
        os << ")";
    }
    os << " a=" << a << " w=" << w.str();
    return os.str();
}

LocalFactorTriple direct_sum(const LocalFactorTriple& x, const LocalFactorTriple& y) {
    if (x.q != y.q) throw InvalidParams("direct sum of factors over different fields");
    return {x.L_den * y.L_den, x.a + y.a, (x.w * y.w).shrink(), x.q};
}

LocalFactorTriple eps_abelian(const MultChar& chi) {
    const Model& M = chi.G->model();
    LocalFactorTriple t;
    t.q = M.gr.residue_size();
    t.a = conductor_bruteforce(chi);
    t.w = root_number(chi);
    if (t.a == 0) t.L_den = CPoly(std::vector<Cyclotomic>{Cyclotomic(1), -chi.at_pi()});
    return t;
}

LocalFactorTriple eps_unramified(const Cyclotomic& z, int64_t q) {
    LocalFactorTriple t;
    t.q = q;
    t.L_den = CPoly(std::vector<Cyclotomic>{Cyclotomic(1), -z});
    return t;
}

// ---- lambda ------------------------------------------------------------------------

Cyclotomic lambda_closed(const Model& M) {
    const TameParams& P = M.P;
    if (P.e % 2 == 1) return 1;
    int64_t Q = M.Q;
    int64_t sign_exp = (Q / P.e) * (P.e * (P.e + 2) / 8);
    // G(eta, varpi_0^{-1}) with varpi_0 = -c p: psi(-t / varpi_0) = psi(c^{-1} t / p)
    HalfPowerScalar g = quadratic_gauss_sum(P.p, M.d, 1);
    int64_t eta_c = M.c_exp % 2 ? -1 : 1;
    Cyclotomic v = g.to_cyclotomic() * Cyclotomic(eta_c);
    return (sign_exp % 2 ? -v : v).shrink();
}

Cyclotomic lambda_bruteforce(const Model& M) {
    const TameParams& P = M.P;
    const int64_t e = P.e, p = P.p, Q = M.Q;
    if (Q % e) throw BruteForceUnsupported("e does not divide q_0 - 1");
    std::vector<int64_t> tr(Q);
    for (int64_t k = 0; k < Q; ++k) tr[k] = mod64(M.gr.trace(M.teich[k]), p);
    const int64_t L = lcm64(e, p);
    // log of (-1)^{e-1} c
    int64_t log_u = mod64((e - 1) * (Q / 2) + M.c_exp, Q);
    HalfPowerScalar prod(Cyclotomic(1), 0, M.gr.residue_size());
    for (int64_t j = 1; j < e; ++j) {
        std::unordered_map<int64_t, int64_t> counts;
        for (int64_t k = 0; k < Q; ++k) {
            // chi_j(t)^{-1} psi(t / p)
            int64_t x = -j * (k % e) * (L / e) + tr[k] * (L / p);
            ++counts[mod64(x, L)];
        }
        Cyclotomic chi_p = Cyclotomic::zeta(e, mod64(-j * log_u, e));
        prod = prod * HalfPowerScalar(Cyclotomic::from_counts(L, counts) * chi_p, -1, M.gr.residue_size());
    }
    return prod.to_cyclotomic().shrink();
}

Cyclotomic lambda_unramified(const TameParams& P) {
    // Ind_{K_0}^F 1 = sum of the unramified characters of order dividing f
    LocalFactorTriple acc = eps_unramified(Cyclotomic(1), P.q);
    for (int64_t j = 1; j < P.f; ++j) acc = direct_sum(acc, eps_unramified(Cyclotomic::zeta(P.f, j), P.q));
    // epsilon(1_{K_0}, psi_{K_0}) = 1 since K_0/Q_p is unramified
    return acc.w;
}

LocalFactorTriple induced_factor(const MultChar& chi, const Cyclotomic& lambda) {
    const Model& M = chi.G->model();
    const TameParams& P = M.P;
    LocalFactorTriple t;
    t.q = P.q;
    int64_t k = conductor_bruteforce(chi);
    t.a = P.f * (P.e - 1) + P.f * k;
    t.w = (root_number(chi) * lambda).shrink();
    if (k == 0) {
        std::vector<Cyclotomic> c(P.f + 1, Cyclotomic(0));
        c[0] = 1;
        c[P.f] = -chi.at_pi();
        t.L_den = CPoly(c);
    }
    return t;
}

// ---- rational linear algebra ------------------------------------------------------

using QMat = std::vector<std::vector<Rational>>;

QPoly charpoly(const QMat& A) {
    const std::size_t m = A.size();
    std::vector<Rational> c(m + 1, Rational(0));
    c[m] = 1;
    QMat Mk(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t k = 1; k <= m; ++k) {
        QMat next(m, std::vector<Rational>(m, Rational(0)));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t l = 0; l < m; ++l)
                for (std::size_t j = 0; j < m; ++j) next[i][j] += A[i][l] * Mk[l][j];
            next[i][i] += c[m - k + 1];
        }
        Mk = next;
        Rational tr = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t l = 0; l < m; ++l) tr += A[i][l] * Mk[l][i];
        c[m - k] = -tr / Rational(static_cast<long>(k));
    }
    return QPoly(c);
}

QPoly det_one_minus_uA(const QMat& A) {
    QPoly cp = charpoly(A);
    std::size_t m = A.size();
    std::vector<Rational> r(m + 1);
    for (std::size_t k = 0; k <= m; ++k) r[k] = cp.coeff(m - k);
    return QPoly(r);
}

namespace {

// Basis of the null space of the rows; each basis vector has a 1 at its free
// column and 0 at the other free columns.
std::vector<std::vector<Rational>> nullspace(QMat a, std::size_t cols, std::vector<std::size_t>& free) {
    std::vector<int64_t> pivot_row(cols, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][c];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_row[c] = static_cast<int64_t>(row++);
    }
    free.clear();
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row[c] < 0) free.push_back(c);
    std::vector<std::vector<Rational>> basis;
    for (auto fc : free) {
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_row[c] >= 0) v[c] = -a[pivot_row[c]][fc];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

PrincipalData principal_triple(int64_t n, int64_t q) {
    if (n < 2) throw InvalidParams("principal parameter needs n >= 2");
    const std::size_t N = static_cast<std::size_t>(n), dim = N * N;
    // N_0: lower shift; equations [N_0, X] = 0 and tr X = 0 on X in M_n(Q)
    QMat eqs;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::vector<Rational> row(dim, Rational(0));
            // (N_0 X)_{ij} = X_{i-1,j}, (X N_0)_{ij} = X_{i,j+1}
            if (i >= 1) row[(i - 1) * N + j] += 1;
            if (j + 1 < N) row[i * N + j + 1] -= 1;
            eqs.push_back(row);
        }
    std::vector<Rational> tr(dim, Rational(0));
    for (std::size_t i = 0; i < N; ++i) tr[i * N + i] = 1;
    eqs.push_back(tr);
    std::vector<std::size_t> free;
    auto basis = nullspace(eqs, dim, free);
    const std::size_t m = basis.size();
    // Ad(D') with D' = diag(q^{n-1}, ..., 1): X_{ij} -> q^{j-i} X_{ij}
    QMat A(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Rational> img(dim);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                img[i * N + j] = basis[c][i * N + j] * qpow(q, static_cast<int64_t>(j) - static_cast<int64_t>(i));
        for (std::size_t r = 0; r < m; ++r) A[r][c] = img[free[r]];
    }
    PrincipalData out;
    QPoly cp = charpoly(A);
    QPoly rest = cp;
    for (int64_t k = 0; k <= 2 * n && rest.degree() > 0; ++k) {
        Rational lam = qpow(q, -k);
        for (;;) {
            auto [quo, rem] = divmod(rest, QPoly(std::vector<Rational>{-lam, Rational(1)}));
            if (!rem.is_zero()) break;
            out.frob_eigenvalues.push_back(lam);
            rest = quo;
        }
    }
    QPoly den = det_one_minus_uA(A);
    std::vector<Cyclotomic> cden;
    for (const auto& c : den.coeffs()) cden.push_back(Cyclotomic(c));

    LocalFactorTriple wd = wd_factors(WDDescriptor::principal_sym(n, q));
    out.triple = wd;
    if (to_qpoly(wd.L_den) != den) throw Error("Internal", "principal L mismatch between routes");
    RatFunc L = out.triple.L();
    Rational ratio = ratfunc_eval(L, Rational(1, q)) / ratfunc_eval(L, Rational(1));
    out.gamma0 = qpow(q, out.triple.a / 2) * ratio;
    if (out.triple.a % 2) throw Error("Internal", "odd principal conductor");
    return out;
}

// ---- Sym_n pairing ------------------------------------------------------------------

namespace {

using CMat = std::vector<std::vector<Cyclotomic>>;

// Coefficients in y-degree of (alpha x + beta y)^k as a polynomial.
std::vector<Cyclotomic> binom_pow(const Cyclotomic& alpha, const Cyclotomic& beta, int64_t k) {
    std::vector<Cyclotomic> r{Cyclotomic(1)};
    for (int64_t s = 0; s < k; ++s) {
        std::vector<Cyclotomic> nx(r.size() + 1, Cyclotomic(0));
        for (std::size_t i = 0; i < r.size(); ++i) {
            nx[i] += r[i] * alpha;
            nx[i + 1] += r[i] * beta;
        }
        r = nx;
    }
    return r;
}

CMat sym_matrix(int64_t n, const std::array<Cyclotomic, 4>& g) {
    // x -> a x + c y, y -> b x + d y; basis e_i = x^{n-i} y^i
    const auto& [a, b, c, d] = g;
    CMat S(n + 1, std::vector<Cyclotomic>(n + 1, Cyclotomic(0)));
    for (int64_t i = 0; i <= n; ++i) {
        auto u = binom_pow(a, c, n - i), v = binom_pow(b, d, i);
        for (std::size_t s = 0; s < u.size(); ++s)
            for (std::size_t t = 0; t < v.size(); ++t) S[s + t][i] += u[s] * v[t];
    }
    return S;
}

Rational fact(int64_t k) {
    Rational r = 1;
    for (int64_t i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

SymPairingResult sym_pairing_check(int64_t n, const std::vector<std::array<Cyclotomic, 4>>& gs) {
    CMat J(n + 1, std::vector<Cyclotomic>(n + 1, Cyclotomic(0)));
    for (int64_t i = 0; i <= n; ++i) J[i][n - i] = Cyclotomic((i % 2 ? -1 : 1) * fact(i) * fact(n - i));
    SymPairingResult out;
    out.parity = true;
    Cyclotomic sgn = n % 2 ? -1 : 1;
    for (int64_t i = 0; i <= n; ++i)
        for (int64_t j = 0; j <= n; ++j)
            if (J[i][j] != sgn * J[j][i]) out.parity = false;
    out.invariant = true;
    for (const auto& g : gs) {
        if (g[0] * g[3] - g[1] * g[2] != Cyclotomic(1)) throw InvalidParams("test element not in SL_2");
        CMat S = sym_matrix(n, g);
        for (int64_t i = 0; i <= n && out.invariant; ++i)
            for (int64_t j = 0; j <= n; ++j) {
                Cyclotomic s = 0;
                for (int64_t k = 0; k <= n; ++k)
                    for (int64_t l = 0; l <= n; ++l)
                        if (!J[k][l].is_zero()) s += S[k][i] * J[k][l] * S[l][j];
                if (s != J[i][j]) {
                    out.invariant = false;
                    break;
                }
            }
    }
    return out;
}

std::vector<std::array<Cyclotomic, 4>> sl2_test_set() {
    Cyclotomic z3 = Cyclotomic::zeta(3, 1), z3i = Cyclotomic::zeta(3, 2), i4 = Cyclotomic::zeta(4, 1);
    return {
        {1, 0, 0, 1},
        {0, 1, -1, 0},
        {1, 1, 0, 1},
        {1, 0, 1, 1},
        {2, 3, 1, 2},
        {z3, 0, 0, z3i},
        {1, i4, 0, 1},
        {Cyclotomic(Rational(1, 2)), 0, 0, 2},
    };
}

// ---- Weil-Deligne data --------------------------------------------------------------

WDDescriptor WDDescriptor::principal_sym(int64_t n, int64_t q) {
    // Ad o phi_0 = sum_{k=1}^{n-1} Sym_{2k} with trivial Weil part
    WDDescriptor D;
    D.q = q;
    for (int64_t k = 1; k < n; ++k) D.pieces.push_back({2 * k, eps_unramified(Cyclotomic(1), q)});
    return D;
}

WDDescriptor WDDescriptor::weil_only(const LocalFactorTriple& t) {
    WDDescriptor D;
    D.q = t.q;
    D.pieces.push_back({0, t});
    return D;
}

WDDescriptor WDDescriptor::operator+(const WDDescriptor& o) const {
    if (q != o.q) throw InvalidParams("direct sum of descriptors over different fields");
    WDDescriptor D = *this;
    D.pieces.insert(D.pieces.end(), o.pieces.begin(), o.pieces.end());
    return D;
}

LocalFactorTriple wd_factors(const WDDescriptor& D) {
    LocalFactorTriple out;
    out.q = D.q;
    for (const auto& pc : D.pieces) {
        const int64_t k = pc.sym;
        const auto& W = pc.weil;
        // L: det(1 - q^{-k/2} u Fr | V_k^I)^{-1}
        std::vector<Cyclotomic> c = W.L_den.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = c[i] * HalfPowerScalar(Cyclotomic(1), -k * static_cast<int64_t>(i), D.q).to_cyclotomic();
        out.L_den = out.L_den * CPoly(c);
        int64_t dimI = W.dim_inertia_fixed();
        out.a += (k + 1) * W.a + k * dimI;
        // det(-Fr | V^I) is the top coefficient of det(1 - u Fr)
        Cyclotomic det_neg = W.L_den.lead();
        out.w = (out.w * W.w.pow(k + 1) * det_neg.pow(k)).shrink();
    }
    return out;
}

}  // namespace tamellc
