#include "tamellc/characters.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace tamellc {

// ---- MultChar -------------------------------------------------------------------

MultChar MultChar::trivial(const UnitGroup& G) {
    MultChar c;
    c.G = &G;
    c.modulus = G.exponent();
    c.a.assign(G.rank(), 0);
    return c;
}

int64_t MultChar::log_coords(const std::vector<int64_t>& y) const {
    int64_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s = (s + a[k] * y[k]) % modulus;
    return s;
}

int64_t MultChar::log(const Vec& u) const { return log_coords(G->coords(u)); }

Cyclotomic MultChar::value(const Vec& u) const { return Cyclotomic::zeta(modulus, log(u)); }

bool MultChar::trivial_on_units() const {
    for (auto v : a)
        if (v) return false;
    return true;
}

MultChar MultChar::inverse() const {
    MultChar c = *this;
    for (auto& v : c.a) v = mod64(-v, modulus);
    c.pi_exp = mod64(-pi_exp, modulus);
    return c;
}

MultChar MultChar::operator*(const MultChar& o) const {
    MultChar c = *this;
    for (std::size_t k = 0; k < a.size(); ++k) c.a[k] = (a[k] + o.a[k]) % modulus;
    c.pi_exp = (pi_exp + o.pi_exp) % modulus;
    return c;
}

// ---- additive characters ----------------------------------------------------

Root psi_K(const Model& M, int64_t v, const Vec& y) {
    const int64_t e = M.P.e;
    if (v < 0 || v > M.levels) throw PrecisionTooLow("psi_K shift beyond model precision");
    if (v == 0) return {};
    int64_t J = (v + e - 1) / e;
    // pi^{-v} = pi^{eJ - v} c^{-J} p^{-J}
    Vec cj = M.gr.pow(M.teich[mod64(-M.c_exp, M.Q)], J);
    Vec w = M.mul(M.mul(M.pi_pow(e * J - v), M.from_gr(cj)), y);
    int64_t pj = ipow64(M.P.p, J);
    return {pj, mod64(M.abs_trace(w), pj)};
}

Root chi_beta(const Model& M, const Vec& beta, const Vec& x) {
    const TameParams& P = M.P;
    int64_t pl = ipow64(P.p, P.l);
    Vec y = M.sub(x, M.one());
    for (auto& c : y) {
        if (c % pl) throw NotInSubgroup("chi_beta needs x = 1 mod p^l");
        c /= pl;
    }
    int64_t plp = ipow64(P.p, P.lp);
    return {plp, mod64(M.abs_trace(M.mul(y, beta)), plp)};
}

// ---- theta ------------------------------------------------------------------------

namespace {

Vec norm_of(const Model& M, const Vec& x) { return trace_norm(M, x).N; }

std::vector<std::vector<int64_t>> norm_images(const UnitGroup& A, const std::vector<Vec>& xs) {
    std::vector<std::vector<int64_t>> out;
    for (const auto& x : xs) out.push_back(A.coords(norm_of(A.model(), x)));
    return out;
}

std::vector<Vec> level_gens(const UnitGroup& A, int64_t from) {
    std::vector<Vec> out;
    for (int64_t i = from; i < A.level(); ++i)
        for (int64_t b = 0; b < A.model().d; ++b) out.push_back(A.one_unit_gen(i, b));
    return out;
}

BigInt base_unit_order(const TameParams& P) { return ipow_big(P.q, P.r - 1) * (P.q - 1); }

}  // namespace

ThetaData extend_theta(const UnitGroup& A, const Vec& beta) {
    const Model& M = A.model();
    const TameParams& P = M.P;
    if (A.level() != M.levels) throw OutOfRange("extend_theta needs the full level er");
    ThetaData T;
    const auto& D = A.orders();
    const std::size_t K = D.size();
    const int64_t Mx = A.exponent();

    auto sgens = level_gens(A, P.e * P.l);
    std::vector<std::vector<int64_t>> sc;
    for (const auto& s : sgens) sc.push_back(A.coords(s));
    const std::size_t S = sgens.size();

    int64_t plp = ipow64(P.p, P.lp);
    IntMat W(K + S, S);
    std::vector<BigInt> target(S);
    for (std::size_t s = 0; s < S; ++s) {
        for (std::size_t k = 0; k < K; ++k) W(k, s) = BigInt(sc[s][k]) * (Mx / D[k]);
        W(K + s, s) = Mx;
        Root v = chi_beta(M, beta, sgens[s]);
        target[s] = BigInt(v.exp) * (Mx / plp);
    }
    auto sol = solve_left(W, target);
    if (!sol) throw ExtensionObstruction("chi_beta does not extend");
    std::vector<BigInt> a0(sol->begin(), sol->begin() + K);
    IntMat ker = left_kernel(W);
    std::vector<std::vector<BigInt>> kgens;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        auto row = ker.row(r);
        kgens.emplace_back(row.begin(), row.begin() + K);
    }
    std::vector<BigInt> mods(D.begin(), D.end());
    auto best = lexmin_in_coset(a0, kgens, mods);

    T.X = MultChar::trivial(A);
    for (std::size_t k = 0; k < K; ++k) T.X.a[k] = best[k].get_si() * (Mx / D[k]) % Mx;
    for (std::size_t s = 0; s < S; ++s) {
        Root v = chi_beta(M, beta, sgens[s]);
        if (T.X.log_coords(sc[s]) != v.exp * (Mx / plp) % Mx)
            throw ExtensionObstruction("extension disagrees with chi_beta");
    }

    auto images = norm_images(A, A.gens());
    T.a_order = A.order();
    T.norm_image = subgroup_order(images, D);
    T.ubar_order = T.a_order / T.norm_image;
    T.ubar = hom_kernel(images, D, D);
    T.s_order = subgroup_order(sc, D);
    T.ubar_s_order = T.s_order / subgroup_order(norm_images(A, sgens), D);
    T.theta_count = T.ubar_order / T.ubar_s_order;
    return T;
}

Cyclotomic theta_value(const ThetaData& T, const Vec& u) {
    const Model& M = T.X.G->model();
    Vec n = norm_of(M, u);
    if (n != M.one()) throw NotInSubgroup("theta is defined on norm-one units");
    return T.X.value(u);
}

BigInt norm_index_model(const UnitGroup& A) {
    auto images = norm_images(A, A.gens());
    return base_unit_order(A.model().P) / subgroup_order(images, A.orders());
}

int64_t norm_index_bruteforce(const Model& M) {
    // raw generators: omega and 1 + pi^i X^b
    std::vector<Vec> gens{M.teich_elt(1)};
    for (int64_t i = 1; i < M.levels; ++i)
        for (int64_t b = 0; b < M.d; ++b)
            gens.push_back(M.add(M.one(), M.mul(M.pi_pow(i), M.from_gr(M.gr.x_pow(b)))));
    std::vector<Vec> ngens;
    for (const auto& g : gens) {
        Vec n = norm_of(M, g);
        if (!in_base(M, n)) throw Error("Internal", "norm outside the base");
        ngens.push_back(M.gr_part(n, 0));
    }
    std::set<Vec> seen{M.gr.one()};
    std::vector<Vec> frontier{M.gr.one()};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& x : frontier)
            for (const auto& g : ngens) {
                Vec y = M.gr.mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    BigInt idx = base_unit_order(M.P) / static_cast<long>(seen.size());
    return idx.get_si();
}

// ---- chi-data -----------------------------------------------------------------------

ChiData chi_data_c(const TameParams& P, const Model* M) {
    ChiData out;
    auto info = order_two_set(P);
    for (std::size_t k = 0; k < info.H.size(); ++k)
        if (info.H[k] != GalElt{0, 0} && info.ramified[k]) ++out.ramified_count;
    if (P.n % 2 == 1) out.closed = 1;
    else if (P.e % 2 == 0) out.closed = ((P.q - 1) / 2 * P.f) % 2 ? -1 : 1;
    else out.closed = 1;
    if (!M) return out;
    out.has_brute = true;
    if (P.n % 2 == 1) return out;
    // (-1, K/K_gamma) = 1 iff -1 = x gamma(x) for a residue unit x
    Vec minus1 = M->truncate(M->neg(M->one()), 1);
    for (std::size_t k = 0; k < info.H.size(); ++k) {
        if (info.H[k] == GalElt{0, 0}) continue;
        bool is_norm = false;
        for (int64_t t = 0; t < M->Q && !is_norm; ++t) {
            Vec x = M->teich_elt(t);
            if (M->truncate(M->mul(x, M->act(info.H[k], x)), 1) == minus1) is_norm = true;
        }
        if (!is_norm) out.brute = out.brute * Cyclotomic(-1);
    }
    return out;
}

MultChar residue_legendre(const UnitGroup& A) {
    MultChar c = MultChar::trivial(A);
    c.a[0] = c.modulus / 2;  // omega is a non-square
    return c;
}

MultChar teichmuller_character(const UnitGroup& A, int64_t k) {
    MultChar c = MultChar::trivial(A);
    c.a[0] = mod64(k * (c.modulus / A.model().Q), c.modulus);
    return c;
}

MultChar theta_tilde(const ThetaData& T, const ChiData& c) {
    MultChar out = T.X;
    if (c.ramified_count % 2) out = out * residue_legendre(*T.X.G);
    out.pi_exp = 0;
    return out;
}

MultChar twist(const MultChar& chi, const GalElt& g) {
    const UnitGroup& A = *chi.G;
    const Model& M = A.model();
    MultChar out = chi;
    for (std::size_t k = 0; k < A.rank(); ++k) {
        auto y = A.coords(M.act(g, A.gens()[k]));
        out.a[k] = mod64(chi.a[k] - chi.log_coords(y), chi.modulus);
    }
    // chi(pi) / chi(u_g pi) = chi(u_g)^{-1}
    out.pi_exp = mod64(-chi.log(M.teich_elt(M.unit_exponent(g))), chi.modulus);
    return out;
}

// ---- conductors ----------------------------------------------------------------------

int64_t conductor_bruteforce(const MultChar& chi) {
    const UnitGroup& A = *chi.G;
    const Model& M = A.model();
    for (int64_t i = A.level() - 1; i >= 1; --i)
        for (int64_t b = 0; b < M.d; ++b)
            if (chi.log(A.one_unit_gen(i, b))) return i + 1;
    if (chi.log(M.teich_elt(1))) return 1;
    return 0;
}

int64_t conductor_predicted(const TameParams& P, const GalElt& g) {
    if (g == GalElt{0, 0}) return 0;
    return gal_in_inertia(g) ? P.e * (P.r - 1) : P.e * (P.r - 1) + 1;
}

// ---- Gauss sums ----------------------------------------------------------------------

namespace {

struct Accum {
    int64_t order;
    std::unordered_map<int64_t, int64_t> counts;
    void add(int64_t chi_mod, int64_t chi_exp, const Root& r) {
        int64_t x = chi_exp * (order / chi_mod) + r.exp * (order / r.order);
        ++counts[mod64(x, order)];
    }
    Cyclotomic value() const { return Cyclotomic::from_counts(order, counts); }
};

BigInt literal_terms(const Model& M, int64_t k) {
    if (k == 0) return 1;
    return ipow_big(M.gr.residue_size(), k - 1) * M.Q;
}

HalfPowerScalar gauss_literal(const MultChar& chi, int64_t k, int64_t v, const Vec& s) {
    const Model& M = chi.G->model();
    Accum acc{lcm64(chi.modulus, M.gr.modulus()), {}};
    for_each_element(M, k, [&](const Vec& t) {
        if (!M.is_unit(t)) return;
        acc.add(chi.modulus, -chi.log(t), psi_K(M, v, M.mul(s, t)));
    });
    return HalfPowerScalar(acc.value(), -k, M.gr.residue_size());
}

HalfPowerScalar gauss_reduced(const MultChar& chi, int64_t k, int64_t v, const Vec& s) {
    const UnitGroup& A = *chi.G;
    const Model& M = A.model();
    if (k < 2) return gauss_literal(chi, k, v, s);
    const int64_t k1 = (k + 1) / 2, k2 = k / 2;
    // residue representatives: 0 and the Teichmuller elements
    std::vector<Vec> reps{M.zero()};
    for (int64_t t = 0; t < M.Q; ++t) reps.push_back(M.teich_elt(t));
    // t* mod pi^{k2} with chi(1 + x) = psi(pi^{-v} s t* x) on pi^{k1} O
    Vec tstar = M.zero();
    for (int64_t j = 0; j < k2; ++j) {
        int64_t i = k - 1 - j;
        Vec pij = M.pi_pow(j);
        int found = 0;
        Vec pick;
        for (const auto& r : reps) {
            Vec cand = M.add(tstar, M.mul(pij, r));
            bool ok = true;
            for (int64_t b = 0; b < M.d && ok; ++b) {
                Vec g = A.one_unit_gen(i, b);
                Root ps = psi_K(M, v, M.mul(M.mul(s, cand), M.sub(g, M.one())));
                int64_t lhs = chi.log(g);
                if (mod64(lhs * (ps.order) - ps.exp * chi.modulus, chi.modulus * ps.order) != 0) ok = false;
            }
            if (ok) {
                ++found;
                pick = cand;
            }
        }
        if (found != 1) throw Error("Internal", "stationary point not unique; character not primitive");
        tstar = pick;
    }
    if (!M.is_unit(tstar)) throw Error("Internal", "stationary point is not a unit");
    Accum acc{lcm64(chi.modulus, M.gr.modulus()), {}};
    const std::vector<Vec> zs = k1 > k2 ? reps : std::vector<Vec>{M.zero()};
    Vec pk2 = M.pi_pow(k2);
    for (const auto& z : zs) {
        Vec u = M.add(tstar, M.mul(pk2, z));
        acc.add(chi.modulus, -chi.log(u), psi_K(M, v, M.mul(s, u)));
    }
    return HalfPowerScalar(acc.value(), -k + 2 * k2, M.gr.residue_size());
}

}  // namespace

HalfPowerScalar gauss_sum(const MultChar& chi, int64_t k, int64_t v, const Vec& s, GaussMethod method) {
    const Model& M = chi.G->model();
    if (k > chi.G->level() || v > M.levels) throw PrecisionTooLow("Gauss sum beyond model precision");
    if (k == 0) {
        Root r = psi_K(M, v, s);
        return HalfPowerScalar(r.value(), 0, M.gr.residue_size());
    }
    if (method == GaussMethod::Auto)
        method = literal_terms(M, k) <= 50000 ? GaussMethod::Literal : GaussMethod::Reduced;
    return method == GaussMethod::Literal ? gauss_literal(chi, k, v, s) : gauss_reduced(chi, k, v, s);
}

Cyclotomic root_number(const MultChar& chi, GaussMethod method) {
    const Model& M = chi.G->model();
    const int64_t d = M.P.e - 1;
    int64_t k = conductor_bruteforce(chi);
    Cyclotomic pi_part = Cyclotomic::zeta(chi.modulus, mod64(chi.pi_exp * (d + k), chi.modulus));
    if (k == 0) return pi_part;
    HalfPowerScalar g = gauss_sum(chi, k, d + k, M.one(), method);
    return (g.to_cyclotomic() * pi_part).shrink();
}

HalfPowerScalar quadratic_gauss_sum(int64_t p, int64_t d, int sign) {
    GaloisRing F(p, 1, d);
    int64_t Q = F.residue_size() - 1;
    std::unordered_map<int64_t, int64_t> plus, minus;
    for (int64_t idx = 1; idx <= Q; ++idx) {
        Vec t = F.from_residue_index(idx);
        bool square = F.pow(t, Q / 2) == F.one();
        int64_t tr = mod64(sign * F.trace(t), p);
        ++(square ? plus : minus)[tr];
    }
    Cyclotomic g = Cyclotomic::from_counts(p, plus) - Cyclotomic::from_counts(p, minus);
    return HalfPowerScalar(g, -d, p);
}

bool regularity_check(const MultChar& chi) {
    const UnitGroup& A = *chi.G;
    const Model& M = A.model();
    for (const auto& g : gal_elements(M.P)) {
        if (g == GalElt{0, 0}) continue;
        bool moved = false;
        for (const auto& x : A.gens())
            if (chi.log(M.act(g, x)) != chi.log(x)) {
                moved = true;
                break;
            }
        if (!moved) return false;
    }
    return true;
}

}  // namespace tamellc
