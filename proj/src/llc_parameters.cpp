#include "tamellc/llc_parameters.hpp"

#include <set>

#include "tamellc/errors.hpp"

namespace tamellc {

bool MonomialMatrix::is_monomial() const {
    std::set<std::size_t> cols;
    for (const auto& r : rows) {
        if (r.value.is_zero()) return false;
        cols.insert(r.col);
    }
    return cols.size() == rows.size();
}

MonomialMatrix phi1_matrix(const MultChar& tt, const GalElt& sigma, const Vec& x) {
    const Model& M = tt.G->model();
    const TameParams& P = M.P;
    auto els = gal_elements(P);
    MonomialMatrix out;
    out.rows.resize(els.size());
    GalElt sinv = gal_inv(sigma, P);
    for (std::size_t row = 0; row < els.size(); ++row) {
        GalElt tau = gal_mul(sinv, els[row], P);
        MonomialEntry ent;
        ent.col = gal_index(tau, P);
        ent.value = tt.value(M.act(tau, x));
        CocycleSymbol a{sigma, tau};
        if (!a.trivial()) ent.cocycles.push_back(a);
        out.rows[row] = ent;
    }
    return out;
}

Cyclotomic phi1_trace(const MultChar& tt, const GalElt& sigma, const Vec& x) {
    MonomialMatrix m = phi1_matrix(tt, sigma, x);
    Cyclotomic tr = 0;
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (m.rows[i].col != i) continue;
        if (!m.rows[i].cocycles.empty()) throw Error("Internal", "trace depends on the cocycle");
        tr += m.rows[i].value;
    }
    return tr.shrink();
}

Cyclotomic adjoint_character(const MultChar& tt, const Vec& x) {
    const Model& M = tt.G->model();
    const TameParams& P = M.P;
    auto els = gal_elements(P);
    Cyclotomic s(P.n - 1);
    for (const auto& g : els) {
        if (g == GalElt{}) continue;
        MultChar tg = twist(tt, g);
        for (const auto& sg : els) s += tg.value(M.act(sg, x));
    }
    return s.shrink();
}

bool AdjointDecomposition::partition_ok(const TameParams& P) const {
    std::set<GalElt> seen{GalElt{}};
    std::size_t count = 1;
    for (const auto& [g, h] : pairs) {
        if (g == h || gal_inv(g, P) != h) return false;
        seen.insert(g);
        seen.insert(h);
        count += 2;
    }
    for (const auto& g : order_two) {
        if (gal_mul(g, g, P) != GalElt{}) return false;
        seen.insert(g);
        ++count;
    }
    return count == static_cast<std::size_t>(P.n) && seen.size() == count;
}

AdjointDecomposition adjoint_decompose(const TameParams& P) {
    AdjointDecomposition d;
    d.n = P.n;
    d.regular_dim = P.n - 1;
    std::set<GalElt> used;
    OrderTwoInfo o2 = order_two_set(P);
    for (const auto& g : o2.H)
        if (g != GalElt{}) d.order_two.push_back(g);
    for (const auto& g : gal_elements(P)) {
        if (g == GalElt{}) continue;
        d.induced.push_back(g);
        if (gal_mul(g, g, P) == GalElt{} || used.count(g)) continue;
        GalElt h = gal_inv(g, P);
        d.pairs.push_back({g, h});
        used.insert(g);
        used.insert(h);
    }
    return d;
}

std::vector<std::vector<Rational>> frobenius_matrix(int64_t f) {
    std::size_t k = static_cast<std::size_t>(f - 1);
    std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
        A[i][0] = -1;
        if (i + 1 < k) A[i][i + 1] = 1;
    }
    return A;
}

RatFunc adjoint_L(const TameParams& P, LMethod method, const std::vector<MultChar>* twists) {
    switch (method) {
    case LMethod::Closed: {
        std::vector<Rational> c(P.f, Rational(1));
        return RatFunc(QPoly(Rational(1)), QPoly(c));
    }
    case LMethod::Matrix:
        return RatFunc(QPoly(Rational(1)), det_one_minus_uA(frobenius_matrix(P.f)));
    case LMethod::Decomposition: {
        // Ind_K^F 1 minus 1: the nontrivial characters of Gamma / inertia
        CPoly den(Cyclotomic(1));
        for (int64_t j = 1; j < P.f; ++j)
            den = den * CPoly(std::vector<Cyclotomic>{Cyclotomic(1), -Cyclotomic::zeta(P.f, j)});
        auto dec = adjoint_decompose(P);
        for (std::size_t k = 0; k < dec.induced.size(); ++k) {
            bool unramified;
            Cyclotomic at_pi = 1;
            if (twists) {
                const MultChar& t = twists->at(k);
                unramified = conductor_bruteforce(t) == 0;
                at_pi = t.at_pi();
            } else {
                unramified = conductor_predicted(P, dec.induced[k]) == 0;
            }
            if (!unramified) continue;
            std::vector<Cyclotomic> c(P.f + 1, Cyclotomic(0));
            c[0] = 1;
            c[P.f] = -at_pi;
            den = den * CPoly(c);
        }
        return RatFunc(QPoly(Rational(1)), to_qpoly(den));
    }
    }
    throw Error("Internal", "unknown L method");
}

int64_t adjoint_conductor(const TameParams& P, ConductorMethod method) {
    if (P.r < 2) throw InvalidParams("conductor needs r >= 2");
    const int64_t dimg = P.n * P.n - 1;
    if (method == ConductorMethod::Additivity) {
        int64_t a = P.f * (P.e - 1);
        for (const auto& g : gal_elements(P))
            if (g != GalElt{}) a += P.f * (P.e - 1) + P.f * conductor_predicted(P, g);
        return a;
    }
    // sum over t >= 0 of (V_0 : V_t)^{-1} codim V_t; V_t is constant on
    // q^{f(k-1)} <= t <= q^{fk} - 1.
    FiltrationData d0 = filtration_data(P, BigInt(0));
    Rational a(dimg - d0.fixdim);
    BigInt qf = ipow_big(P.q, P.f), lo = 1, hi = qf;
    BigInt top = ipow_big(P.q, P.f * P.e * P.r) - 1;
    while (hi - 1 <= top) {
        FiltrationData d = filtration_data(P, hi - 1);
        if (d.fixdim == dimg) break;
        a += Rational(hi - lo) * d.size / d0.size * Rational(dimg - d.fixdim);
        lo = hi;
        hi *= qf;
    }
    if (a.get_den() != 1) throw Error("Internal", "non-integral conductor");
    return a.get_num().get_si();
}

Rational L_ratio_closed(const TameParams& P) {
    return Rational(P.f) * (1 - qpow(P.q, -1)) / (1 - qpow(P.q, -P.f));
}

Gamma0 adjoint_gamma0(const TameParams& P) {
    Gamma0 g;
    g.a = adjoint_conductor(P, ConductorMethod::Filtration);
    RatFunc L = adjoint_L(P, LMethod::Matrix);
    g.L_ratio = ratfunc_eval(L, Rational(1, P.q)) / ratfunc_eval(L, Rational(1));
    // a = r n (n - 1) is even
    if (g.a % 2) throw Error("Internal", "odd adjoint conductor");
    g.abs_gamma = qpow(P.q, g.a / 2) * g.L_ratio;
    return g;
}

Cyclotomic adjoint_root_number_closed(const TameParams& P, const Cyclotomic& vartheta_at_eps) {
    Cyclotomic w = vartheta_at_eps;
    if (P.e % 2 == 0 && ((P.q - 1) * P.f / 2) % 2) w = -w;
    return w;
}

Cyclotomic lambda_tower(const Model& M) {
    Cyclotomic lo;
    try {
        lo = lambda_bruteforce(M);
    } catch (const BruteForceUnsupported&) {
        lo = lambda_closed(M);
    }
    return (lo * lambda_unramified(M.P).pow(M.P.e)).shrink();
}

Cyclotomic adjoint_root_number_assembled(const MultChar& tt, const Cyclotomic& lambda, GaussMethod method) {
    const TameParams& P = tt.G->model().P;
    Cyclotomic w = lambda.pow(P.n);
    for (const auto& g : gal_elements(P))
        if (g != GalElt{}) w = (w * root_number(twist(tt, g), method)).shrink();
    return w;
}

int64_t centralizer_order(const TameParams& P) { return abelianization_order(P); }

int64_t centralizer_order_bruteforce(const TameParams& P) { return count_gamma_characters(P); }

}  // namespace tamellc
