#include "tamellc/conjectures.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "tamellc/errors.hpp"
#include "tamellc/llc_parameters.hpp"
#include "tamellc/local_factors.hpp"

namespace tamellc {

BigInt sl_order(int64_t n, int64_t q) {
    // q^{n(n-1)/2} prod_{k=2}^n (q^k - 1)
    BigInt r = ipow_big(q, n * (n - 1) / 2);
    for (int64_t k = 2; k <= n; ++k) r *= ipow_big(q, k) - 1;
    return r;
}

namespace {

// prod_{k=lo}^{hi} (1 - q^{-k})
Rational prod_one_minus(int64_t q, int64_t lo, int64_t hi) {
    Rational r = 1;
    for (int64_t k = lo; k <= hi; ++k) r *= 1 - qpow(q, -k);
    return r;
}

using Mat = std::vector<std::vector<int64_t>>;

Mat mat_mul(const Mat& a, const Mat& b, int64_t p) {
    std::size_t n = a.size();
    Mat c(n, std::vector<int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    return c;
}

// Size of the SL_2(F_p)-conjugation orbit of B, by listing g B g^{-1}.
int64_t sl2_orbit_size(const Mat& B, int64_t p) {
    std::set<Mat> orbit;
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b)
            for (int64_t c = 0; c < p; ++c)
                for (int64_t d = 0; d < p; ++d) {
                    if (mod64(a * d - b * c, p) != 1) continue;
                    Mat g{{a, b}, {c, d}}, gi{{d, mod64(-b, p)}, {mod64(-c, p), a}};
                    orbit.insert(mat_mul(mat_mul(g, B, p), gi, p));
                }
    return static_cast<int64_t>(orbit.size());
}

}  // namespace

Rational dim_delta(const TameParams& P, DimMethod method) {
    const int64_t n = P.n, q = P.q, ni = norm_index(P);
    switch (method) {
    case DimMethod::Closed:
        return qpow(q, P.r * n * (n - 1) / 2) * prod_one_minus(q, 1, n) /
               ((1 - qpow(q, -P.f)) * Rational(ni));
    case DimMethod::Index: {
        Rational centralizer = Rational(ni) * qpow(q, n - 1) * (1 - qpow(q, -P.f)) / (1 - qpow(q, -1));
        Rational orbit = Rational(sl_order(n, q)) / centralizer;
        return orbit * qpow(q, (P.r - 2) * n * (n - 1) / 2);
    }
    case DimMethod::OrbitBruteforce: {
        if (n != 2 || P.a != 1 || P.p > 7) throw TooLarge("orbit enumeration needs n = 2 and q = p <= 7");
        Model M = build_model(P);
        Vec beta = find_beta(M);
        Mat B = regular_matrix(M, beta);
        for (auto& row : B)
            for (auto& v : row) v = mod64(v, P.p);
        return Rational(sl2_orbit_size(B, P.p)) * qpow(q, (P.r - 2) * n * (n - 1) / 2);
    }
    }
    throw Error("Internal", "unknown dim method");
}

Rational formal_degree_EP(const TameParams& P) {
    const int64_t n = P.n;
    return dim_delta(P, DimMethod::Closed) / (qpow(P.q, n * (n - 1) / 2) * prod_one_minus(P.q, 1, n - 1));
}

Rational formal_degree_closed(const TameParams& P) {
    const int64_t n = P.n;
    return qpow(P.q, (P.r - 1) * n * (n - 1) / 2) * (1 - qpow(P.q, -n)) /
           (Rational(norm_index_closed(P)) * (1 - qpow(P.q, -P.f)));
}

FormalDegreeCheck verify_formal_degree(const TameParams& P) {
    FormalDegreeCheck c;
    c.lhs = formal_degree_EP(P);
    Gamma0 g = adjoint_gamma0(P);
    c.abs_gamma = g.abs_gamma;
    c.centralizer = centralizer_order(P);
    c.gamma0_principal = principal_triple(P.n, P.q).gamma0;
    c.rhs = c.abs_gamma / (Rational(c.centralizer) * c.gamma0_principal);
    return c;
}

bool ring_model_supported(const TameParams& P) {
    return P.supercuspidal_ok && P.n <= 6 && P.r <= 5 && ipow_big(P.q, P.f) <= 2401;
}

ThetaSetup::ThetaSetup(const TameParams& P, int64_t tame_twist)
    : model(build_model(P)), A(model, P.e * P.r), beta(find_beta(model)), theta(extend_theta(A, beta)),
      c(chi_data_c(P, &model)) {
    if (tame_twist) theta.X = theta.X * teichmuller_character(A, tame_twist);
    tt = theta_tilde(theta, c);
}

Cyclotomic theta_at_eps(const TameParams& P, const ThetaData* T) {
    if (P.n % 2) return 1;
    if (!T) throw RingModelRequired("theta(-1) needs the ring model for n even");
    const Model& M = T->X.G->model();
    return theta_value(*T, M.neg(M.one()));
}

RootNumberCheck verify_root_number(const ThetaSetup& S) {
    const TameParams& P = S.model.P;
    if (P.r < 3) throw InvalidParams("root number identity needs r >= 3");
    if (!P.supercuspidal_ok) throw InvalidParams("root number identity needs l' >= 2(e-1)");
    RootNumberCheck c;
    c.theta_eps = theta_at_eps(P, &S.theta);
    c.c_eps = S.c.closed;
    c.vartheta_eps = P.n % 2 ? Cyclotomic(1) : S.tt.value(S.model.neg(S.model.one()));
    c.c_consistent = (c.c_eps * c.theta_eps).shrink() == c.vartheta_eps;
    c.closed = adjoint_root_number_closed(P, c.vartheta_eps);
    c.lambda = lambda_tower(S.model);
    c.assembled = adjoint_root_number_assembled(S.tt, c.lambda);
    return c;
}

RootNumberCheck verify_root_number(const TameParams& P, int64_t tame_twist) {
    if (P.r < 3) throw InvalidParams("root number identity needs r >= 3");
    if (!P.supercuspidal_ok) throw InvalidParams("root number identity needs l' >= 2(e-1)");
    if (!ring_model_supported(P)) throw RingModelRequired("no desk-scale ring model for " + P.str());
    ThetaSetup S(P, tame_twist);
    return verify_root_number(S);
}

bool ConjectureReport::dims_ok() const {
    if (dim_closed != dim_index || dim_closed.get_den() != 1 || dim_closed <= 0) return false;
    return !dim_orbit || *dim_orbit == dim_closed;
}

bool ConjectureReport::ok() const {
    return errors.empty() && dims_ok() && fd && fd->ok() && (!rn || rn->ok());
}

ConjectureReport conjecture_report(const TameParams& P, bool root_number) {
    auto t0 = std::chrono::steady_clock::now();
    ConjectureReport R;
    R.params = P;
    auto guard = [&](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            R.errors.push_back(e.what());
        } catch (const std::exception& e) {
            R.errors.push_back(std::string("Internal: ") + e.what());
        }
    };
    guard([&] {
        R.dim_closed = dim_delta(P, DimMethod::Closed);
        R.dim_index = dim_delta(P, DimMethod::Index);
    });
    if (P.n == 2 && P.a == 1 && P.p <= 7) guard([&] { R.dim_orbit = dim_delta(P, DimMethod::OrbitBruteforce); });
    guard([&] { R.fd = verify_formal_degree(P); });
    if (!root_number) R.rn_skip = "not requested";
    else if (P.r < 3) R.rn_skip = "r < 3";
    else if (!P.supercuspidal_ok) R.rn_skip = "l' < 2(e-1)";
    else if (!ring_model_supported(P)) R.rn_skip = "RingModelRequired";
    else guard([&] { R.rn = verify_root_number(P); });
    R.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return R;
}

std::vector<TameParams> sweep_tuples(const SweepRanges& R, std::vector<std::string>* excluded) {
    std::vector<TameParams> out;
    for (int64_t q : R.qs)
        for (int64_t n = 2; n <= R.max_n; ++n)
            for (int64_t e = 1; e <= n; ++e) {
                if (n % e) continue;
                for (int64_t m = 0; m < e; ++m)
                    for (int64_t r = R.r_lo; r <= R.r_hi; ++r) {
                        try {
                            out.push_back(params_from_q(q, e, n / e, m, r));
                        } catch (const InvalidParams& ex) {
                            if (excluded) {
                                std::ostringstream os;
                                os << "(q=" << q << ",e=" << e << ",f=" << n / e << ",m=" << m << ",r=" << r
                                   << "): " << ex.what();
                                excluded->push_back(os.str());
                            }
                        }
                    }
            }
    return out;
}

SweepResult sweep_report(const SweepRanges& R, unsigned threads) {
    SweepResult S;
    auto tuples = sweep_tuples(R, &S.excluded);
    S.reports.resize(tuples.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, tuples.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < tuples.size();) S.reports[k] = conjecture_report(tuples[k], R.root_number);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& rep : S.reports) {
        (rep.fd && rep.fd->ok() && rep.dims_ok() ? S.fd_pass : S.fd_fail)++;
        if (rep.rn) (rep.rn->ok() ? S.rn_pass : S.rn_fail)++;
        else ++S.rn_skipped;
    }
    return S;
}

std::vector<std::string> paper_typo_notes() {
    return {
        "dim formula: prod (1 - k^{-k}) read as prod (1 - q^{-k}), as forced by the |SL_n(F_q)| and "
        "|G_beta(F_q)| orders",
        "ramified epsilon factor: exponent q^{-(n(psi)+f(chi))/2} read as q^{+f(chi)/2} so that "
        "epsilon = w q^{a/2} with |w| = 1",
        "|A_phi|: the index (O_K : N(O_K^x)) read as (O_F^x : N(O_K^x))",
    };
}

}  // namespace tamellc
