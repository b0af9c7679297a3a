#include "tamellc/report.hpp"

#include <map>
#include <sstream>

#include "tamellc/llc_parameters.hpp"
#include "tamellc/local_factors.hpp"

namespace tamellc {

using ojson = nlohmann::ordered_json;

namespace {

std::string str(const Rational& x) { return x.get_str(); }
std::string str(const Cyclotomic& x) { return x.str(); }
std::string str(int64_t x) { return std::to_string(x); }
const char* status(bool ok) { return ok ? "OK" : "FAIL"; }

}  // namespace

std::vector<CheckRow> check_rows(const ConjectureReport& R) {
    std::vector<CheckRow> rows;
    {
        CheckRow c{"dim_delta", {{"closed", str(R.dim_closed)}, {"index", str(R.dim_index)}}, status(R.dims_ok())};
        if (R.dim_orbit) c.method_values.push_back({"orbit_bruteforce", str(*R.dim_orbit)});
        rows.push_back(c);
    }
    if (R.fd) {
        const auto& f = *R.fd;
        rows.push_back({"formal_degree",
                        {{"lhs_counting", str(f.lhs)},
                         {"rhs_factors", str(f.rhs)},
                         {"abs_gamma_adjoint", str(f.abs_gamma)},
                         {"centralizer_order", str(f.centralizer)},
                         {"abs_gamma_principal", str(f.gamma0_principal)}},
                        status(f.ok())});
    } else {
        rows.push_back({"formal_degree", {}, "ERROR"});
    }
    if (R.rn) {
        const auto& w = *R.rn;
        rows.push_back({"root_number",
                        {{"closed", str(w.closed)},
                         {"assembled", str(w.assembled)},
                         {"theta_at_eps", str(w.theta_eps)},
                         {"c_at_eps", str(w.c_eps)},
                         {"vartheta_at_eps", str(w.vartheta_eps)},
                         {"lambda", str(w.lambda)}},
                        status(w.ok())});
    } else {
        bool errored = R.rn_skip.empty();
        rows.push_back({"root_number", {{"reason", errored ? "error" : R.rn_skip}}, errored ? "ERROR" : "SKIPPED"});
    }
    return rows;
}

ojson params_json(const TameParams& P) {
    return ojson{{"p", P.p}, {"a", P.a}, {"q", P.q}, {"e", P.e}, {"f", P.f}, {"m", P.m}, {"r", P.r}, {"n", P.n}};
}

ojson report_json(const ConjectureReport& R, bool with_timing) {
    ojson j;
    j["params"] = params_json(R.params);
    ojson checks = ojson::array();
    for (const auto& c : check_rows(R)) {
        ojson mv = ojson::object();
        for (const auto& [k, v] : c.method_values) mv[k] = v;
        checks.push_back(ojson{{"name", c.name}, {"method_values", mv}, {"status", c.status}});
    }
    j["checks"] = checks;
    if (!R.errors.empty()) j["errors"] = R.errors;
    j["paper_typo_notes"] = paper_typo_notes();
    j["timing_ms"] = with_timing ? ojson(R.timing_ms) : ojson(nullptr);
    return j;
}

ojson sweep_json(const SweepRanges& ranges, const SweepResult& S, bool with_timing) {
    ojson j;
    j["ranges"] = ojson{{"q", ranges.qs}, {"max_n", ranges.max_n}, {"r", {ranges.r_lo, ranges.r_hi}},
                        {"root_number", ranges.root_number}};
    j["summary"] = ojson{{"tuples", S.reports.size()},  {"formal_degree_ok", S.fd_pass},
                         {"formal_degree_fail", S.fd_fail}, {"root_number_ok", S.rn_pass},
                         {"root_number_fail", S.rn_fail},   {"root_number_skipped", S.rn_skipped}};
    // distribution of theta((-1)^{n-1}) over the tuples where it was computed
    std::map<std::string, int64_t> dist;
    for (const auto& r : S.reports)
        if (r.rn) ++dist[r.rn->theta_eps.str()];
    j["theta_at_eps_distribution"] = dist;
    ojson reps = ojson::array();
    for (const auto& r : S.reports) reps.push_back(report_json(r, with_timing));
    j["reports"] = reps;
    j["excluded"] = S.excluded;
    j["paper_typo_notes"] = paper_typo_notes();
    return j;
}

ojson factors_json(const TameParams& P) {
    ojson j;
    j["params"] = params_json(P);
    ojson ad;
    ad["L"] = ojson{{"closed", adjoint_L(P, LMethod::Closed).str()},
                    {"decomposition", adjoint_L(P, LMethod::Decomposition).str()},
                    {"matrix", adjoint_L(P, LMethod::Matrix).str()}};
    ad["conductor"] = ojson{{"filtration", adjoint_conductor(P, ConductorMethod::Filtration)},
                            {"additivity", adjoint_conductor(P, ConductorMethod::Additivity)},
                            {"closed", P.r * P.n * (P.n - 1)}};
    Gamma0 g = adjoint_gamma0(P);
    ad["L_ratio"] = ojson{{"from_L", str(g.L_ratio)}, {"closed", str(L_ratio_closed(P))}};
    ad["abs_gamma0"] = str(g.abs_gamma);
    ad["centralizer_order"] = ojson{{"abelianization", centralizer_order(P)},
                                    {"character_count", centralizer_order_bruteforce(P)}};
    auto dec = adjoint_decompose(P);
    ojson pieces = ojson::array();
    for (const auto& gm : dec.induced) pieces.push_back(gal_str(gm));
    ad["decomposition"] = ojson{{"regular_dim", dec.regular_dim}, {"induced", pieces}, {"dim", dec.dim()}};
    j["adjoint"] = ad;
    PrincipalData pd = principal_triple(P.n, P.q);
    ojson eig = ojson::array();
    for (const auto& x : pd.frob_eigenvalues) eig.push_back(str(x));
    j["principal"] = ojson{{"L", pd.triple.L().str()},
                           {"a", pd.triple.a},
                           {"w", str(pd.triple.w)},
                           {"abs_gamma0", str(pd.gamma0)},
                           {"frobenius_eigenvalues", eig}};
    j["paper_typo_notes"] = paper_typo_notes();
    return j;
}

std::string reports_csv(const std::vector<ConjectureReport>& rs) {
    std::ostringstream os;
    os << "p,a,q,e,f,m,r,n,check,method,value,status\n";
    for (const auto& R : rs) {
        const auto& P = R.params;
        std::ostringstream pre;
        pre << P.p << ',' << P.a << ',' << P.q << ',' << P.e << ',' << P.f << ',' << P.m << ',' << P.r << ','
            << P.n << ',';
        for (const auto& c : check_rows(R)) {
            if (c.method_values.empty()) os << pre.str() << c.name << ",,," << c.status << '\n';
            for (const auto& [k, v] : c.method_values)
                os << pre.str() << c.name << ',' << k << ",\"" << v << "\"," << c.status << '\n';
        }
    }
    return os.str();
}

std::string report_text(const ConjectureReport& R) {
    std::ostringstream os;
    os << R.params.str() << '\n';
    for (const auto& c : check_rows(R)) {
        os << "  " << c.name << ": " << c.status << '\n';
        for (const auto& [k, v] : c.method_values) os << "    " << k << " = " << v << '\n';
    }
    for (const auto& e : R.errors) os << "  error: " << e << '\n';
    return os.str();
}

std::string factors_text(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace tamellc
