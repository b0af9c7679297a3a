#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamellc/conjectures.hpp"
#include "tamellc/errors.hpp"
#include "tamellc/report.hpp"
#include "tamellc/selftest.hpp"

namespace py = pybind11;
using namespace tamellc;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string report(int64_t q, int64_t e, int64_t f, int64_t m, int64_t r, bool root_number) {
    return report_json(conjecture_report(params_from_q(q, e, f, m, r), root_number)).dump();
}

std::string factors(int64_t q, int64_t e, int64_t f, int64_t m, int64_t r) {
    return factors_json(params_from_q(q, e, f, m, r)).dump();
}

std::string sweep(const std::vector<int64_t>& qs, int64_t max_n, int64_t r_lo, int64_t r_hi,
                  bool root_number, unsigned jobs) {
    SweepRanges R{qs, max_n, r_lo, r_hi, root_number};
    SweepResult S;
    {
        py::gil_scoped_release release;
        S = sweep_report(R, jobs);
    }
    return sweep_json(R, S).dump();
}

std::string rat(const Rational& x) { return rational_str(x); }

}  // namespace

PYBIND11_MODULE(_tamellc, m) {
    m.doc() = "Exact checks of the formal degree and root number identities for tame SL_n parameters";

    // The message starts with the error kind, e.g. "InvalidParams: ...".
    static py::exception<Error> exc(m, "TameLLCError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    m.def("report_json", &report, py::arg("q"), py::arg("e"), py::arg("f"), py::arg("m"), py::arg("r"),
          py::arg("root_number") = true);
    m.def("factors_json", &factors, py::arg("q"), py::arg("e"), py::arg("f"), py::arg("m"), py::arg("r"));
    m.def("sweep_json", &sweep, py::arg("qs"), py::arg("max_n") = 4, py::arg("r_lo") = 2, py::arg("r_hi") = 4,
          py::arg("root_number") = true, py::arg("jobs") = 0);

    m.def("dim_delta", [](int64_t q, int64_t e, int64_t f, int64_t m, int64_t r) {
        return rat(dim_delta(params_from_q(q, e, f, m, r), DimMethod::Closed));
    });
    m.def("formal_degree", [](int64_t q, int64_t e, int64_t f, int64_t m, int64_t r) {
        auto c = verify_formal_degree(params_from_q(q, e, f, m, r));
        return py::dict(py::arg("lhs") = rat(c.lhs), py::arg("rhs") = rat(c.rhs),
                        py::arg("abs_gamma") = rat(c.abs_gamma),
                        py::arg("gamma0_principal") = rat(c.gamma0_principal),
                        py::arg("centralizer") = c.centralizer, py::arg("ok") = c.ok());
    });
    m.def("root_number", [](int64_t q, int64_t e, int64_t f, int64_t m, int64_t r, int64_t tame_twist) {
        auto c = verify_root_number(params_from_q(q, e, f, m, r), tame_twist);
        return py::dict(py::arg("closed") = c.closed.str(), py::arg("assembled") = c.assembled.str(),
                        py::arg("theta_eps") = c.theta_eps.str(), py::arg("ok") = c.ok());
    }, py::arg("q"), py::arg("e"), py::arg("f"), py::arg("m"), py::arg("r"), py::arg("tame_twist") = 0);

    m.def("run_criterion", [](int id) {
        CriterionResult c;
        {
            py::gil_scoped_release release;
            c = run_criterion(id);
        }
        return py::dict(py::arg("id") = c.id, py::arg("name") = c.name, py::arg("pass") = c.pass,
                        py::arg("cases") = c.cases, py::arg("detail") = c.detail);
    });

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
