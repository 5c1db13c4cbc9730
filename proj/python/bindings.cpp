#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "racah/asymmetry.hpp"
#include "racah/oracle.hpp"
#include "racah/qanalog.hpp"
#include "racah/verify.hpp"

namespace py = pybind11;
using namespace racah;

namespace {

using Frac = std::pair<std::string, std::string>;

Frac frac(const BigRational& v) { return {v.get_num().get_str(), v.get_den().get_str()}; }

std::vector<Frac> fracs(const std::vector<BigRational>& vs) {
    std::vector<Frac> out;
    for (const auto& v : vs) out.push_back(frac(v));
    return out;
}

std::vector<Frac> pmf(long n, long m, long k, long l, const std::string& method) {
    const Params p = validate_params(n, m, k, l);
    if (method == "racah") return fracs(build_table(p).probabilities);
    if (method == "recurrence") return fracs(build_table_recurrence(p).probabilities);
    if (method == "oracle") return fracs(pmf_bruteforce_table(p));
    if (method != "hahn" && method != "special") throw DomainError("unknown method " + method);
    std::vector<BigRational> out(n / 2 + 1);
    for (long x = 0; x <= n / 2; ++x) out[x] = method == "hahn" ? pmf_hahn(p, x) : pmf_special(p, x);
    return fracs(out);
}

std::vector<Frac> cdf_table(long n, long m, long k, long l) {
    const Params p = validate_params(n, m, k, l);
    std::vector<BigRational> out(n / 2 + 1);
    for (long x = 0; x <= n / 2; ++x) out[x] = cdf(p, x);
    return fracs(out);
}

py::dict moments_dict(long n, long m, long k, long l) {
    const DistTable t = build_table(validate_params(n, m, k, l));
    const CasimirCheck cc = casimir_check(t);
    py::dict d;
    d["mean"] = frac(moments(t, 1));
    d["second_moment"] = frac(moments(t, 2));
    d["variance"] = frac(variance(t));
    d["eta"] = frac(cc.eta);
    d["casimir_residual"] = frac(cc.residual);
    return d;
}

py::dict profile_dict(double a, double b, double g, double d) {
    const LimitProfile pr = limit_profile(make_ratios(a, b, g, d));
    py::dict out;
    out["regime"] = regime_name(pr.regime);
    out["eta"] = pr.eta;
    out["D"] = pr.D;
    out["mu"] = pr.mu;
    out["nu"] = pr.nu;
    out["sigma_sq"] = pr.has_sigma ? py::object(py::float_(pr.sigma_sq)) : py::object(py::none());
    out["phi"] = pr.has_phi ? py::object(py::float_(pr.phi)) : py::object(py::none());
    return out;
}

std::vector<Frac> q_pmf_table(long n, long m, long k, long l, const std::string& q, const std::string& route) {
    const QContext ctx = make_qcontext(parse_rational(q), validate_params(n, m, k, l));
    return fracs(q_table(ctx, route == "hahn" ? QRoute::Hahn : QRoute::Racah));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact two-row Schur-Weyl distribution";
    py::register_exception<Error>(m, "RacahError", PyExc_ValueError);

    m.def("pmf", &pmf, py::arg("n"), py::arg("m"), py::arg("k"), py::arg("l"), py::arg("method") = "racah");
    m.def("cdf", &cdf_table);
    m.def("moments", &moments_dict);
    m.def("limit_profile", &profile_dict, py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"));
    m.def("type1_pmf", &type1_table, py::arg("xi"), py::arg("k"), py::arg("l"));
    m.def("entropy", [](long n, long m, long k, long l) { return entropy_avg(validate_params(n, m, k, l)); });
    m.def("h_spectral", [](long n, long m, long k, long l, double eps) {
        return h_spectral(validate_params(n, m, k, l), eps);
    });
    m.def("q_pmf", &q_pmf_table, py::arg("n"), py::arg("m"), py::arg("k"), py::arg("l"), py::arg("q"),
          py::arg("route") = "racah");
    m.def("verify", [](long n_max) {
        for (const auto& r : run_verification(n_max, worker_count()))
            if (!r.passed()) return false;
        return true;
    });
}
