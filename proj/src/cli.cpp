#include "racah/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "racah/asymmetry.hpp"
#include "racah/oracle.hpp"
#include "racah/qanalog.hpp"
#include "racah/verify.hpp"

namespace racah::cli {

using Json = nlohmann::ordered_json;

namespace {

// ---------- output ----------

std::string fmt17(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_json(std::ostream& os, const Json& j, int level) {
    const std::string pad(2 * (level + 1), ' '), close(2 * level, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad << Json(it.key()).dump() << ": ";
                write_json(os, it.value(), level + 1);
            }
            os << "\n" << close << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
            os << (flat ? "[" : "[\n");
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << (flat ? ", " : ",\n");
                first = false;
                if (!flat) os << pad;
                write_json(os, e, level + 1);
            }
            os << (flat ? "]" : "\n" + close + "]");
            return;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            os << (std::isfinite(v) ? fmt17(v) : "null");
            return;
        }
        default:
            os << j.dump();
    }
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    if (v.is_number_float()) return fmt17(v.get<double>());
    return v.dump();
}

// Result of one subcommand: summary fields plus an optional table of rows.
struct Document {
    Json body = Json::object();
    std::vector<std::string> columns;
    Json rows = Json::array();

    void add_row(std::initializer_list<std::pair<const char*, Json>> cells) {
        Json r = Json::object();
        for (auto& [k, v] : cells) r[k] = v;
        rows.push_back(std::move(r));
    }
};

void emit(const Document& d, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        if (!d.columns.empty()) {
            for (size_t i = 0; i < d.columns.size(); ++i) out << (i ? "," : "") << d.columns[i];
            out << "\n";
            for (const auto& r : d.rows) {
                for (size_t i = 0; i < d.columns.size(); ++i)
                    out << (i ? "," : "") << csv_cell(r.contains(d.columns[i]) ? r[d.columns[i]] : Json());
                out << "\n";
            }
        } else {
            out << "key,value\n";
            auto flat = d.body.flatten();
            for (auto it = flat.begin(); it != flat.end(); ++it)
                out << csv_cell(Json(it.key())) << "," << csv_cell(it.value()) << "\n";
        }
        return;
    }
    Json doc = d.body;
    if (!d.columns.empty()) doc["rows"] = d.rows;
    write_json(out, doc, 0);
    out << "\n";
}

Json exact_json(const BigRational& v) {
    return Json{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}, {"float", to_double(v)}};
}

Json params_json(const Params& p) {
    return Json{{"n", p.n}, {"m", p.m}, {"k", p.k}, {"l", p.l}, {"M", p.M()}, {"N", p.N()}};
}

void exact_rows(Document& d, const std::vector<BigRational>& values) {
    d.columns = {"x", "num", "den", "float"};
    for (size_t x = 0; x < values.size(); ++x)
        d.add_row({{"x", static_cast<long>(x)},
                   {"num", values[x].get_num().get_str()},
                   {"den", values[x].get_den().get_str()},
                   {"float", to_double(values[x])}});
}

// Exact table; the recurrence builder takes over where the direct sums get slow.
DistTable exact_table(const Params& p) { return p.n <= 2000 ? build_table(p) : build_table_recurrence(p); }

struct ParamOpts {
    long n = -1, m = -1, k = -1, l = -1;
    void attach(CLI::App* app) {
        app->add_option("--n", n, "number of tensor factors")->required();
        app->add_option("--m", m, "total weight")->required();
        app->add_option("--k", k, "prefix length")->required();
        app->add_option("--l", l, "ones in the prefix")->required();
    }
    Params get() const { return validate_params(n, m, k, l); }
};

struct ArgError : Error {
    using Error::Error;
};

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ArgError("cannot parse '" + item + "' as a number");
        }
    }
    return out;
}

// ---------- subcommands ----------

struct State {
    std::string format = "json";
    bool timing = false;
    bool bits = false;
    ParamOpts po;
    std::string method = "racah", route = "racah", q_text;
    std::string alpha_s, beta_s, gamma_s, delta_s;
    double xi = 0, kappa = 0, alpha = 0;
    long n_opt = 0, k_opt = 0, l_opt = 0, figure = 0, n_max = 8;
    unsigned threads = 0;
    std::string eps_list;
    double eps = 0.5, delta1 = 0, delta2 = 0;
};

std::vector<BigRational> route_table(const Params& p, const std::string& method) {
    if (method == "racah") return build_table(p).probabilities;
    if (method == "recurrence") return build_table_recurrence(p).probabilities;
    if (method == "oracle") return pmf_bruteforce_table(p);
    std::vector<BigRational> out(p.n / 2 + 1);
    for (long x = 0; x <= p.n / 2; ++x)
        out[x] = method == "hahn" ? pmf_hahn(p, x) : pmf_special(p, x);
    return out;
}

int cmd_pmf(const State& s, Document& d) {
    const Params p = s.po.get();
    d.body["command"] = "pmf";
    d.body["params"] = params_json(p);
    if (!s.q_text.empty()) {
        const BigRational q = parse_rational(s.q_text);
        const QContext ctx = make_qcontext(q, p);
        d.body["q"] = to_string(q);
        auto values = q_table(ctx, s.method == "hahn" ? QRoute::Hahn : QRoute::Racah);
        bool agree = true;
        Json routes = Json::array({s.method == "hahn" ? "q-hahn" : "q-racah"});
        if (s.method == "all") {
            routes = Json::array({"q-racah", "q-hahn"});
            agree = values == q_table(ctx, QRoute::Hahn);
            if (q == 1) {
                routes.push_back("racah");
                agree = agree && values == build_table(p).probabilities;
            }
            d.body["all_routes_agree"] = agree;
        }
        d.body["metadata"] = Json{{"method", routes}, {"erratum_flags", Json::array({"q_hahn_sum_range"})}};
        exact_rows(d, values);
        return agree ? 0 : 1;
    }
    if (s.method == "special" && !has_special_form(p))
        throw NotSpecialCase(p.str() + " has no product form (needs M*N = 0, k = l or l = 0)");
    if (s.method == "all") {
        std::vector<std::string> names = {"racah", "hahn", "recurrence"};
        if (has_special_form(p)) names.push_back("special");
        if (p.n <= kOracleMaxN) names.push_back("oracle");
        const auto ref = route_table(p, "racah");
        bool agree = true;
        for (size_t i = 1; i < names.size(); ++i) agree = agree && route_table(p, names[i]) == ref;
        d.body["all_routes_agree"] = agree;
        d.body["metadata"] = Json{{"method", names}, {"erratum_flags", Json::array()}};
        exact_rows(d, ref);
        return agree ? 0 : 1;
    }
    d.body["metadata"] = Json{{"method", s.method}, {"erratum_flags", Json::array()}};
    exact_rows(d, route_table(p, s.method));
    return 0;
}

int cmd_cdf(const State& s, Document& d) {
    const Params p = s.po.get();
    d.body["command"] = "cdf";
    d.body["params"] = params_json(p);
    std::vector<BigRational> values(p.n / 2 + 1);
    if (!s.q_text.empty()) {
        const QContext ctx = make_qcontext(parse_rational(s.q_text), p);
        d.body["q"] = to_string(ctx.q);
        for (long x = 0; x <= p.n / 2; ++x) values[x] = q_cdf(ctx, x);
    } else {
        for (long x = 0; x <= p.n / 2; ++x) values[x] = cdf(p, x);
    }
    d.body["metadata"] = Json{{"method", "closed-form"}, {"erratum_flags", Json::array()}};
    exact_rows(d, values);
    return 0;
}

int cmd_moments(const State& s, Document& d) {
    const Params p = s.po.get();
    const DistTable t = exact_table(p);
    const CasimirCheck cc = casimir_check(t);
    BigRational spectral = 0;
    for (long x = 0; x < t.size(); ++x) spectral += BigRational((p.n - 2 * x) * (p.n - 2 * x + 2)) * t[x];
    d.body["command"] = "moments";
    d.body["params"] = params_json(p);
    d.body["mean"] = exact_json(moments(t, 1));
    d.body["second_moment"] = exact_json(moments(t, 2));
    d.body["variance"] = exact_json(variance(t));
    d.body["casimir"] = Json{{"eta", exact_json(cc.eta)},
                             {"residual", exact_json(cc.residual)},
                             {"spectral_sum", exact_json(spectral)},
                             {"closed_form", casimir_value(p).get_str()}};
    if (p.n == 2 * p.m) d.body["mean_closed_form"] = exact_json(expectation_half(p.m, p.k, p.l));
    d.body["metadata"] = Json{{"method", "racah"}, {"erratum_flags", Json::array({"casimir_eta"})}};
    return cc.residual == 0 ? 0 : 1;
}

Json profile_json(const LimitProfile& pr) {
    Json j{{"regime", regime_name(pr.regime)}, {"eta", pr.eta}, {"D", pr.D}, {"mu", pr.mu}, {"nu", pr.nu}};
    j["sigma_sq"] = pr.has_sigma ? Json(pr.sigma_sq) : Json();
    j["sigma"] = pr.has_sigma ? Json(std::sqrt(pr.sigma_sq)) : Json();
    j["phi"] = pr.has_phi ? Json(pr.phi) : Json();
    return j;
}

int cmd_limits(const State& s, Document& d) {
    ExactRatios er{parse_rational(s.alpha_s), parse_rational(s.beta_s), parse_rational(s.gamma_s),
                   parse_rational(s.delta_s)};
    for (const auto* v : {&er.alpha, &er.beta, &er.gamma, &er.delta})
        if (sgn(*v) < 0 || *v > 1) throw ArgError("each ratio must lie in [0, 1]");
    if (er.alpha + er.beta + er.gamma + er.delta != 1) throw ArgError("ratios must sum to 1");
    const LimitProfile pr = limit_profile(er);
    d.body["command"] = "limits";
    d.body["ratios"] = Json{{"alpha", to_string(er.alpha)}, {"beta", to_string(er.beta)},
                            {"gamma", to_string(er.gamma)}, {"delta", to_string(er.delta)}};
    d.body["profile"] = profile_json(pr);
    d.body["catalan_mu"] = pr.eta < 0.25 ? Json(catalan_mu(pr.eta)) : Json();
    if (s.n_opt > 0) {
        const EVApprox ev = ev_asymptotics(er, s.n_opt);
        d.body["asymptotics"] = Json{{"n", s.n_opt}, {"expectation", ev.expectation},
                                     {"variance", ev.variance}, {"law", ev.regime}};
    }
    d.body["metadata"] = Json{{"method", "closed-form"}, {"erratum_flags", Json::array()}};
    return 0;
}

int cmd_type1(const State& s, Document& d) {
    if (s.xi < 0 || s.xi > 1) throw ArgError("--xi must lie in [0, 1]");
    if (s.l_opt < 0 || s.l_opt > s.k_opt) throw ArgError("need 0 <= l <= k");
    const auto q = type1_table(s.xi, s.k_opt, s.l_opt);
    d.body["command"] = "type1";
    d.body["xi"] = s.xi;
    d.body["k"] = s.k_opt;
    d.body["l"] = s.l_opt;
    d.body["mean"] = type1_mean(s.xi, s.k_opt, s.l_opt);
    d.body["variance"] = type1_variance(s.xi, s.k_opt, s.l_opt);
    d.columns = {"x", "num", "den", "float", "q"};
    std::optional<DistTable> t;
    if (s.n_opt > 0) {
        const Params p = validate_params(s.n_opt, std::lround(s.xi * s.n_opt), s.k_opt, s.l_opt);
        t = exact_table(p);
        d.body["params"] = params_json(p);
    }
    double worst = 0;
    for (long x = 0; x <= s.k_opt; ++x) {
        Json num, den, fl;
        if (t) {
            BigRational v = t->at(x);
            num = v.get_num().get_str();
            den = v.get_den().get_str();
            fl = to_double(v);
            worst = std::max(worst, std::fabs(to_double(v) - q[x]));
        }
        d.add_row({{"x", x}, {"num", num}, {"den", den}, {"float", fl}, {"q", q[x]}});
    }
    if (t) d.body["max_abs_difference"] = worst;
    d.body["metadata"] = Json{{"method", "convolution"}, {"erratum_flags", Json::array()}};
    return 0;
}

int cmd_clt(const State& s, Document& d) {
    if (s.n_opt <= 0) throw ArgError("--n must be positive");
    const Ratios r = ratios_from_fractions(s.xi, s.kappa, s.alpha);
    const Params p = params_for(r, s.n_opt);
    const LimitProfile pr = limit_profile(ratios_from_params(p));
    if (pr.regime != Regime::GenericA) throw RegimeMismatch("CLT check needs the generic regime");
    const DistTable t = exact_table(p);
    d.body["command"] = "clt-check";
    d.body["params"] = params_json(p);
    d.body["profile"] = profile_json(pr);
    d.body["kolmogorov_distance"] = clt_kolmogorov(t, pr);
    d.body["metadata"] = Json{{"method", p.n <= 2000 ? "racah" : "recurrence"}, {"erratum_flags", Json::array()}};
    d.columns = {"x", "num", "den", "float", "psi"};
    for (long x = 0; x < t.size(); ++x)
        d.add_row({{"x", x}, {"num", t[x].get_num().get_str()}, {"den", t[x].get_den().get_str()},
                   {"float", to_double(t[x])}, {"psi", normal_density(p.n, pr, static_cast<double>(x))}});
    return 0;
}

std::vector<double> eps_grid(const std::string& text) {
    if (!text.empty()) return parse_list(text);
    std::vector<double> g;
    for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
    return g;
}

int cmd_entropy(const State& s, Document& d) {
    const Params p = s.po.get();
    const DistTable t = exact_table(p);
    const double unit = s.bits ? 1.0 / std::log(2.0) : 1.0;
    const EntropyProfile ep = entropy_profile(t);
    d.body["command"] = "entropy";
    d.body["params"] = params_json(p);
    d.body["unit"] = s.bits ? "bits" : "nats";
    d.body["entropy"] = ep.exact_entropy * unit;
    d.body["type1_approx"] = ep.type1_approx * unit;
    d.body["type2_leading"] = ep.type2_leading ? Json(*ep.type2_leading * unit) : Json();
    if (ep.constants) {
        const auto& c = *ep.constants;
        d.body["constants"] = Json{{"C1", c.C1}, {"C2", c.C2}, {"C3", c.C3},
                                   {"C4", c.C4}, {"C5", c.C5}, {"C6", c.C6}};
    }
    d.columns = {"eps", "h_spectral"};
    for (double e : eps_grid(s.eps_list)) d.add_row({{"eps", e}, {"h_spectral", h_spectral(t, e) * unit}});
    d.body["metadata"] = Json{{"method", "exact-table"}, {"erratum_flags", Json::array({"type1_entropy_sign"})}};
    return 0;
}

int cmd_hspec(const State& s, Document& d) {
    const Params p = s.po.get();
    const DistTable t = exact_table(p);
    const double unit = s.bits ? 1.0 / std::log(2.0) : 1.0;
    d.body["command"] = "hspec";
    d.body["params"] = params_json(p);
    d.body["unit"] = s.bits ? "bits" : "nats";
    d.body["eps"] = s.eps;
    d.body["h_spectral"] = h_spectral(t, s.eps) * unit;
    if (s.delta1 > 0 || s.delta2 > 0) {
        const Bounds b = distinguishability_bounds(t, s.eps, s.delta1, s.delta2);
        d.body["log_count_bounds"] = Json{{"lower", b.lower * unit}, {"upper", b.upper * unit}};
    }
    d.columns = {"value", "num", "den", "float"};
    for (const auto& st : spectral_steps(t))
        d.add_row({{"value", st.value() * unit}, {"num", st.mass.get_num().get_str()},
                   {"den", st.mass.get_den().get_str()}, {"float", to_double(st.mass)}});
    d.body["metadata"] = Json{{"method", "exact-table"}, {"erratum_flags", Json::array()}};
    return 0;
}

int cmd_qpmf(const State& s, Document& d) {
    const Params p = s.po.get();
    if (s.q_text.empty()) throw ArgError("--q is required");
    const QContext ctx = make_qcontext(parse_rational(s.q_text), p);
    std::vector<BigRational> values = q_table(ctx, s.route == "hahn" ? QRoute::Hahn : QRoute::Racah);
    d.body["command"] = "qpmf";
    d.body["params"] = params_json(p);
    d.body["q"] = to_string(ctx.q);
    bool agree = true;
    if (s.route == "both") {
        agree = values == q_table(ctx, QRoute::Hahn);
        d.body["routes_agree"] = agree;
    }
    d.columns = {"x", "num", "den", "float", "cdf_num", "cdf_den"};
    for (long x = 0; x < static_cast<long>(values.size()); ++x) {
        BigRational c = q_cdf(ctx, x);
        d.add_row({{"x", x}, {"num", values[x].get_num().get_str()}, {"den", values[x].get_den().get_str()},
                   {"float", to_double(values[x])}, {"cdf_num", c.get_num().get_str()},
                   {"cdf_den", c.get_den().get_str()}});
    }
    d.body["metadata"] = Json{{"method", s.route}, {"erratum_flags", Json::array({"q_hahn_sum_range"})}};
    return agree ? 0 : 1;
}

int cmd_verify(const State& s, Document& d) {
    if (s.n_max < 0) throw ArgError("--n-max must be non-negative");
    const auto results = run_verification(s.n_max, s.threads ? s.threads : worker_count());
    bool ok = true;
    Json checks = Json::array();
    for (const auto& r : results) {
        ok = ok && r.passed();
        checks.push_back(Json{{"name", r.name}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", r.failures}});
    }
    d.body["command"] = "verify";
    d.body["n_max"] = s.n_max;
    d.body["ok"] = ok;
    d.body["checks"] = checks;
    d.body["metadata"] = Json{{"method", "exhaustive"},
                              {"erratum_flags", Json::array({"recurrence_orientation", "casimir_eta"})}};
    return ok ? 0 : 1;
}

int cmd_plotdata(const State& s, Document& d) {
    d.body["command"] = "plotdata";
    d.body["figure"] = s.figure;
    const Ratios fig_ratios = ratios_from_fractions(0.4, 0.6, 0.3);
    switch (s.figure) {
        case 1: {
            d.columns = {"series", "x", "num", "den", "float"};
            for (const Params& p : {Params{100, 30, 40, 20}, Params{100, 40, 60, 30}}) {
                const DistTable t = build_table(p);
                for (long x = 0; x < t.size(); ++x)
                    d.add_row({{"series", p.str()}, {"x", x}, {"num", t[x].get_num().get_str()},
                               {"den", t[x].get_den().get_str()}, {"float", to_double(t[x])}});
            }
            break;
        }
        case 2: {
            d.columns = {"n", "x", "scaled_x", "cdf"};
            for (long n : {100L, 1000L, 10000L}) {
                const DistTable t = exact_table(params_for(fig_ratios, n));
                const auto cum = t.cumulative();
                for (long x = 0; x < t.size(); ++x)
                    d.add_row({{"n", n}, {"x", x}, {"scaled_x", static_cast<double>(x) / n},
                               {"cdf", to_double(cum[x])}});
            }
            break;
        }
        case 3: {
            d.columns = {"n", "entropy_over_log_n", "approx_over_log_n"};
            d.body["series"] = Json{{"xi", 0.5}, {"k", 2}, {"l", 1}, {"limit", 1.0}};
            for (long n : {10L, 20L, 50L, 100L, 200L, 500L, 1000L, 2000L, 5000L, 10000L}) {
                const double ln = std::log(static_cast<double>(n));
                const double S = entropy_avg(exact_table(Params{n, n / 2, 2, 1}));
                d.add_row({{"n", n}, {"entropy_over_log_n", S / ln},
                           {"approx_over_log_n", entropy_type1_approx(n, 0.5, 2, 1) / ln}});
            }
            break;
        }
        case 4: {
            d.columns = {"n", "x", "pmf", "psi"};
            const LimitProfile pr = limit_profile(fig_ratios);
            d.body["profile"] = profile_json(pr);
            for (long n : {100L, 1000L, 10000L}) {
                const DistTable t = exact_table(params_for(fig_ratios, n));
                for (long x = 0; x < t.size(); ++x)
                    d.add_row({{"n", n}, {"x", x}, {"pmf", to_double(t[x])},
                               {"psi", normal_density(n, pr, static_cast<double>(x))}});
            }
            break;
        }
        default:
            throw ArgError("--figure must be 1, 2, 3 or 4");
    }
    d.body["metadata"] = Json{{"method", "exact"}, {"erratum_flags", Json::array()}};
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact two-row Schur-Weyl distribution toolkit"};
    app.require_subcommand(1);
    State s;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--timing", s.timing, "report runtime_ms in the metadata");
    };
    auto* pmf = app.add_subcommand("pmf", "probability mass function");
    s.po.attach(pmf);
    pmf->add_option("--method", s.method, "evaluation route")->check(
        CLI::IsMember({"hahn", "racah", "special", "oracle", "recurrence", "all"}));
    pmf->add_option("--q", s.q_text, "deformation parameter (rational)");
    common(pmf);

    auto* cdfc = app.add_subcommand("cdf", "cumulative distribution");
    ParamOpts* po = &s.po;
    po->attach(cdfc);
    cdfc->add_option("--q", s.q_text, "deformation parameter (rational)");
    common(cdfc);

    auto* mom = app.add_subcommand("moments", "moments and Casimir check");
    po->attach(mom);
    common(mom);

    auto* lim = app.add_subcommand("limits", "Type II limit profile");
    lim->add_option("--alpha", s.alpha_s, "l/n (exact rational or decimal)")->required();
    lim->add_option("--beta", s.beta_s, "(m-l)/n")->required();
    lim->add_option("--gamma", s.gamma_s, "(k-l)/n")->required();
    lim->add_option("--delta", s.delta_s, "(n-m-k+l)/n")->required();
    lim->add_option("--n", s.n_opt, "size for the mean and variance approximation");
    common(lim);

    auto* t1 = app.add_subcommand("type1", "fixed (k, l) limit law");
    t1->add_option("--xi", s.xi, "m/n")->required();
    t1->add_option("--k", s.k_opt, "prefix length")->required();
    t1->add_option("--l", s.l_opt, "ones in the prefix")->required();
    t1->add_option("--n", s.n_opt, "also print the exact pmf at this n");
    common(t1);

    auto* clt = app.add_subcommand("clt-check", "exact pmf against the normal law");
    clt->add_option("--xi", s.xi, "m/n")->required();
    clt->add_option("--kappa", s.kappa, "k/n")->required();
    clt->add_option("--alpha", s.alpha, "l/n")->required();
    clt->add_option("--n", s.n_opt, "number of tensor factors")->required();
    common(clt);

    auto* ent = app.add_subcommand("entropy", "entropy and its expansions");
    po->attach(ent);
    ent->add_option("--eps", s.eps_list, "comma separated epsilon grid");
    ent->add_flag("--bits", s.bits, "report entropies in bits instead of nats");
    common(ent);

    auto* hs = app.add_subcommand("hspec", "spectral entropy and count bounds");
    po->attach(hs);
    hs->add_option("--eps", s.eps, "smoothing level in (0, 1)")->required();
    hs->add_option("--delta1", s.delta1, "first slack for the count bounds");
    hs->add_option("--delta2", s.delta2, "second slack for the count bounds");
    hs->add_flag("--bits", s.bits, "report values in bits instead of nats");
    common(hs);

    auto* qp = app.add_subcommand("qpmf", "q-deformed pmf and cdf");
    po->attach(qp);
    qp->add_option("--q", s.q_text, "deformation parameter (positive rational)")->required();
    qp->add_option("--route", s.route, "evaluation route")->check(CLI::IsMember({"hahn", "racah", "both"}));
    common(qp);

    auto* ver = app.add_subcommand("verify", "exhaustive exact invariant suite");
    ver->add_option("--n-max", s.n_max, "largest n in the sweep");
    ver->add_option("--threads", s.threads, "worker threads (0 = automatic)");
    common(ver);

    auto* plot = app.add_subcommand("plotdata", "data behind the standard figures");
    plot->add_option("--figure", s.figure, "figure number, 1 to 4")->required();
    common(plot);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Document d;
    int code = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (pmf->parsed()) code = cmd_pmf(s, d);
        else if (cdfc->parsed()) code = cmd_cdf(s, d);
        else if (mom->parsed()) code = cmd_moments(s, d);
        else if (lim->parsed()) code = cmd_limits(s, d);
        else if (t1->parsed()) code = cmd_type1(s, d);
        else if (clt->parsed()) code = cmd_clt(s, d);
        else if (ent->parsed()) code = cmd_entropy(s, d);
        else if (hs->parsed()) code = cmd_hspec(s, d);
        else if (qp->parsed()) code = cmd_qpmf(s, d);
        else if (ver->parsed()) code = cmd_verify(s, d);
        else if (plot->parsed()) code = cmd_plotdata(s, d);
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (s.timing && d.body.contains("metadata"))
        d.body["metadata"]["runtime_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(d, s.format, out);
    return code;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace racah::cli
