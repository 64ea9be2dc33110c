// psi1 -- verification CLI for the Humbert Psi1 / pFq library.
//
// Subcommands:
//   table       reproduce the Psi1/AE ratio tables (CSV)
//   sweep       error-scaling sweeps for the large-parameter expansions (CSV)
//   crosscheck  random cross-evaluator consistency checks (CSV)
//   eval        evaluate a single Psi1 or pFq value
//
// Exit codes: 0 success, 1 numerical-acceptance failure, 2 usage error,
// 3 domain error (structured error name printed to stderr).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "humbert/errors.hpp"
#include "humbert/pfq_asym.hpp"
#include "humbert/psi1.hpp"

using namespace humbert;

namespace {

constexpr const char* kToolVersion = "humbert-psi1 0.1.0";

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

cplx parse_complex_impl(const std::string& text);

cplx parse_complex(const std::string& text) {
    try {
        return parse_complex_impl(text);
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("cannot parse complex literal: " + text);
    }
}

cplx parse_complex_impl(const std::string& text) {
    // accepted forms: "1.5", "1.5+0.3i", "1.5-0.3i", "0.3i", "-i"
    std::string s = text;
    if (s.empty()) throw CLI::ValidationError("empty complex literal");
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        // split at the sign that separates re and im (not a leading sign,
        // not an exponent sign)
        for (size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                double re = std::stod(s.substr(0, i));
                std::string im = s.substr(i);
                if (im == "+") return {re, 1.0};
                if (im == "-") return {re, -1.0};
                return {re, std::stod(im)};
            }
        }
        if (s.empty() || s == "+") return {0.0, 1.0};
        if (s == "-") return {0.0, -1.0};
        return {0.0, std::stod(s)};
    }
    return {std::stod(s), 0.0};
}

std::vector<cplx> parse_complex_list(const std::string& text) {
    std::vector<cplx> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    return out;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) throw CLI::ValidationError("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

void csv_header(std::ostream& os, const std::string& columns) {
    os << "# " << kToolVersion << "\n" << columns << "\n";
}

struct Settings {
    SeriesControl ctrl;
    Psi1AutoPolicy policy;
    double integral_tol = 1e-9;
};

void load_config(Settings& st, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("rel_tol")) st.ctrl.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("max_terms")) st.ctrl.max_terms = j["max_terms"].get<long>();
    if (j.contains("stagnation_window"))
        st.ctrl.stagnation_window = j["stagnation_window"].get<int>();
    if (j.contains("integral_tol")) st.integral_tol = j["integral_tol"].get<double>();
    if (j.contains("dispatcher")) {
        const auto& d = j["dispatcher"];
        if (d.contains("disk_radius")) st.policy.disk_radius = d["disk_radius"].get<double>();
        if (d.contains("near_unit_radius"))
            st.policy.near_unit_radius = d["near_unit_radius"].get<double>();
        if (d.contains("large_x_radius"))
            st.policy.large_x_radius = d["large_x_radius"].get<double>();
        if (d.contains("large_x_y_cap")) st.policy.large_x_y_cap = d["large_x_y_cap"].get<double>();
        if (d.contains("series_y_cap")) st.policy.series_y_cap = d["series_y_cap"].get<double>();
    }
}

// ---------------------------------------------------------------- table ---

struct TableDef {
    Psi1Params params;
    double gamma;
    std::map<double, double> printed; // x -> published Psi1/AE ratio
};

TableDef table_def(int id) {
    if (id == 1)
        return TableDef{Psi1Params(3.0, 1.5, 2.5, 3.0),
                        1.0,
                        {{-10, 1.06951}, {-100, 1.00745}, {-1000, 1.00075},
                         {-2000, 1.00037}, {-3000, 1.00025}}};
    return TableDef{Psi1Params(3.0, 1.5, 2.5, 2.0),
                    0.2,
                    {{-10, 0.98215}, {-100, 1.00223}, {-1000, 1.00025},
                     {-2000, 1.00012}, {-3000, 1.00008}}};
}

int cmd_table(const Settings& st, int id, std::vector<double> xs, const std::string& out_path) {
    TableDef def = table_def(id);
    if (xs.empty()) xs = {-10, -100, -1000, -2000, -3000};

    Output out(out_path);
    csv_header(out.stream(), "x,y,log_psi1,log_AE,ratio,method,abs_err_est");

    bool ok = true;
    for (double x : xs) {
        double y = def.gamma * (1.0 - x);
        Psi1Point pt{cplx(x, 0.0), cplx(y, 0.0)};
        EvalResult psi = psi1_integral(def.params, pt, st.integral_tol);
        LogScaled ae = psi1_leading_asym(def.params, pt);
        double ratio = ls_to_double(ls_div(psi.value, ae));
        out.stream() << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(ls_log_abs(psi.value))
                     << ',' << fmt17(ls_log_abs(ae)) << ',' << fmt17(ratio) << ','
                     << method_name(psi.method) << ',' << fmt17(psi.log_abs_err) << "\n";
        auto it = def.printed.find(x);
        if (it != def.printed.end()) {
            double tol = std::abs(x) >= 100.0 ? 5e-5 : 5e-4;
            if (std::abs(ratio - it->second) > tol) {
                std::cerr << "table " << id << " row x=" << x << ": ratio " << ratio
                          << " deviates from published " << it->second << " by more than " << tol
                          << "\n";
                ok = false;
            }
        }
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- sweep ---

struct SweepRow {
    double scale;
    int order;
    cplx expansion;
    cplx oracle;
    double abs_error;
};

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int cmd_sweep(const Settings&, const std::string& target, std::vector<double> scales,
              std::vector<int> orders, bool degenerate, const std::string& out_path) {
    // base parameter bundles from the per-operation examples
    const cplx A{1.2, 0}, B{0.3, 0}, C{2.1, 0}, D{0.7, 0}, Z{2, 0};

    if (scales.empty()) scales = (target == "large-lambda") ? std::vector<double>{25, 50, 100, 200}
                                                     : std::vector<double>{20, 40, 80, 160};
    if (orders.empty()) orders = {1, 2, 3};

    struct Case {
        ExpansionVariant variant;
        std::function<cplx(double, int)> expansion;
        std::function<cplx(double)> oracle;
        std::function<double(int)> slope_target;
    };

    std::map<std::string, Case> cases;
    {
        cplx b = degenerate ? D : B;
        cases["large-lambda"] = Case{
            ExpansionVariant::large_lambda,
            [=](double lam, int N) {
                return ls_to_complex(asym_f22_large_lambda(A, b, C, D, Z, cplx(lam, 0), N).value);
            },
            [=](double lam) { return pfq_series_ref({A, b + cplx(lam, 0)}, {C, D + cplx(lam, 0)}, Z); },
            [](int N) { return double(-N); }};
        cases["minus-n"] = Case{
            ExpansionVariant::minus_n,
            [=](double n, int N) {
                return ls_to_complex(asym_f22_minus_n(A, b, C, D, Z, long(n), N).value);
            },
            [=](double n) { return pfq_series_ref({A, b - cplx(n, 0)}, {C, D - cplx(n, 0)}, Z); },
            [](int N) { return double(-N); }};
    }
    {
        // p=1, q=2, r=1, s=0 all-down instance: slope target (p-q)N = -N
        const cplx a1{1.1, 0}, c1{1.9, 0}, c2{0.6, 0}, b1{0.8, 0}, z{1.5, 0};
        cases["pfq-all-down"] = Case{
            ExpansionVariant::pfq_all_down,
            [=](double n, int N) {
                return ls_to_complex(
                    asym_pfq_all_down({a1}, {c1, c2}, {b1}, {}, z, long(n), N).value);
            },
            [=](double n) {
                return pfq_series_ref({a1 - cplx(n, 0), b1}, {c1 - cplx(n, 0), c2 - cplx(n, 0)}, z);
            },
            [](int N) { return double(-N); }};
    }
    {
        const cplx a1{1.1, 0}, c1{1.9, 0}, b{0.4, 0}, d{0.8, 0}, z{1.5, 0};
        cplx bb = degenerate ? d : b;
        cases["pfp-one-down"] = Case{
            ExpansionVariant::pfp_one_down,
            [=](double n, int N) {
                return ls_to_complex(asym_pfp_one_down({a1}, {c1}, bb, d, z, long(n), N).value);
            },
            [=](double n) { return pfq_series_ref({a1, bb - cplx(n, 0)}, {c1, d - cplx(n, 0)}, z); },
            [](int N) { return double(-N); }};
    }
    {
        const cplx a{3.2, 0}, b{0.6, 0}, c{1.4, 0}, d{0.8, 0}, z{2, 0};
        cases["f22-a-down"] = Case{
            ExpansionVariant::f22_a_down,
            [=](double n, int N) {
                return ls_to_complex(asym_f22_a_down(a, b, c, d, z, long(n), N).value);
            },
            [=](double n) {
                return pfq_series_ref({a - cplx(n, 0), b}, {c - cplx(n, 0), d - cplx(n, 0)}, z);
            },
            [](int N) { return double(-N); }};
    }
    {
        const cplx a{1.3, 0}, b{0.6, 0}, c{2.4, 0}, d{0.9, 0}, z{1.5, 0};
        cplx bb = degenerate ? d : b;
        cases["f22-both-down"] = Case{
            ExpansionVariant::f22_both_down,
            [=](double n, int N) {
                return ls_to_complex(asym_f22_both_down(a, bb, c, d, z, long(n), N).value);
            },
            [=](double n) {
                return pfq_series_ref({a - cplx(n, 0), bb - cplx(n, 0)},
                                      {c - cplx(n, 0), d - cplx(n, 0)}, z);
            },
            [](int N) { return double(-N); }};
    }

    auto it = cases.find(target);
    if (it == cases.end()) throw CLI::ValidationError("unknown sweep target: " + target);
    const Case& cs = it->second;

    if (scales.size() < 2) throw CLI::ValidationError("need at least two scale points");
    for (size_t i = 1; i < scales.size(); ++i)
        if (!(scales[i] > scales[i - 1]))
            throw CLI::ValidationError("scale points must be strictly increasing");

    Output out(out_path);
    out.stream() << "# " << kToolVersion << " target=" << target
                 << (degenerate ? " degenerate" : "") << "\n"
                 << "scale,N,expansion_value,oracle_value,abs_error,fitted_slope\n";

    bool ok = true;
    for (int N : orders) {
        std::vector<SweepRow> rows;
        for (double scale : scales) {
            ExpansionRequest req(N, scale, cs.variant); // validates order/shift
            cplx oracle = cs.oracle(scale);
            cplx expv = cs.expansion(scale, req.order);
            rows.push_back({scale, N, expv, oracle, std::abs(expv - oracle)});
        }
        bool exact = true;
        for (const SweepRow& r : rows)
            exact = exact && r.abs_error <= 1e-12 * std::abs(r.oracle);
        std::string slope_text;
        if (exact) {
            slope_text = "exact";
        } else {
            std::vector<double> lx, ly;
            for (const SweepRow& r : rows) {
                lx.push_back(std::log(r.scale));
                ly.push_back(std::log(std::max(r.abs_error, 1e-300)));
            }
            double slope = fit_slope(lx, ly);
            slope_text = fmt17(slope);
            double target_slope = cs.slope_target(N);
            if (std::abs(slope - target_slope) > 0.5) {
                std::cerr << "sweep " << target << " N=" << N << ": slope " << slope
                          << " misses target " << target_slope << " by more than 0.5\n";
                ok = false;
            }
        }
        for (const SweepRow& r : rows) {
            out.stream() << fmt17(r.scale) << ',' << r.order << ',' << fmt17(r.expansion.real())
                         << ',' << fmt17(r.oracle.real()) << ',' << fmt17(r.abs_error) << ','
                         << slope_text << "\n";
        }
    }
    return ok ? 0 : 1;
}

// ----------------------------------------------------------- crosscheck ---

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

bool clear_of_integers(cplx v, double margin) {
    return std::abs(v.real() - std::round(v.real())) >= margin || std::abs(v.imag()) >= margin;
}

int cmd_crosscheck(const Settings& st, std::uint64_t seed, long count,
                   const std::string& out_path) {
    Output out(out_path);
    csv_header(out.stream(),
               "idx,a,b,c,c_prime,x_re,x_im,y_re,y_im,methods,methods_skipped,"
               "max_rel_discrepancy");

    std::mt19937_64 rng(seed);
    bool ok = true;
    for (long i = 0; i < count; ++i) {
        // parameters in [0.2, 4], integral-friendly (c > b), degeneracy-free
        double a, b, c, cp;
        for (;;) {
            b = uniform(rng, 0.2, 2.0);
            c = b + uniform(rng, 0.3, 2.0);
            a = uniform(rng, 0.2, 4.0);
            cp = uniform(rng, 0.2, 4.0);
            cplx ca(a, 0), cb(b, 0), cc(c, 0);
            if (clear_of_integers(ca - cb, 0.05) && clear_of_integers(ca - cc, 0.05) &&
                clear_of_integers(ca + cb - cc, 0.05))
                break;
        }
        Psi1Params params{cplx(a, 0), cplx(b, 0), cplx(c, 0), cplx(cp, 0)};

        cplx x, y;
        switch (i % 5) {
            case 0:
                x = cplx(uniform(rng, -0.6, 0.6), 0);
                y = cplx(uniform(rng, -3.0, 3.0), 0);
                break;
            case 1: {
                double rho = uniform(rng, 0.25, 0.6);
                double phi = uniform(rng, 0.4, 2.9);
                if (uniform01(rng) < 0.5) phi = -phi;
                x = 1.0 + std::polar(rho, phi);
                y = cplx(uniform(rng, -3.0, 3.0), 0);
                break;
            }
            case 2:
                x = cplx(uniform(rng, -8.0, -3.0), 0);
                y = cplx(uniform(rng, -3.0, 3.0), 0);
                break;
            case 3:
                x = cplx(uniform(rng, -30.0, -9.0), 0);
                y = cplx(uniform(rng, 0.5, 6.0), 0);
                break;
            default:
                x = cplx(uniform(rng, -2.0, -0.5), 0);
                y = cplx(uniform(rng, -2.0, 2.0), 0);
                break;
        }
        Psi1Point pt{x, y};

        // a method joins the pairwise comparison only when its own error
        // estimate claims at least 1e-9 relative accuracy; the 1e-8 gate is
        // meaningless against a route that reports it cannot reach it here
        std::vector<std::pair<std::string, LogScaled>> values;
        std::string skipped;
        auto attempt = [&](const char* name, auto&& fn) {
            try {
                EvalResult r = fn();
                if (r.rel_err() <= 1e-9) {
                    values.emplace_back(name, r.value);
                } else {
                    if (!skipped.empty()) skipped += '|';
                    skipped += name;
                }
            } catch (const hyp_error&) {
                // route not applicable here
            }
        };
        attempt("single", [&] { return psi1_single_series(params, pt, st.ctrl); });
        if (std::abs(x) < 0.75)
            attempt("double", [&] { return psi1_double_series(params, pt, st.ctrl); });
        if (std::abs(x - 1.0) < 0.75 && params.near_unit_ok)
            attempt("near_unit", [&] { return psi1_near_unit(params, pt, st.ctrl); });
        if (std::abs(x - 1.0) > 1.5 && params.large_x_ok && std::abs(y) <= st.policy.large_x_y_cap)
            attempt("large_x", [&] { return psi1_large_x(params, pt, st.ctrl); });
        if (params.integral_ok)
            attempt("integral", [&] { return psi1_integral(params, pt, st.integral_tol); });
        if (std::abs(x / (x - 1.0)) < 0.75)
            attempt("kummer_double",
                    [&] { return psi1_kummer(params, pt, Psi1Inner::double_series, st.ctrl); });

        double max_rel = 0.0;
        for (size_t u = 0; u < values.size(); ++u)
            for (size_t v = u + 1; v < values.size(); ++v)
                max_rel = std::max(max_rel, ls_rel_diff(values[u].second, values[v].second));

        std::string methods;
        for (size_t u = 0; u < values.size(); ++u) {
            if (u) methods += '|';
            methods += values[u].first;
        }

        out.stream() << i << ',' << fmt17(a) << ',' << fmt17(b) << ',' << fmt17(c) << ','
                     << fmt17(cp) << ',' << fmt17(x.real()) << ',' << fmt17(x.imag()) << ','
                     << fmt17(y.real()) << ',' << fmt17(y.imag()) << ',' << methods << ','
                     << skipped << ',' << fmt17(max_rel) << "\n";
        if (max_rel > 1e-8) {
            std::cerr << "crosscheck row " << i << ": discrepancy " << max_rel << " > 1e-8\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

// ----------------------------------------------------------------- eval ---

std::string format_logscaled(const LogScaled& v) {
    std::ostringstream os;
    os << "(" << fmt17(v.mantissa.real());
    if (v.mantissa.imag() != 0.0) os << (v.mantissa.imag() < 0 ? "" : "+")
                                     << fmt17(v.mantissa.imag()) << "i";
    os << ", " << fmt17(v.exponent) << ")";
    return os.str();
}

std::string format_plain(const LogScaled& v) {
    cplx w = ls_to_complex(v);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return "overflow";
    std::ostringstream os;
    os << fmt17(w.real());
    if (w.imag() != 0.0) os << (w.imag() < 0 ? "" : "+") << fmt17(w.imag()) << "i";
    return os.str();
}

int cmd_eval_psi1(const Settings& st, const std::vector<std::string>& par, const std::string& xs,
                  const std::string& ys, const std::string& method) {
    Psi1Params params{parse_complex(par[0]), parse_complex(par[1]), parse_complex(par[2]),
                      parse_complex(par[3])};
    Psi1Point pt{parse_complex(xs), parse_complex(ys)};

    LogScaled value;
    Method tag;
    if (method == "auto") {
        EvalResult r = psi1_auto(params, pt, st.ctrl, st.policy);
        value = r.value;
        tag = r.method;
    } else if (method == "double") {
        EvalResult r = psi1_double_series(params, pt, st.ctrl);
        value = r.value;
        tag = r.method;
    } else if (method == "single") {
        EvalResult r = psi1_single_series(params, pt, st.ctrl);
        value = r.value;
        tag = r.method;
    } else if (method == "near-unit") {
        EvalResult r = psi1_near_unit(params, pt, st.ctrl);
        value = r.value;
        tag = r.method;
    } else if (method == "large-x") {
        EvalResult r = psi1_large_x(params, pt, st.ctrl);
        value = r.value;
        tag = r.method;
    } else if (method == "integral") {
        EvalResult r = psi1_integral(params, pt, st.integral_tol);
        value = r.value;
        tag = r.method;
    } else if (method == "kummer-double") {
        EvalResult r = psi1_kummer(params, pt, Psi1Inner::double_series, st.ctrl);
        value = r.value;
        tag = r.method;
    } else if (method == "kummer-single") {
        EvalResult r = psi1_kummer(params, pt, Psi1Inner::single_series, st.ctrl);
        value = r.value;
        tag = r.method;
    } else if (method == "leading-asym") {
        value = psi1_leading_asym(params, pt);
        tag = Method::leading_asym;
    } else {
        throw CLI::ValidationError("unknown method: " + method);
    }

    std::cout << format_logscaled(value) << " " << format_plain(value)
              << " method=" << method_name(tag) << "\n";
    return 0;
}

int cmd_eval_pfq(const Settings& st, const std::string& num, const std::string& den,
                 const std::string& zs) {
    HypParams hp{parse_complex_list(num), parse_complex_list(den)};
    EvalResult r = pfq_series(hp, parse_complex(zs), st.ctrl);
    std::cout << format_logscaled(r.value) << " " << format_plain(r.value)
              << " method=" << method_name(r.method) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Humbert Psi1 / generalized hypergeometric verification tool"};
    app.require_subcommand(1);

    Settings st;
    std::string config_path, out_path;
    double tol = -1.0;
    long max_terms = -1;
    app.add_option("--tol", tol, "series relative tolerance");
    app.add_option("--max-terms", max_terms, "series term budget");
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "output CSV path (default stdout)");

    auto* t = app.add_subcommand("table", "reproduce a published ratio table");
    int table_id = 1;
    std::vector<double> table_xs;
    t->add_option("--id", table_id, "table id (1 or 2)")->check(CLI::Range(1, 2));
    t->add_option("--x", table_xs, "x values (default: the five published rows)");

    auto* s = app.add_subcommand("sweep", "error-scaling sweep for an expansion");
    std::string sweep_target = "large-lambda";
    std::vector<double> sweep_scales;
    std::vector<int> sweep_orders;
    bool sweep_degenerate = false;
    s->add_option("--target", sweep_target,
                  "one of large-lambda, minus-n, pfq-all-down, pfp-one-down, f22-a-down, f22-both-down");
    s->add_option("--scales", sweep_scales, "lambda/n values");
    s->add_option("--orders", sweep_orders, "truncation orders N");
    s->add_flag("--degenerate", sweep_degenerate, "use the terminating b=d parameter set");

    auto* cc = app.add_subcommand("crosscheck", "pairwise evaluator consistency");
    std::uint64_t seed = 1;
    long count = 50;
    cc->add_option("--seed", seed, "PRNG seed");
    cc->add_option("--count", count, "number of random draws");

    auto* ev = app.add_subcommand("eval", "evaluate one function value");
    ev->require_subcommand(1);
    auto* evp = ev->add_subcommand("psi1", "Humbert Psi1[a,b;c,c';x,y]");
    std::vector<std::string> psi1_par(4);
    std::string ev_x = "0", ev_y = "0", ev_method = "auto";
    evp->add_option("a", psi1_par[0], "parameter a")->required();
    evp->add_option("b", psi1_par[1], "parameter b")->required();
    evp->add_option("c", psi1_par[2], "parameter c")->required();
    evp->add_option("c_prime", psi1_par[3], "parameter c'")->required();
    evp->add_option("--x", ev_x, "argument x")->required();
    evp->add_option("--y", ev_y, "argument y")->required();
    evp->add_option("--method", ev_method,
                    "auto|double|single|near-unit|large-x|integral|kummer-double|kummer-single|"
                    "leading-asym");
    auto* evq = ev->add_subcommand("pfq", "pFq[num; den; z]");
    std::string ev_num, ev_den, ev_z;
    evq->add_option("--num", ev_num, "comma-separated numerator parameters");
    evq->add_option("--den", ev_den, "comma-separated denominator parameters");
    evq->add_option("--z", ev_z, "argument z")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) load_config(st, config_path);
        if (tol > 0.0) st.ctrl.rel_tol = tol;
        if (max_terms > 0) st.ctrl.max_terms = max_terms;

        if (t->parsed()) return cmd_table(st, table_id, table_xs, out_path);
        if (s->parsed())
            return cmd_sweep(st, sweep_target, sweep_scales, sweep_orders, sweep_degenerate,
                             out_path);
        if (cc->parsed()) return cmd_crosscheck(st, seed, count, out_path);
        if (ev->parsed()) {
            if (evp->parsed()) return cmd_eval_psi1(st, psi1_par, ev_x, ev_y, ev_method);
            return cmd_eval_pfq(st, ev_num, ev_den, ev_z);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hyp_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
