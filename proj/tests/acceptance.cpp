// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "humbert/errors.hpp"
#include "humbert/gamma.hpp"
#include "humbert/pfq_asym.hpp"
#include "humbert/psi1.hpp"

using namespace humbert;

namespace {

const SeriesControl kCtrl{};
int g_failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

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

// ---- criteria 1 and 2: table reproduction ---------------------------------

struct TableCase {
    Psi1Params params;
    double gamma;
    std::vector<std::pair<double, double>> rows; // x -> published ratio
};

void run_table_criterion(int id, const TableCase& tc) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (auto [x, printed] : tc.rows) {
        double y = tc.gamma * (1.0 - x);
        Psi1Point pt{cplx(x, 0), cplx(y, 0)};
        EvalResult iv = psi1_integral(tc.params, pt, 1e-9);
        LogScaled ae = psi1_leading_asym(tc.params, pt);
        double ratio = ls_to_double(ls_div(iv.value, ae));
        double tol = std::abs(x) >= 100.0 ? 5e-5 : 5e-4;
        if (std::abs(ratio - printed) > tol) {
            ok = false;
            detail += "x=" + std::to_string(x) + " ratio=" + std::to_string(ratio) + " ";
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 30.0) {
        ok = false;
        detail += "runtime " + std::to_string(dt) + "s exceeds 30s";
    }
    report(id, id == 1 ? "Table 1 ratios within print tolerance, runtime < 30 s"
                       : "Table 2 ratios within print tolerance, runtime < 30 s",
           ok, detail);
}

// ---- criteria 3-5: slope checks -------------------------------------------

bool slope_ok(const std::function<cplx(double, int)>& expansion,
              const std::function<cplx(double)>& oracle, const std::vector<double>& scales,
              int order, double target, std::string& detail) {
    std::vector<double> lx, ly;
    for (double s : scales) {
        double err = std::abs(expansion(s, order) - oracle(s));
        lx.push_back(std::log(s));
        ly.push_back(std::log(std::max(err, 1e-300)));
    }
    double slope = fit_slope(lx, ly);
    if (std::abs(slope - target) > 0.5) {
        detail += "N=" + std::to_string(order) + " slope=" + std::to_string(slope) +
                  " target=" + std::to_string(target) + " ";
        return false;
    }
    return true;
}

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    const cplx A{1.2, 0}, B{0.3, 0}, C{2.1, 0}, D{0.7, 0}, Z{2, 0};
    bool ok = true;
    std::string detail;
    for (int N : {1, 2, 3}) {
        ok = slope_ok(
                 [&](double lam, int n) {
                     return ls_to_complex(
                         asym_f22_large_lambda(A, B, C, D, Z, cplx(lam, 0), n).value);
                 },
                 [&](double lam) {
                     return pfq_series_ref({A, B + cplx(lam, 0)}, {C, D + cplx(lam, 0)}, Z);
                 },
                 {25, 50, 100, 200}, N, -double(N), detail) &&
             ok;
    }
    double dt = seconds_since(t0);
    if (dt >= 10.0) {
        ok = false;
        detail += "runtime " + std::to_string(dt) + "s exceeds 10s";
    }
    report(3, "large-lambda expansion slopes -N within 0.5, runtime < 10 s", ok, detail);
}

void criterion4() {
    const cplx A{1.2, 0}, B{0.3, 0}, C{2.1, 0}, D{0.7, 0}, Z{2, 0};
    bool ok = true;
    std::string detail;
    for (int N : {1, 2, 3}) {
        ok = slope_ok(
                 [&](double n, int order) {
                     return ls_to_complex(asym_f22_minus_n(A, B, C, D, Z, long(n), order).value);
                 },
                 [&](double n) {
                     return pfq_series_ref({A, B - cplx(n, 0)}, {C, D - cplx(n, 0)}, Z);
                 },
                 {20, 40, 80, 160}, N, -double(N), detail) &&
             ok;
    }
    // terminating case: b - d = 2, exact at N = 3
    const cplx Bt{2.7, 0};
    for (long n : {20L, 80L}) {
        ExpansionResult e = asym_f22_minus_n(A, Bt, C, D, Z, n, 3);
        cplx oracle = pfq_series_ref({A, Bt - cplx(double(n), 0)}, {C, D - cplx(double(n), 0)}, Z);
        double rel = std::abs(ls_to_complex(e.value) - oracle) / std::abs(oracle);
        if (!e.exact || rel > 1e-12) {
            ok = false;
            detail += "terminating n=" + std::to_string(n) + " rel=" + std::to_string(rel) + " ";
        }
    }
    report(4, "minus-n expansion slopes -N within 0.5; terminating case exact to 1e-12", ok,
           detail);
}

void criterion5() {
    bool ok = true;
    std::string detail;

    // all parameters shifted down, p = 1, q = 2: slope target (p-q)N = -N
    {
        const cplx a1{1.1, 0}, c1{1.9, 0}, c2{0.6, 0}, b1{0.8, 0}, z{1.5, 0};
        for (int N : {1, 2}) {
            ok = slope_ok(
                     [&](double n, int order) {
                         return ls_to_complex(
                             asym_pfq_all_down({a1}, {c1, c2}, {b1}, {}, z, long(n), order).value);
                     },
                     [&](double n) {
                         return pfq_series_ref({a1 - cplx(n, 0), b1},
                                               {c1 - cplx(n, 0), c2 - cplx(n, 0)}, z);
                     },
                     {20, 40, 80, 160}, N, -double(N), detail) &&
                 ok;
        }
    }
    // one numerator/denominator pair shifted down, p = 1
    {
        const cplx a1{1.1, 0}, c1{1.9, 0}, b{0.4, 0}, d{0.8, 0}, z{1.5, 0};
        for (int N : {1, 2}) {
            ok = slope_ok(
                     [&](double n, int order) {
                         return ls_to_complex(
                             asym_pfp_one_down({a1}, {c1}, b, d, z, long(n), order).value);
                     },
                     [&](double n) {
                         return pfq_series_ref({a1, b - cplx(n, 0)}, {c1, d - cplx(n, 0)}, z);
                     },
                     {20, 40, 80, 160}, N, -double(N), detail) &&
                 ok;
        }
    }
    // a, c, d shifted down
    {
        const cplx a{3.2, 0}, b{0.6, 0}, c{1.4, 0}, d{0.8, 0}, z{2, 0};
        for (int N : {1, 2, 3}) {
            ok = slope_ok(
                     [&](double n, int order) {
                         return ls_to_complex(asym_f22_a_down(a, b, c, d, z, long(n), order).value);
                     },
                     [&](double n) {
                         return pfq_series_ref({a - cplx(n, 0), b},
                                               {c - cplx(n, 0), d - cplx(n, 0)}, z);
                     },
                     {20, 40, 80, 160}, N, -double(N), detail) &&
                 ok;
        }
    }
    // all four parameters shifted down
    {
        const cplx a{1.3, 0}, b{0.6, 0}, c{2.4, 0}, d{0.9, 0}, z{1.5, 0};
        for (int N : {1, 2}) {
            ok = slope_ok(
                     [&](double n, int order) {
                         return ls_to_complex(
                             asym_f22_both_down(a, b, c, d, z, long(n), order).value);
                     },
                     [&](double n) {
                         return pfq_series_ref({a - cplx(n, 0), b - cplx(n, 0)},
                                               {c - cplx(n, 0), d - cplx(n, 0)}, z);
                     },
                     {20, 40, 80, 160}, N, -double(N), detail) &&
                 ok;
        }
    }
    report(5, "remaining down-shift expansion slope checks ((p-q)N law included)", ok,
           detail);
}

// ---- criterion 6: exact identities -----------------------------------------

void criterion6() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(2024);

    // Fields series vs direct 2F2 on 30 draws
    for (int i = 0; i < 30; ++i) {
        cplx a(0.2 + 3.0 * u01(rng), (u01(rng) - 0.5) * 0.5);
        cplx b(0.2 + 3.0 * u01(rng), (u01(rng) - 0.5) * 0.5);
        cplx c(0.4 + 3.0 * u01(rng), (u01(rng) - 0.5) * 0.5);
        cplx d(0.4 + 3.0 * u01(rng), (u01(rng) - 0.5) * 0.5);
        cplx z((u01(rng) - 0.5) * 10.0, (u01(rng) - 0.5) * 10.0);
        if (std::abs(z) > 5.0) z *= 5.0 / std::abs(z);
        double rel = ls_rel_diff(f22_fields_series(a, b, c, d, z, kCtrl).value,
                                 pfq_series(HypParams{{a, b}, {c, d}}, z, kCtrl).value);
        if (rel > 1e-11) {
            ok = false;
            detail += "fields draw " + std::to_string(i) + " rel=" + std::to_string(rel) + " ";
        }
    }

    // Kummer transformation invariance on 30 draws
    for (int i = 0; i < 30; ++i) {
        double a = 0.3 + 3.0 * u01(rng);
        double b = 0.3 + 1.6 * u01(rng);
        double c = b + 0.3 + 1.5 * u01(rng);
        double cp = 0.3 + 3.0 * u01(rng);
        Psi1Params p{cplx(a, 0), cplx(b, 0), cplx(c, 0), cplx(cp, 0)};
        Psi1Point pt{cplx(-2.0 * u01(rng) - 0.05, 0), cplx(2.0 * u01(rng) - 1.0, 0)};
        double rel = ls_rel_diff(psi1_kummer(p, pt, Psi1Inner::double_series, kCtrl).value,
                                 psi1_single_series(p, pt, kCtrl).value);
        if (rel > 1e-10) {
            ok = false;
            detail += "kummer draw " + std::to_string(i) + " rel=" + std::to_string(rel) + " ";
        }
    }

    // all evaluator pairs in their domain overlaps on 50 draws
    int done = 0;
    for (int i = 0; done < 50 && i < 300; ++i) {
        double a = 0.3 + 3.0 * u01(rng);
        double b = 0.3 + 1.6 * u01(rng);
        double c = b + 0.3 + 1.5 * u01(rng);
        double cp = 0.3 + 3.0 * u01(rng);
        cplx ca(a, 0), cb(b, 0), cc(c, 0);
        auto deg = [](cplx v) {
            return std::abs(v.real() - std::round(v.real())) < 0.05;
        };
        if (deg(ca - cb) || deg(ca - cc) || deg(ca + cb - cc)) continue;
        Psi1Params p{ca, cb, cc, cplx(cp, 0)};

        std::vector<LogScaled> vals;
        Psi1Point pt{cplx(0, 0), cplx(0, 0)};
        switch (i % 3) {
            case 0:
                pt = Psi1Point{cplx(0.9 * u01(rng) - 0.45, 0), cplx(3.0 * u01(rng) - 1.5, 0)};
                vals.push_back(psi1_double_series(p, pt, kCtrl).value);
                vals.push_back(psi1_single_series(p, pt, kCtrl).value);
                vals.push_back(psi1_integral(p, pt, 1e-11).value);
                vals.push_back(psi1_kummer(p, pt, Psi1Inner::double_series, kCtrl).value);
                break;
            case 1:
                pt = Psi1Point{cplx(-5.0 * u01(rng) - 2.5, 0), cplx(3.0 * u01(rng) - 1.5, 0)};
                vals.push_back(psi1_single_series(p, pt, kCtrl).value);
                vals.push_back(psi1_large_x(p, pt, kCtrl).value);
                vals.push_back(psi1_integral(p, pt, 1e-11).value);
                break;
            default: {
                double rho = 0.3 + 0.4 * u01(rng);
                double phi = 0.5 + 2.0 * u01(rng);
                pt = Psi1Point{1.0 + std::polar(rho, phi), cplx(3.0 * u01(rng) - 1.5, 0)};
                vals.push_back(psi1_near_unit(p, pt, kCtrl).value);
                vals.push_back(psi1_single_series(p, pt, kCtrl).value);
                vals.push_back(psi1_integral(p, pt, 1e-11).value);
                break;
            }
        }
        for (size_t u = 0; u < vals.size(); ++u)
            for (size_t v = u + 1; v < vals.size(); ++v) {
                double rel = ls_rel_diff(vals[u], vals[v]);
                if (rel > 1e-8) {
                    ok = false;
                    detail += "pair draw " + std::to_string(done) + " rel=" +
                              std::to_string(rel) + " ";
                }
            }
        ++done;
    }
    if (done != 50) {
        ok = false;
        detail += "only " + std::to_string(done) + " pair draws completed ";
    }
    report(6, "exact identities: Fields 1e-11 x30, Kummer 1e-10 x30, evaluator pairs 1e-8 x50",
           ok, detail);
}

// ---- criterion 7: bound and trend properties --------------------------------

void criterion7() {
    bool ok = true;
    std::string detail;

    // Pochhammer-ratio boundedness and trend on 20 draws
    std::mt19937_64 rng(4096);
    const long grid[4] = {10, 100, 1000, 10000};
    for (int trial = 0; trial < 20; ++trial) {
        cplx a(0.2 + 3.8 * u01(rng), (u01(rng) - 0.5));
        cplx b(0.2 + 3.8 * u01(rng), (u01(rng) - 0.5));
        double s[4];
        for (int i = 0; i < 4; ++i) {
            LogScaled r = pochhammer_ratio({a, b, grid[i]});
            s[i] = std::exp(ls_log_abs(r) + (b - a).real() * std::log(double(grid[i])));
        }
        bool bounded = std::isfinite(s[0]) && s[0] > 0 && s[0] <= 6.0 * s[3] &&
                       s[1] <= 3.0 * s[3] && s[2] <= 3.0 * s[3];
        bool trend = std::abs(s[3] / s[2] - 1.0) <= std::abs(s[2] / s[1] - 1.0) + 0.02;
        if (!bounded || !trend) {
            ok = false;
            detail += "poch trial " + std::to_string(trial) + " ";
        }
    }

    // Phi_a(x) / (x^a e^x) strictly closer to 1 at each larger x
    for (double a : {-1.0, 0.5, 2.0}) {
        double prev = 1e300;
        for (double x : {10.0, 50.0, 100.0}) {
            double ratio = phi_stirling(a, x, kCtrl) / (std::pow(x, a) * std::exp(x));
            double dist = std::abs(ratio - 1.0);
            if (dist >= prev) {
                ok = false;
                detail += "phi a=" + std::to_string(a) + " x=" + std::to_string(x) + " ";
            }
            prev = dist;
        }
    }

    // explicit 1F1 bound for 50 values of l
    const cplx a0(1.3, 0.2), c0(0.4, 0.0);
    const int N = 1;
    for (cplx z : {cplx(1, 0), cplx(10, 5), cplx(100, 0)}) {
        for (long l = N + 1; l <= N + 50; ++l) {
            cplx al = a0 + cplx(double(l), 0), cl = c0 + cplx(double(l), 0);
            double gl = std::max(1.0, std::abs(al) / std::abs(cl));
            double bound_log = std::log(2.0 * gl) + std::sqrt(2.0) * gl * std::abs(z);
            if (ls_log_abs(f11(al, cl, z, kCtrl).value) > bound_log) {
                ok = false;
                detail += "1F1 bound l=" + std::to_string(l) + " ";
            }
        }
    }
    report(7, "property suite: Pochhammer-ratio trend, Stirling-series ratio, 1F1 bound",
           ok, detail);
}

// ---- criterion 8: complex-ray trend ----------------------------------------

void criterion8() {
    bool ok = true;
    std::string detail;
    const Psi1Params params{cplx(3, 0), cplx(1.5, 0), cplx(2.5, 0), cplx(3, 0)};
    for (double theta : {0.0, 3.14159265358979323846 / 6.0}) {
        double prev = 1e300;
        for (double t : {100.0, 1000.0}) {
            cplx x = -t * std::polar(1.0, theta);
            double y = std::abs(1.0 - x); // gamma = 1, y real positive
            Psi1Point pt{x, cplx(y, 0)};
            EvalResult iv = psi1_integral(params, pt, 1e-9);
            LogScaled ae = psi1_leading_asym(params, pt);
            double dist = std::abs(ls_to_complex(ls_div(iv.value, ae)) - cplx(1, 0));
            if (dist >= prev) {
                ok = false;
                detail += "theta=" + std::to_string(theta) + " t=" + std::to_string(t) +
                          " dist=" + std::to_string(dist) + " ";
            }
            prev = dist;
        }
    }
    report(8, "ratio trend toward 1 along complex rays (theta = 0, pi/6)", ok, detail);
}

} // namespace

int main() {
    run_table_criterion(
        1, TableCase{Psi1Params{cplx(3, 0), cplx(1.5, 0), cplx(2.5, 0), cplx(3, 0)},
                     1.0,
                     {{-10, 1.06951}, {-100, 1.00745}, {-1000, 1.00075}, {-2000, 1.00037},
                      {-3000, 1.00025}}});
    run_table_criterion(
        2, TableCase{Psi1Params{cplx(3, 0), cplx(1.5, 0), cplx(2.5, 0), cplx(2, 0)},
                     0.2,
                     {{-10, 0.98215}, {-100, 1.00223}, {-1000, 1.00025}, {-2000, 1.00012},
                      {-3000, 1.00008}}});
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
