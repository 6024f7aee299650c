#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lis/approx.hpp"
#include "lis/closed_form.hpp"
#include "lis/deployment.hpp"
#include "lis/fisher.hpp"
#include "lis/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::size_t eval_budget() {
    if (const char* env = std::getenv("LIS_CRLB_MAX_EVALS")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return lis::kDefaultEvalBudget;
}

std::string fmt(double v) {
    if (std::isnan(v)) return "singular";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

struct CsvRow {
    std::string sweep_param;
    double sweep_value;
    std::string method;
    lis::Mat3 c;  // CRLB matrix; NaN entries rendered as "singular"
    double cond1 = 0.0;
    double cond2 = 0.0;
    double quad_err = 0.0;
};

const char* kCsvHeader =
    "sweep_param,sweep_value,method,Cxx,Cyy,Czz,Cxy,Cxz,Cyz,cond1_ratio,cond2_ratio,"
    "quad_err";

void write_csv(std::ostream& os, const std::vector<CsvRow>& rows,
               const std::string& comment = "") {
    if (!comment.empty()) os << "# " << comment << "\n";
    os << kCsvHeader << "\n";
    for (const CsvRow& r : rows) {
        os << r.sweep_param << ',' << fmt(r.sweep_value) << ',' << r.method << ','
           << fmt(r.c(0, 0)) << ',' << fmt(r.c(1, 1)) << ',' << fmt(r.c(2, 2)) << ','
           << fmt(r.c(0, 1)) << ',' << fmt(r.c(0, 2)) << ',' << fmt(r.c(1, 2)) << ','
           << fmt(r.cond1) << ',' << fmt(r.cond2) << ',' << fmt(r.quad_err) << "\n";
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw CLI::ValidationError("--out", "cannot open '" + path + "' for writing");
    return os;
}

lis::Mat3 diag_cxy_cz(double cxy, double cz) {
    return lis::Mat3::diagonal(cxy, cxy, cz);
}

// Full CRLB matrix for one terminal/disk configuration by the named method.
CsvRow evaluate_point(const std::string& sweep_param, double sweep_value,
                      const std::string& method, const lis::TerminalPosition& t,
                      double radius, const lis::RadioConfig& cfg) {
    CsvRow row{sweep_param, sweep_value, method, {}, 0, 0, 0};
    const lis::ConditionReport rep = lis::check_conditions(t, radius, cfg);
    row.cond1 = rep.cond1_ratio;
    row.cond2 = rep.cond2_ratio;
    const bool on_cpl = t.x0 == 0.0 && t.y0 == 0.0;
    if (method == "numeric") {
        const lis::FisherMatrix f =
            lis::fisher_matrix(t, {0, 0, radius}, cfg, {}, eval_budget());
        const lis::CrlbMatrix c = lis::crlb_from_fisher(f);
        row.c = c.m;
        row.quad_err = f.quad_error;
    } else if (method == "theorem1") {
        if (!on_cpl)
            throw CLI::ValidationError("--method",
                                       "theorem1 applies to CPL terminals (x0=y0=0) only");
        const lis::CplFisher cf = lis::fisher_cpl({t.z0, radius, cfg.lambda});
        const double snr = cfg.n0 / 2.0;
        row.c = diag_cxy_cz(snr / cf.ixy, snr / cf.iz);
    } else if (method == "simplified") {
        if (!on_cpl)
            throw CLI::ValidationError("--method", "simplified applies to the CPL only");
        const lis::CplCrlb c = lis::crlb_cpl_simplified(radius / t.z0, cfg.lambda);
        const double snr = cfg.n0 / 2.0;
        row.c = diag_cxy_cz(snr * c.cxy, snr * c.cz);
    } else if (method == "small-tau") {
        if (!on_cpl)
            throw CLI::ValidationError("--method", "small-tau applies to the CPL only");
        const lis::CplCrlb c = lis::crlb_cpl_small_tau(radius / t.z0, cfg.lambda);
        const double snr = cfg.n0 / 2.0;
        row.c = diag_cxy_cz(snr * c.cxy, snr * c.cz);
    } else if (method == "prop1") {
        row.c = lis::crlb_approx_prop1(t, radius, cfg).m;
    } else if (method == "prop2") {
        const lis::CplCrlb c = lis::crlb_approx_prop2(t, radius, cfg);
        row.c = diag_cxy_cz(c.cxy, c.cz);
        // Off-CPL the z bound carries the offset term; the x/y-z covariances
        // are not part of Proposition 2 and stay zero.
    } else {
        throw CLI::ValidationError("--method", "unknown method '" + method + "'");
    }
    return row;
}

std::vector<std::string> expand_methods(const std::vector<std::string>& methods,
                                        bool on_cpl) {
    if (methods.size() == 1 && methods[0] == "all") {
        if (on_cpl) return {"numeric", "theorem1", "simplified", "small-tau"};
        return {"numeric", "prop1", "prop2"};
    }
    return methods;
}

void print_matrix(const lis::Mat3& m, const std::string& label) {
    std::cout << label << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
        std::cout << "  ";
        for (std::size_t k = 0; k < 3; ++k) std::cout << fmt(m(i, k)) << (k < 2 ? " " : "\n");
    }
}

std::vector<double> make_grid(double from, double to, int steps, bool log_scale) {
    if (!(from < to) || steps < 2)
        throw CLI::ValidationError("--from/--to/--steps",
                                   "need from < to and steps >= 2");
    if (log_scale && !(from > 0))
        throw CLI::ValidationError("--from", "log scale needs from > 0");
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i) {
        const double f = static_cast<double>(i) / (steps - 1);
        g[i] = log_scale ? from * std::pow(to / from, f) : from + f * (to - from);
    }
    return g;
}

int cmd_cpl(double z0, double radius, double lambda, double n0,
            std::vector<std::string> methods) {
    const lis::TerminalPosition t{0, 0, z0};
    const lis::RadioConfig cfg{lambda, n0};
    methods = expand_methods(methods, true);
    std::map<std::string, std::pair<double, double>> results;
    for (const std::string& m : methods) {
        const CsvRow row = evaluate_point("none", 0.0, m, t, radius, cfg);
        results[m] = {row.c(0, 0), row.c(2, 2)};
        std::cout << m << ": Cxy = " << fmt(row.c(0, 0)) << "  Cz = " << fmt(row.c(2, 2))
                  << "\n";
    }
    if (results.size() > 1) {
        const auto ref = results.begin();
        for (auto it = std::next(results.begin()); it != results.end(); ++it) {
            std::cout << "delta " << it->first << " vs " << ref->first << ": Cxy "
                      << fmt(it->second.first / ref->second.first - 1.0) << "  Cz "
                      << fmt(it->second.second / ref->second.second - 1.0) << "\n";
        }
    }
    std::cout << "tau = " << fmt(radius / z0)
              << "  wavelength-limit = " << fmt(lis::crlb_limit(lambda)) << "\n";
    return kExitOk;
}

int cmd_point(const lis::TerminalPosition& t, double radius, double lambda, double n0,
              std::vector<std::string> methods) {
    const lis::RadioConfig cfg{lambda, n0};
    const lis::ConditionReport rep = lis::check_conditions(t, radius, cfg);
    std::cout << "cond1_ratio = " << fmt(rep.cond1_ratio)
              << (rep.cond1_ok ? " (satisfied)" : " (NOT satisfied)")
              << "\ncond2_ratio = " << fmt(rep.cond2_ratio)
              << (rep.cond2_ok ? " (satisfied)" : " (NOT satisfied)") << "\n";
    methods = expand_methods(methods, t.x0 == 0.0 && t.y0 == 0.0);
    for (const std::string& m : methods) {
        const CsvRow row = evaluate_point("none", 0.0, m, t, radius, cfg);
        print_matrix(row.c, "CRLB [" + m + "] (m^2):");
        if (m == "numeric") std::cout << "  quadrature error estimate: " << fmt(row.quad_err) << "\n";
    }
    return kExitOk;
}

int cmd_spherical(double kappa, double phi, double psi, double radius, double lambda,
                  double n0, const std::string& method) {
    const lis::SphericalPosition s{kappa, phi, psi};
    const lis::TerminalPosition t = lis::sph_to_cart(s);
    const lis::RadioConfig cfg{lambda, n0};
    lis::FisherMatrix f;
    if (method == "numeric")
        f = lis::fisher_matrix(t, {0, 0, radius}, cfg, {}, eval_budget());
    else if (method == "prop1")
        f = lis::fisher_approx_prop1(t, radius, cfg);
    else
        throw CLI::ValidationError("--method", "spherical supports numeric or prop1");
    const lis::SphericalCrlb c = lis::crlb_spherical(f, s);
    print_matrix(c.m, "CRLB in (kappa, phi, psi) [" + method + "]:");
    if (!c.psi_identifiable)
        std::cout << "psi: unidentifiable on the CPL (phi = 0); showing the (kappa, phi) "
                     "block\n";
    return kExitOk;
}

int cmd_sweep(const std::string& param, double from, double to, int steps,
              bool log_scale, const lis::TerminalPosition& base, double radius,
              double lambda, double n0, std::vector<std::string> methods,
              const std::string& out) {
    const lis::RadioConfig cfg{lambda, n0};
    std::vector<CsvRow> rows;
    for (double v : make_grid(from, to, steps, log_scale)) {
        lis::TerminalPosition t = base;
        double r = radius;
        if (param == "r") {
            r = v;
        } else if (param == "tau") {
            r = v * t.z0;
        } else if (param == "z0") {
            t.z0 = v;
        } else if (param == "x0") {
            t.x0 = v;
        } else if (param == "offset-radius") {
            t.x0 = v / std::sqrt(2.0);
            t.y0 = v / std::sqrt(2.0);
        } else {
            throw CLI::ValidationError("--param", "unknown sweep parameter '" + param + "'");
        }
        const bool on_cpl = t.x0 == 0.0 && t.y0 == 0.0;
        for (const std::string& m : expand_methods(methods, on_cpl))
            rows.push_back(evaluate_point(param, v, m, t, r, cfg));
    }
    std::ofstream os = open_out(out);
    write_csv(os, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
    return kExitOk;
}

int cmd_deploy(double width, double height, int split, double z0, double lambda,
               double n0, double r_from, double r_to, int steps,
               const std::string& out) {
    const lis::RadioConfig cfg{lambda, n0};
    const lis::TerminalPosition t{0, 0, z0};
    const std::string method = "deploy-split" + std::to_string(split);
    std::vector<CsvRow> rows;
    for (double R : make_grid(r_from, r_to, steps, true)) {
        const lis::DeploymentLayout layout = lis::make_layout(width, height, split, R);
        const lis::CrlbMatrix c =
            lis::deployment_crlb_numeric(t, layout, cfg, {}, eval_budget());
        CsvRow row{"r", R, method, c.m, 0, 0, c.quad_error};
        rows.push_back(row);
    }
    const double analytic = lis::crossover_radius(width, height);
    std::cout << "analytic centralized-vs-4-split crossover radius: " << fmt(analytic)
              << "\n";
    // Numeric crossover by bisection on the centralized-minus-distributed
    // x/y CRLB difference, when the sweep range brackets a sign change.
    auto diff = [&](double R) {
        const double cent =
            lis::deployment_crlb_numeric(t, lis::make_layout(width, height, 1, R), cfg,
                                         {1e-10, 1e-7}, eval_budget())
                .m(0, 0);
        const double dist =
            lis::deployment_crlb_numeric(t, lis::make_layout(width, height, 4, R), cfg,
                                         {1e-10, 1e-7}, eval_budget())
                .m(0, 0);
        return cent - dist;
    };
    double lo = r_from, hi = r_to;
    double dlo = diff(lo), dhi = diff(hi);
    if (dlo * dhi < 0.0) {
        for (int iter = 0; iter < 20; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const double dm = diff(mid);
            if (dlo * dm <= 0.0) {
                hi = mid;
                dhi = dm;
            } else {
                lo = mid;
                dlo = dm;
            }
        }
        std::cout << "numeric crossover radius (bisection): " << fmt(0.5 * (lo + hi))
                  << "\n";
    } else {
        std::cout << "numeric crossover: no sign change in [" << r_from << ", " << r_to
                  << "]\n";
    }
    if (!out.empty()) {
        std::ofstream os = open_out(out);
        write_csv(os, rows);
        std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
    }
    return kExitOk;
}

int cmd_reproduce(const std::string& figure, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw CLI::ValidationError("--out-dir", "cannot create '" + out_dir + "'");
    const lis::RadioConfig cfg{0.1, 2.0};
    const std::string axis_note =
        "sweep axis: R on a log grid (the source figures do not pin the x-axis)";
    if (figure == "fig4" || figure == "fig5") {
        // x/y (fig4) and z (fig5) CRLBs for offset terminals; same sweeps.
        for (double z0 : {4.0, 6.0}) {
            for (double x0 : {2.0, 4.0, 8.0}) {
                const lis::TerminalPosition t{x0, 0, z0};
                std::vector<CsvRow> rows;
                for (double R : make_grid(0.1, 100.0, 25, true)) {
                    for (const std::string& m : {"numeric", "prop1", "prop2"}) {
                        if (m == "prop2" && R / z0 > 0.3) continue;  // out of regime
                        rows.push_back(evaluate_point("r", R, m, t, R, cfg));
                    }
                }
                std::ostringstream name;
                name << out_dir << "/" << figure << "_x0_" << x0 << "_z0_" << z0
                     << ".csv";
                std::ofstream os = open_out(name.str());
                write_csv(os, rows, axis_note);
            }
        }
    } else if (figure == "fig6") {
        const double R = 0.5, z0 = 8.0;
        std::vector<CsvRow> rows;
        for (int q = 1; q <= 8; ++q) {
            const lis::TerminalPosition t{static_cast<double>(q), static_cast<double>(q),
                                          z0};
            rows.push_back(evaluate_point("x0", q, "numeric", t, R, cfg));
            rows.push_back(evaluate_point("x0", q, "prop2", t, R, cfg));
        }
        std::ofstream os = open_out(out_dir + "/fig6.csv");
        write_csv(os, rows, "R=0.5, lambda=0.1, z0=8, x0=y0 sweep");
    } else if (figure == "fig7") {
        const double z0 = 8.0;
        const lis::TerminalPosition t{0, 0, z0};
        for (int split : {1, 4, 16}) {
            std::vector<CsvRow> rows;
            for (double R : make_grid(0.1, 100.0, 20, true)) {
                const lis::DeploymentLayout layout = lis::make_layout(4, 4, split, R);
                const lis::CrlbMatrix c =
                    lis::deployment_crlb_numeric(t, layout, cfg, {}, eval_budget());
                rows.push_back({"r", R, "deploy-split" + std::to_string(split), c.m, 0,
                                0, c.quad_error});
            }
            std::ofstream os =
                open_out(out_dir + "/fig7_split" + std::to_string(split) + ".csv");
            write_csv(os, rows, "W=H=4, z0=8, lambda=0.1; " + axis_note);
        }
    } else {
        throw CLI::ValidationError("--figure", "unknown figure '" + figure + "'");
    }
    std::cout << "reproduction CSVs written to " << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fisher information and Cramer-Rao bounds for positioning with a "
                 "large intelligent surface"};
    app.require_subcommand(1);

    double z0 = 4.0, radius = 1.0, lambda = 0.1, n0 = 2.0;
    double x0 = 0.0, y0 = 0.0;
    double kappa = 8.0, phi = 0.0, psi = 0.0;
    std::vector<std::string> methods{"all"};
    std::string method_one = "numeric";
    std::string param = "r", out = "sweep.csv", out_dir = "reproduce";
    std::string figure;
    double from = 0.1, to = 10.0;
    int steps = 20, split = 4;
    double width = 4.0, height = 4.0, r_from = 0.5, r_to = 4.0;
    bool log_scale = true, linear_scale = false;

    auto* cpl = app.add_subcommand("cpl", "CRLBs on the central perpendicular line");
    cpl->add_option("--z0", z0, "terminal distance (m)")->check(CLI::PositiveNumber);
    cpl->add_option("--radius", radius, "aperture radius (m)")->check(CLI::PositiveNumber);
    cpl->add_option("--lambda", lambda, "wavelength (m)")->check(CLI::PositiveNumber);
    cpl->add_option("--n0", n0, "noise spectral density")->check(CLI::PositiveNumber);
    cpl->add_option("--method", methods,
                    "all | numeric | theorem1 | simplified | small-tau");

    auto* point = app.add_subcommand("point", "full CRLB matrix at a Cartesian position");
    point->add_option("--x0", x0);
    point->add_option("--y0", y0);
    point->add_option("--z0", z0)->check(CLI::PositiveNumber);
    point->add_option("--radius", radius)->check(CLI::PositiveNumber);
    point->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    point->add_option("--n0", n0)->check(CLI::PositiveNumber);
    point->add_option("--method", methods, "all | numeric | prop1 | prop2");

    auto* sph = app.add_subcommand("spherical", "CRLB for range and angles of arrival");
    sph->add_option("--kappa", kappa)->check(CLI::PositiveNumber);
    sph->add_option("--phi", phi, "polar angle from the z-axis (rad)");
    sph->add_option("--psi", psi, "azimuth (rad)");
    sph->add_option("--radius", radius)->check(CLI::PositiveNumber);
    sph->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    sph->add_option("--n0", n0)->check(CLI::PositiveNumber);
    sph->add_option("--method", method_one, "numeric | prop1");

    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    sweep->add_option("--param", param, "r | tau | z0 | x0 | offset-radius")->required();
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();
    sweep->add_option("--steps", steps)->check(CLI::Range(2, 100000));
    sweep->add_flag("--log", log_scale, "logarithmic grid (default)");
    sweep->add_flag("--linear", linear_scale, "linear grid");
    sweep->add_option("--x0", x0);
    sweep->add_option("--y0", y0);
    sweep->add_option("--z0", z0)->check(CLI::PositiveNumber);
    sweep->add_option("--radius", radius)->check(CLI::PositiveNumber);
    sweep->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    sweep->add_option("--n0", n0)->check(CLI::PositiveNumber);
    sweep->add_option("--method", methods);
    sweep->add_option("--out", out)->required();

    auto* deploy = app.add_subcommand("deploy", "centralized vs distributed deployments");
    deploy->add_option("--width", width)->check(CLI::PositiveNumber);
    deploy->add_option("--height", height)->check(CLI::PositiveNumber);
    deploy->add_option("--split", split)->check(CLI::IsMember({1, 4, 16}));
    deploy->add_option("--z0", z0)->check(CLI::PositiveNumber);
    deploy->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    deploy->add_option("--n0", n0)->check(CLI::PositiveNumber);
    deploy->add_option("--r-from", r_from)->check(CLI::PositiveNumber);
    deploy->add_option("--r-to", r_to)->check(CLI::PositiveNumber);
    deploy->add_option("--steps", steps)->check(CLI::Range(2, 100000));
    deploy->add_option("--out", out);

    auto* rep = app.add_subcommand("reproduce", "figure-level CSV sweeps");
    rep->add_option("--figure", figure, "fig4 | fig5 | fig6 | fig7")->required();
    rep->add_option("--out-dir", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cpl) return cmd_cpl(z0, radius, lambda, n0, methods);
        if (*point) return cmd_point({x0, y0, z0}, radius, lambda, n0, methods);
        if (*sph) return cmd_spherical(kappa, phi, psi, radius, lambda, n0, method_one);
        if (*sweep)
            return cmd_sweep(param, from, to, steps, log_scale && !linear_scale,
                             {x0, y0, z0}, radius, lambda, n0, methods, out);
        if (*deploy)
            return cmd_deploy(width, height, split, z0, lambda, n0, r_from, r_to, steps,
                              out);
        if (*rep) return cmd_reproduce(figure, out_dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lis::QuadratureBudgetError& e) {
        std::cerr << "numerical failure: " << e.what() << " (best estimate "
                  << fmt(e.best_estimate) << " +- " << fmt(e.error_bound) << ")\n";
        return kExitNumerical;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
