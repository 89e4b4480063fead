#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hermax/airy.hpp"
#include "hermax/certificates.hpp"
#include "hermax/envelope.hpp"
#include "hermax/verify.hpp"
#include "hermax/zeros.hpp"

namespace {

// 15 significant digits, fixed formatting for byte-stable CSV/JSON
std::string g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

struct SweepConfig {
    std::int64_t k_min = 6;
    std::int64_t k_max = 100;
    std::int64_t stride = 1;
    std::string format = "csv";
    double rel_tol = hermax::kDefaultRelTol;
    bool parallel = false;
};

struct SweepRow {
    std::int64_t k;
    double ratio;
    double lower_over_Ck;
    double upper_over_Ck;  // NaN for k < 6
    double omega_offset;
};

SweepRow sweep_row(std::int64_t k, double tol) {
    const hermax::EnvelopeReport r = hermax::compute_Mk(k, tol);
    const double tk = 2.0 * static_cast<double>(k);
    SweepRow row;
    row.k = k;
    row.ratio = r.ratio_Mk_Ck;
    row.lower_over_Ck = 27.0 / 61.0;
    row.upper_over_Ck = k >= 6 ? hermax::theorem1_bounds(k).upper_over_Ck
                               : std::nan("");
    row.omega_offset = (std::sqrt(tk) - r.omega) * std::pow(tk, 1.0 / 6.0);
    return row;
}

int cmd_report(std::int64_t k, double tol) {
    if (k < 1) {
        std::cerr << "report: k must be >= 1\n";
        return 2;
    }
    const hermax::EnvelopeReport r = hermax::compute_Mk(k, tol);
    std::cout << "{\n"
              << "  \"k\": " << r.k << ",\n"
              << "  \"ln_Ck\": " << g15(r.ln_Ck) << ",\n"
              << "  \"omega\": " << g15(r.omega) << ",\n"
              << "  \"omega_upper\": " << g15(r.omega_upper) << ",\n"
              << "  \"log:Mk\": " << g15(r.ln_Mk) << ",\n"
              << "  \"log:lower\": " << g15(r.ln_lower) << ",\n"
              << "  \"log:upper\": "
              << (k >= 6 ? g15(r.ln_upper) : std::string("null")) << ",\n"
              << "  \"ratio\": " << g15(r.ratio_Mk_Ck) << ",\n"
              << "  \"sandwich_ok\": "
              << (r.sandwich == hermax::SandwichStatus::not_applicable
                      ? "null"
                      : (r.sandwich == hermax::SandwichStatus::pass ? "true" : "false"))
              << "\n}\n";
    return 0;
}

int cmd_sweep(const SweepConfig& cfg) {
    if (cfg.k_min < 1 || cfg.k_min > cfg.k_max || cfg.stride < 1) {
        std::cerr << "sweep: invalid range\n";
        return 2;
    }
    std::vector<std::int64_t> ks;
    for (std::int64_t k = cfg.k_min; k <= cfg.k_max; k += cfg.stride) ks.push_back(k);
    std::vector<SweepRow> rows(ks.size());

    if (cfg.parallel && ks.size() > 1) {
        const unsigned n_workers =
            std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                               static_cast<unsigned>(ks.size()));
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < n_workers; ++w)
            workers.emplace_back([&, w] {
                for (size_t i = w; i < ks.size(); i += n_workers)
                    rows[i] = sweep_row(ks[i], cfg.rel_tol);
            });
        for (auto& t : workers) t.join();
    } else {
        for (size_t i = 0; i < ks.size(); ++i) rows[i] = sweep_row(ks[i], cfg.rel_tol);
    }

    if (cfg.format == "json") {
        std::cout << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& r = rows[i];
            std::cout << "  {\"k\": " << r.k << ", \"ratio\": " << g15(r.ratio)
                      << ", \"lower_over_Ck\": " << g15(r.lower_over_Ck)
                      << ", \"upper_over_Ck\": "
                      << (std::isnan(r.upper_over_Ck) ? std::string("null")
                                                      : g15(r.upper_over_Ck))
                      << ", \"omega_offset\": " << g15(r.omega_offset) << "}"
                      << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        std::cout << "]\n";
    } else {
        std::cout << "k,ratio,lower_over_Ck,upper_over_Ck,omega_offset\n";
        for (const SweepRow& r : rows)
            std::cout << r.k << "," << g15(r.ratio) << "," << g15(r.lower_over_Ck)
                      << "," << g15(r.upper_over_Ck) << "," << g15(r.omega_offset)
                      << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<hermax::Check> checks;
    try {
        checks = hermax::verify_suite(suite);
    } catch (const std::domain_error& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }
    bool all_ok = true;
    for (const auto& c : checks) {
        if (c.pass) {
            std::cout << c.name << " OK";
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        } else {
            all_ok = false;
            std::cout << c.name << " FAIL";
            if (!c.detail.empty()) std::cout << " (first counterexample: " << c.detail << ")";
            std::cout << "\n";
        }
    }
    std::cout << (all_ok ? "verify: all checks passed" : "verify: FAILURES present")
              << "\n";
    return all_ok ? 0 : 1;
}

int cmd_plotdata(const std::string& quantity, std::int64_t k,
                 std::int64_t k_min, std::int64_t k_max, std::int64_t stride) {
    if (quantity == "envelope") {
        if (k < 1) {
            std::cerr << "plotdata: envelope requires --k >= 1\n";
            return 2;
        }
        const double lnC = hermax::log_Ck(k);
        const double edge = std::sqrt(2.0 * static_cast<double>(k) + 1.0);
        std::cout << "x,ln_weighted_square,ln_upper_envelope,ln_lower_envelope\n";
        for (int i = 0; i < 400; ++i) {
            const double x = edge * i / 399.0;
            const double y = hermax::y_of(k, x);
            const hermax::HermiteState st = hermax::eval_weighted(k, x);
            const double lnw = st.psi_k == 0.0 ? -INFINITY
                                               : hermax::ln_weighted_square(st);
            double up = std::nan(""), lo = std::nan("");
            if (y >= 2.0 && y <= 2.0 * static_cast<double>(k)) {
                const double lnF = hermax::ln_envelope_F(k, y);
                const double lnG = hermax::ln_envelope_G(k, y);
                up = lnC + lnF + lnG;
                lo = lnC + lnF - lnG;
            }
            std::cout << g15(x) << "," << g15(lnw) << "," << g15(up) << ","
                      << g15(lo) << "\n";
        }
        return 0;
    }
    if (quantity == "ratio") {
        if (k_min < 1 || k_min > k_max || stride < 1) {
            std::cerr << "plotdata: invalid range\n";
            return 2;
        }
        std::cout << "k,ratio\n";
        for (std::int64_t kk = k_min; kk <= k_max; kk += stride)
            std::cout << kk << "," << g15(hermax::compute_Mk(kk).ratio_Mk_Ck) << "\n";
        return 0;
    }
    if (quantity == "zero-bounds") {
        if (k_min < 3 || k_min > k_max || stride < 1) {
            std::cerr << "plotdata: zero-bounds requires 3 <= k-min <= k-max\n";
            return 2;
        }
        std::cout << "k,lower,x_kk,upper\n";
        for (std::int64_t kk = k_min; kk <= k_max; kk += stride) {
            const hermax::ZeroBounds b = hermax::largest_zero_bounds(kk);
            std::cout << kk << "," << g15(b.lower) << ","
                      << g15(hermax::find_largest_zero(kk)) << "," << g15(b.upper)
                      << "\n";
        }
        return 0;
    }
    std::cerr << "plotdata: unknown quantity " << quantity << "\n";
    return 2;
}

int cmd_certify() {
    using namespace hermax;
    const MultiPoly A = derive_monotonicity_numerator(MonotoneVariant::v1);
    const MultiPoly B = derive_monotonicity_numerator(MonotoneVariant::v2);
    std::cout << "A(k,y) [deg_k=" << A.degree(Var::k) << ", deg_y=" << A.degree(Var::y)
              << "]: " << A.to_string() << "\n\n";
    std::cout << "B(k,y) [deg_k=" << B.degree(Var::k) << ", deg_y=" << B.degree(Var::y)
              << "]: " << B.to_string() << "\n\n";
    const Certificate certA =
        certify_shift_positivity(A, {{Var::k, Rational(2)}, {Var::y, Rational(2)}});
    std::cout << certA.to_text() << "\n";
    const Certificate certB = certify_v2_with_reparam();
    std::cout << certB.to_text() << "\n";
    const LaguerreCubic lc = build_U();
    std::cout << "U(t,x,q): " << lc.U.to_string() << "\n\n";
    std::cout << "U(x,x,q): " << lc.u_cubic.to_string() << "\n";
    return certA.pass && certB.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp envelopes, extreme zeros, and positivity certificates "
                 "for weighted Hermite polynomials"};
    app.require_subcommand(1);

    std::int64_t k = 0, k_min = 0, k_max = 0, stride = 1;
    double tol = hermax::kDefaultRelTol;
    std::string format = "csv", suite = "all", quantity;
    bool parallel = false;

    auto* report = app.add_subcommand("report", "per-k envelope report as JSON");
    report->add_option("--k", k, "degree")->required();
    report->add_option("--tol", tol, "solver relative tolerance");

    auto* sweep = app.add_subcommand("sweep", "ratio table over a k range");
    sweep->add_option("--k-min", k_min, "first degree")->required();
    sweep->add_option("--k-max", k_max, "last degree")->required();
    sweep->add_option("--stride", stride, "step between degrees");
    sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--tol", tol, "solver relative tolerance");
    sweep->add_flag("--parallel", parallel, "fan rows out across threads");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "all|bounds|zeros|certificates|airy")
        ->check(CLI::IsMember({"all", "bounds", "zeros", "certificates", "airy"}));

    auto* plotdata = app.add_subcommand("plotdata", "CSV columns for external plotting");
    plotdata->add_option("--quantity", quantity, "envelope|ratio|zero-bounds")
        ->required()
        ->check(CLI::IsMember({"envelope", "ratio", "zero-bounds"}));
    plotdata->add_option("--k", k, "degree (envelope)");
    plotdata->add_option("--k-min", k_min, "first degree (ranges)");
    plotdata->add_option("--k-max", k_max, "last degree (ranges)");
    plotdata->add_option("--stride", stride, "step between degrees");

    auto* certify = app.add_subcommand("certify", "emit positivity certificates");
    (void)certify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!(tol > 0.0 && tol <= 1e-3)) {
        std::cerr << "tol must lie in (0, 1e-3]\n";
        return 2;
    }

    try {
        if (report->parsed()) return cmd_report(k, tol);
        if (sweep->parsed())
            return cmd_sweep({k_min, k_max, stride, format, tol, parallel});
        if (verify->parsed()) return cmd_verify(suite);
        if (plotdata->parsed()) return cmd_plotdata(quantity, k, k_min, k_max, stride);
        if (certify->parsed()) return cmd_certify();
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
