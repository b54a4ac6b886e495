// Command-line surface: verification suites, kernel evaluation, resolvent
// application, kernel audit reports, and spectral convergence scans.
//
// Exit status: 0 success, 1 assertion/verdict failure, 2 usage or
// configuration error.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dlb/cochain_io.hpp"
#include "dlb/operators.hpp"
#include "dlb/oracle.hpp"
#include "dlb/spectral.hpp"
#include "dlb/verify.hpp"

namespace {

using dlb::Complex;

/// Complex flags are "re,im"; a bare real is accepted as "re,0".
Complex parse_complex(const std::string& text) {
    std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
        return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("lambda: expected 're,im' or a bare real");
    }
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"discrete Laplace-Beltrami calculus on the square lattice"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name = "all";
    int verify_n = 8;
    std::uint64_t seed = 1;
    int samples = 25;
    std::string verify_lambda = "-4,0";
    std::string verify_out;
    verify->add_option("--suite", suite_name, "all | calculus | spectral | green")
        ->check(CLI::IsMember({"all", "calculus", "spectral", "green"}));
    verify->add_option("--n", verify_n, "window half-width");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--samples", samples, "random samples per property");
    verify->add_option("--lambda", verify_lambda, "resolvent parameter 're,im' (green suite)");
    verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");

    // green
    auto* green = app.add_subcommand("green", "evaluate one kernel component");
    int gk = 0, gs = 0, gm = 0, gn = 0;
    std::string green_lambda;
    std::string source = "formula";
    green->add_option("k", gk)->required();
    green->add_option("s", gs)->required();
    green->add_option("m", gm)->required();
    green->add_option("n", gn)->required();
    green->add_option("--lambda", green_lambda, "resolvent parameter 're,im'")->required();
    green->add_option("--source", source, "formula | solve | fourier")
        ->check(CLI::IsMember({"formula", "solve", "fourier"}));

    // resolvent
    auto* resolvent = app.add_subcommand("resolvent", "apply the resolvent to a 0-form file");
    std::string res_in, res_out, res_lambda, res_source = "formula";
    bool res_check = false;
    resolvent->add_option("--in", res_in, "input cochain file")->required();
    resolvent->add_option("--out", res_out, "output cochain file")->required();
    resolvent->add_option("--lambda", res_lambda, "resolvent parameter 're,im'")->required();
    resolvent->add_option("--source", res_source, "formula | oracle")
        ->check(CLI::IsMember({"formula", "oracle"}));
    resolvent->add_flag("--check", res_check, "apply (-Delta^c - lambda) and report the residual");

    // report
    auto* report_cmd = app.add_subcommand("report", "audit the closed-form kernel against the oracles");
    std::string rep_lambda, rep_out, rep_csv;
    int rep_w = 10;
    double rep_tol = 1e-8;
    int rep_ntrunc = 64, rep_quad = 64;
    double rep_solver_tol = 1e-12;
    report_cmd->add_option("--lambda", rep_lambda, "resolvent parameter 're,im'")->required();
    report_cmd->add_option("--w", rep_w, "grid half-width");
    report_cmd->add_option("--tol", rep_tol, "closed-form vs oracle agreement tolerance");
    report_cmd->add_option("--n-trunc", rep_ntrunc, "oracle truncation half-width");
    report_cmd->add_option("--quadrature-points", rep_quad, "oracle quadrature start resolution");
    report_cmd->add_option("--solver-tol", rep_solver_tol, "oracle solver tolerance");
    report_cmd->add_option("--out", rep_out, "write the JSON report here instead of stdout");
    report_cmd->add_option("--csv", rep_csv, "also write a flat k,s,|residual|,agree CSV");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "operator-norm convergence table");
    std::vector<int> spec_ns{2, 4, 8, 16, 32};
    int spec_degree = 0;
    int spec_max_iter = 20000;
    double spec_tol = 1e-11;
    spectrum->add_option("--n", spec_ns, "window half-widths");
    spectrum->add_option("--degree", spec_degree, "form degree");
    spectrum->add_option("--max-iter", spec_max_iter, "power-iteration cap");
    spectrum->add_option("--tol", spec_tol, "Rayleigh-increment stopping tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) {
        std::vector<dlb::SuiteResult> suites;
        dlb::OracleConfig config;
        if (suite_name == "all" || suite_name == "calculus")
            suites.push_back(dlb::run_calculus_suite(verify_n, seed, samples));
        if (suite_name == "all" || suite_name == "spectral")
            suites.push_back(dlb::run_spectral_suite(verify_n, seed, samples));
        if (suite_name == "all" || suite_name == "green")
            suites.push_back(dlb::run_green_suite(parse_complex(verify_lambda), seed, config));
        std::string doc = dlb::suites_to_json(suites);
        if (verify_out.empty())
            std::cout << doc;
        else
            write_text(verify_out, doc);
        for (const auto& suite : suites)
            if (!suite.all_pass()) return 1;
        return 0;
    }

    if (green->parsed()) {
        Complex lambda = parse_complex(green_lambda);
        dlb::ResolventContext ctx = dlb::make_context(lambda);
        dlb::OracleConfig config;
        Complex value;
        if (source == "formula") {
            value = dlb::green_component(gk, gs, gm, gn, ctx);
        } else if (source == "fourier") {
            value = dlb::fourier_green(gk - gm, gs - gn, lambda, config);
        } else {
            dlb::Cochain column = dlb::truncated_resolvent_solve({0, 0}, ctx, config);
            value = column.at(0, {gk - gm, gs - gn});
        }
        std::cout << fmt17(value.real()) << " " << fmt17(value.imag()) << "\n";
        return 0;
    }

    if (resolvent->parsed()) {
        Complex lambda = parse_complex(res_lambda);
        dlb::ResolventContext ctx = dlb::make_context(lambda);
        std::optional<dlb::Cochain> loaded;
        try {
            loaded = dlb::load_cochain(res_in);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        dlb::Cochain phi = std::move(*loaded);
        if (phi.degree() != 0) throw std::domain_error("resolvent: input must be a 0-form");
        dlb::OracleConfig config;
        dlb::Cochain image = (res_source == "oracle")
                                 ? dlb::resolvent_apply(phi, ctx, dlb::solve_column_kernel(ctx, config))
                                 : dlb::resolvent_apply(phi, ctx);
        dlb::save_cochain(image, res_out);
        if (res_check) {
            dlb::Cochain recovered = dlb::lincomb(Complex(1.0, 0.0), dlb::laplacian(image),
                                                  -lambda, image);
            double residual = dlb::max_abs_diff(dlb::crop(recovered, phi.window()),
                                                dlb::crop(phi, phi.window()));
            std::cout << "max_recovery_residual " << fmt17(residual) << "\n";
        }
        return 0;
    }

    if (report_cmd->parsed()) {
        Complex lambda = parse_complex(rep_lambda);
        dlb::ResolventContext ctx = dlb::make_context(lambda);
        dlb::OracleConfig config{rep_ntrunc, rep_quad, rep_solver_tol, 10000};
        dlb::ResidualReport report = dlb::compare_kernels(ctx, rep_w, rep_tol, config);
        std::string doc = dlb::report_to_string(report);
        if (rep_out.empty())
            std::cout << doc;
        else
            write_text(rep_out, doc);
        if (!rep_csv.empty()) {
            std::ofstream csv(rep_csv, std::ios::binary);
            if (!csv) throw std::runtime_error("cannot open CSV path: " + rep_csv);
            dlb::write_report_csv(report, csv);
        }
        if (!report.oracles_valid) {
            std::cerr << "report: oracle mutual disagreement beyond 1e-8; report marked invalid\n";
            return 1;
        }
        return 0;
    }

    if (spectrum->parsed()) {
        std::cout << "n,estimate,iterations,final_increment\n";
        for (int nn : spec_ns) {
            dlb::SpectralEstimate est =
                dlb::operator_norm_estimate(spec_degree, nn, spec_max_iter, spec_tol);
            std::cout << nn << "," << fmt17(est.estimate) << "," << est.iterations << ","
                      << fmt17(est.final_increment) << "\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
