#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyptrig/catalog.hpp"
#include "hyptrig/cocycle.hpp"
#include "hyptrig/helgason.hpp"
#include "hyptrig/ideal_transform.hpp"
#include "hyptrig/report.hpp"
#include "hyptrig/special_functions.hpp"
#include "hyptrig/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitScanContradiction = 2;
constexpr int kExitUsage = 64;

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        const double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw hyptrig::Error("malformed number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw hyptrig::Error("empty list");
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hyptrig::Error("cannot open output file '" + path + "'");
    out << content;
}

// Isometry list file: one "a b c d" per line, '#' comments and blank lines
// ignored. Parse failures report the line number.
std::vector<hyptrig::MobiusTransform> read_isometry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hyptrig::Error("cannot open isometry file '" + path + "'");
    std::vector<hyptrig::MobiusTransform> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::stringstream ss(line);
        double a, b, c, d;
        std::string extra;
        if (!(ss >> a >> b >> c >> d) || (ss >> extra)) {
            throw hyptrig::Error("isometry file '" + path + "' line " + std::to_string(lineno) +
                                 ": expected four reals a b c d");
        }
        try {
            out.emplace_back(a, b, c, d);
        } catch (const hyptrig::SingularTransform& e) {
            throw hyptrig::Error("isometry file '" + path + "' line " + std::to_string(lineno) +
                                 ": " + e.what());
        }
    }
    if (out.empty()) throw hyptrig::Error("isometry file '" + path + "' contains no isometries");
    return out;
}

int cmd_verify_gamma(std::uint64_t seed, double fault, const std::string& out_path) {
    const hyptrig::GammaReport rep = hyptrig::run_gamma_suite(seed, fault);
    write_output(out_path, hyptrig::gamma_report_json(rep));
    if (!rep.pass) {
        for (const auto& c : rep.checks)
            if (!c.pass) {
                std::cerr << "verification failed: " << c.identity << " residual " << c.residual
                          << " above bound " << c.bound << "\n";
                break;
            }
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_f_table(const std::vector<double>& re_list, const std::vector<double>& im_list,
                const std::vector<double>& b_list, double tol, const std::string& out_path) {
    hyptrig::QuadratureConfig cfg;
    cfg.tol = tol;
    cfg.y_cap = 1e6;
    std::vector<hyptrig::FTableRow> rows;
    for (double b : b_list)
        for (double re : re_list)
            for (double im : im_list) {
                hyptrig::FTableRow row{};
                row.re_s = re;
                row.im_s = im;
                row.b = b;
                if (!(re > -1.0)) {
                    row.outside_p = true;
                    rows.push_back(row);
                    continue;
                }
                const hyptrig::SpectralParameter s(re, im);
                row.f_num = hyptrig::F_numeric(s, b, cfg);
                if (b == 0.0) {
                    row.f_closed = hyptrig::F_closed(s);
                    row.has_closed = true;
                }
                rows.push_back(row);
            }
    std::ostringstream os;
    hyptrig::write_f_table_csv(os, rows);
    write_output(out_path, os.str());
    return kExitOk;
}

int cmd_zero_scan(double re_min, double re_max, double im_min, double im_max, double step,
                  const std::string& out_path) {
    const hyptrig::ZeroScanReport rep =
        hyptrig::wiener_zero_scan(re_min, re_max, im_min, im_max, step);
    std::ostringstream os;
    hyptrig::write_zero_scan_csv(os, rep);
    write_output(out_path, os.str());
    std::cout << "min_joint=" << hyptrig::fmt17(rep.min_joint)
              << " argmin_re=" << hyptrig::fmt17(rep.argmin.real())
              << " argmin_im=" << hyptrig::fmt17(rep.argmin.imag())
              << " joint_near_zeros=" << rep.joint_near_zeros.size()
              << " spot_check_max_rel=" << hyptrig::fmt17(rep.spot_check_max_rel) << "\n";
    if (!rep.joint_near_zeros.empty() || !(rep.min_joint > rep.joint_threshold)) {
        std::cerr << "joint near-zero detected: the scan contradicts the no-common-zero "
                     "certificate\n";
        return kExitScanContradiction;
    }
    return kExitOk;
}

int cmd_transform(const std::string& function_name, const std::vector<double>& params,
                  const std::string& isometry_path, double tol, const std::string& out_path) {
    const auto spec = hyptrig::FunctionSpec::by_name(function_name, params);
    if (!spec) throw hyptrig::Error("unknown function '" + function_name + "'");
    const auto isometries = read_isometry_file(isometry_path);
    hyptrig::QuadratureConfig cfg;
    cfg.tol = tol;
    const auto rows =
        hyptrig::transform_table(*spec, isometries, hyptrig::BaseTriple::standard(), cfg);
    std::ostringstream os;
    hyptrig::write_transform_csv(os, rows);
    write_output(out_path, os.str());
    return kExitOk;
}

int cmd_cocycle_check(int n_samples, std::uint64_t seed, double tol, const std::string& out_path) {
    hyptrig::QuadratureConfig cfg;
    cfg.tol = tol;
    const hyptrig::CocycleReport rep = hyptrig::run_cocycle_suite(n_samples, seed, cfg);
    write_output(out_path, hyptrig::cocycle_report_json(rep));
    if (!rep.pass) {
        std::cerr << "cocycle defect " << rep.max_defect << " above 4 * tol = " << 4.0 * tol
                  << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hyptrig: numerical toolkit for the ideal triangle transform on the hyperbolic plane"};
    app.require_subcommand(1);

    std::string out_path;
    double tol = 1e-8;
    std::uint64_t seed = 42;

    auto* gamma = app.add_subcommand("verify-gamma", "Gamma identity suite (JSON report)");
    bool inject_fault = false;
    gamma->add_option("--seed", seed, "random seed");
    gamma->add_option("--out", out_path, "output file (default stdout)");
    gamma->add_flag("--inject-gamma-fault", inject_fault,
                    "negative control: perturb one side of each identity by 1e-6");

    auto* ftable = app.add_subcommand("f-table", "table of F(s, b): quadrature vs closed form");
    std::string re_csv = "-0.5,0.5,1,1.5,2.5";
    std::string im_csv = "-2,0,2";
    std::string b_csv = "0";
    ftable->add_option("--re-list", re_csv, "comma-separated Re(s) values");
    ftable->add_option("--im-list", im_csv, "comma-separated Im(s) values");
    ftable->add_option("--b-list", b_csv, "comma-separated boundary parameters b");
    ftable->add_option("--tol", tol, "quadrature tolerance");
    ftable->add_option("--out", out_path, "output file (default stdout)");

    auto* scan = app.add_subcommand("zero-scan", "joint zero scan of F and its second derivative");
    double re_min = -0.9, re_max = 3.1, im_min = -12.0, im_max = 12.0, step = 0.05;
    scan->add_option("--re-min", re_min, "grid lower bound for Re(s)");
    scan->add_option("--re-max", re_max, "grid upper bound for Re(s)");
    scan->add_option("--im-min", im_min, "grid lower bound for Im(s)");
    scan->add_option("--im-max", im_max, "grid upper bound for Im(s)");
    scan->add_option("--step", step, "grid step (must be positive)");
    scan->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* transform = app.add_subcommand("transform", "ideal triangle transform table");
    std::string function_name;
    std::string params_csv;
    std::string isometry_path;
    transform->add_option("--function", function_name, "catalog function name")->required();
    transform->add_option("--params", params_csv, "comma-separated function parameters");
    transform->add_option("--isometries", isometry_path, "isometry list file (a b c d per line)")
        ->required();
    transform->add_option("--tol", tol, "quadrature tolerance");
    transform->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* cocycle = app.add_subcommand("cocycle-check", "coboundary defect suite (JSON report)");
    int n_samples = 100;
    cocycle->add_option("--n-samples", n_samples, "random quadruples per catalog function");
    cocycle->add_option("--seed", seed, "random seed");
    cocycle->add_option("--tol", tol, "quadrature tolerance (defect bound is 4 * tol)");
    cocycle->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gamma->parsed()) return cmd_verify_gamma(seed, inject_fault ? 1e-6 : 0.0, out_path);
        if (ftable->parsed())
            return cmd_f_table(parse_list(re_csv), parse_list(im_csv), parse_list(b_csv), tol,
                               out_path);
        if (scan->parsed()) {
            if (!(step > 0.0)) {
                std::cerr << "usage error: --step must be positive\n";
                return kExitUsage;
            }
            if (!(re_min > -1.0)) {
                std::cerr << "usage error: --re-min must exceed -1 (half-plane P)\n";
                return kExitUsage;
            }
            return cmd_zero_scan(re_min, re_max, im_min, im_max, step, out_path);
        }
        if (transform->parsed()) {
            try {
                std::vector<double> params;
                if (!params_csv.empty()) params = parse_list(params_csv);
                return cmd_transform(function_name, params, isometry_path, tol, out_path);
            } catch (const hyptrig::Error& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return kExitUsage;
            }
        }
        if (cocycle->parsed()) {
            if (n_samples < 1) {
                std::cerr << "usage error: --n-samples must be >= 1\n";
                return kExitUsage;
            }
            return cmd_cocycle_check(n_samples, seed, tol, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
