#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hyptrig/report.hpp"

using namespace hyptrig;
namespace fs = std::filesystem;

namespace {

#ifndef HYPTRIG_BIN_PATH
#define HYPTRIG_BIN_PATH ""
#endif

std::string binary_path() {
    if (const char* env = std::getenv("HYPTRIG_BIN")) return env;
    return HYPTRIG_BIN_PATH;
}

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the CLI, capturing stdout; exit code from the shell.
RunResult run_cli(const std::string& args) {
    const std::string bin = binary_path();
    REQUIRE(!bin.empty());
    const fs::path tmp = fs::temp_directory_path() / "hyptrig_cli_out.txt";
    const std::string cmd = "'" + bin + "' " + args + " > '" + tmp.string() + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = -1;
    if (status != -1) code = WEXITSTATUS(status);
    return RunResult{code, ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("double formatting round-trips 17 significant digits") {
    CHECK(fmt17(0.0) == "0");
    CHECK(fmt17(3.5) == "3.5");
    const double v = 3.141592653589793;
    CHECK(std::stod(fmt17(v)) == v);
    const double tiny = 1.2345678901234567e-11;
    CHECK(std::stod(fmt17(tiny)) == tiny);
}

TEST_CASE("zero scan CSV layout") {
    ZeroScanReport rep;
    rep.points.push_back({1.0, -2.0, 0.5, 0.25});
    std::ostringstream os;
    write_zero_scan_csv(os, rep);
    CHECK(os.str() == "re_s,im_s,abs_F,abs_Fbb\n1,-2,0.5,0.25\n");
}

TEST_CASE("transform CSV layout") {
    std::vector<TransformRow> rows;
    rows.push_back(TransformRow{MobiusTransform::identity(), 3.25, 1e-9, {}});
    rows.push_back(TransformRow{MobiusTransform::identity(), 0.0, 0.0, "boom"});
    std::ostringstream os;
    write_transform_csv(os, rows);
    const std::string text = os.str();
    CHECK(text.find("a,b,c,d,value,error_estimate\n") == 0);
    CHECK(text.find("1,0,0,1,3.25,") != std::string::npos);
    CHECK(text.find("# row failed: boom") != std::string::npos);
    CHECK(text.find("nan,nan") != std::string::npos);
}

TEST_CASE("gamma and cocycle reports are valid JSON with the required fields") {
    GammaReport g;
    g.seed = 7;
    g.checks.push_back({"functional_equation", 1e-12, 1e-10, true});
    g.pass = true;
    const auto gj = nlohmann::json::parse(gamma_report_json(g));
    CHECK(gj["seed"] == 7);
    CHECK(gj["identities"][0]["identity"] == "functional_equation");
    CHECK(gj["identities"][0].contains("residual"));
    CHECK(gj["identities"][0].contains("bound"));
    CHECK(gj["pass"] == true);

    CocycleReport c;
    c.seed = 9;
    c.n_samples = 3;
    c.tol = 1e-6;
    c.max_defect = 1e-7;
    c.mean_defect = 5e-8;
    c.pass = true;
    const auto cj = nlohmann::json::parse(cocycle_report_json(c));
    for (const char* key : {"seed", "n_samples", "max_defect", "mean_defect", "tol"})
        CHECK(cj.contains(key));
}

TEST_CASE("cli: verify-gamma") {
    CHECK(run_cli("verify-gamma").exit_code == 0);
    const auto rep = run_cli("verify-gamma --seed 5");
    CHECK(rep.exit_code == 0);
    const auto j = nlohmann::json::parse(rep.output);
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 5);
    // negative control: a 1e-6 perturbation must be detected
    CHECK(run_cli("verify-gamma --inject-gamma-fault").exit_code == 1);
}

TEST_CASE("cli: zero-scan exit codes and determinism") {
    const fs::path out1 = fs::temp_directory_path() / "hyptrig_scan1.csv";
    const fs::path out2 = fs::temp_directory_path() / "hyptrig_scan2.csv";
    const std::string window = "--re-min 0.5 --re-max 1.5 --im-min -0.5 --im-max 0.5 --step 0.1";
    const auto r1 = run_cli("zero-scan " + window + " --out '" + out1.string() + "'");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("min_joint=") == 0);
    const auto r2 = run_cli("zero-scan " + window + " --out '" + out2.string() + "'");
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(out1).find("re_s,im_s,abs_F,abs_Fbb\n") == 0);

    CHECK(run_cli("zero-scan --step 0").exit_code == 64);
    CHECK(run_cli("zero-scan --re-min -2").exit_code == 64);
    CHECK(run_cli("no-such-command").exit_code == 64);
}

TEST_CASE("cli: f-table emits the closed-form columns at b = 0") {
    const auto r = run_cli("f-table --re-list 2 --im-list 0 --b-list 0 --tol 1e-9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("re_s,im_s,b,re_F_num,im_F_num,re_F_closed,im_F_closed,abs_diff\n") == 0);
    CHECK(r.output.find("0.78539816339744") != std::string::npos);  // pi/4 twice per row

    const auto bad = run_cli("f-table --re-list \"2,-1.5\" --im-list 0 --b-list 0 --tol 1e-9");
    CHECK(bad.exit_code == 0);
    CHECK(bad.output.find("# outside P") != std::string::npos);

    // s = 0 rows are the ideal triangle area for every b
    const auto area = run_cli("f-table --re-list 0 --im-list 0 --b-list \"0,0.5,3\" --tol 1e-7");
    CHECK(area.exit_code == 0);
    int pi_rows = 0;
    std::stringstream ss(area.output);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
        // fourth column is re_F_num
        std::stringstream row(line);
        std::string field;
        for (int i = 0; i < 4; ++i) std::getline(row, field, ',');
        if (std::abs(std::stod(field) - 3.14159265358979) <= 1e-5) ++pi_rows;
    }
    CHECK(pi_rows == 3);
}

TEST_CASE("cli: transform") {
    const fs::path isos = fs::temp_directory_path() / "hyptrig_isos.txt";
    {
        std::ofstream out(isos);
        out << "# identity then a dilation\n";
        out << "1 0 0 1\n";
        out << "2 0 0 0.5\n";
    }
    const auto r = run_cli("transform --function constant --params 1 --isometries '" +
                           isos.string() + "' --tol 1e-6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("a,b,c,d,value,error_estimate\n") == 0);
    CHECK(r.output.find("3.14159") != std::string::npos);

    const auto odd = run_cli("transform --function odd_in_x --isometries '" + isos.string() +
                             "' --tol 1e-6");
    CHECK(odd.exit_code == 0);
    {
        // identity row of an odd function vanishes
        std::stringstream ss(odd.output);
        std::string line, field;
        std::getline(ss, line);  // header
        std::getline(ss, line);
        std::stringstream row(line);
        for (int i = 0; i < 5; ++i) std::getline(row, field, ',');
        CHECK(std::abs(std::stod(field)) <= 1e-5);
    }

    CHECK(run_cli("transform --function nope --isometries '" + isos.string() + "'").exit_code ==
          64);

    const fs::path bad = fs::temp_directory_path() / "hyptrig_bad.txt";
    {
        std::ofstream out(bad);
        out << "1 0 0 1\n";
        out << "0.5 oops\n";
    }
    const auto rb = run_cli("transform --function constant --isometries '" + bad.string() + "'");
    CHECK(rb.exit_code == 64);
}

TEST_CASE("cli: cocycle-check") {
    const fs::path out1 = fs::temp_directory_path() / "hyptrig_coc1.json";
    const fs::path out2 = fs::temp_directory_path() / "hyptrig_coc2.json";
    const auto r1 =
        run_cli("cocycle-check --n-samples 5 --seed 11 --tol 1e-5 --out '" + out1.string() + "'");
    CHECK(r1.exit_code == 0);
    const auto r2 =
        run_cli("cocycle-check --n-samples 5 --seed 11 --tol 1e-5 --out '" + out2.string() + "'");
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));  // same seed, byte-identical report
    const auto j = nlohmann::json::parse(slurp(out1));
    CHECK(j["n_samples"] == 5);
    CHECK(j["pass"] == true);

    CHECK(run_cli("cocycle-check --n-samples 0").exit_code == 64);
}
