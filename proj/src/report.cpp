#include "hyptrig/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace hyptrig {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_zero_scan_csv(std::ostream& out, const ZeroScanReport& rep) {
    out << "re_s,im_s,abs_F,abs_Fbb\n";
    for (const ZeroScanPoint& p : rep.points)
        out << fmt17(p.re) << ',' << fmt17(p.im) << ',' << fmt17(p.abs_F) << ','
            << fmt17(p.abs_Fbb) << '\n';
}

void write_transform_csv(std::ostream& out, const std::vector<TransformRow>& rows) {
    out << "a,b,c,d,value,error_estimate\n";
    for (const TransformRow& r : rows) {
        if (!r.error.empty()) {
            out << "# row failed: " << r.error << '\n';
            out << fmt17(r.g.a()) << ',' << fmt17(r.g.b()) << ',' << fmt17(r.g.c()) << ','
                << fmt17(r.g.d()) << ",nan,nan\n";
            continue;
        }
        out << fmt17(r.g.a()) << ',' << fmt17(r.g.b()) << ',' << fmt17(r.g.c()) << ','
            << fmt17(r.g.d()) << ',' << fmt17(r.value) << ',' << fmt17(r.error_estimate) << '\n';
    }
}

void write_f_table_csv(std::ostream& out, const std::vector<FTableRow>& rows) {
    out << "re_s,im_s,b,re_F_num,im_F_num,re_F_closed,im_F_closed,abs_diff\n";
    for (const FTableRow& r : rows) {
        if (r.outside_p) {
            out << "# outside P: re_s = " << fmt17(r.re_s) << '\n';
            out << fmt17(r.re_s) << ',' << fmt17(r.im_s) << ',' << fmt17(r.b)
                << ",nan,nan,nan,nan,nan\n";
            continue;
        }
        out << fmt17(r.re_s) << ',' << fmt17(r.im_s) << ',' << fmt17(r.b) << ','
            << fmt17(r.f_num.real()) << ',' << fmt17(r.f_num.imag()) << ',';
        if (r.has_closed)
            out << fmt17(r.f_closed.real()) << ',' << fmt17(r.f_closed.imag()) << ','
                << fmt17(std::abs(r.f_num - r.f_closed));
        else
            out << "nan,nan,nan";
        out << '\n';
    }
}

std::string gamma_report_json(const GammaReport& rep) {
    nlohmann::ordered_json j;
    j["seed"] = rep.seed;
    j["identities"] = nlohmann::ordered_json::array();
    for (const IdentityCheck& c : rep.checks) {
        nlohmann::ordered_json e;
        e["identity"] = c.identity;
        e["residual"] = c.residual;
        e["bound"] = c.bound;
        e["pass"] = c.pass;
        j["identities"].push_back(e);
    }
    j["pass"] = rep.pass;
    return j.dump(2) + "\n";
}

std::string cocycle_report_json(const CocycleReport& rep) {
    nlohmann::ordered_json j;
    j["seed"] = rep.seed;
    j["n_samples"] = rep.n_samples;
    j["max_defect"] = rep.max_defect;
    j["mean_defect"] = rep.mean_defect;
    j["tol"] = rep.tol;
    j["functions"] = nlohmann::ordered_json::array();
    for (const FunctionDefect& f : rep.per_function) {
        nlohmann::ordered_json e;
        e["function"] = f.function;
        e["max_defect"] = f.max_defect;
        e["mean_defect"] = f.mean_defect;
        j["functions"].push_back(e);
    }
    j["pass"] = rep.pass;
    return j.dump(2) + "\n";
}

}  // namespace hyptrig
