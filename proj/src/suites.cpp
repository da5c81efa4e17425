#include "hyptrig/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyptrig/catalog.hpp"
#include "hyptrig/cocycle.hpp"
#include "hyptrig/parallel.hpp"
#include "hyptrig/rng.hpp"
#include "hyptrig/special_functions.hpp"

namespace hyptrig {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

bool away_from_poles(cplx z) {
    for (cplx w : {z, z + 0.5, 2.0 * z, z + 1.0}) {
        if (std::abs(w.imag()) > 0.05) continue;
        const double n = std::round(w.real());
        if (n <= 0.0 && std::abs(w.real() - n) < 0.05) return false;
    }
    return true;
}

// int_0^{pi/2} sin^s1 cos^s2, split at pi/4 with the folded substitution so
// each half sees its singular endpoint at 0.
cplx sin_cos_moment(double s1, double s2, double tol) {
    auto log_cos = [](double x) {
        const double s = std::sin(0.5 * x);
        return std::log1p(-2.0 * s * s);
    };
    auto left = [&](double th) -> cplx {
        return std::exp(s1 * std::log(std::sin(th)) + s2 * log_cos(th));
    };
    auto right = [&](double t) -> cplx {
        return std::exp(s1 * log_cos(t) + s2 * std::log(std::sin(t)));
    };
    return integrate_interval(left, 0.0, kPi / 4.0, 0.5 * tol).value +
           integrate_interval(right, 0.0, kPi / 4.0, 0.5 * tol).value;
}

}  // namespace

GammaReport run_gamma_suite(std::uint64_t seed, double fault_scale) {
    GammaReport rep;
    rep.seed = seed;
    Rng rng(seed);
    const double fault = 1.0 + fault_scale;

    std::vector<cplx> zs;
    while (zs.size() < 500) {
        const cplx z(rng.uniform(-5.0, 10.0), rng.uniform(-10.0, 10.0));
        if (away_from_poles(z)) zs.push_back(z);
    }

    double functional = 0.0;
    double duplication = 0.0;
    const double sqrt_pi = std::sqrt(kPi);
    for (cplx z : zs) {
        const cplx g1 = gamma_complex(z + 1.0);
        functional = std::max(functional, std::abs(g1 - fault * z * gamma_complex(z)) / std::abs(g1));
        const cplx g2 = gamma_complex(2.0 * z);
        const cplx lhs = fault * gamma_complex(z) * gamma_complex(z + 0.5);
        const cplx rhs = std::exp((1.0 - 2.0 * z) * std::numbers::ln2) * sqrt_pi * g2;
        duplication = std::max(duplication, std::abs(lhs - rhs) / std::abs(g2));
    }
    rep.checks.push_back({"functional_equation", functional, 1e-10, functional <= 1e-10});
    rep.checks.push_back({"legendre_duplication", duplication, 1e-9, duplication <= 1e-9});

    const std::vector<double> grid = {-0.8, -0.4, 0.0, 0.6, 1.0, 1.7, 2.5, 3.3, 3.9};
    std::vector<double> beta_res(grid.size() * grid.size(), 0.0);
    parallel_for(static_cast<long long>(beta_res.size()), [&](long long k) {
        const double s1 = grid[static_cast<size_t>(k) / grid.size()];
        const double s2 = grid[static_cast<size_t>(k) % grid.size()];
        const cplx quad = sin_cos_moment(s1, s2, 1e-10);
        const cplx closed = fault * beta_gamma_ratio(s1, s2);
        beta_res[static_cast<size_t>(k)] = std::abs(quad - closed);
    });
    const double beta = *std::max_element(beta_res.begin(), beta_res.end());
    rep.checks.push_back({"beta_identity", beta, 1e-8, beta <= 1e-8});

    rep.pass = true;
    for (const IdentityCheck& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CocycleReport run_cocycle_suite(int n_samples, std::uint64_t seed, const QuadratureConfig& cfg) {
    if (n_samples < 1) throw EmptyInput("run_cocycle_suite: n_samples must be >= 1");

    CocycleReport rep;
    rep.seed = seed;
    rep.n_samples = n_samples;
    rep.tol = cfg.tol;

    // Quadruples drawn once, shared by every catalog function.
    Rng rng(seed);
    std::vector<BoundaryQuadruple> quads;
    while (static_cast<int>(quads.size()) < n_samples) {
        double v[4];
        for (double& x : v) x = rng.cauchy();
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (std::abs(v[i] - v[j]) < 1e-3) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        quads.push_back(BoundaryQuadruple{BoundaryPoint::finite(v[0]), BoundaryPoint::finite(v[1]),
                                          BoundaryPoint::finite(v[2]),
                                          BoundaryPoint::finite(v[3])});
    }

    const std::vector<FunctionSpec> catalog = {
        FunctionSpec::constant(1.0),
        FunctionSpec::odd_in_x(),
        FunctionSpec::dilation_invariant(),
        FunctionSpec::gaussian_bump(),
        FunctionSpec::plane_wave_real_part(1.0, 0.0),
    };

    for (const FunctionSpec& f : catalog) {
        std::vector<double> defects(quads.size(), 0.0);
        parallel_for(static_cast<long long>(quads.size()), [&](long long i) {
            defects[static_cast<size_t>(i)] =
                coboundary_defect(f, quads[static_cast<size_t>(i)], cfg);
        });
        FunctionDefect fd;
        fd.function = f.name();
        double sum = 0.0;
        for (double d : defects) {
            fd.max_defect = std::max(fd.max_defect, d);
            sum += d;
        }
        fd.mean_defect = sum / static_cast<double>(defects.size());
        rep.per_function.push_back(fd);
        rep.max_defect = std::max(rep.max_defect, fd.max_defect);
        rep.mean_defect += fd.mean_defect;
    }
    rep.mean_defect /= static_cast<double>(rep.per_function.size());
    rep.pass = rep.max_defect <= 4.0 * cfg.tol;
    return rep;
}

}  // namespace hyptrig
