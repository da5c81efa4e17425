#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyptrig/quadrature.hpp"

namespace hyptrig {

struct IdentityCheck {
    std::string identity;
    double residual;
    double bound;
    bool pass;
};

struct GammaReport {
    std::uint64_t seed = 0;
    std::vector<IdentityCheck> checks;
    bool pass = true;
};

/// Residual suite for the Gamma apparatus: functional equation and Legendre
/// duplication on 500 seeded random points, and the half-angle moment
/// identity (Beta form) against quadrature on a fixed grid. fault_scale
/// perturbs one side of each identity; nonzero values are the negative
/// control used to prove the suite can fail.
GammaReport run_gamma_suite(std::uint64_t seed = 20250801, double fault_scale = 0.0);

struct FunctionDefect {
    std::string function;
    double max_defect = 0.0;
    double mean_defect = 0.0;
};

struct CocycleReport {
    std::uint64_t seed = 0;
    int n_samples = 0;
    double tol = 0.0;
    double max_defect = 0.0;
    double mean_defect = 0.0;
    std::vector<FunctionDefect> per_function;
    bool pass = true;
};

/// Coboundary-defect suite: n_samples random boundary quadruples per catalog
/// function, Cauchy-distributed with near-coincident pairs rejected; passes
/// when every defect stays within 4 * cfg.tol.
CocycleReport run_cocycle_suite(int n_samples, std::uint64_t seed, const QuadratureConfig& cfg);

}  // namespace hyptrig
