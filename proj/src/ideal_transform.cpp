#include "hyptrig/ideal_transform.hpp"

#include <algorithm>

#include "hyptrig/parallel.hpp"

namespace hyptrig {

namespace {

// Any bounded f satisfies |f| <= sup_norm * min{y, 1/y}^0. The cap is raised
// until the truncated horoball mass is negligible against tol, keeping the
// pi * sup_norm + tol bound meaningful for any caller configuration.
QuadratureConfig with_bounded_tail(const QuadratureConfig& cfg, const FunctionSpec& f) {
    QuadratureConfig c = cfg;
    c.tail_exponent = 0.0;
    c.tail_constant = f.sup_norm();
    c.y_cap = std::max(cfg.y_cap, 40.0 * std::max(f.sup_norm(), 1e-12) / cfg.tol);
    return c;
}

}  // namespace

double ideal_transform(const FunctionSpec& f, const MobiusTransform& g, const BaseTriple& base,
                       const QuadratureConfig& cfg) {
    const IdealTriple& t = base.triple();
    const IdealTriple image(mobius_apply_boundary(g, t.v0()), mobius_apply_boundary(g, t.v1()),
                            mobius_apply_boundary(g, t.v2()));
    const auto result = integrate_ideal_triangle(
        [&f](const Point& z) { return std::complex<double>(f(z), 0.0); }, image,
        with_bounded_tail(cfg, f));
    return result.value.real();
}

std::vector<TransformRow> transform_table(const FunctionSpec& f,
                                          const std::vector<MobiusTransform>& isometries,
                                          const BaseTriple& base, const QuadratureConfig& cfg) {
    if (isometries.empty()) throw EmptyInput("transform_table: isometry list is empty");

    std::vector<TransformRow> rows;
    rows.reserve(isometries.size());
    for (const MobiusTransform& g : isometries) {
        TransformRow row{g, 0.0, 0.0, {}};
        rows.push_back(std::move(row));
    }

    parallel_for(static_cast<long long>(rows.size()), [&](long long i) {
        TransformRow& row = rows[static_cast<size_t>(i)];
        try {
            const IdealTriple& t = base.triple();
            const IdealTriple image(mobius_apply_boundary(row.g, t.v0()),
                                    mobius_apply_boundary(row.g, t.v1()),
                                    mobius_apply_boundary(row.g, t.v2()));
            const auto result = integrate_ideal_triangle(
                [&f](const Point& z) { return std::complex<double>(f(z), 0.0); }, image,
                with_bounded_tail(cfg, f));
            row.value = result.value.real();
            row.error_estimate = result.error_estimate;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });
    return rows;
}

}  // namespace hyptrig
