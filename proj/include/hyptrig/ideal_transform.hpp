#pragma once

#include <string>
#include <vector>

#include "hyptrig/catalog.hpp"
#include "hyptrig/geometry.hpp"
#include "hyptrig/quadrature.hpp"

namespace hyptrig {

/// The fixed positively oriented reference triple identifying the space of
/// positively oriented ideal triangles with Isom+(H^2).
class BaseTriple {
  public:
    explicit BaseTriple(IdealTriple t) : t_(t) {
        if (t_.orientation() != +1)
            throw NegativelyOriented("BaseTriple: reference triple must be positively oriented");
    }

    /// (-1, +1, inf), whose triangle is T_0.
    static BaseTriple standard() {
        return BaseTriple(IdealTriple(BoundaryPoint::finite(-1.0), BoundaryPoint::finite(1.0),
                                      BoundaryPoint::infinity()));
    }

    const IdealTriple& triple() const { return t_; }

  private:
    IdealTriple t_;
};

/// The ideal triangle transform at g: integral of f over the g-image of the
/// base triangle. Bounded by pi * sup_norm(f) + tol.
double ideal_transform(const FunctionSpec& f, const MobiusTransform& g, const BaseTriple& base,
                       const QuadratureConfig& cfg);

struct TransformRow {
    MobiusTransform g;
    double value = 0.0;
    double error_estimate = 0.0;
    std::string error;  // nonempty when the row failed
};

/// One transform evaluation per isometry, in input order. A failing row
/// records its error message and does not abort the table. Throws EmptyInput
/// for an empty list.
std::vector<TransformRow> transform_table(const FunctionSpec& f,
                                          const std::vector<MobiusTransform>& isometries,
                                          const BaseTriple& base, const QuadratureConfig& cfg);

}  // namespace hyptrig
