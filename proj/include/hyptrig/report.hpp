#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyptrig/helgason.hpp"
#include "hyptrig/ideal_transform.hpp"
#include "hyptrig/suites.hpp"

namespace hyptrig {

/// Doubles rendered with 17 significant digits and '.' decimal separator.
std::string fmt17(double v);

/// Columns re_s, im_s, abs_F, abs_Fbb with a header row.
void write_zero_scan_csv(std::ostream& out, const ZeroScanReport& rep);

/// Columns a, b, c, d, value, error_estimate; failing rows become '#' comments.
void write_transform_csv(std::ostream& out, const std::vector<TransformRow>& rows);

struct FTableRow {
    double re_s, im_s, b;
    std::complex<double> f_num;
    std::complex<double> f_closed;  // meaningful only when has_closed
    bool has_closed = false;
    bool outside_p = false;
};

/// Columns re_s, im_s, b, re_F_num, im_F_num, re_F_closed, im_F_closed,
/// abs_diff; closed-form columns are nan away from b = 0, and rows outside P
/// are emitted as nan rows after a '#' diagnostic comment.
void write_f_table_csv(std::ostream& out, const std::vector<FTableRow>& rows);

std::string gamma_report_json(const GammaReport& rep);
std::string cocycle_report_json(const CocycleReport& rep);

}  // namespace hyptrig
