#pragma once

#include <string>
#include <string_view>

#include "tlim/config.hpp"
#include "tlim/study.hpp"

namespace tlim {

// Column order of the CSV report; the JSON records use the same names.
inline constexpr std::string_view kReportColumns =
    "n,logdetT_mag,logdetT_phase,logdetM_mag,logdetM_phase,ratio_re,ratio_im,abs_error,"
    "schur_residual,entry_residual,inverse_norm";

// Deterministic text rendering with 17 significant digits. CSV carries only
// the per-n table; JSON adds the limit value, Szego constants and warnings.
std::string emit_report(const ConvergenceReport& report, ReportFormat format);

// Inverse of the JSON rendering.
ConvergenceReport parse_report_json(std::string_view text);

// "%.17g"; non-finite values render as inf, -inf, nan.
std::string format_number(double value);

}  // namespace tlim
