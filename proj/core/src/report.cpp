#include "tlim/report.hpp"

#include <fmt/core.h>

#include <cmath>
#include <json.hpp>
#include <limits>

#include "tlim/errors.hpp"

namespace tlim {
namespace {

using nlohmann::json;

std::string optional_csv(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

// JSON has no literal for infinities; a singular log-magnitude becomes null.
std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_optional(const std::optional<double>& v) {
  return v ? json_number(*v) : "null";
}

std::string emit_csv(const ConvergenceReport& report) {
  std::string out(kReportColumns);
  out += '\n';
  for (const auto& r : report.records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.n,
                       format_number(r.logdet_t.log_magnitude), format_number(r.logdet_t.phase),
                       format_number(r.logdet_m.log_magnitude), format_number(r.logdet_m.phase),
                       format_number(r.ratio.real()), format_number(r.ratio.imag()),
                       format_number(r.abs_error), optional_csv(r.schur_residual),
                       optional_csv(r.entry_residual), optional_csv(r.inverse_norm));
  }
  return out;
}

std::string emit_json(const ConvergenceReport& report) {
  std::string out = "{\n";
  out += fmt::format("  \"truncation\": {},\n", report.truncation);
  out += fmt::format("  \"limit_re\": {},\n", json_number(report.limit_value.real()));
  out += fmt::format("  \"limit_im\": {},\n", json_number(report.limit_value.imag()));
  out += fmt::format("  \"factor_residual\": {},\n", json_number(report.factor_residual));
  if (report.szego) {
    const auto& s = *report.szego;
    out += fmt::format(
        "  \"szego\": {{\"G_re\": {}, \"G_im\": {}, \"E_re\": {}, \"E_im\": {}, "
        "\"series_tail\": {}}},\n",
        json_number(s.g.real()), json_number(s.g.imag()), json_number(s.e.real()),
        json_number(s.e.imag()), json_number(s.series_tail));
  } else {
    out += "  \"szego\": null,\n";
  }
  out += "  \"warnings\": [";
  for (std::size_t i = 0; i < report.warnings.size(); ++i)
    out += (i ? ", " : "") + json(report.warnings[i]).dump();
  out += "],\n";
  out += "  \"records\": [";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    out += i ? ",\n" : "\n";
    out += fmt::format(
        "    {{\"n\": {}, \"logdetT_mag\": {}, \"logdetT_phase\": {}, \"logdetM_mag\": {}, "
        "\"logdetM_phase\": {}, \"ratio_re\": {}, \"ratio_im\": {}, \"abs_error\": {}, "
        "\"schur_residual\": {}, \"entry_residual\": {}, \"inverse_norm\": {}}}",
        r.n, json_number(r.logdet_t.log_magnitude), json_number(r.logdet_t.phase),
        json_number(r.logdet_m.log_magnitude), json_number(r.logdet_m.phase),
        json_number(r.ratio.real()), json_number(r.ratio.imag()), json_number(r.abs_error),
        json_optional(r.schur_residual), json_optional(r.entry_residual),
        json_optional(r.inverse_norm));
  }
  out += report.records.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

double read_number(const json& v) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return v.get<double>();
}

std::optional<double> read_optional(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

LogDet read_logdet(const json& mag, const json& phase) {
  if (mag.is_null()) return LogDet::singular();
  return {mag.get<double>(), phase.get<double>(), false};
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

std::string emit_report(const ConvergenceReport& report, ReportFormat format) {
  return format == ReportFormat::kCsv ? emit_csv(report) : emit_json(report);
}

ConvergenceReport parse_report_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ConvergenceReport report;
    report.truncation = doc.at("truncation").get<int>();
    report.limit_value = {read_number(doc.at("limit_re")), read_number(doc.at("limit_im"))};
    report.factor_residual = read_number(doc.at("factor_residual"));
    if (const auto& s = doc.at("szego"); !s.is_null()) {
      report.szego = SzegoConstants{{read_number(s.at("G_re")), read_number(s.at("G_im"))},
                                    {read_number(s.at("E_re")), read_number(s.at("E_im"))},
                                    read_number(s.at("series_tail"))};
    }
    for (const auto& w : doc.at("warnings")) report.warnings.push_back(w.get<std::string>());
    for (const auto& r : doc.at("records")) {
      StudyRecord rec;
      rec.n = r.at("n").get<int>();
      rec.logdet_t = read_logdet(r.at("logdetT_mag"), r.at("logdetT_phase"));
      rec.logdet_m = read_logdet(r.at("logdetM_mag"), r.at("logdetM_phase"));
      rec.ratio = {read_number(r.at("ratio_re")), read_number(r.at("ratio_im"))};
      rec.abs_error = read_number(r.at("abs_error"));
      rec.schur_residual = read_optional(r.at("schur_residual"));
      rec.entry_residual = read_optional(r.at("entry_residual"));
      rec.inverse_norm = read_optional(r.at("inverse_norm"));
      report.error_trajectory.push_back(rec.abs_error);
      report.records.push_back(rec);
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, fmt::format("malformed report JSON: {}", e.what()));
  }
}

}  // namespace tlim
