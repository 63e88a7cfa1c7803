#include "tlim/config.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "tlim/catalog.hpp"
#include "tlim/errors.hpp"

namespace tlim {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::kConfig, message); }

void require_keys(const json& obj, std::string_view where, std::set<std::string> allowed) {
  if (!obj.is_object()) fail(fmt::format("'{}' must be an object", where));
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) fail(fmt::format("unknown key '{}' in '{}'", key, where));
}

double number(const json& v, std::string_view where) {
  if (!v.is_number()) fail(fmt::format("'{}' must be a number", where));
  return v.get<double>();
}

int integer(const json& v, std::string_view where) {
  if (!v.is_number_integer()) fail(fmt::format("'{}' must be an integer", where));
  return v.get<int>();
}

Complex complex_value(const json& v, std::string_view where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {number(v[0], where), number(v[1], where)};
  if (v.is_object()) {
    require_keys(v, where, {"re", "im"});
    return {v.contains("re") ? number(v["re"], where) : 0.0,
            v.contains("im") ? number(v["im"], where) : 0.0};
  }
  fail(fmt::format("'{}' must be a number, [re, im] or {{\"re\", \"im\"}}", where));
}

std::vector<Complex> complex_list(const json& v, std::string_view where) {
  if (!v.is_array()) fail(fmt::format("'{}' must be an array", where));
  std::vector<Complex> out;
  for (const auto& e : v) out.push_back(complex_value(e, where));
  return out;
}

std::vector<int> int_list(const json& v, std::string_view where) {
  if (!v.is_array()) fail(fmt::format("'{}' must be an array", where));
  std::vector<int> out;
  for (const auto& e : v) out.push_back(integer(e, where));
  return out;
}

SymbolSpec parse_symbol(const json& s) {
  if (s.is_object() && s.contains("catalog")) {
    require_keys(s, "symbol", {"catalog"});
    if (!s["catalog"].is_string()) fail("'symbol.catalog' must be a string");
    const auto name = s["catalog"].get<std::string>();
    auto spec = catalog::find(name);
    if (!spec) fail(fmt::format("unknown catalog symbol '{}'", name));
    return *spec;
  }
  require_keys(s, "symbol", {"kind", "offset", "coefficients", "plus_roots", "minus_roots"});
  if (!s.contains("kind") || !s["kind"].is_string()) fail("'symbol.kind' must be a string");
  const auto kind = s["kind"].get<std::string>();
  try {
    if (kind == "laurent" || kind == "exp_laurent") {
      if (!s.contains("coefficients")) fail("'symbol.coefficients' is required");
      const int offset = s.contains("offset") ? integer(s["offset"], "symbol.offset") : 0;
      auto coeffs = complex_list(s["coefficients"], "symbol.coefficients");
      return kind == "laurent" ? SymbolSpec::laurent(offset, std::move(coeffs))
                               : SymbolSpec::exp_laurent(offset, std::move(coeffs));
    }
    if (kind == "product_of_linear_factors") {
      auto plus = s.contains("plus_roots") ? complex_list(s["plus_roots"], "symbol.plus_roots")
                                           : std::vector<Complex>{};
      auto minus = s.contains("minus_roots")
                       ? complex_list(s["minus_roots"], "symbol.minus_roots")
                       : std::vector<Complex>{};
      return SymbolSpec::linear_factors(std::move(plus), std::move(minus));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    fail(fmt::format("invalid symbol: {}", e.message()));
  }
  fail(fmt::format("unknown symbol kind '{}'", kind));
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  fail(fmt::format("unknown output format '{}' (expected csv or json)", name));
}

std::vector<int> parse_schedule(std::string_view list) {
  std::vector<int> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      fail(fmt::format("bad schedule entry '{}'", item));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

StudyConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(fmt::format("malformed JSON: {}", e.what()));
  }
  require_keys(doc, "config",
               {"symbol", "perturbation", "n_schedule", "truncation", "tolerances", "checks",
                "output"});

  StudyConfig cfg;
  if (!doc.contains("symbol")) fail("'symbol' is required");
  cfg.symbol = parse_symbol(doc["symbol"]);

  if (doc.contains("perturbation")) {
    const auto& p = doc["perturbation"];
    require_keys(p, "perturbation", {"p", "q"});
    try {
      cfg.perturbation = Perturbation(p.contains("p") ? int_list(p["p"], "perturbation.p")
                                                      : std::vector<int>{},
                                      p.contains("q") ? int_list(p["q"], "perturbation.q")
                                                      : std::vector<int>{});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kConfig) throw;
      fail(fmt::format("invalid perturbation: {}", e.message()));
    }
  }

  if (!doc.contains("n_schedule")) fail("'n_schedule' is required");
  cfg.n_schedule = int_list(doc["n_schedule"], "n_schedule");

  if (doc.contains("truncation")) cfg.truncation = integer(doc["truncation"], "truncation");

  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    require_keys(t, "tolerances", {"truncation_tol", "residual_tol", "singularity_tol"});
    if (t.contains("truncation_tol"))
      cfg.tolerances.truncation_tol = number(t["truncation_tol"], "tolerances.truncation_tol");
    if (t.contains("residual_tol"))
      cfg.tolerances.residual_tol = number(t["residual_tol"], "tolerances.residual_tol");
    if (t.contains("singularity_tol"))
      cfg.tolerances.singularity_tol = number(t["singularity_tol"], "tolerances.singularity_tol");
  }

  if (doc.contains("checks")) {
    const auto& c = doc["checks"];
    require_keys(c, "checks", {"schur", "entry", "szego", "inverse_norm"});
    auto flag = [&](const char* key, bool& out) {
      if (!c.contains(key)) return;
      if (!c[key].is_boolean()) fail(fmt::format("'checks.{}' must be a boolean", key));
      out = c[key].get<bool>();
    };
    flag("schur", cfg.checks.schur);
    flag("entry", cfg.checks.entry);
    flag("szego", cfg.checks.szego);
    flag("inverse_norm", cfg.checks.inverse_norm);
  }

  if (doc.contains("output")) {
    const auto& o = doc["output"];
    require_keys(o, "output", {"format", "path"});
    if (o.contains("format")) {
      if (!o["format"].is_string()) fail("'output.format' must be a string");
      cfg.output.format = parse_format(o["format"].get<std::string>());
    }
    if (o.contains("path")) {
      if (!o["path"].is_string()) fail("'output.path' must be a string");
      cfg.output.path = o["path"].get<std::string>();
    }
  }

  validate_config(cfg);
  return cfg;
}

StudyConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(fmt::format("cannot open config '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate_config(const StudyConfig& cfg) {
  for (std::size_t i = 0; i < cfg.n_schedule.size(); ++i) {
    if (cfg.n_schedule[i] < 1)
      fail(fmt::format("n_schedule entries must be positive, got {}", cfg.n_schedule[i]));
    if (i > 0 && cfg.n_schedule[i] <= cfg.n_schedule[i - 1])
      fail("n_schedule must be strictly increasing");
  }
  const auto& t = cfg.tolerances;
  if (!(t.truncation_tol > 0) || !(t.residual_tol > 0) || !(t.singularity_tol > 0))
    fail("tolerances must be positive");
  if (cfg.truncation && *cfg.truncation < 1) fail("truncation must be positive");
}

int effective_truncation(const StudyConfig& cfg) {
  if (cfg.truncation) return *cfg.truncation;
  int n = std::max(64, 4 * cfg.symbol.bandwidth());
  if (!cfg.n_schedule.empty())
    n = std::max(n, required_truncation(cfg.perturbation,
                                        static_cast<std::size_t>(cfg.n_schedule.back())));
  return n;
}

}  // namespace tlim
