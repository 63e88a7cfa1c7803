// toeplitz-limit: convergence studies for det M_{m+n} / det T_n.
//
//   toeplitz-limit run <config>        per-n report (CSV or JSON)
//   toeplitz-limit limit <config>      the limit determinant only
//   toeplitz-limit factorize <config>  Wiener-Hopf factor coefficients
//   toeplitz-limit selftest            built-in catalog acceptance suite
//
// Failures print one line to stderr of the form
//   error: code=<Code> [n=<n>] message="<text>"
// and exit with status 1.

#include <fmt/core.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "criteria.hpp"
#include "tlim/errors.hpp"
#include "tlim/report.hpp"
#include "tlim/study.hpp"

namespace {

struct Options {
  std::string config;
  std::string output;
  std::string format;
  std::string schedule;
  bool quiet = false;
};

tlim::StudyConfig load(const Options& opts) {
  auto cfg = tlim::load_config(opts.config);
  if (!opts.schedule.empty()) cfg.n_schedule = tlim::parse_schedule(opts.schedule);
  if (!opts.format.empty()) cfg.output.format = tlim::parse_format(opts.format);
  if (!opts.output.empty()) cfg.output.path = opts.output;
  tlim::validate_config(cfg);
  return cfg;
}

void write(const tlim::StudyConfig& cfg, const std::string& text) {
  if (cfg.output.path.empty() || cfg.output.path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output.path, std::ios::binary);
  if (!out)
    throw tlim::Error(tlim::ErrorCode::kConfig,
                      fmt::format("cannot write '{}'", cfg.output.path));
  out << text;
}

int cmd_run(const Options& opts) {
  const auto cfg = load(opts);
  const auto report = tlim::run_study(cfg);
  write(cfg, tlim::emit_report(report, cfg.output.format));
  if (!opts.quiet) {
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    std::cerr << fmt::format("limit = {} + {}i, N = {}, factor residual = {:.3e}\n",
                             tlim::format_number(report.limit_value.real()),
                             tlim::format_number(report.limit_value.imag()), report.truncation,
                             report.factor_residual);
    if (!report.records.empty())
      std::cerr << fmt::format("final |ratio - limit| = {:.3e} at n = {}\n",
                               report.error_trajectory.back(), report.records.back().n);
  }
  return 0;
}

int cmd_limit(const Options& opts) {
  const auto cfg = load(opts);
  const int n = tlim::effective_truncation(cfg);
  const auto prep = tlim::prepare_symbol(cfg.symbol, n, cfg.tolerances);
  const auto value = tlim::limit_determinant(prep.factorization, cfg.perturbation);
  const auto re = tlim::format_number(value.real());
  const auto im = tlim::format_number(value.imag());
  write(cfg, cfg.output.format == tlim::ReportFormat::kCsv
                 ? fmt::format("limit_re,limit_im\n{},{}\n", re, im)
                 : fmt::format("{{\"limit_re\": {}, \"limit_im\": {}}}\n", re, im));
  return 0;
}

int cmd_factorize(const Options& opts) {
  const auto cfg = load(opts);
  const int n = tlim::effective_truncation(cfg);
  const auto prep = tlim::prepare_symbol(cfg.symbol, n, cfg.tolerances);
  const auto& f = prep.factorization;
  std::string text;
  if (cfg.output.format == tlim::ReportFormat::kCsv) {
    text = "k,plus_re,plus_im,minus_re,minus_im\n";
    for (int k = 0; k <= f.truncation(); ++k)
      text += fmt::format("{},{},{},{},{}\n", k, tlim::format_number(f.plus(k).real()),
                          tlim::format_number(f.plus(k).imag()),
                          tlim::format_number(f.minus(-k).real()),
                          tlim::format_number(f.minus(-k).imag()));
  } else {
    auto series = [](auto get, int count) {
      std::string s = "[";
      for (int k = 0; k <= count; ++k)
        s += fmt::format("{}[{}, {}]", k ? ", " : "", tlim::format_number(get(k).real()),
                         tlim::format_number(get(k).imag()));
      return s + "]";
    };
    text = fmt::format(
        "{{\"truncation\": {}, \"reconstruction_residual\": {}, \"plus_min_modulus\": {},\n"
        " \"plus\": {},\n \"minus\": {}}}\n",
        f.truncation(), tlim::format_number(f.reconstruction_residual()),
        tlim::format_number(tlim::plus_min_modulus(f)),
        series([&](int k) { return f.plus(k); }, f.truncation()),
        series([&](int k) { return f.minus(-k); }, f.truncation()));
  }
  write(cfg, text);
  if (!opts.quiet)
    std::cerr << fmt::format("N = {}, reconstruction residual = {:.3e}, min |phi+| = {:.6f}\n",
                             f.truncation(), f.reconstruction_residual(),
                             tlim::plus_min_modulus(f));
  return 0;
}

int cmd_selftest(const Options& opts) {
  const auto results = tlim::acceptance::run_all();
  std::ostringstream sink;
  const int failures = tlim::acceptance::print(opts.quiet ? sink : std::cout, results);
  return failures == 0 ? 0 : 1;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence studies for perturbed Toeplitz determinants"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool with_config) {
    if (with_config) sub->add_option("config", opts.config, "Study configuration (JSON)")->required();
    sub->add_option("--output", opts.output, "Write output to this path instead of stdout");
    sub->add_option("--format", opts.format, "Output format: csv or json");
    sub->add_option("--n", opts.schedule, "Override the n schedule, e.g. 8,16,32");
    sub->add_flag("--quiet", opts.quiet, "Suppress diagnostics on stderr");
  };
  auto* run = app.add_subcommand("run", "Run a convergence study and emit its report");
  auto* limit = app.add_subcommand("limit", "Print the limit determinant");
  auto* factorize = app.add_subcommand("factorize", "Print the Wiener-Hopf factor coefficients");
  auto* selftest = app.add_subcommand("selftest", "Run the built-in acceptance suite");
  add_common(run, true);
  add_common(limit, true);
  add_common(factorize, true);
  selftest->add_flag("--quiet", opts.quiet, "Only report through the exit status");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(opts);
    if (*limit) return cmd_limit(opts);
    if (*factorize) return cmd_factorize(opts);
    if (*selftest) return cmd_selftest(opts);
  } catch (const tlim::Error& e) {
    std::cerr << "error: code=" << tlim::to_string(e.code());
    if (e.n()) std::cerr << " n=" << *e.n();
    std::cerr << " message=\"" << escape(e.message()) << "\"\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: code=Internal message=\"" << escape(e.what()) << "\"\n";
    return 1;
  }
  return 0;
}
