#include "penney/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "penney/cli/problem_file.hpp"
#include "penney/cli/verify.hpp"
#include "penney/errors.hpp"
#include "penney/oracle.hpp"
#include "penney/solver.hpp"

namespace penney::cli {

namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

Json to_json(const Rational& r) {
  return Json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Json to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(to_json(r));
  return arr;
}

Json to_json(const Poly& p) { return to_json(p.coeffs()); }

Json header(const char* command, const PatternSystem& sys) {
  Json doc;
  doc["format_version"] = kMachineFormatVersion;
  doc["command"] = command;
  Json pats = Json::array();
  for (const auto& p : sys.patterns()) pats.push_back(Json{{"label", p.label()}, {"text", p.text()}});
  doc["patterns"] = std::move(pats);
  return doc;
}

void print_table(std::ostream& out, const std::vector<Row>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (r.size() > width.size()) width.resize(r.size());
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string fmt_double(double x, int precision) {
  if (std::isnan(x)) return "n/a";
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

std::string with_decimal(const Rational& r, int precision) {
  return r.to_string() + " (" + r.to_decimal(precision) + ")";
}

OutputFormat parse_format(const std::string& s) {
  return s == "machine" ? OutputFormat::Machine : OutputFormat::Table;
}

}  // namespace

int cmd_analyze(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out) {
  const AnalysisReport report = analyze(sys);

  if (opts.format == OutputFormat::Machine) {
    Json doc = header("analyze", sys);
    doc["win_probabilities"] = to_json(report.win_probs);
    doc["expected_wait"] = to_json(report.expected_wait);
    doc["conditional_waits"] = to_json(report.conditional_waits);
    Json gf;
    gf["denominator"] = to_json(report.bundle.denominator());
    Json numers = Json::array();
    for (const auto& g : report.bundle.pattern_gfs) numers.push_back(to_json(g.numer()));
    gf["pattern_numerators"] = std::move(numers);
    gf["tail_numerator"] = to_json(report.bundle.tail_gf.numer());
    doc["generating_functions"] = std::move(gf);
    out << doc.dump(2) << '\n';
    return exit_code::kOk;
  }

  std::vector<Row> rows{{"pattern", "P(win)", "decimal", "E[tau | win]", "decimal"}};
  for (std::size_t i = 0; i < sys.size(); ++i) {
    rows.push_back({sys.pattern(i).label(), report.win_probs[i].to_string(),
                    report.win_probs[i].to_decimal(opts.precision), report.conditional_waits[i].to_string(),
                    report.conditional_waits[i].to_decimal(opts.precision)});
  }
  print_table(out, rows);
  out << "\nE[tau] = " << with_decimal(report.expected_wait, opts.precision) << '\n';
  out << "\nD(s)   = " << report.bundle.denominator().to_string() << '\n';
  for (std::size_t i = 0; i < sys.size(); ++i)
    out << "g_" << sys.pattern(i).label() << "(s) = [" << report.bundle.pattern_gfs[i].numer().to_string()
        << "] / D(s)\n";
  out << "Q(s)   = [" << report.bundle.tail_gf.numer().to_string() << "] / D(s)\n";
  return exit_code::kOk;
}

int cmd_series(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out) {
  const GeneratingBundle bundle = generating_functions(sys);
  const std::size_t n = opts.n;
  std::vector<std::vector<Rational>> coeffs;
  for (const auto& g : bundle.pattern_gfs) coeffs.push_back(g.series(n + 1));
  const auto tails = bundle.tail_gf.series(n + 1);

  std::vector<Rational> cumulative(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t k = 1; k <= n; ++k) cumulative[i] += coeffs[i][k];

  if (opts.format == OutputFormat::Machine) {
    Json doc = header("series", sys);
    doc["n"] = n;
    Json rows = Json::array();
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Rational> p;
      for (std::size_t i = 0; i < sys.size(); ++i) p.push_back(coeffs[i][k]);
      rows.push_back(Json{{"k", k}, {"p", to_json(p)}, {"q", to_json(tails[k])}});
    }
    doc["rows"] = std::move(rows);
    doc["cumulative"] = to_json(cumulative);
    doc["residual_q"] = to_json(tails[n]);
    out << doc.dump(2) << '\n';
    return exit_code::kOk;
  }

  Row head{"k"};
  for (const auto& p : sys.patterns()) head.push_back("p[" + p.label() + "]");
  head.push_back("q_k");
  std::vector<Row> rows{head};
  for (std::size_t k = 1; k <= n; ++k) {
    Row r{std::to_string(k)};
    for (std::size_t i = 0; i < sys.size(); ++i) r.push_back(coeffs[i][k].to_string());
    r.push_back(tails[k].to_string());
    rows.push_back(std::move(r));
  }
  Row total{"sum"};
  for (const auto& c : cumulative) total.push_back(c.to_string());
  total.push_back(tails[n].to_string());
  rows.push_back(std::move(total));
  print_table(out, rows);
  return exit_code::kOk;
}

int cmd_verify(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out) {
  const auto checks = run_checks(sys, generating_functions(sys), opts.n);
  const auto failure = first_failure(checks);

  if (opts.format == OutputFormat::Machine) {
    Json doc = header("verify", sys);
    doc["n"] = opts.n;
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["checks"] = std::move(arr);
    doc["passed"] = !failure.has_value();
    if (failure) doc["first_failure"] = failure->name;
    out << doc.dump(2) << '\n';
  } else {
    std::vector<Row> rows;
    for (const auto& c : checks) rows.push_back({c.passed ? "PASS" : "FAIL", c.name, c.detail});
    print_table(out, rows);
    if (failure)
      out << "\nFAIL: first violated check: " << failure->name << '\n';
    else
      out << "\nall " << checks.size() << " checks passed\n";
  }
  return failure ? exit_code::kCheckFailed : exit_code::kOk;
}

int cmd_simulate(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out) {
  const AnalysisReport exact = analyze(sys);
  SimConfig cfg;
  cfg.trials = opts.trials;
  cfg.seed = opts.seed;
  cfg.max_steps = opts.max_steps.value_or(default_max_steps(sys));
  cfg.workers = opts.workers;
  const SimResult sim = simulate(sys, cfg);

  auto z = [](double empirical, const Rational& target, double se) {
    return se > 0 ? (empirical - target.to_double()) / se : 0.0;
  };

  if (opts.format == OutputFormat::Machine) {
    Json doc = header("simulate", sys);
    doc["trials"] = cfg.trials;
    doc["seed"] = cfg.seed;
    doc["max_steps"] = cfg.max_steps;
    doc["truncated"] = sim.truncated;
    Json pats = Json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
      pats.push_back(Json{{"wins", sim.wins[i]},
                          {"exact_win_probability", to_json(exact.win_probs[i])},
                          {"empirical_win_fraction", sim.win_fraction(i)},
                          {"win_fraction_se", sim.win_fraction_se(i)},
                          {"exact_conditional_wait", to_json(exact.conditional_waits[i])},
                          {"empirical_conditional_wait", sim.wins[i] ? Json(sim.conditional_mean(i)) : Json()},
                          {"conditional_wait_se", sim.wins[i] ? Json(sim.conditional_mean_se(i)) : Json()}});
    }
    doc["per_pattern"] = std::move(pats);
    doc["exact_expected_wait"] = to_json(exact.expected_wait);
    doc["empirical_mean_wait"] = sim.mean_wait();
    doc["mean_wait_se"] = sim.mean_wait_se();
    out << doc.dump(2) << '\n';
    return exit_code::kOk;
  }

  const int prec = opts.precision;
  out << "trials " << cfg.trials << ", seed " << cfg.seed << ", max steps " << cfg.max_steps << ", truncated "
      << sim.truncated << "\n\n";
  std::vector<Row> rows{{"pattern", "exact P(win)", "empirical", "SE", "z", "exact E[tau|win]", "empirical",
                         "SE", "z"}};
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const double f = sim.win_fraction(i);
    const double fse = sim.win_fraction_se(i);
    const double c = sim.conditional_mean(i);
    const double cse = sim.conditional_mean_se(i);
    rows.push_back({sys.pattern(i).label(), exact.win_probs[i].to_decimal(prec), fmt_double(f, prec),
                    fmt_double(fse, prec), fmt_double(z(f, exact.win_probs[i], fse), 3),
                    exact.conditional_waits[i].to_decimal(prec), fmt_double(c, prec), fmt_double(cse, prec),
                    sim.wins[i] ? fmt_double(z(c, exact.conditional_waits[i], cse), 3) : "n/a"});
  }
  const double mw = sim.mean_wait();
  const double mse = sim.mean_wait_se();
  rows.push_back({"E[tau]", "", "", "", "", exact.expected_wait.to_decimal(prec), fmt_double(mw, prec),
                  fmt_double(mse, prec), fmt_double(z(mw, exact.expected_wait, mse), 3)});
  print_table(out, rows);
  if (sim.truncated > 0)
    out << "\nwarning: " << sim.truncated << " truncated trials; conditional means are biased low\n";
  return exit_code::kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact odds and waiting times for pattern races in i.i.d. letter sequences", "penney"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "table";
  CommandOptions opts;
  std::uint64_t max_steps = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "Problem file")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "machine"}));
    sub->add_option("--precision", opts.precision, "Significant digits for decimals")
        ->check(CLI::Range(1, 50));
  };
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Win probabilities and expected waiting times");
  add_common(analyze_cmd);
  CLI::App* series_cmd = app.add_subcommand("series", "First-occurrence probabilities p_k and tails q_k");
  add_common(series_cmd);
  series_cmd->add_option("--n", opts.n, "Number of terms")->capture_default_str();
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check the closed forms against independent routes");
  add_common(verify_cmd);
  verify_cmd->add_option("--n", opts.n, "Terms compared with the dynamic program")->capture_default_str();
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo comparison with exact values");
  add_common(simulate_cmd);
  simulate_cmd->add_option("--trials", opts.trials, "Number of trials")->capture_default_str();
  simulate_cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  simulate_cmd->add_option("--max-steps", max_steps, "Truncate trials after this many letters");
  simulate_cmd->add_option("--workers", opts.workers, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e, out, err) : (app.exit(e, out, err), exit_code::kUsage);
  }
  opts.format = parse_format(format);
  if (max_steps > 0) opts.max_steps = max_steps;
  if (opts.n < 1) {
    err << "error: --n must be at least 1\n";
    return exit_code::kUsage;
  }
  if (opts.trials < 1) {
    err << "error: --trials must be at least 1\n";
    return exit_code::kUsage;
  }

  try {
    const PatternSystem sys = to_system(read_problem(file));
    if (*analyze_cmd) return cmd_analyze(sys, opts, out);
    if (*series_cmd) return cmd_series(sys, opts, out);
    if (*verify_cmd) return cmd_verify(sys, opts, out);
    return cmd_simulate(sys, opts, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Parse: return exit_code::kUsage;
      case ErrorKind::DegenerateDenominator:
      case ErrorKind::ZeroWinProbability:
      case ErrorKind::ZeroConstantDenominator: return exit_code::kDegenerate;
      case ErrorKind::AllTrialsTruncated: return exit_code::kAllTruncated;
      default: return exit_code::kValidation;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
}

}  // namespace penney::cli
