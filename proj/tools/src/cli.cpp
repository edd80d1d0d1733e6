/*
 * Copyright 2026 The rbessel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "parallel.hpp"
#include "report.hpp"
#include "rbessel/circle.hpp"
#include "rbessel/deform.hpp"
#include "rbessel/genfun.hpp"
#include "rbessel/series.hpp"
#include "suites.hpp"

namespace rbessel::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double parse_real(const std::string& s) {
  const std::string t = CLI::detail::trim_copy(s);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw UsageError("not a finite number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// Values from the --lambda/--z/... flags.
struct Raw {
  std::string order, n, lambda, z, theta, modes;
  // Raw list tokens; joined back into the strings above after parsing.
  std::vector<std::string> order_l, n_l, lambda_l, z_l, theta_l, modes_l;
  int window = 40;
  int taylor_order = 20;
  int window_cut = 1;
  std::string strategy = "fourier-weights";
  std::string summation = "abel";
  double abel_r = 0.999;
  double tolerance = 0.0;
  std::string format = "csv";
  std::string out;
  std::string rho = "alternating";
  int rho_modes = 0;
};

struct Given {
  bool n = false, lambda = false, z = false, theta = false, window = false, taylor_order = false,
       window_cut = false, modes = false, summation = false, abel_r = false, tolerance = false;
};

std::vector<double> sorted_unique(std::vector<double> v) {
  std::ranges::sort(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<long> sorted_unique(std::vector<long> v) {
  std::ranges::sort(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<double> grid(const std::string& text) { return text.empty() ? std::vector<double>{} : sorted_unique(parse_real_list(text)); }
std::vector<long> int_grid(const std::string& text) { return text.empty() ? std::vector<long>{} : sorted_unique(parse_int_list(text)); }

void require_nonempty(std::size_t size, const char* what) {
  if (size == 0) throw UsageError(std::string("empty grid: ") + what);
}

Prepotential make_prepotential(const std::string& kind, int modes) {
  if (kind == "alternating") return Prepotential::alternating(modes);
  if (kind == "smooth") return Prepotential::smooth(modes);
  if (kind == "nearest") return Prepotential::nearest_neighbour();
  throw UsageError("unknown --rho '" + kind + "' (alternating, smooth, nearest)");
}

Fields base_meta(const std::string& command, const Raw& raw) {
  return {{"tool", std::string("rbessel")}, {"command", command}, {"format", raw.format}};
}

// Comma-separated list or start:stop:step range. The config reader hands a
// "key=a,b,c" line over already split, so tokens are collected and re-joined.
CLI::Option* list_option(CLI::App& app, const std::string& name, std::vector<std::string>& dest,
                         const std::string& help) {
  return app.add_option(name, dest, help)->delimiter(',')->allow_extra_args(false);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

// --- phi ---------------------------------------------------------------------

Report cmd_phi(const Raw& raw, std::ostream& err) {
  const auto orders = grid(raw.order.empty() ? std::string("0") : raw.order);
  const auto zs = grid(raw.z);
  require_nonempty(zs.size(), "--z");
  for (double z : zs)
    if (z < 0.0) throw UsageError("phi: requires z >= 0");
  Report r;
  r.meta = base_meta("phi", raw);
  r.table.columns = {"order", "z", "value", "tail", "converged"};
  long warnings = 0;
  for (double nu : orders)
    for (double z : zs) {
      const auto v = phi_direct(RealOrder(nu), z);
      if (!v.converged) ++warnings;
      r.table.rows.push_back({nu, z, v.value, v.tail, v.converged});
    }
  if (warnings) err << "warning: " << warnings << " value(s) above the tail tolerance\n";
  r.summary = {{"rows", static_cast<long>(r.table.rows.size())}, {"unconverged", warnings}};
  return r;
}

// --- deform / sweep deform -----------------------------------------------------

Report deform_table(const Raw& raw, bool with_oracle, std::ostream& err, const char* command) {
  const auto ns = int_grid(raw.n.empty() ? std::string("0") : raw.n);
  const auto lams = grid(raw.lambda);
  const auto zs = grid(raw.z);
  require_nonempty(lams.size(), "--lambda");
  require_nonempty(zs.size(), "--z");
  const Strategy strategy = parse_strategy(raw.strategy);

  struct Point {
    long n;
    double lambda, z;
  };
  std::vector<Point> points;
  for (long n : ns)
    for (double lam : lams)
      for (double z : zs) points.push_back({n, lam, z});
  for (const auto& p : points) {
    DeformationPlan plan;
    plan.lambda = p.lambda;
    plan.window = raw.window;
    plan.taylor_order = raw.taylor_order;
    plan.strategy = strategy;
    plan.validate();
    if (p.z < 0.0) throw UsageError("deform: requires z >= 0");
  }

  auto rows = parallel_map<std::vector<Cell>>(points.size(), [&](std::size_t i) {
    const Point& p = points[i];
    DeformationPlan plan;
    plan.lambda = p.lambda;
    plan.window = raw.window;
    plan.taylor_order = raw.taylor_order;
    plan.strategy = strategy;
    const auto v = deform_phi(p.n, p.z, plan);
    std::vector<Cell> row{p.n, p.lambda, p.z, std::string(to_string(strategy)), static_cast<long>(raw.window),
                          v.value, v.tail, v.converged};
    if (with_oracle) {
      const double direct = phi_direct(RealOrder(static_cast<double>(p.n) + p.lambda), p.z).value;
      row.emplace_back(direct);
      row.emplace_back(std::abs(v.value - direct) / std::max(std::abs(direct), 1e-300));
    }
    return row;
  });

  Report r;
  r.meta = base_meta(command, raw);
  r.meta.emplace_back("strategy", std::string(to_string(strategy)));
  r.meta.emplace_back("window", static_cast<long>(raw.window));
  r.meta.emplace_back("taylor_order", static_cast<long>(raw.taylor_order));
  r.table.columns = {"n", "lambda", "z", "strategy", "window", "value", "tail", "converged"};
  if (with_oracle) {
    r.table.columns.emplace_back("phi_direct");
    r.table.columns.emplace_back("residual");
  }
  long unconverged = 0;
  for (const auto& row : rows)
    if (!std::get<bool>(row[7])) ++unconverged;
  if (unconverged) err << "warning: " << unconverged << " point(s) with the window-too-small diagnostic\n";
  r.table.rows = std::move(rows);
  r.summary = {{"rows", static_cast<long>(r.table.rows.size())}, {"unconverged", unconverged}};
  return r;
}

// --- spectrum / sweep spectrum -------------------------------------------------

Report spectrum_table(const Raw& raw, const char* command) {
  const auto Ms = int_grid(raw.modes);
  const auto lams = grid(raw.lambda.empty() ? std::string("0") : raw.lambda);
  require_nonempty(Ms.size(), "--modes");
  for (long M : Ms)
    if (M < 0 || M > 512) throw UsageError("spectrum: --modes must lie in [0, 512]");

  struct Point {
    long M;
    double lambda;
  };
  std::vector<Point> points;
  for (long M : Ms)
    for (double lam : lams) points.push_back({M, lam});
  auto spectra = parallel_map<std::vector<double>>(points.size(), [&](std::size_t i) {
    const int M = static_cast<int>(points[i].M);
    const int pm = raw.rho == "nearest" ? 1 : (raw.rho_modes > 0 ? std::min(raw.rho_modes, M) : M);
    return spectrum(make_prepotential(raw.rho, pm), points[i].lambda, M);
  });

  Report r;
  r.meta = base_meta(command, raw);
  r.meta.emplace_back("rho", raw.rho);
  r.table.columns = {"modes", "lambda", "index", "eigenvalue"};
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < spectra[i].size(); ++j)
      r.table.rows.push_back({points[i].M, points[i].lambda, static_cast<long>(j), spectra[i][j]});
  r.summary = {{"rows", static_cast<long>(r.table.rows.size())}};
  return r;
}

// --- sweep eq13 ------------------------------------------------------------------

Report eq13_table(const Raw& raw) {
  const auto lams = grid(raw.lambda);
  const auto zs = grid(raw.z);
  const auto thetas = grid(raw.theta);
  require_nonempty(lams.size(), "--lambda");
  require_nonempty(zs.size(), "--z");
  require_nonempty(thetas.size(), "--theta");
  struct Point {
    double lambda, z, theta;
  };
  std::vector<Point> points;
  for (double lam : lams)
    for (double z : zs)
      for (double th : thetas) {
        if (std::abs(lam) > kTaylorMaxLambda) throw UsageError("eq13: requires |lambda| <= 0.9");
        if (!(z > 0.0)) throw UsageError("eq13: requires z > 0");
        if (!(std::abs(th) < 3.141592653589793 - 0.05)) throw UsageError("eq13: requires |theta| < pi - 0.05");
        points.push_back({lam, z, th});
      }
  const GenFunWindow w{-20, 20, 40};
  auto rows = parallel_map<std::vector<Cell>>(points.size(), [&](std::size_t i) {
    const Point& p = points[i];
    const auto e = eq13_probe(p.z, p.lambda, p.theta, w, raw.taylor_order, raw.window_cut);
    return std::vector<Cell>{p.lambda,      p.z,          p.theta,         e.lhs.real(),
                             e.lhs.imag(),  e.rhs.real(), e.rhs.imag(),    std::abs(e.lhs - e.rhs),
                             e.f_est.real(), e.f_est.imag(), e.term_ratio, e.taylor_converged};
  });
  Report r;
  r.meta = base_meta("sweep", raw);
  r.meta.emplace_back("target", std::string("eq13"));
  r.meta.emplace_back("taylor_order", static_cast<long>(raw.taylor_order));
  r.meta.emplace_back("window_cut", static_cast<long>(raw.window_cut));
  r.table.columns = {"lambda", "z",        "theta", "lhs_re", "lhs_im",     "rhs_re",
                     "rhs_im", "abs_diff", "F_re",  "F_im",   "term_ratio", "taylor_converged"};
  r.table.rows = std::move(rows);
  r.summary = {{"rows", static_cast<long>(r.table.rows.size())}};
  return r;
}

// --- verify --------------------------------------------------------------------

Report cmd_verify(const std::string& suite, const Raw& raw, const Given& given, bool& all_pass) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  SuiteOptions opt;
  if (given.n) opt.n = int_grid(raw.n);
  if (given.lambda) opt.lambda = grid(raw.lambda);
  if (given.z) opt.z = grid(raw.z);
  if (given.theta) opt.theta = grid(raw.theta);
  if (given.window) opt.window = raw.window;
  if (given.taylor_order) opt.taylor_order = raw.taylor_order;
  if (given.window_cut) opt.window_cut = raw.window_cut;
  if (given.modes) {
    const auto m = int_grid(raw.modes);
    if (m.size() != 1 || m[0] < 1) throw UsageError("verify: --modes takes one positive cutoff");
    opt.modes = static_cast<int>(m[0]);
  }
  if (given.abel_r) opt.abel_r = raw.abel_r;
  if (given.summation) opt.summation = parse_summation(raw.summation, raw.abel_r);
  if (given.tolerance) opt.tolerance = raw.tolerance;
  if ((opt.lambda && opt.lambda->empty()) || (opt.z && opt.z->empty()) || (opt.theta && opt.theta->empty()) ||
      (opt.n && opt.n->empty()))
    throw UsageError("empty grid");

  const auto cases = run_suite(suite, opt);
  Report r;
  r.meta = base_meta("verify", raw);
  r.meta.emplace_back("suite", suite);
  if (opt.tolerance) r.meta.emplace_back("tolerance_override", *opt.tolerance);
  r.table.columns = {"suite", "case", "value", "rule", "tolerance", "gated", "pass"};
  long gated = 0, passed = 0;
  for (const auto& c : cases) {
    const bool is_gated = c.rule != Rule::report;
    if (is_gated) {
      ++gated;
      if (c.pass) ++passed;
    }
    r.table.rows.push_back({c.suite, c.label, c.value, to_string(c.rule), c.tolerance, is_gated, c.pass});
  }
  all_pass = passed == gated;
  r.summary = {{"cases", static_cast<long>(cases.size())},
               {"gated", gated},
               {"passed", passed},
               {"failed", gated - passed},
               {"status", std::string(all_pass ? "pass" : "fail")}};
  return r;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("range must be start:stop:step, got '" + text + "'");
    const double a = parse_real(parts[0]), b = parse_real(parts[1]), h = parse_real(parts[2]);
    if (!(h > 0.0)) throw UsageError("range step must be > 0");
    const double count = std::floor((b - a) / h + 1e-9);
    if (count > 1e6) throw UsageError("range too long");
    for (long i = 0; i <= static_cast<long>(count); ++i) out.push_back(a + static_cast<double>(i) * h);
    return out;
  }
  for (const auto& part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  for (double v : parse_real_list(text)) {
    if (v != std::nearbyint(v) || std::abs(v) > 1e9) throw UsageError("not an integer: " + std::to_string(v));
    out.push_back(static_cast<long>(v));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced Bessel functions, ladder operators and index deformation", "rbessel"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Line-oriented key=value file; # starts a comment; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Raw raw;
  list_option(app, "--order", raw.order_l, "Bessel order(s) for phi");
  auto* o_n = list_option(app, "--n", raw.n_l, "Integer index list");
  auto* o_lambda = list_option(app, "--lambda", raw.lambda_l, "Deformation parameter list");
  auto* o_z = list_option(app, "--z", raw.z_l, "Argument list, z >= 0");
  auto* o_theta = list_option(app, "--theta", raw.theta_l, "Angle list on the unit circle");
  auto* o_window = app.add_option("--window", raw.window, "Index window W")->check(CLI::Range(1, 100000));
  auto* o_taylor = app.add_option("--taylor-order", raw.taylor_order, "Taylor order P")->check(CLI::Range(1, 1000));
  auto* o_cut = app.add_option("--window-cut", raw.window_cut, "Cut of the operator sum in eq13")
                    ->check(CLI::Range(1, 64));
  app.add_option("--strategy", raw.strategy, "fourier-weights | taylor-operator");
  auto* o_modes = list_option(app, "--modes", raw.modes_l, "Fourier mode cutoff(s) M");
  auto* o_sum = app.add_option("--summation", raw.summation, "partial | abel | cesaro");
  auto* o_abel = app.add_option("--abel-r", raw.abel_r, "Abel radius r in (0,1)");
  auto* o_tol = app.add_option("--tolerance", raw.tolerance, "Override every gated tolerance");
  app.add_option("--format", raw.format, "csv | json | plain");
  app.add_option("--out", raw.out, "Write the report to this file");
  app.add_option("--rho", raw.rho, "Prepotential for spectrum: alternating | smooth | nearest");
  app.add_option("--rho-modes", raw.rho_modes, "Prepotential modes (default: --modes)")->check(CLI::NonNegativeNumber);

  auto* phi = app.add_subcommand("phi", "Evaluate phi_nu(z) = J_nu(z) / z^nu")->fallthrough();
  auto* deform = app.add_subcommand("deform", "Deform integer-order phi_n by lambda")->fallthrough();
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
  verify->add_option("suite", suite, "eq1 | eq2 | eq6 | eq6prime | eq12 | eq13 | weights | circle | all")->required();
  std::string target;
  auto* sweep = app.add_subcommand("sweep", "Grid sweep as a table")->fallthrough();
  sweep->add_option("target", target, "deform | spectrum | eq13")->required();
  auto* spec = app.add_subcommand("spectrum", "Eigenvalues of W_lambda")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  raw.order = join(raw.order_l);
  raw.n = join(raw.n_l);
  raw.lambda = join(raw.lambda_l);
  raw.z = join(raw.z_l);
  raw.theta = join(raw.theta_l);
  raw.modes = join(raw.modes_l);

  Given given;
  given.n = o_n->count() > 0;
  given.lambda = o_lambda->count() > 0;
  given.z = o_z->count() > 0;
  given.theta = o_theta->count() > 0;
  given.window = o_window->count() > 0;
  given.taylor_order = o_taylor->count() > 0;
  given.window_cut = o_cut->count() > 0;
  given.modes = o_modes->count() > 0;
  given.summation = o_sum->count() > 0;
  given.abel_r = o_abel->count() > 0;
  given.tolerance = o_tol->count() > 0;

  try {
    const Format format = parse_format(raw.format);
    if (given.tolerance && !(raw.tolerance > 0.0 && std::isfinite(raw.tolerance)))
      throw UsageError("--tolerance must be finite and > 0");
    if (given.abel_r && !(raw.abel_r > 0.0 && raw.abel_r < 1.0)) throw UsageError("--abel-r must lie in (0, 1)");
    parse_summation(raw.summation, raw.abel_r);

    Report report;
    bool all_pass = true;
    if (phi->parsed()) {
      report = cmd_phi(raw, err);
    } else if (deform->parsed()) {
      report = deform_table(raw, false, err, "deform");
    } else if (verify->parsed()) {
      report = cmd_verify(suite, raw, given, all_pass);
    } else if (sweep->parsed()) {
      if (target == "deform") {
        report = deform_table(raw, true, err, "sweep");
        report.meta.insert(report.meta.begin() + 2, {"target", std::string("deform")});
      } else if (target == "spectrum") {
        report = spectrum_table(raw, "sweep");
        report.meta.insert(report.meta.begin() + 2, {"target", std::string("spectrum")});
      } else if (target == "eq13") {
        report = eq13_table(raw);
      } else {
        throw UsageError("unknown sweep target '" + target + "' (deform, spectrum, eq13)");
      }
    } else if (spec->parsed()) {
      report = spectrum_table(raw, "spectrum");
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!raw.out.empty()) {
      file.open(raw.out, std::ios::binary);
      if (!file) throw UsageError("cannot open --out '" + raw.out + "'");
      sink = &file;
    }
    emit(report, format, *sink, err);
    sink->flush();
    if (!*sink) {
      err << "error: failed writing the report\n";
      return kExitCheckFailed;
    }
    return all_pass ? kExitOk : kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace rbessel::cli
