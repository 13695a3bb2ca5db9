// Command-line front end: evaluate metric/connection/curvature components of
// the oscillator models over parameter grids, run the verification suites,
// and dump the quartic perturbation series as JSON.
//
// Exit codes: 0 ok, 1 verification failure, 2 parameter-domain error,
// 3 usage error (unknown model/quantity/suite/target or bad flags).

#include "adiageo/core_geometry.hpp"
#include "adiageo/models.hpp"
#include "adiageo/quantum.hpp"
#include "adiageo/quartic.hpp"
#include "adiageo/series_dump.hpp"
#include "adiageo/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace adiageo;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 3;

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // canonicalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

struct SweepAxis {
  std::string name;
  double lo = 0.0, hi = 0.0;
  int count = 1;

  double at(int i) const {
    if (count == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
};

struct Row {
  std::string quantity;
  std::optional<int> i, j;
  double value = 0.0;
  bool integral = false;  // rank prints as an integer
};

struct EvalConfig {
  std::string model, quantity, side, format;
  double action = 1.0;
  int level = 0;
  double hbar = 1.0;
  std::vector<std::string> set_args, sweep_args;
};

const std::vector<std::string>& param_names(const std::string& model) {
  static const std::vector<std::string> gho = {"X", "Y", "Z"};
  static const std::vector<std::string> gholin = {"W", "X", "Y", "Z"};
  static const std::vector<std::string> quartic = {"m", "k", "lambda"};
  if (model == "gho") return gho;
  if (model == "gholin") return gholin;
  return quartic;
}

double parse_number(const std::string& s) {
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

std::vector<Row> rows_for_point(const EvalConfig& cfg,
                                const std::vector<double>& values) {
  const bool quantum_side = cfg.side == "quantum";
  Eigen::MatrixXd metric;
  Eigen::VectorXd connection;
  Eigen::MatrixXd curvature;

  if (cfg.model == "gho") {
    const GhoPoint x(values[0], values[1], values[2]);
    if (cfg.quantity == "connection" || cfg.quantity == "curvature") {
      const auto [a, f] = quantum_side
                              ? quantum::gho_berry({cfg.level, cfg.hbar}, x)
                              : gho_hannay(cfg.action, x);
      connection = a.components;
      curvature = f.components;
    } else {
      metric = quantum_side
                   ? quantum::gho_quantum_metric({cfg.level, cfg.hbar}, x).components
                   : gho_metric_closed(cfg.action, x).components;
    }
  } else if (cfg.model == "gholin") {
    const GhoLinPoint x(values[0], values[1], values[2], values[3]);
    if (cfg.quantity == "connection" || cfg.quantity == "curvature") {
      const auto [a, f] = quantum_side
                              ? quantum::gholin_berry({cfg.level, cfg.hbar}, x)
                              : gholin_hannay(cfg.action, x);
      connection = a.components;
      curvature = f.components;
    } else {
      metric = quantum_side
                   ? quantum::gholin_quantum_metric({cfg.level, cfg.hbar}, x)
                         .components
                   : gholin_metric_closed(cfg.action, x).components;
    }
  } else {
    const QuarticPoint x(values[0], values[1], values[2]);
    metric = quantum_side
                 ? quantum::quartic_quantum_metric_closed(x, cfg.hbar).components
                 : quartic::metric_closed(cfg.action, x).components;
  }

  std::vector<Row> rows;
  if (cfg.quantity == "metric") {
    for (int i = 0; i < metric.rows(); ++i)
      for (int j = i; j < metric.cols(); ++j)
        rows.push_back({"g_ij", i + 1, j + 1, metric(i, j), false});
  } else if (cfg.quantity == "connection") {
    for (int i = 0; i < connection.size(); ++i)
      rows.push_back({"A_i", i + 1, std::nullopt, connection(i), false});
  } else if (cfg.quantity == "curvature") {
    for (int i = 0; i < curvature.rows(); ++i)
      for (int j = i + 1; j < curvature.cols(); ++j)
        rows.push_back({"F_ij", i + 1, j + 1, curvature(i, j), false});
  } else if (cfg.quantity == "det") {
    rows.push_back({"det", std::nullopt, std::nullopt, metric.determinant(), false});
  } else {
    MetricTensor g{metric,
                   ParameterPoint(param_names(cfg.model), values, ModelTag::generic),
                   cfg.action};
    rows.push_back({"rank", std::nullopt, std::nullopt,
                    static_cast<double>(matrix_rank(g)), true});
  }
  return rows;
}

int worker_count(long total) {
  const char* env = std::getenv("ADIAGEO_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return 1;
  return static_cast<int>(std::min(v, total));
}

int run_eval(const EvalConfig& cfg) {
  const auto& names = param_names(cfg.model);

  if (cfg.model == "quartic" &&
      (cfg.quantity == "connection" || cfg.quantity == "curvature")) {
    std::cerr << "error: quantity '" << cfg.quantity
              << "' is not available for the quartic model\n";
    return kExitUsage;
  }
  if (cfg.model == "quartic" && cfg.side == "quantum" && cfg.level != 0) {
    std::cerr << "error: the quartic quantum side only offers the ground state "
                 "(--level 0)\n";
    return kExitUsage;
  }
  if (cfg.level < 0 || !(cfg.hbar > 0) ||
      (cfg.side == "classical" && !(cfg.action > 0))) {
    std::cerr << "error: need level >= 0, hbar > 0 and action > 0\n";
    return kExitUsage;
  }

  // fixed values and sweep axes; every parameter assigned exactly once
  std::map<std::string, double> fixed;
  std::vector<SweepAxis> axes;
  try {
    for (const auto& arg : cfg.set_args) {
      std::stringstream ss(arg);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--set expects name=value: " + item);
        fixed[item.substr(0, eq)] = parse_number(item.substr(eq + 1));
      }
    }
    for (const auto& arg : cfg.sweep_args) {
      const auto eq = arg.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--sweep expects name=min:max:count: " + arg);
      SweepAxis ax;
      ax.name = arg.substr(0, eq);
      const std::string spec = arg.substr(eq + 1);
      const auto c1 = spec.find(':');
      const auto c2 = spec.find(':', c1 == std::string::npos ? 0 : c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("--sweep expects name=min:max:count: " + arg);
      ax.lo = parse_number(spec.substr(0, c1));
      ax.hi = parse_number(spec.substr(c1 + 1, c2 - c1 - 1));
      ax.count = static_cast<int>(parse_number(spec.substr(c2 + 1)));
      if (ax.count < 1)
        throw std::invalid_argument("sweep count must be >= 1: " + arg);
      axes.push_back(ax);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto& name : names) {
    const bool is_fixed = fixed.count(name) > 0;
    const bool is_swept =
        std::any_of(axes.begin(), axes.end(),
                    [&](const SweepAxis& a) { return a.name == name; });
    if (is_fixed == is_swept) {
      std::cerr << "error: parameter " << name
                << (is_fixed ? " assigned twice" : " not assigned")
                << " (use --set or --sweep once per parameter)\n";
      return kExitUsage;
    }
  }
  for (const auto& [name, v] : fixed)
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      std::cerr << "error: unknown parameter " << name << " for model "
                << cfg.model << "\n";
      return kExitUsage;
    }
  for (const auto& ax : axes)
    if (std::find(names.begin(), names.end(), ax.name) == names.end()) {
      std::cerr << "error: unknown parameter " << ax.name << " for model "
                << cfg.model << "\n";
      return kExitUsage;
    }
  if (axes.empty()) {
    std::cerr << "error: need at least one swept parameter\n";
    return kExitUsage;
  }

  long total = 1;
  for (const auto& ax : axes) total *= ax.count;

  auto values_at = [&](long t) {
    std::vector<double> values(names.size());
    std::vector<int> idx(axes.size());
    long rem = t;
    for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(rem % axes[a].count);
      rem /= axes[a].count;
    }
    for (size_t p = 0; p < names.size(); ++p) {
      auto it = fixed.find(names[p]);
      if (it != fixed.end()) {
        values[p] = it->second;
        continue;
      }
      for (size_t a = 0; a < axes.size(); ++a)
        if (axes[a].name == names[p]) values[p] = axes[a].at(idx[a]);
    }
    return values;
  };

  // evaluate grid points (optionally in parallel), buffer rows, emit in order
  std::vector<std::vector<Row>> results(total);
  std::vector<std::string> errors(total);
  const int workers = worker_count(total);
  auto work = [&](long begin, long end) {
    for (long t = begin; t < end; ++t) {
      try {
        results[t] = rows_for_point(cfg, values_at(t));
      } catch (const std::invalid_argument& e) {
        errors[t] = e.what();
      }
    }
  };
  if (workers <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work, w * chunk, std::min(total, (w + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  for (long t = 0; t < total; ++t)
    if (!errors[t].empty()) {
      const auto values = values_at(t);
      std::cerr << "error: " << errors[t] << " at grid point (";
      for (size_t p = 0; p < names.size(); ++p)
        std::cerr << (p ? ", " : "") << names[p] << "=" << values[p];
      std::cerr << ")\n";
      return kExitDomain;
    }

  std::string out;
  if (cfg.format == "csv") {
    for (const auto& name : names) out += "param:" + name + ",";
    out += "quantity,i,j,value\n";
    for (long t = 0; t < total; ++t) {
      const auto values = values_at(t);
      for (const auto& row : results[t]) {
        for (double v : values) out += fmt(v) + ",";
        out += row.quantity + ",";
        out += (row.i ? std::to_string(*row.i) : "") + ",";
        out += (row.j ? std::to_string(*row.j) : "") + ",";
        out += row.integral ? std::to_string(static_cast<long>(row.value))
                            : fmt(row.value);
        out += "\n";
      }
    }
  } else {
    out += "[\n";
    bool first = true;
    for (long t = 0; t < total; ++t) {
      const auto values = values_at(t);
      for (const auto& row : results[t]) {
        if (!first) out += ",\n";
        first = false;
        out += "  {";
        for (size_t p = 0; p < names.size(); ++p)
          out += "\"param:" + names[p] + "\": " + fmt(values[p]) + ", ";
        out += "\"quantity\": \"" + row.quantity + "\", ";
        out += "\"i\": " + (row.i ? std::to_string(*row.i) : "null") + ", ";
        out += "\"j\": " + (row.j ? std::to_string(*row.j) : "null") + ", ";
        out += "\"value\": ";
        out += row.integral ? std::to_string(static_cast<long>(row.value))
                            : fmt(row.value);
        out += "}";
      }
    }
    out += "\n]\n";
  }
  std::fwrite(out.data(), 1, out.size(), stdout);
  return kExitOk;
}

int run_verify(const std::string& suite) {
  std::vector<verify::SuiteResult> results;
  try {
    if (suite == "all")
      results = verify::run_all();
    else
      results.push_back(verify::run_suite(suite));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all_pass = true;
  for (const auto& s : results) {
    for (const auto& c : s.checks) {
      all_pass = all_pass && c.pass;
      std::fprintf(stderr, "[%s] %s / %s: measured %.6e vs tolerance %.6e\n",
                   c.pass ? "PASS" : "FAIL", s.suite.c_str(), c.name.c_str(),
                   c.measured, c.tolerance);
    }
  }
  std::fprintf(stderr, "%s\n", all_pass ? "all checks passed" : "FAILURES present");
  return all_pass ? kExitOk : kExitVerifyFailure;
}

int run_series(const std::string& target) {
  try {
    const std::string doc = series_dump::dump_json(target);
    std::fwrite(doc.data(), 1, doc.size(), stdout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parameter-space geometry of integrable oscillator models"};
  app.require_subcommand(1);

  EvalConfig cfg;
  auto* eval = app.add_subcommand(
      "eval", "evaluate metric/connection/curvature over a parameter grid");
  eval->add_option("--model", cfg.model, "gho | gholin | quartic")
      ->required()
      ->check(CLI::IsMember({"gho", "gholin", "quartic"}));
  eval->add_option("--quantity", cfg.quantity,
                   "metric | connection | curvature | det | rank")
      ->required()
      ->check(CLI::IsMember({"metric", "connection", "curvature", "det", "rank"}));
  eval->add_option("--side", cfg.side, "classical | quantum (default classical)")
      ->default_val("classical")
      ->check(CLI::IsMember({"classical", "quantum"}));
  eval->add_option("--format", cfg.format, "csv | json (default csv)")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  eval->add_option("--action", cfg.action, "action I for the classical side")
      ->default_val(1.0);
  eval->add_option("--level", cfg.level, "quantum level n")->default_val(0);
  eval->add_option("--hbar", cfg.hbar, "hbar for the quantum side")
      ->default_val(1.0);
  eval->add_option("--set", cfg.set_args,
                   "fixed parameters, name=value[,name=value...]");
  eval->add_option("--sweep", cfg.sweep_args, "swept parameter, name=min:max:count");

  std::string suite;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite (reports on stderr)");
  verify_cmd->add_option("--suite", suite, "suite name or 'all'")->required();

  std::string target;
  std::string series_format;
  auto* series_cmd =
      app.add_subcommand("series", "dump the quartic perturbation series");
  series_cmd->add_option("--target", target, "W | G | metric")->required();
  series_cmd->add_option("--format", series_format, "json (default)")
      ->default_val("json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (eval->parsed()) return run_eval(cfg);
  if (verify_cmd->parsed()) return run_verify(suite);
  if (series_cmd->parsed()) {
    if (series_format != "json") {
      std::cerr << "error: unknown series format: " << series_format << "\n";
      return kExitUsage;
    }
    return run_series(target);
  }
  return kExitUsage;
}
