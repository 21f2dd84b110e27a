// salpeter: relativistic corrections to the d-dimensional isotropic
// oscillator from the command line.
//
//   salpeter correct --d 3 --n 0 --l 0
//   salpeter correct --d 2 --N 2 --m 0 --method ladder
//   salpeter table --d 3 --Nmax 4 --lambda 1/1000 --format csv
//   salpeter diagram --d 3 --Nmax 5 --output levels.svg
//   salpeter verify --grid large --report report.json
//   salpeter oracle --d 5 --n 2 --l 1
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.

#include "salpeter/salpeter.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace salpeter;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> d, n, l, N, m;
  int N_max = 5;
  std::string lambda = "1/1000";
  std::string method = "all";
  std::string format;
  std::string output;
  std::optional<double> exaggeration;
  std::string grid = "default";
  bool perturb = false;
  std::string report;
  unsigned threads = 0;
  int s_max = 8;
};

/// Writes to --output when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw io_error("failed writing '" + path + "'");
}

std::string approx(const Rational& v) { return "~" + to_decimal(v); }

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw usage_error(std::string("missing required option ") + flag);
  return *v;
}

// ---------------------------------------------------------------- correct

struct MethodValue {
  std::string quantity;
  std::string method;
  Rational value;
};

int cmd_correct(const RunConfig& cfg) {
  const int d = require(cfg.d, "--d");
  if (d < 1) throw usage_error("--d must be at least 1");
  const bool ladder_mode = cfg.m.has_value();
  if (ladder_mode && d != 2) throw usage_error("--m selects the 2D ladder mode and requires --d 2");
  if (cfg.method == "ladder" && d != 2) throw usage_error("--method ladder requires --d 2");

  std::optional<QuantumNumbers> q;
  std::optional<FockState2D> s;
  if (ladder_mode) {
    s = FockState2D::make(require(cfg.N, "--N"), *cfg.m);
    q = map_Nm_to_nl(*s);
  } else if (d == 1) {
    if (cfg.l && *cfg.l != 0) throw usage_error("d = 1 admits only l = 0");
    if (cfg.N) q = QuantumNumbers::one_dimensional(*cfg.N);
    else q = QuantumNumbers::radial(1, require(cfg.n, "--N or --n"), 0);
  } else if (cfg.N) {
    q = QuantumNumbers::from_level(d, *cfg.N, require(cfg.l, "--l"));
  } else {
    q = QuantumNumbers::radial(d, require(cfg.n, "--n"), require(cfg.l, "--l"));
  }
  if (d == 2 && !s) s = FockState2D::make(q->level(), q->l());

  const std::string& method = cfg.method;
  if (method != "all" && method != "closed" && method != "kramers" && method != "laguerre" && method != "ladder")
    throw usage_error("--method must be one of all, closed, kramers, laguerre, ladder");
  auto wanted = [&](const char* m) { return method == "all" || method == m; };

  std::vector<MethodValue> rows;
  if (wanted("closed")) {
    rows.push_back({"eps1", "closed-form", epsilon1_general(*q)});
    rows.push_back({"eps1", "rewritten", epsilon1_rewritten(*q)});
  }
  if (wanted("kramers")) rows.push_back({"eps1", "kramers", first_order_method1(*q)});
  if (wanted("laguerre")) rows.push_back({"eps1", "laguerre", first_order_method2(*q)});
  if (wanted("ladder") && s) rows.push_back({"eps1", "ladder", first_order_2d(*s)});
  if (wanted("closed")) rows.push_back({"eps2", "closed-form", epsilon2_general(*q)});
  if (wanted("laguerre")) {
    rows.push_back({"eps2 part I", "laguerre", second_order_part1(*q)});
    rows.push_back({"eps2 part II", "laguerre", second_order_part2(*q)});
    rows.push_back({"eps2", "laguerre", second_order_method2(*q)});
  }
  if (wanted("ladder") && s) {
    rows.push_back({"eps2 part I", "ladder", second_order_2d_partI(*s)});
    rows.push_back({"eps2 part II", "ladder", second_order_2d_partII(*s)});
    rows.push_back({"eps2", "ladder", second_order_2d(*s)});
  }

  bool agree = true;
  for (const char* quantity : {"eps1", "eps2"}) {
    const MethodValue* ref = nullptr;
    for (const auto& r : rows) {
      if (r.quantity != quantity) continue;
      if (!ref) ref = &r;
      else if (r.value != ref->value) agree = false;
    }
  }
  const Rational e0 = energy_unperturbed(*q);
  const std::string state = s && ladder_mode ? s->to_string() + " = " + q->to_string() : q->to_string();

  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      results.push_back({{"quantity", r.quantity}, {"method", r.method}, {"value_pq", to_pq(r.value)}, {"value_dec", to_decimal(r.value)}});
    nlohmann::ordered_json j{{"state", state},
                             {"d", q->dimension()},
                             {"N", q->level()},
                             {"l", q->l()},
                             {"eps0", {{"value_pq", to_pq(e0)}, {"value_dec", to_decimal(e0)}}},
                             {"results", std::move(results)},
                             {"verdict", agree ? "AGREE" : "DISAGREE"}};
    out << j.dump(2) << '\n';
  } else if (cfg.format.empty() || cfg.format == "text") {
    out << "state " << state << '\n';
    out << "eps0 (hbar omega)           " << to_pq(e0) << "  " << approx(e0) << '\n';
    for (const auto& r : rows) {
      char head[64];
      std::snprintf(head, sizeof head, "%-13s %-13s ", r.quantity.c_str(), r.method.c_str());
      out << head << to_pq(r.value) << "  " << approx(r.value) << '\n';
    }
    out << "units: eps1 in lambda hbar omega, eps2 in lambda^2 hbar omega; decimals approximate\n";
    out << "verdict " << (agree ? "AGREE" : "DISAGREE") << '\n';
  } else {
    throw usage_error("correct supports --format text or json");
  }
  emit(cfg.output, out.str());
  return agree ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------- table/diagram

Rational parse_lambda(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("--lambda: ") + e.what());
  }
}

int cmd_table(const RunConfig& cfg) {
  const LevelTable table = level_table(cfg.N_max, require(cfg.d, "--d"), parse_lambda(cfg.lambda));
  std::ostringstream out;
  if (cfg.format.empty() || cfg.format == "csv") write_csv(table, out);
  else if (cfg.format == "json") out << to_json(table).dump(2) << '\n';
  else if (cfg.format == "text") write_text(table, out);
  else throw usage_error("table supports --format csv, json or text");
  emit(cfg.output, out.str());
  return kExitOk;
}

int cmd_diagram(const RunConfig& cfg) {
  const LevelTable table = level_table(cfg.N_max, require(cfg.d, "--d"), parse_lambda(cfg.lambda));
  const DiagramModel model = diagram_data(table, cfg.exaggeration);
  std::ostringstream out;
  if (cfg.format.empty() || cfg.format == "svg") render_svg(model, out);
  else if (cfg.format == "text") render_text(model, out);
  else throw usage_error("diagram supports --format svg or text");
  emit(cfg.output, out.str());
  return kExitOk;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg) {
  VerifyGrid grid;
  try {
    grid = verify_grid(cfg.grid);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  const VerifyReport report = run_verification(grid, {cfg.perturb, cfg.threads});
  if (!cfg.report.empty()) emit(cfg.report, to_json(report).dump(2) + "\n");

  std::ostringstream out;
  out << "grid " << report.grid << (report.perturbed ? " (fault injected)" : "") << ": " << report.entries.size()
      << " checks, " << report.failure_count() << " failed\n";
  if (const VerifyEntry* f = report.first_failure())
    out << "first failure: " << f->case_id << " [" << f->method << "] = "
        << (f->value_pq.empty() ? f->value_dec : f->value_pq) << '\n';
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  emit(cfg.output, out.str());
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

// ----------------------------------------------------------------- oracle

int cmd_oracle(const RunConfig& cfg) {
  const int d = require(cfg.d, "--d");
  if (d < 2) throw usage_error("the quadrature oracle requires --d 2 or more");
  const QuantumNumbers q = QuantumNumbers::radial(d, require(cfg.n, "--n"), require(cfg.l, "--l"));
  if (cfg.s_max < 0) throw usage_error("--smax must be non-negative");

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  bool ok = true;
  auto record = [&](const std::string& name, const std::string& exact, const Real& got, const Real& dev, double tol) {
    const bool pass = dev <= tol;
    ok = ok && pass;
    checks.push_back({{"check", name}, {"exact", exact}, {"quadrature", got.str(30)}, {"deviation", dev.str(3)},
                      {"tolerance", tol}, {"status", pass ? "pass" : "fail"}});
  };
  auto rel = [](const Real& got, const Rational& want) -> Real {
    const Real w = to_real(want);
    return w == 0 ? Real(abs(got)) : Real(abs(got - w) / abs(w));
  };

  const std::vector<Rational> moments = radial_moment_sequence(q, 2 * cfg.s_max);
  for (int s = 0; s <= cfg.s_max; ++s) {
    const Real v = quad_expectation(q, s);
    record("<eta^" + std::to_string(s) + ">", to_pq(moments[s]), v, rel(v, moments[s]), 1e-12);
  }
  const Rational part2 = second_order_part2(q);
  const Real sos = sum_over_states_check(q, q.radial_index() + 4);
  record("eps2 part II (sum over states)", to_pq(part2), sos, rel(sos, part2), 1e-10);
  const Real ortho = orthonormality_check(q.l(), d, q.radial_index() + 2);
  record("orthonormality", "0/1", ortho, ortho, 1e-12);
  const double etas[] = {0.1, 0.5, 1.0, 2.0, 4.0, 8.0};
  const Real res = radial_residual(q, etas);
  record("radial residual", "0/1", res, res, 1e-10);

  std::ostringstream out;
  if (cfg.format == "json") {
    out << nlohmann::ordered_json{{"state", q.to_string()}, {"working_digits", working_digits()}, {"checks", checks},
                                  {"status", ok ? "pass" : "fail"}}
               .dump(2)
        << '\n';
  } else if (cfg.format.empty() || cfg.format == "text") {
    out << "state " << q.to_string() << ", " << working_digits() << " working digits\n";
    for (const auto& c : checks) {
      char line[256];
      std::snprintf(line, sizeof line, "%-32s exact %-14s dev %-10s %s\n", c["check"].get<std::string>().c_str(),
                    c["exact"].get<std::string>().c_str(), c["deviation"].get<std::string>().c_str(),
                    c["status"].get<std::string>().c_str());
      out << line;
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
  } else {
    throw usage_error("oracle supports --format text or json");
  }
  emit(cfg.output, out.str());
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic corrections to the d-dimensional isotropic harmonic oscillator"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "spatial dimension");
    sub->add_option("--n", cfg.n, "radial quantum number");
    sub->add_option("--l", cfg.l, "angular quantum number");
  };
  auto add_output = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", cfg.format, "output format: " + formats);
    sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
  };

  auto* correct = app.add_subcommand("correct", "eps0, eps1, eps2 of one state from every applicable method");
  add_state(correct);
  correct->add_option("--N", cfg.N, "level N = 2n + l (d = 1: the 1D level)");
  correct->add_option("--m", cfg.m, "2D angular momentum (ladder mode, d = 2)");
  correct->add_option("--method", cfg.method, "all, closed, kramers, laguerre or ladder");
  add_output(correct, "text, json");

  auto* table = app.add_subcommand("table", "level table for N = 0..Nmax");
  table->add_option("--d", cfg.d, "spatial dimension")->required();
  table->add_option("--Nmax", cfg.N_max, "highest level");
  table->add_option("--lambda", cfg.lambda, "hbar omega / m c^2 as p/q or decimal");
  add_output(table, "csv, json, text");

  auto* diagram = app.add_subcommand("diagram", "schematic level diagram with first-order splitting");
  diagram->add_option("--d", cfg.d, "spatial dimension")->required();
  diagram->add_option("--Nmax", cfg.N_max, "highest level");
  diagram->add_option("--lambda", cfg.lambda, "hbar omega / m c^2 as p/q or decimal");
  diagram->add_option("--exaggeration", cfg.exaggeration, "visual shift factor (default 0.1 / lambda)");
  add_output(diagram, "svg, text");

  auto* verify = app.add_subcommand("verify", "cross-method and oracle checks over a grid");
  verify->add_option("--grid", cfg.grid, "small, default or large");
  verify->add_flag("--perturb", cfg.perturb, "inject a fault into the first-order closed form");
  verify->add_option("--report", cfg.report, "JSON report path");
  verify->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  verify->add_option("--output,-o", cfg.output, "summary file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "quadrature checks of one radial state");
  add_state(oracle);
  oracle->add_option("--smax", cfg.s_max, "highest power of eta");
  add_output(oracle, "text, json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    configure_precision_from_env();
    if (*correct) return cmd_correct(cfg);
    if (*table) return cmd_table(cfg);
    if (*diagram) return cmd_diagram(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*oracle) return cmd_oracle(cfg);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
